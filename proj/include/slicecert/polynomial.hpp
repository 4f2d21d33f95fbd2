#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "slicecert/monomial.hpp"
#include "slicecert/prime_field.hpp"
#include "slicecert/rational.hpp"

namespace slicecert {

/// Sparse polynomial over the coefficient field K (Rational or Fp). Terms are
/// kept strictly descending under the stored monomial order, with no zero
/// coefficients and no repeated monomials; every operation restores that
/// canonical form.
template <typename K>
class Polynomial {
public:
    struct Term {
        K coeff;
        Monomial mono;
        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    static Polynomial zero(const Shape& shape, const MonomialOrder& ord = MonomialOrder::grevlex()) {
        return Polynomial(shape, ord);
    }

    static Polynomial term(K coeff, const Monomial& mono,
                           const MonomialOrder& ord = MonomialOrder::grevlex()) {
        Polynomial r(mono.shape(), ord);
        if (!coeff.is_zero()) r.terms_.push_back({std::move(coeff), mono});
        return r;
    }

    /// Canonicalizes an arbitrary term list: sorts descending, merges equal
    /// monomials, drops zero coefficients.
    static Polynomial from_terms(const Shape& shape, const MonomialOrder& ord,
                                 std::vector<Term> terms) {
        for (const auto& t : terms) {
            if (t.mono.shape() != shape)
                throw std::invalid_argument("Polynomial: term shape mismatch");
            if (!terms.empty() && !scalar_same_field(t.coeff, terms.front().coeff))
                throw std::invalid_argument("Polynomial: mixed coefficient fields");
        }
        std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
            return mono_compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
        });
        Polynomial r(shape, ord);
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().mono == t.mono)
                r.terms_.back().coeff += t.coeff;
            else
                r.terms_.push_back(std::move(t));
            if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
        }
        return r;
    }

    const Shape& shape() const { return shape_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const K& leading_coeff() const { return leading_term().coeff; }

    /// Total degree; -1 for the zero polynomial.
    long degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    bool has_aux() const {
        for (const auto& t : terms_)
            if (t.mono.has_aux()) return true;
        return false;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compat(o);
        Polynomial r(shape_, order_);
        auto ia = terms_.begin(), ib = o.terms_.begin();
        while (ia != terms_.end() || ib != o.terms_.end()) {
            if (ib == o.terms_.end()) {
                r.terms_.push_back(*ia++);
            } else if (ia == terms_.end()) {
                r.terms_.push_back(*ib++);
            } else {
                auto c = mono_compare(ia->mono, ib->mono, order_);
                if (c == std::strong_ordering::greater) {
                    r.terms_.push_back(*ia++);
                } else if (c == std::strong_ordering::less) {
                    r.terms_.push_back(*ib++);
                } else {
                    K sum = ia->coeff + ib->coeff;
                    if (!sum.is_zero()) r.terms_.push_back({std::move(sum), ia->mono});
                    ++ia, ++ib;
                }
            }
        }
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_compat(o);
        std::vector<Term> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& ta : terms_)
            for (const auto& tb : o.terms_)
                prods.push_back({ta.coeff * tb.coeff, mono_mul(ta.mono, tb.mono)});
        return from_terms(shape_, order_, std::move(prods));
    }

    Polynomial scale(const K& c) const {
        if (c.is_zero()) return Polynomial(shape_, order_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    /// Multiplies by the single term c*m. Monomial orders are multiplicative,
    /// so sortedness is preserved term by term.
    Polynomial mul_term(const K& c, const Monomial& m) const {
        if (c.is_zero()) return Polynomial(shape_, order_);
        Polynomial r(shape_, order_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, mono_mul(t.mono, m)});
        return r;
    }

    Polynomial mul_mono(const Monomial& m) const {
        if (is_zero()) return *this;
        return mul_term(scalar_one_like(terms_.front().coeff), m);
    }

    /// Divides by the leading coefficient.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(leading_coeff().inv());
    }

    Polynomial with_order(const MonomialOrder& ord) const {
        if (ord == order_) return *this;
        Polynomial r(shape_, ord);
        r.terms_ = terms_;
        std::sort(r.terms_.begin(), r.terms_.end(), [&ord](const Term& a, const Term& b) {
            return mono_compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
        });
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (shape_ != o.shape_) return false;
        if (order_ == o.order_) return terms_ == o.terms_;
        return terms_ == o.with_order(order_).terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form: `±c*mono ± …`, coefficient 1 suppressed, the zero
    /// polynomial renders as "0". Round-trips bit-exactly through parsing.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            bool neg = false;
            if constexpr (std::is_same_v<K, Rational>) neg = t.coeff.sign() < 0;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            K a = t.coeff;
            if constexpr (std::is_same_v<K, Rational>) a = t.coeff.abs();
            if (t.mono.is_one())
                os << a.str();
            else if (a.is_one())
                os << t.mono.str();
            else
                os << a.str() << '*' << t.mono.str();
        }
        return os.str();
    }

private:
    Polynomial(const Shape& shape, const MonomialOrder& ord) : shape_(shape), order_(ord) {}

    void check_compat(const Polynomial& o) const {
        if (shape_ != o.shape_)
            throw std::invalid_argument("Polynomial: shape mismatch");
        if (order_ != o.order_)
            throw std::invalid_argument("Polynomial: monomial order mismatch");
        if (!terms_.empty() && !o.terms_.empty() &&
            !scalar_same_field(terms_.front().coeff, o.terms_.front().coeff))
            throw std::invalid_argument("Polynomial: mixed coefficient fields");
    }

    Shape shape_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyFp = Polynomial<Fp>;

}  // namespace slicecert
