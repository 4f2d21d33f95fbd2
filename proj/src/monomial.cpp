#include "slicecert/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slicecert {

namespace {

constexpr long kExpLimit = 1L << 40;

void check_exp(long e) {
    if (e >= kExpLimit) throw std::overflow_error("Monomial: exponent overflow");
}

void check_shapes(const Monomial& a, const Monomial& b) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("Monomial: shape mismatch (" + a.shape().str() +
                                    " vs " + b.shape().str() + ")");
}

}  // namespace

Monomial Monomial::variable(const Shape& shape, const VarIndex& v, long exp) {
    return variable_id(shape, shape.var_id(v), exp);
}

Monomial Monomial::variable_id(const Shape& shape, int id, long exp) {
    if (id < 0 || id >= shape.var_count())
        throw std::invalid_argument("Monomial: variable id out of range");
    return from_entries(shape, {{id, exp}});
}

Monomial Monomial::aux_variable(const Shape& shape, int k, long exp) {
    if (k < 0) throw std::invalid_argument("Monomial: auxiliary index must be >= 0");
    return from_entries(shape, {{-(k + 1), exp}});
}

Monomial Monomial::from_dense(const Shape& shape, const std::vector<long>& exps) {
    if (static_cast<int>(exps.size()) != shape.var_count())
        throw std::invalid_argument("Monomial: dense exponent row has wrong length");
    std::vector<Entry> entries;
    for (int id = 0; id < shape.var_count(); ++id)
        if (exps[id] != 0) entries.push_back({id, exps[id]});
    return from_entries(shape, std::move(entries));
}

Monomial Monomial::from_entries(const Shape& shape, std::vector<Entry> entries) {
    for (auto& [id, e] : entries) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (id >= shape.var_count())
            throw std::invalid_argument("Monomial: variable id out of range for shape " + shape.str());
        check_exp(e);
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return var_ranks_above(a.first, b.first); });
    Monomial m(shape);
    for (const auto& [id, e] : entries) {
        if (e == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == id) {
            m.exps_.back().second += e;
            check_exp(m.exps_.back().second);
        } else {
            m.exps_.push_back({id, e});
        }
        m.degree_ += e;
        check_exp(m.degree_);
    }
    return m;
}

long Monomial::exponent(int id) const {
    for (const auto& [v, e] : exps_)
        if (v == id) return e;
    return 0;
}

bool Monomial::has_aux() const {
    return !exps_.empty() && exps_.front().first < 0;
}

bool Monomial::is_squarefree() const {
    for (const auto& [v, e] : exps_)
        if (e > 1) return false;
    return true;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : exps_) {
        if (!first) os << '*';
        first = false;
        if (id < 0)
            os << 't' << (-id - 1);
        else
            os << shape_.var_of(id).str();
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_shapes(a, b);
    Monomial r(a.shape_);
    r.exps_.reserve(a.exps_.size() + b.exps_.size());
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && var_ranks_above(ia->first, ib->first))) {
            r.exps_.push_back(*ia++);
        } else if (ia == a.exps_.end() || var_ranks_above(ib->first, ia->first)) {
            r.exps_.push_back(*ib++);
        } else {
            long e = ia->second + ib->second;
            check_exp(e);
            r.exps_.push_back({ia->first, e});
            ++ia, ++ib;
        }
    }
    r.degree_ = a.degree_ + b.degree_;
    check_exp(r.degree_);
    return r;
}

std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b) {
    check_shapes(a, b);
    Monomial r(a.shape_);
    auto ia = a.exps_.begin();
    for (const auto& [id, eb] : b.exps_) {
        while (ia != a.exps_.end() && var_ranks_above(ia->first, id)) r.exps_.push_back(*ia++);
        if (ia == a.exps_.end() || ia->first != id || ia->second < eb) return std::nullopt;
        if (ia->second > eb) r.exps_.push_back({id, ia->second - eb});
        ++ia;
    }
    while (ia != a.exps_.end()) r.exps_.push_back(*ia++);
    r.degree_ = a.degree_ - b.degree_;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_shapes(a, b);
    Monomial r(a.shape_);
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && var_ranks_above(ia->first, ib->first))) {
            r.exps_.push_back(*ia++);
        } else if (ia == a.exps_.end() || var_ranks_above(ib->first, ia->first)) {
            r.exps_.push_back(*ib++);
        } else {
            r.exps_.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia, ++ib;
        }
    }
    for (const auto& [id, e] : r.exps_) r.degree_ += e;
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    check_shapes(a, b);
    Monomial r(a.shape_);
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (var_ranks_above(ia->first, ib->first)) {
            ++ia;
        } else if (var_ranks_above(ib->first, ia->first)) {
            ++ib;
        } else {
            r.exps_.push_back({ia->first, std::min(ia->second, ib->second)});
            ++ia, ++ib;
        }
    }
    for (const auto& [id, e] : r.exps_) r.degree_ += e;
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    return mono_gcd(a, b).is_one();
}

Monomial mono_pow(const Monomial& m, long e) {
    if (e < 0) throw std::invalid_argument("mono_pow: negative exponent");
    std::vector<Monomial::Entry> entries;
    for (const auto& [id, x] : m.entries()) {
        if (e != 0 && x > kExpLimit / e) throw std::overflow_error("mono_pow: exponent overflow");
        entries.push_back({id, x * e});
    }
    return Monomial::from_entries(m.shape(), std::move(entries));
}

namespace {

// Lex: scan from the highest-ranked variable; the first difference decides,
// larger exponent wins.
std::strong_ordering lex_compare(const std::vector<Monomial::Entry>& a,
                                 const std::vector<Monomial::Entry>& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end()) return std::strong_ordering::greater;
        if (ia == a.end()) return std::strong_ordering::less;
        if (var_ranks_above(ia->first, ib->first)) return std::strong_ordering::greater;
        if (var_ranks_above(ib->first, ia->first)) return std::strong_ordering::less;
        if (ia->second != ib->second)
            return ia->second > ib->second ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        ++ia, ++ib;
    }
    return std::strong_ordering::equal;
}

// Grevlex tie-break on equal degrees: scan from the lowest-ranked variable;
// at the first difference the smaller exponent wins.
std::strong_ordering revlex_tiebreak(const std::vector<Monomial::Entry>& a,
                                     const std::vector<Monomial::Entry>& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() || ib != b.rend()) {
        if (ib == b.rend()) return std::strong_ordering::less;
        if (ia == a.rend()) return std::strong_ordering::greater;
        // the lower-ranked of the two current variables is where they differ
        if (var_ranks_above(ib->first, ia->first)) return std::strong_ordering::less;
        if (var_ranks_above(ia->first, ib->first)) return std::strong_ordering::greater;
        if (ia->second != ib->second)
            return ia->second < ib->second ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        ++ia, ++ib;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const std::vector<Monomial::Entry>& a, long deg_a,
                                     const std::vector<Monomial::Entry>& b, long deg_b) {
    if (deg_a != deg_b)
        return deg_a > deg_b ? std::strong_ordering::greater : std::strong_ordering::less;
    return revlex_tiebreak(a, b);
}

}  // namespace

std::strong_ordering mono_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    check_shapes(a, b);
    switch (ord.kind) {
        case OrderKind::Lex:
            return lex_compare(a.entries(), b.entries());
        case OrderKind::Grevlex:
            return grevlex_compare(a.entries(), a.degree(), b.entries(), b.degree());
        case OrderKind::Elim: {
            // split each entry list into the auxiliary block and the array block
            auto split = [](const Monomial& m) {
                std::vector<Monomial::Entry> aux, arr;
                long aux_deg = 0, arr_deg = 0;
                for (const auto& en : m.entries()) {
                    if (en.first < 0) { aux.push_back(en); aux_deg += en.second; }
                    else { arr.push_back(en); arr_deg += en.second; }
                }
                return std::tuple{aux, aux_deg, arr, arr_deg};
            };
            auto [aux_a, auxdeg_a, arr_a, arrdeg_a] = split(a);
            auto [aux_b, auxdeg_b, arr_b, arrdeg_b] = split(b);
            auto c = grevlex_compare(aux_a, auxdeg_a, aux_b, auxdeg_b);
            if (c != std::strong_ordering::equal) return c;
            return grevlex_compare(arr_a, arrdeg_a, arr_b, arrdeg_b);
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace slicecert
