#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slicecert/polynomial.hpp"

namespace slicecert {

/// Finitely generated ideal: nonzero generators over one shape. Zero
/// generators are dropped on construction; an empty list is the zero ideal.
template <typename K>
class Ideal {
public:
    Ideal(const Shape& shape, std::vector<Polynomial<K>> gens) : shape_(shape) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (g.shape() != shape_) throw std::invalid_argument("Ideal: generator shape mismatch");
            if (!gens_.empty() &&
                !scalar_same_field(g.leading_coeff(), gens_.front().leading_coeff()))
                throw std::invalid_argument("Ideal: mixed coefficient fields");
            homogeneous_ = homogeneous_ && g.is_homogeneous();
            gens_.push_back(std::move(g));
        }
    }

    const Shape& shape() const { return shape_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const { return homogeneous_; }

private:
    Shape shape_;
    std::vector<Polynomial<K>> gens_;
    bool homogeneous_ = true;
};

template <typename K>
struct NFResult {
    Polynomial<K> remainder;
    std::vector<Polynomial<K>> quotients;  // f = sum quotients[i]*G[i] + remainder
};

/// Full division: repeatedly cancels the highest term divisible by some
/// leading monomial of G, always using the first matching divisor in list
/// order. The remainder has no term divisible by any leading monomial of G.
template <typename K>
NFResult<K> normal_form_trace(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                              const MonomialOrder& ord) {
    std::vector<Polynomial<K>> g;
    g.reserve(G.size());
    for (const auto& gi : G) {
        if (gi.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
        g.push_back(gi.with_order(ord));
    }
    Polynomial<K> p = f.with_order(ord);
    NFResult<K> res{p, std::vector<Polynomial<K>>(G.size(), Polynomial<K>::zero(f.shape(), ord))};
    std::size_t stable = 0;  // terms before this index are irreducible
    while (stable < res.remainder.terms().size()) {
        const auto& t = res.remainder.terms()[stable];
        std::size_t i = 0;
        while (i < g.size() && !mono_divides(g[i].leading_monomial(), t.mono)) ++i;
        if (i == g.size()) {
            ++stable;
            continue;
        }
        K c = t.coeff / g[i].leading_coeff();
        Monomial m = *mono_divide(t.mono, g[i].leading_monomial());
        res.remainder = res.remainder - g[i].mul_term(c, m);
        res.quotients[i] = res.quotients[i] + Polynomial<K>::term(c, m, ord);
    }
    return res;
}

template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                          const MonomialOrder& ord) {
    Polynomial<K> p = f.with_order(ord);
    std::vector<Polynomial<K>> g;
    g.reserve(G.size());
    for (const auto& gi : G) {
        if (gi.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
        g.push_back(gi.with_order(ord));
    }
    std::size_t stable = 0;
    while (stable < p.terms().size()) {
        const auto& t = p.terms()[stable];
        std::size_t i = 0;
        while (i < g.size() && !mono_divides(g[i].leading_monomial(), t.mono)) ++i;
        if (i == g.size()) {
            ++stable;
            continue;
        }
        K c = t.coeff / g[i].leading_coeff();
        Monomial m = *mono_divide(t.mono, g[i].leading_monomial());
        p = p - g[i].mul_term(c, m);
    }
    return p;
}

template <typename K>
Polynomial<K> s_polynomial(const Polynomial<K>& fin, const Polynomial<K>& gin,
                           const MonomialOrder& ord) {
    Polynomial<K> f = fin.with_order(ord);
    Polynomial<K> g = gin.with_order(ord);
    Monomial L = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<K> a = f.mul_term(f.leading_coeff().inv(), *mono_divide(L, f.leading_monomial()));
    Polynomial<K> b = g.mul_term(g.leading_coeff().inv(), *mono_divide(L, g.leading_monomial()));
    return a - b;
}

template <typename K>
class GroebnerBasis {
public:
    GroebnerBasis(Ideal<K> ideal, std::vector<Polynomial<K>> basis, const MonomialOrder& ord,
                  bool reduced)
        : ideal_(std::move(ideal)), basis_(std::move(basis)), order_(ord), reduced_(reduced) {}

    const Ideal<K>& ideal() const { return ideal_; }
    const std::vector<Polynomial<K>>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    bool is_reduced() const { return reduced_; }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> lm;
        lm.reserve(basis_.size());
        for (const auto& g : basis_) lm.push_back(g.leading_monomial());
        return lm;
    }

private:
    Ideal<K> ideal_;
    std::vector<Polynomial<K>> basis_;
    MonomialOrder order_;
    bool reduced_;
};

/// Buchberger's algorithm with the coprime and chain criteria. Pairs are
/// processed by minimal lcm total degree, ties broken by insertion order;
/// every step is deterministic. Input generators stay at the front of the
/// basis, new elements are appended monic.
template <typename K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& ord) {
    std::vector<Polynomial<K>> basis;
    for (const auto& g : I.generators()) basis.push_back(g.with_order(ord));

    // pending pairs keyed by (lcm degree, insertion sequence)
    std::set<std::tuple<long, long, int, int>> queue;
    std::set<std::pair<int, int>> done;  // processed or discarded by a criterion
    long seq = 0;
    auto push_pair = [&](int i, int j) {
        long deg = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
        queue.insert({deg, seq++, i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) push_pair(i, j);

    auto is_done = [&](int a, int b) {
        return done.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!queue.empty()) {
        auto [deg, s, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});
        const Monomial &li = basis[i].leading_monomial(), &lj = basis[j].leading_monomial();
        if (mono_coprime(li, lj)) continue;
        Monomial L = mono_lcm(li, lj);
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == i || k == j) continue;
            if (is_done(i, k) && is_done(j, k) && mono_divides(basis[k].leading_monomial(), L))
                chained = true;
        }
        if (chained) continue;
        Polynomial<K> r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        int m = static_cast<int>(basis.size()) - 1;
        for (int t = 0; t < m; ++t) push_pair(t, m);
    }
    return GroebnerBasis<K>(I, std::move(basis), ord, false);
}

/// Minimalizes and tail-reduces: leading coefficients 1, no term of any
/// element divisible by another element's leading monomial, elements sorted
/// ascending by leading monomial. Unique for (ideal, order); idempotent.
template <typename K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& G) {
    std::vector<Polynomial<K>> sorted;
    for (const auto& g : G.basis()) sorted.push_back(g.with_order(G.order()));
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return mono_compare(a.leading_monomial(), b.leading_monomial(), G.order()) ==
               std::strong_ordering::less;
    });
    // ascending scan: any proper divisor of a leading monomial precedes it
    std::vector<Polynomial<K>> minimal;
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (mono_divides(kept.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        if (others.empty())
            reduced.push_back(minimal[i].monic());
        else
            reduced.push_back(normal_form(minimal[i], others, G.order()).monic());
    }
    return GroebnerBasis<K>(G.ideal(), std::move(reduced), G.order(), true);
}

template <typename K>
GroebnerBasis<K> reduced_groebner(const Ideal<K>& I, const MonomialOrder& ord) {
    return reduce_basis(buchberger(I, ord));
}

template <typename K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    if (f.is_zero()) return true;
    if (G.basis().empty()) return false;
    return normal_form(f, G.basis(), G.order()).is_zero();
}

template <typename K>
bool ideal_member(const Polynomial<K>& f, const Ideal<K>& I,
                  const MonomialOrder& ord = MonomialOrder::grevlex()) {
    return ideal_member(f, reduced_groebner(I, ord));
}

/// I ∩ J by elimination: Gröbner basis of t·I + (1−t)·J under the block
/// order with t leading, keeping the t-free elements.
template <typename K>
Ideal<K> ideal_intersect(const Ideal<K>& I, const Ideal<K>& J,
                         const MonomialOrder& out_ord = MonomialOrder::grevlex()) {
    if (I.shape() != J.shape()) throw std::invalid_argument("ideal_intersect: shape mismatch");
    const Shape& shape = I.shape();
    Monomial t = Monomial::aux_variable(shape, 0);
    MonomialOrder elim = MonomialOrder::elim();
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.with_order(elim).mul_mono(t));
    for (const auto& h : J.generators()) {
        Polynomial<K> he = h.with_order(elim);
        gens.push_back(he - he.mul_mono(t));
    }
    GroebnerBasis<K> gb = reduced_groebner(Ideal<K>(shape, std::move(gens)), elim);
    std::vector<Polynomial<K>> kept;
    for (const auto& g : gb.basis())
        if (!g.has_aux()) kept.push_back(g.with_order(out_ord));
    return Ideal<K>(shape, std::move(kept));
}

/// (I : f) for a monomial f: intersect with (f), then divide each generator
/// by f (every term of an element of (f) is divisible by f).
template <typename K>
Ideal<K> colon(const Ideal<K>& I, const Monomial& f,
               const MonomialOrder& out_ord = MonomialOrder::grevlex()) {
    if (I.is_zero()) return I;
    K one = scalar_one_like(I.generators().front().leading_coeff());
    Ideal<K> F(I.shape(), {Polynomial<K>::term(one, f, out_ord)});
    Ideal<K> meet = ideal_intersect(I, F, out_ord);
    std::vector<Polynomial<K>> quot;
    for (const auto& g : meet.generators()) {
        std::vector<typename Polynomial<K>::Term> terms;
        for (const auto& t : g.terms()) {
            auto q = mono_divide(t.mono, f);
            if (!q) throw std::logic_error("colon: intersection element not divisible");
            terms.push_back({t.coeff, *q});
        }
        quot.push_back(Polynomial<K>::from_terms(I.shape(), out_ord, std::move(terms)));
    }
    return Ideal<K>(I.shape(), std::move(quot));
}

/// (I : m) as the intersection of (I : x_ν) over every variable.
template <typename K>
Ideal<K> colon_maximal(const Ideal<K>& I,
                       const MonomialOrder& out_ord = MonomialOrder::grevlex()) {
    const Shape& shape = I.shape();
    Ideal<K> acc = colon(I, Monomial::variable_id(shape, 0), out_ord);
    for (int id = 1; id < shape.var_count(); ++id)
        acc = ideal_intersect(acc, colon(I, Monomial::variable_id(shape, id), out_ord), out_ord);
    return acc;
}

/// True iff the reduced Gröbner bases coincide termwise.
template <typename K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J,
                 const MonomialOrder& ord = MonomialOrder::grevlex()) {
    if (I.shape() != J.shape()) throw std::invalid_argument("ideal_equal: shape mismatch");
    auto a = reduced_groebner(I, ord).basis();
    auto b = reduced_groebner(J, ord).basis();
    return a == b;
}

/// Mutual reduction to a fixpoint: each output is in normal form with respect
/// to the others, so no output's leading monomial appears in (or divides a
/// term of) another output. Preserves the ideal; outputs are monic.
template <typename K>
std::vector<Polynomial<K>> interreduce_generators(const std::vector<Polynomial<K>>& gens,
                                                  const MonomialOrder& ord) {
    std::vector<Polynomial<K>> cur;
    for (const auto& g : gens)
        if (!g.is_zero()) cur.push_back(g.with_order(ord));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::vector<Polynomial<K>> others;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i && !cur[j].is_zero()) others.push_back(cur[j]);
            if (others.empty()) continue;
            Polynomial<K> r = normal_form(cur[i], others, ord);
            if (r != cur[i]) changed = true;
            cur[i] = std::move(r);
        }
        std::erase_if(cur, [](const Polynomial<K>& p) { return p.is_zero(); });
    }
    for (auto& g : cur) g = g.monic();
    return cur;
}

}  // namespace slicecert
