#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slicecert/groebner.hpp"
#include "slicecert/polynomial.hpp"

namespace slicecert {

/// d−1 rows of non-negative integers, row i holding n_i entries. Satisfies
/// row condition (c_1,…,c_{d−1}) when row i sums to c_i − 1.
struct Tableau {
    std::vector<std::vector<long>> rows;

    bool operator==(const Tableau&) const = default;
    std::string str() const;  // rows joined with " | "
};

/// The slice ideal of a shape: binomials s_{i1} − s_{ij} for each direction
/// i ≤ d−1 and 2 ≤ j ≤ n_i, plus the monomials s_{dj} for 1 ≤ j ≤ n_d.
class SliceIdeal {
public:
    SliceIdeal(const Shape& shape, std::vector<PolyQ> binomials, std::vector<PolyQ> monomials);

    const Shape& shape() const { return shape_; }
    const std::vector<PolyQ>& binomials() const { return binomials_; }
    const std::vector<PolyQ>& monomials() const { return monomials_; }
    /// Binomials first (direction-major, then index), monomials after.
    std::vector<PolyQ> generators() const;
    Ideal<Rational> ideal() const { return Ideal<Rational>(shape_, generators()); }

private:
    Shape shape_;
    std::vector<PolyQ> binomials_;
    std::vector<PolyQ> monomials_;
};

/// s_ij: squarefree product of all variables whose i-th coordinate is j.
/// Directions and indices are 1-based; degree is ∏_{i'≠i} n_{i'}.
Monomial slice(const Shape& shape, int i, int j);

SliceIdeal build_ideal(const Shape& shape, const MonomialOrder& ord = MonomialOrder::grevlex());

/// s = ∏_{i ≤ d−1} ∏_{j ≥ 2} s_ij; the exponent of x_ν counts the
/// coordinates ν_i ≠ 1 with i ≤ d−1.
Monomial witness_monomial(const Shape& shape);

/// ℓ_p for p ∈ 𝒫 = {1..n_1}×…×{1..n_{d−1}}: the product of the n_d
/// variables x_{(p, ν_d)}.
Monomial line_monomial(const Shape& shape, const std::vector<int>& p);

/// 𝒫 in ascending lexicographic order.
std::vector<std::vector<int>> all_lines(const Shape& shape);

/// All tableaux satisfying the row condition, rows enumerated in ascending
/// lexicographic order with earlier rows varying slowest.
std::vector<Tableau> tableaux(const Shape& shape, const std::vector<long>& condition);

/// Closed-form count: ∏_i C(condition_i − 1 + n_i − 1, n_i − 1).
unsigned long tableau_count(const Shape& shape, const std::vector<long>& condition);

/// |p|_A = Σ_i a_{i,p_i}.
long tableau_weight(const Tableau& A, const std::vector<int>& p);

/// Σ over tableaux satisfying the condition of
/// ∏_p (1/(|p|_A!)^{n_d}) ℓ_p^{|p|_A}, with like monomials merged.
PolyQ build_F_condition(const Shape& shape, const std::vector<long>& condition,
                        const MonomialOrder& ord = MonomialOrder::grevlex());

/// The inverse-system polynomial: build_F_condition at (n_1,…,n_{d−1}).
PolyQ build_F(const Shape& shape, const MonomialOrder& ord = MonomialOrder::grevlex());

/// The tableau A_s with first column 0 and every other entry 1; its term in
/// F carries the witness monomial.
Tableau witness_tableau(const Shape& shape);

/// α with s = α·τ_{A_s}: the reciprocal of τ_{A_s}'s coefficient,
/// ∏_p (|p|_{A_s}!)^{n_d}.
Rational witness_alpha(const Shape& shape);

/// (terms counted with multiplicity, distinct monomials) across a list of
/// generators.
template <typename K>
std::pair<long, long> support_count(const std::vector<Polynomial<K>>& gens) {
    long mult = 0;
    std::set<std::vector<Monomial::Entry>> distinct;
    for (const auto& g : gens)
        for (const auto& t : g.terms()) {
            ++mult;
            distinct.insert(t.mono.entries());
        }
    return {mult, static_cast<long>(distinct.size())};
}

/// Support with multiplicity after interreducing r generators living in N
/// monomials: Σ_{i=0}^{r−1}(N−2i) = −r² + r(N+1).
long support_bound(long N, long r);

/// max_r support_bound(N, r) = ⌊((N+1)/2)²⌋, attained at r = ⌊(N+1)/2⌋.
long support_bound_max(long N);

}  // namespace slicecert
