#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicecert/shape.hpp"

namespace slicecert {

/// Variable ids: array variables use their Shape rank 0..V-1 (x[1,...,1] is
/// id 0 and ranks highest). Auxiliary elimination variables use negative ids,
/// -(k+1) for the k-th one, and rank above every array variable.
inline bool var_ranks_above(int a, int b) {
    if ((a < 0) != (b < 0)) return a < 0;
    return a < 0 ? a > b : a < b;
}

enum class OrderKind { Lex, Grevlex, Elim };

/// Monomial order on a fixed variable ranking. Elim is the block order used
/// for elimination: the auxiliary variables form the leading block (compared
/// by grevlex among themselves), ties fall through to grevlex on the array
/// variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    static MonomialOrder lex() { return {OrderKind::Lex}; }
    static MonomialOrder grevlex() { return {OrderKind::Grevlex}; }
    static MonomialOrder elim() { return {OrderKind::Elim}; }

    bool operator==(const MonomialOrder&) const = default;
    std::string str() const {
        switch (kind) {
            case OrderKind::Lex: return "lex";
            case OrderKind::Grevlex: return "grevlex";
            default: return "elim";
        }
    }
};

/// Sparse monomial over the variables of one Shape (plus any auxiliary
/// variables). Exponents are strictly positive; entries are sorted with the
/// highest-ranked variable first; total degree is cached. Immutable.
class Monomial {
public:
    using Entry = std::pair<int, long>;  // (variable id, exponent > 0)

    static Monomial one(const Shape& shape) { return Monomial(shape); }
    static Monomial variable(const Shape& shape, const VarIndex& v, long exp = 1);
    static Monomial variable_id(const Shape& shape, int id, long exp = 1);
    static Monomial aux_variable(const Shape& shape, int k, long exp = 1);
    /// Builds from a dense exponent row over the array variables (id order).
    static Monomial from_dense(const Shape& shape, const std::vector<long>& exps);
    /// Builds from arbitrary (id, exponent) pairs; exponents may repeat and
    /// are accumulated, zero entries dropped.
    static Monomial from_entries(const Shape& shape, std::vector<Entry> entries);

    const Shape& shape() const { return shape_; }
    const std::vector<Entry>& entries() const { return exps_; }
    long degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }
    long exponent(int id) const;
    bool has_aux() const;
    bool is_squarefree() const;

    bool operator==(const Monomial& o) const { return shape_ == o.shape_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str() const;  // "x[1,1]^2*x[2,1]", "1" for the unit

private:
    explicit Monomial(const Shape& shape) : shape_(shape) {}

    Shape shape_;
    std::vector<Entry> exps_;
    long degree_ = 0;

    friend Monomial mono_mul(const Monomial&, const Monomial&);
    friend std::optional<Monomial> mono_divide(const Monomial&, const Monomial&);
    friend Monomial mono_lcm(const Monomial&, const Monomial&);
    friend Monomial mono_gcd(const Monomial&, const Monomial&);
};

/// Exponent-wise sum; throws on shape mismatch or exponent overflow.
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// a/b when b divides a, empty otherwise.
std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b);

inline bool mono_divides(const Monomial& divisor, const Monomial& of) {
    return mono_divide(of, divisor).has_value();
}

Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// m^e for e >= 0.
Monomial mono_pow(const Monomial& m, long e);

/// Total-order verdict under ord; requires equal shapes.
std::strong_ordering mono_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace slicecert
