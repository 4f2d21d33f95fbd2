#pragma once

#include "slicecert/polynomial.hpp"

namespace slicecert {

/// Contraction (apolarity) action of g on F: on monomials,
/// x^a ∘ x^b = (∏_ν b_ν!/(b_ν−a_ν)!) x^{b−a} when a ≤ b componentwise and 0
/// otherwise, extended bilinearly. Defined over ℚ only; the factorial
/// coefficients are not invertible in prime characteristic.
PolyQ contract(const PolyQ& g, const PolyQ& F);

}  // namespace slicecert
