#include "slicecert/contraction.hpp"

namespace slicecert {

namespace {

Rational contraction_factor(const Monomial& a, const Monomial& b) {
    Rational f(1);
    for (const auto& [id, ea] : a.entries()) f = f * falling_factorial(b.exponent(id), ea);
    return f;
}

}  // namespace

PolyQ contract(const PolyQ& g, const PolyQ& F) {
    if (g.shape() != F.shape())
        throw std::invalid_argument("contract: shape mismatch");
    std::vector<PolyQ::Term> out;
    for (const auto& tg : g.terms()) {
        for (const auto& tf : F.terms()) {
            auto q = mono_divide(tf.mono, tg.mono);
            if (!q) continue;
            out.push_back({tg.coeff * tf.coeff * contraction_factor(tg.mono, tf.mono), *q});
        }
    }
    return PolyQ::from_terms(F.shape(), F.order(), std::move(out));
}

}  // namespace slicecert
