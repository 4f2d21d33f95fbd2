#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "slicecert/polynomial.hpp"

namespace slicecert {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Parses `±c*mono ± …` where a term is an optional integer or num/den
/// coefficient, `*`-joined powers `x[i,j,...]^e` (exponent optional), and the
/// variable indices are validated against the shape. Inverse of
/// Polynomial::str(): parse(format(f)) = f and format(parse(s)) is canonical.
PolyQ parse_poly(const std::string& src, const Shape& shape,
                 const MonomialOrder& ord = MonomialOrder::grevlex());

/// Same grammar with the rational coefficients reduced mod p.
PolyFp parse_poly_fp(const std::string& src, const Shape& shape, std::uint32_t p,
                     const MonomialOrder& ord = MonomialOrder::grevlex());

template <typename K>
std::string format_poly(const Polynomial<K>& f) {
    return f.str();
}

}  // namespace slicecert
