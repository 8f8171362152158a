#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "qnve/mpoly.hpp"

namespace qnve {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Formal partial derivative by symbol name.
/// Throws SymbolError when the name is not in the symbol table.
MPoly poly_diff(const MPoly& p, std::string_view var);

/// Monic greatest common divisor (subresultant PRS on the main variable with
/// recursive content). gcd(p, 0) = monic(p). Throws std::invalid_argument when
/// both inputs are zero.
MPoly poly_gcd(const MPoly& p, const MPoly& q);

/// Monic gcd of the coefficients of p with respect to v (free of v).
MPoly content(const MPoly& p, Var v);
MPoly primitive_part(const MPoly& p, Var v);

/// Monic gcd of a list of polynomials; zero entries are skipped.
MPoly gcd_all(const std::vector<MPoly>& polys);

/// Sylvester resultant eliminating v. Throws std::invalid_argument when either
/// input has degree 0 in v.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

/// Sylvester matrix of p and q in v (rows of p first, descending powers).
Matrix<MPoly> sylvester_matrix(const MPoly& p, const MPoly& q, Var v);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument for
/// non-square input.
MPoly determinant(const Matrix<MPoly>& m);

}  // namespace qnve
