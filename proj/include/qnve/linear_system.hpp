#pragma once

#include <cstddef>
#include <vector>

#include "qnve/algebra.hpp"
#include "qnve/ratfunc.hpp"

namespace qnve {

/// coeffs * u = rhs with entries polynomial in the remaining parameters.
struct LinearSystem {
  Matrix<MPoly> coeffs;
  std::vector<MPoly> rhs;
};

enum class SolutionKind { Unique, Family, Inconsistent };

struct LinearSolution {
  SolutionKind kind = SolutionKind::Inconsistent;
  /// Values with every free unknown set to zero (empty when inconsistent).
  std::vector<RatFunc> particular;
  /// One vector per free unknown (free unknown = 1, the others = 0).
  std::vector<std::vector<RatFunc>> kernel;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  /// Monic nonconstant pivots. The generic solution is valid wherever none of
  /// them vanishes; on their zero sets the pivot choice degenerates.
  std::vector<MPoly> degeneration_conditions;
  /// For an inconsistent system: the nonzero right-hand side left in a zero row.
  MPoly obstruction;
};

/// Fraction-free (Bareiss) elimination over the parameter ring followed by
/// back-substitution in the fraction field. Pivot columns are taken left to
/// right, so free unknowns are the rightmost independent columns.
LinearSolution solve_parametric_linear(const LinearSystem& system);

/// Equations `eq == 0`, each linear in `unknowns` with polynomial coefficients
/// in the remaining symbols. Throws std::invalid_argument if an equation is
/// not linear in the unknowns.
LinearSolution solve_parametric_linear(const std::vector<MPoly>& equations, const std::vector<Var>& unknowns);

/// Polynomial basis of the right kernel of `coeffs`: each vector cleared of
/// denominators, divided by its content, oriented so the entry of its free
/// unknown has a positive leading coefficient.
std::vector<std::vector<MPoly>> polynomial_kernel(const Matrix<MPoly>& coeffs);

/// Clears denominators of a rational vector and removes the polynomial
/// content; the first nonzero entry gets a positive leading coefficient.
std::vector<MPoly> primitive_vector(const std::vector<RatFunc>& v);

}  // namespace qnve
