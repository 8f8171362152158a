#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnve/jets.hpp"
#include "qnve/linear_system.hpp"
#include "qnve/ratfunc.hpp"

namespace qnve {

/// y_<k>: k-th derivative of the unknown of an ODE.
Var y_jet(unsigned k);

/// sum_j coeffs[j] * y^(j) = 0 with coefficients polynomial in `var` and parameters.
struct LinearODE {
  Var var = sym::x;
  std::vector<MPoly> coeffs;

  unsigned order() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  const MPoly& leading() const { return coeffs.back(); }
  friend bool operator==(const LinearODE&, const LinearODE&) = default;
};

/// Polynomial in the y_k jets (quadratic for the systems here) with
/// coefficients polynomial in `var` and parameters.
struct NonlinearODE {
  Var var = sym::x;
  MPoly poly;

  /// Coefficient of y_i*y_j (i <= j).
  MPoly coeff(unsigned i, unsigned j) const;
  friend bool operator==(const NonlinearODE&, const NonlinearODE&) = default;
};

std::string to_string(const LinearODE& ode);
std::string to_string(const NonlinearODE& ode);

/// Divides by the rational content and fixes the sign so the leading
/// coefficient has a positive leading term. Returns the factor removed.
Rational normalize(LinearODE& ode);
Rational normalize(NonlinearODE& ode);

/// True when a == lambda*b for a nonzero rational lambda.
bool proportional(const LinearODE& a, const LinearODE& b);
bool proportional(const NonlinearODE& a, const NonlinearODE& b);

/// alpha = a + b x1 + c x1^2 + d x1^3 + e x1^4 with polynomial coefficients.
struct QuarticCoeffs {
  MPoly a, b, c, d, e;

  static QuarticCoeffs symbolic();
  /// d = 0 (already centered).
  static QuarticCoeffs centered();
  static QuarticCoeffs numeric(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                               const Rational& e);
  MPoly alpha(Var v = sym::x1) const;
  MPoly coefficient(unsigned k) const;
};

struct QuarticSystem {
  LinearODE linear;        // 4th order in phi, variable x1 (coeff of phi itself is 0)
  NonlinearODE nonlinear;  // in y = phi', variable x1
  Rational linear_factor;     // E_{5,3} = linear_factor * linear
  Rational nonlinear_factor;  // E_{5,1} = nonlinear_factor * nonlinear
};

/// Specializes E_{5,3}, E_{5,1} to a quartic alpha. Throws std::invalid_argument
/// for conditions of the wrong degree or e == 0.
QuarticSystem specialize_quartic(const DiffCondition& conditions, const QuarticCoeffs& alpha = QuarticCoeffs::symbolic());

struct CenteredSystem {
  LinearODE linear;        // order 3 in y = phi', variable x
  NonlinearODE nonlinear;  // variable x
  RatFunc mu;              // x = x1 - mu
  /// Coefficients of alpha(x + mu), index = power of x.
  std::vector<RatFunc> shifted;
  /// True when the shifted coefficients are not polynomial and the template
  /// symbols (a, b, c, e) were used in their place.
  bool relabeled = false;
};

/// Order reduction y = phi' and the translation x = x1 - mu, mu = -d/(4e),
/// which removes the cubic term of alpha. Throws std::invalid_argument for e == 0.
CenteredSystem center_and_reduce(const QuarticSystem& system, const QuarticCoeffs& alpha);

/// Drops the (zero) coefficient of phi: L in phi becomes an equation in phi'.
LinearODE reduce_order(const LinearODE& ode);

enum class BasisNormalization {
  HighDegreeFree,  // free unknowns are the highest numerator coefficients
  LowDegreeFree,   // free unknowns are the lowest ones
};

struct KernelOptions {
  std::optional<MPoly> denominator;      // default: leading coefficient without x-powers
  unsigned exponent = 3;
  std::optional<unsigned> pole_order;    // default: 3 if x divides the leading coefficient, else 0
  unsigned degree_bound = 8;
  BasisNormalization normalization = BasisNormalization::HighDegreeFree;
};

/// Solutions numerators[i] / (x^pole_order * denominator^exponent).
struct SolutionBasis {
  Var var = sym::x;
  MPoly denominator;
  unsigned exponent = 0;
  unsigned pole_order = 0;
  std::vector<MPoly> numerators;
  RatFunc wronskian;
  MPoly numerator_wronskian;
  /// Pivot polynomials of the elimination (parameters where the generic
  /// kernel computation itself degenerates).
  std::vector<MPoly> solver_conditions;

  MPoly ansatz_denominator() const;
  RatFunc element(std::size_t i) const;
  std::size_t dimension() const { return numerators.size(); }
};

/// Bounded rational ansatz for the kernel of `ode`.
SolutionBasis rational_kernel(const LinearODE& ode, const KernelOptions& options = {});

/// Wraps given numerators over x^p * denom^m and computes both Wronskians.
SolutionBasis basis_from_numerators(Var var, const MPoly& denominator, unsigned exponent, unsigned pole_order,
                                    std::vector<MPoly> numerators);

/// Coordinates of `numerator` (over the same ansatz denominator) in `basis`,
/// or nullopt if it is not in the span.
std::optional<std::vector<RatFunc>> coordinates_in(const SolutionBasis& basis, const MPoly& numerator);

/// N_0..N_count with (P / (X^p D^m))^(k) = N_k / (X^(p+k) D^(m+k)), where
/// X = var if p > 0 and X = 1 otherwise.
std::vector<MPoly> ansatz_derivatives(const MPoly& P, const MPoly& D, unsigned m, unsigned p, Var var, unsigned count);

/// Wronskian of polynomials in `var`.
MPoly polynomial_wronskian(const std::vector<MPoly>& polys, Var var);

struct Branch {
  std::string name;  // "generic", "b_zero", "c_zero"
  std::vector<std::pair<Var, Rational>> constraints;
  std::vector<Var> live;
  friend bool operator==(const Branch&, const Branch&) = default;
};

Branch generic_branch();
Branch zero_branch(Var v);

struct DegenerationReport {
  /// Monic gcd of the x-coefficients of the numerator Wronskian.
  MPoly content;
  /// One branch per parameter (other than the nonvanishing ones) dividing the content.
  std::vector<Branch> branches;
  /// Nonconstant content factors that are not a parameter power.
  MPoly other_factor;
  /// Some coefficient of W/content is a pure power of the nonvanishing
  /// parameters, so W/content cannot vanish identically there.
  bool primitive_part_nonvanishing = false;
  /// Exponent of each branch parameter in the content.
  std::vector<std::pair<Var, unsigned>> multiplicities;
};

/// Reads degeneration loci off the Wronskian. Throws std::invalid_argument if
/// the Wronskian is identically zero.
DegenerationReport degeneration_branches(const SolutionBasis& basis,
                                         const std::vector<Var>& parameters = {sym::b, sym::c, sym::e},
                                         const std::vector<Var>& nonvanishing = {sym::e});

/// Reduced residual after substituting the candidate and its derivatives.
RatFunc residual(const LinearODE& ode, const RatFunc& candidate);
RatFunc residual(const NonlinearODE& ode, const RatFunc& candidate);

/// Applies constraints like {b = 0} to an equation.
LinearODE restrict_ode(const LinearODE& ode, const std::vector<std::pair<Var, Rational>>& constraints);
NonlinearODE restrict_ode(const NonlinearODE& ode, const std::vector<std::pair<Var, Rational>>& constraints);

}  // namespace qnve
