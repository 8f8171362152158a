#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qnve/parser.hpp"

namespace qnve {

/// Polynomial lowered to double-precision term lists, evaluated in (x1, x2).
class NumericPoly {
 public:
  NumericPoly() = default;
  /// Throws std::invalid_argument for symbols other than x1, x2.
  explicit NumericPoly(const MPoly& p);
  double operator()(double x1, double x2 = 0.0) const;

 private:
  struct T {
    double coeff;
    unsigned e1, e2;
  };
  std::vector<T> terms_;
};

/// V with its gradient and the restrictions phi, alpha to the plane x2 = y2 = 0.
struct NumericPotential {
  MPoly source;
  NumericPoly v, dv1, dv2, phi, alpha;

  /// No invariance check: used to show what happens when the plane is not invariant.
  static NumericPotential from_polynomial(const MPoly& v);
  static NumericPotential from(const Potential& p) { return from_polynomial(p.v); }
};

struct State {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

double hamiltonian(const NumericPotential& pot, const State& s);

struct Trajectory {
  double dt = 0;
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> energies;
  /// Integration stopped early because the state blew up.
  bool truncated = false;

  std::size_t size() const { return states.size(); }
  /// max |H - H0| / |H0| (absolute drift when H0 = 0).
  double max_relative_drift() const;
  /// max(|x2|, |y2|) over the samples.
  double max_off_plane() const;
};

/// Classical fixed-step RK4 for Hamilton's equations. Throws
/// std::invalid_argument for dt <= 0, T <= 0 or a non-finite initial state.
Trajectory integrate_hamilton(const NumericPotential& pot, const State& init, double dt, double T,
                              double divergence = 1e12);

/// a(t_i) = alpha(x1(t_i)).
std::vector<double> nve_coefficient_samples(const Trajectory& traj, const std::function<double(double)>& alpha);
std::vector<double> nve_coefficient_samples(const Trajectory& traj, const NumericPotential& pot);

struct DegreeTest {
  bool pass = false;
  /// Least-squares degree-d fit residual (rms, relative to the series scale).
  double residual = 0;
  /// max |Delta^(d+1) a| / (2^(d+1) * scale) over the sub-sampled series.
  double difference = 0;
  std::size_t stride = 1;
  std::size_t used = 0;
};

struct DegreeTestOptions {
  double tol = 1e-6;
  /// Number of sampling intervals across the series (stride = (n-1)/intervals).
  std::size_t intervals = 16;
  /// Explicit stride; overrides `intervals`.
  std::optional<std::size_t> stride;
};

/// Is the uniformly spaced series a polynomial of degree <= d? Throws
/// std::invalid_argument when fewer than d+2 samples remain after striding.
DegreeTest polynomial_degree_test(const std::vector<double>& samples, int d, const DegreeTestOptions& options = {});

struct ConsistencyOptions {
  double delta = 1e-6;
  double dt = 1e-3;
  double T = 1.0;
};

/// max |x2(t) - xi(t)| / delta, where x2 comes from the full system started at
/// init + (0, 0, delta, 0) and xi solves xi'' = alpha(x1(t)) xi, xi(0) = delta,
/// xi'(0) = 0 along the trajectory in the plane. Returns 0 for delta = 0.
/// Throws std::invalid_argument if the plane is not invariant or init is off it.
double variational_consistency(const Potential& pot, const State& init, const ConsistencyOptions& options = {});

}  // namespace qnve
