#include "qnve/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qnve {

NumericPoly::NumericPoly(const MPoly& p) {
  for (const auto& t : p.terms()) {
    T term{t.coeff.get_d(), 0, 0};
    for (const auto& [v, k] : t.mono.factors()) {
      if (v == sym::x1) {
        term.e1 = k;
      } else if (v == sym::x2) {
        term.e2 = k;
      } else {
        throw std::invalid_argument("numeric polynomial may only use x1 and x2, found " + var_name(v));
      }
    }
    terms_.push_back(term);
  }
}

double NumericPoly::operator()(double x1, double x2) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (unsigned i = 0; i < t.e1; ++i) v *= x1;
    for (unsigned i = 0; i < t.e2; ++i) v *= x2;
    sum += v;
  }
  return sum;
}

NumericPotential NumericPotential::from_polynomial(const MPoly& v) {
  NumericPotential p;
  p.source = v;
  p.v = NumericPoly(v);
  p.dv1 = NumericPoly(v.diff(sym::x1));
  p.dv2 = NumericPoly(v.diff(sym::x2));
  p.phi = NumericPoly(v.coeff(sym::x2, 0));
  p.alpha = NumericPoly(Rational(-2) * v.coeff(sym::x2, 2));
  return p;
}

double hamiltonian(const NumericPotential& pot, const State& s) {
  return 0.5 * (s.y1 * s.y1 + s.y2 * s.y2) + pot.v(s.x1, s.x2);
}

double Trajectory::max_relative_drift() const {
  if (energies.empty()) return 0;
  const double h0 = energies.front();
  const double scale = h0 == 0 ? 1.0 : std::abs(h0);
  double m = 0;
  for (double h : energies) m = std::max(m, std::abs(h - h0) / scale);
  return m;
}

double Trajectory::max_off_plane() const {
  double m = 0;
  for (const auto& s : states) m = std::max({m, std::abs(s.x2), std::abs(s.y2)});
  return m;
}

namespace {

State operator+(const State& a, const State& b) { return {a.x1 + b.x1, a.y1 + b.y1, a.x2 + b.x2, a.y2 + b.y2}; }
State operator*(double k, const State& a) { return {k * a.x1, k * a.y1, k * a.x2, k * a.y2}; }

template <typename F>
State rk4_step(const F& f, const State& s, double h) {
  const State k1 = f(s);
  const State k2 = f(s + (h / 2) * k1);
  const State k3 = f(s + (h / 2) * k2);
  const State k4 = f(s + h * k3);
  return s + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

bool finite(const State& s) {
  return std::isfinite(s.x1) && std::isfinite(s.y1) && std::isfinite(s.x2) && std::isfinite(s.y2);
}

double magnitude(const State& s) { return std::max({std::abs(s.x1), std::abs(s.y1), std::abs(s.x2), std::abs(s.y2)}); }

std::size_t step_count(double dt, double T) {
  if (!(dt > 0) || !(T > 0)) throw std::invalid_argument("dt and T must be positive");
  return static_cast<std::size_t>(std::llround(T / dt));
}

}  // namespace

Trajectory integrate_hamilton(const NumericPotential& pot, const State& init, double dt, double T, double divergence) {
  const std::size_t n = step_count(dt, T);
  if (!finite(init)) throw std::invalid_argument("initial state is not finite");
  auto f = [&](const State& s) { return State{s.y1, -pot.dv1(s.x1, s.x2), s.y2, -pot.dv2(s.x1, s.x2)}; };
  Trajectory traj;
  traj.dt = dt;
  traj.times.reserve(n + 1);
  traj.states.reserve(n + 1);
  traj.energies.reserve(n + 1);
  State s = init;
  for (std::size_t i = 0;; ++i) {
    traj.times.push_back(static_cast<double>(i) * dt);
    traj.states.push_back(s);
    traj.energies.push_back(hamiltonian(pot, s));
    if (i == n) break;
    s = rk4_step(f, s, dt);
    if (!finite(s) || magnitude(s) > divergence) {
      traj.truncated = true;
      break;
    }
  }
  return traj;
}

std::vector<double> nve_coefficient_samples(const Trajectory& traj, const std::function<double(double)>& alpha) {
  std::vector<double> out;
  out.reserve(traj.size());
  for (const auto& s : traj.states) out.push_back(alpha(s.x1));
  return out;
}

std::vector<double> nve_coefficient_samples(const Trajectory& traj, const NumericPotential& pot) {
  return nve_coefficient_samples(traj, [&](double x1) { return pot.alpha(x1); });
}

DegreeTest polynomial_degree_test(const std::vector<double>& samples, int d, const DegreeTestOptions& options) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t need = static_cast<std::size_t>(d) + 2;
  if (samples.size() < need) throw std::invalid_argument("degree test needs at least d+2 samples");
  DegreeTest out;
  if (options.stride) {
    out.stride = std::max<std::size_t>(*options.stride, 1);
  } else {
    out.stride = std::max<std::size_t>((samples.size() - 1) / std::max<std::size_t>(options.intervals, 1), 1);
  }
  std::vector<double> sub;
  for (std::size_t i = 0; i < samples.size(); i += out.stride) sub.push_back(samples[i]);
  if (sub.size() < need) throw std::invalid_argument("degree test needs at least d+2 samples after striding");
  out.used = sub.size();

  double scale = 0;
  for (double a : sub) scale = std::max(scale, std::abs(a));
  if (scale == 0) {
    out.pass = true;
    return out;
  }

  std::vector<double> diff = sub;
  for (int k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  double m = 0;
  for (double v : diff) m = std::max(m, std::abs(v));
  out.difference = m / (std::ldexp(1.0, d + 1) * scale);
  out.pass = out.difference < options.tol;

  // Least-squares fit on t in [-1, 1], as a diagnostic.
  const auto rows = static_cast<Eigen::Index>(sub.size());
  Eigen::MatrixXd A(rows, d + 1);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double t = rows == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(rows - 1);
    double p = 1;
    for (int j = 0; j <= d; ++j) {
      A(i, j) = p;
      p *= t;
    }
    b(i) = sub[static_cast<std::size_t>(i)] / scale;
  }
  const Eigen::VectorXd coef = A.householderQr().solve(b);
  out.residual = (A * coef - b).norm() / std::sqrt(static_cast<double>(rows));
  return out;
}

double variational_consistency(const Potential& pot, const State& init, const ConsistencyOptions& options) {
  if (!pot.v.coeff(sym::x2, 1).is_zero()) throw std::invalid_argument("potential does not leave the plane invariant");
  if (init.x2 != 0 || init.y2 != 0) throw std::invalid_argument("initial state must lie in the plane x2 = y2 = 0");
  if (options.delta == 0) return 0;
  const auto num = NumericPotential::from(pot);
  const std::size_t n = step_count(options.dt, options.T);

  State full = init;
  full.x2 += options.delta;
  auto f_full = [&](const State& s) { return State{s.y1, -num.dv1(s.x1, s.x2), s.y2, -num.dv2(s.x1, s.x2)}; };
  // Plane trajectory in (x1, y1) with the variational pair (xi, eta) in (x2, y2).
  State lin = init;
  lin.x2 = options.delta;
  lin.y2 = 0;
  auto f_lin = [&](const State& s) { return State{s.y1, -num.dv1(s.x1, 0.0), s.y2, num.alpha(s.x1) * s.x2}; };

  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    full = rk4_step(f_full, full, options.dt);
    lin = rk4_step(f_lin, lin, options.dt);
    if (!finite(full) || !finite(lin)) throw std::runtime_error("variational_consistency: integration diverged");
    worst = std::max(worst, std::abs(full.x2 - lin.x2));
  }
  return worst / options.delta;
}

}  // namespace qnve
