#include "qnve/ode.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnve {

Var y_jet(unsigned k) { return jet(JetFamily::Unknown, k); }

namespace {

MPoly X(Var v) { return MPoly::variable(v); }

std::string prime_name(unsigned k) {
  if (k == 0) return "y";
  if (k <= 3) return "y" + std::string(k, '\'');
  return "y^(" + std::to_string(k) + ")";
}

Rational rational_content(const MPoly& p) {
  Integer num(0);
  Integer den(1);
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return num == 0 ? Rational(1) : Rational(num, den);
}

// Content of several polynomials together, sign taken from `lead`.
Rational joint_content(const std::vector<MPoly>& polys, const MPoly& lead) {
  Integer num(0);
  Integer den(1);
  for (const auto& p : polys) {
    const Rational c = rational_content(p);
    if (p.is_zero()) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num == 0) return Rational(1);
  Rational out(num, den);
  if (!lead.is_zero() && lead.leading_coeff() < 0) out = -out;
  return out;
}

MPoly rename(const MPoly& p, Var from, Var to) {
  if (from == to || !p.contains(from)) return p;
  return p.subs(from, X(to));
}

}  // namespace

MPoly NonlinearODE::coeff(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  if (i == j) return poly.coeff(y_jet(i), 2);
  return poly.coeff(y_jet(i), 1).coeff(y_jet(j), 1);
}

std::string to_string(const LinearODE& ode) {
  std::string out;
  for (unsigned k = ode.order() + 1; k-- > 0;) {
    if (ode.coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(ode.coeffs[k]) + ")*" + prime_name(k);
  }
  return out.empty() ? "0 = 0" : out + " = 0";
}

std::string to_string(const NonlinearODE& ode) { return to_string(ode.poly) + " = 0"; }

Rational normalize(LinearODE& ode) {
  const Rational f = joint_content(ode.coeffs, ode.coeffs.empty() ? MPoly{} : ode.leading());
  for (auto& c : ode.coeffs) c *= 1 / f;
  return f;
}

Rational normalize(NonlinearODE& ode) {
  const Rational f = joint_content({ode.poly}, ode.poly);
  ode.poly *= 1 / f;
  return f;
}

bool proportional(const LinearODE& a, const LinearODE& b) {
  if (a.coeffs.size() != b.coeffs.size() || a.var != b.var) return false;
  LinearODE na = a;
  LinearODE nb = b;
  normalize(na);
  normalize(nb);
  return na == nb;
}

bool proportional(const NonlinearODE& a, const NonlinearODE& b) {
  if (a.var != b.var) return false;
  NonlinearODE na = a;
  NonlinearODE nb = b;
  normalize(na);
  normalize(nb);
  return na == nb;
}

// ---------------------------------------------------------------- quartic

QuarticCoeffs QuarticCoeffs::symbolic() { return {X(sym::a), X(sym::b), X(sym::c), X(sym::d), X(sym::e)}; }

QuarticCoeffs QuarticCoeffs::centered() { return {X(sym::a), X(sym::b), X(sym::c), MPoly{}, X(sym::e)}; }

QuarticCoeffs QuarticCoeffs::numeric(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                     const Rational& e) {
  return {MPoly(a), MPoly(b), MPoly(c), MPoly(d), MPoly(e)};
}

MPoly QuarticCoeffs::coefficient(unsigned k) const {
  switch (k) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
    case 4: return e;
    default: return {};
  }
}

MPoly QuarticCoeffs::alpha(Var v) const {
  MPoly out;
  for (unsigned k = 0; k <= 4; ++k) out += coefficient(k) * X(v).pow(k);
  return out;
}

QuarticSystem specialize_quartic(const DiffCondition& conditions, const QuarticCoeffs& coeffs) {
  if (conditions.degree != 4) throw std::invalid_argument("specialize_quartic: conditions must be generated for degree 4");
  if (coeffs.e.is_zero()) throw std::invalid_argument("specialize_quartic: e = 0, alpha is not quartic");
  const MPoly alpha = coeffs.alpha(sym::x1);
  const JetPoly* e55 = nullptr;
  const JetPoly* e53 = nullptr;
  const JetPoly* e51 = nullptr;
  for (const auto& c : conditions.conditions) {
    if (c.n != 5) continue;
    if (c.k == 5) e55 = &c.poly;
    if (c.k == 3) e53 = &c.poly;
    if (c.k == 1) e51 = &c.poly;
  }
  if (!e55 || !e53 || !e51) throw std::invalid_argument("specialize_quartic: missing E_{5,k} entries");

  // phi is left symbolic: its jets become unknowns y_s (for L, y = phi) or
  // y_{s-1} (for NL, y = phi').
  auto specialize = [&](const JetPoly& p, int shift) {
    std::map<Var, MPoly> values;
    for (Var v : p.variables()) {
      if (!is_jet(v)) continue;
      const auto [family, order] = jet_info(v);
      if (family == JetFamily::Alpha) {
        MPoly d = alpha;
        for (unsigned i = 0; i < order; ++i) d = d.diff(sym::x1);
        values.emplace(v, std::move(d));
      } else if (family == JetFamily::Phi) {
        values.emplace(v, X(y_jet(order - shift)));
      }
    }
    return p.subs(values);
  };

  if (!specialize(*e55, 0).is_zero()) throw std::logic_error("E_{5,5} does not vanish on a quartic alpha");

  QuarticSystem out;
  const MPoly l = specialize(*e53, 0);
  out.linear.var = sym::x1;
  for (unsigned s = 0; s <= 4; ++s) out.linear.coeffs.push_back(l.coeff(y_jet(s), 1));
  out.linear_factor = normalize(out.linear);

  out.nonlinear.var = sym::x1;
  out.nonlinear.poly = specialize(*e51, 1);
  out.nonlinear_factor = normalize(out.nonlinear);

  for (const auto& c : out.linear.coeffs)
    if (c.contains(sym::a)) throw std::logic_error("constant term of alpha leaked into (L)");
  if (out.nonlinear.poly.contains(sym::a)) throw std::logic_error("constant term of alpha leaked into (NL)");
  return out;
}

LinearODE reduce_order(const LinearODE& ode) {
  if (ode.coeffs.empty() || !ode.coeffs[0].is_zero())
    throw std::invalid_argument("reduce_order: the equation involves the unknown itself");
  LinearODE out;
  out.var = ode.var;
  out.coeffs.assign(ode.coeffs.begin() + 1, ode.coeffs.end());
  return out;
}

CenteredSystem center_and_reduce(const QuarticSystem& system, const QuarticCoeffs& coeffs) {
  if (coeffs.e.is_zero()) throw std::invalid_argument("center_and_reduce: e = 0");
  CenteredSystem out;
  out.mu = RatFunc(-coeffs.d, 4 * coeffs.e);

  // alpha(x + mu) = sum_k x^k sum_{j>=k} binom(j,k) a_j mu^(j-k)
  out.shifted.assign(5, RatFunc{});
  static const int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned j = k; j <= 4; ++j)
      out.shifted[k] += RatFunc(Rational(binom[j][k]) * coeffs.coefficient(j)) * out.mu.pow(j - k);

  QuarticCoeffs shifted_coeffs;
  const bool polynomial = std::all_of(out.shifted.begin(), out.shifted.end(), [](const RatFunc& f) { return f.is_polynomial(); });
  if (polynomial) {
    auto poly = [&](unsigned k) { return out.shifted[k].num() * (1 / out.shifted[k].den().constant_value()); };
    shifted_coeffs = {poly(0), poly(1), poly(2), poly(3), poly(4)};
  } else {
    out.relabeled = true;
    shifted_coeffs = QuarticCoeffs::centered();
  }
  if (!shifted_coeffs.d.is_zero()) throw std::logic_error("centering left a cubic term");

  // The equations are linear in the alpha jets, so translating them is the
  // same as specializing the template at the translated alpha.
  const QuarticSystem centered = specialize_quartic(generate_conditions(4), shifted_coeffs);
  out.linear = reduce_order(centered.linear);
  out.linear.var = sym::x;
  for (auto& c : out.linear.coeffs) c = rename(c, sym::x1, sym::x);
  out.nonlinear.var = sym::x;
  out.nonlinear.poly = rename(centered.nonlinear.poly, sym::x1, sym::x);

  if (!out.relabeled) {
    // Direct check: translate the given equations and compare.
    const MPoly mu = out.mu.num() * (1 / out.mu.den().constant_value());
    const MPoly shift = X(sym::x) + mu;
    LinearODE moved = reduce_order(system.linear);
    moved.var = sym::x;
    for (auto& c : moved.coeffs) c = c.subs(sym::x1, shift);
    NonlinearODE nl{sym::x, system.nonlinear.poly.subs(sym::x1, shift)};
    if (!proportional(moved, out.linear) || !proportional(nl, out.nonlinear))
      throw std::logic_error("center_and_reduce: translated equations disagree with the centered template");
  }
  return out;
}

// ---------------------------------------------------------------- kernels

MPoly SolutionBasis::ansatz_denominator() const { return X(var).pow(pole_order) * denominator.pow(exponent); }

RatFunc SolutionBasis::element(std::size_t i) const { return RatFunc(numerators.at(i), ansatz_denominator()); }

MPoly polynomial_wronskian(const std::vector<MPoly>& polys, Var var) {
  const std::size_t n = polys.size();
  Matrix<MPoly> m(n, std::vector<MPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    MPoly d = polys[j];
    for (std::size_t k = 0; k < n; ++k) {
      m[k][j] = d;
      d = d.diff(var);
    }
  }
  return determinant(m);
}

namespace {

RatFunc rational_wronskian(const std::vector<RatFunc>& fs, Var var) {
  const std::size_t n = fs.size();
  Matrix<RatFunc> m(n, std::vector<RatFunc>(n));
  for (std::size_t j = 0; j < n; ++j) {
    RatFunc d = fs[j];
    for (std::size_t k = 0; k < n; ++k) {
      m[k][j] = d;
      d = d.diff(var);
    }
  }
  return determinant(m);
}

MPoly strip_var_power(const MPoly& p, Var v, unsigned* removed) {
  MPoly q = p;
  unsigned count = 0;
  while (!q.is_zero() && q.constant_term() == 0 && q.coeff(v, 0).is_zero()) {
    q = divide_or_throw(q, X(v));
    ++count;
  }
  if (removed) *removed = count;
  return q;
}

// Numerator of ode(P / (X^p D^m)) over X^(p+n) D^(m+n).
MPoly ansatz_numerator(const LinearODE& ode, const MPoly& P, const MPoly& D, unsigned m, unsigned p) {
  const MPoly xs = p > 0 ? X(ode.var) : MPoly(1L);
  const unsigned n = ode.order();
  const auto N = ansatz_derivatives(P, D, m, p, ode.var, n);
  MPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    if (ode.coeffs[k].is_zero()) continue;
    out += ode.coeffs[k] * N[k] * (xs * D).pow(n - k);
  }
  return out;
}

}  // namespace

std::vector<MPoly> ansatz_derivatives(const MPoly& P, const MPoly& D, unsigned m, unsigned p, Var var, unsigned count) {
  const MPoly xs = p > 0 ? X(var) : MPoly(1L);
  const MPoly dD = D.diff(var);
  std::vector<MPoly> N{P};
  for (unsigned k = 0; k < count; ++k) {
    const MPoly& cur = N.back();
    MPoly next = xs * D * cur.diff(var) - Rational(m + k) * (xs * dD * cur);
    if (p > 0) next -= Rational(p + k) * (D * cur);
    N.push_back(std::move(next));
  }
  return N;
}

SolutionBasis basis_from_numerators(Var var, const MPoly& denominator, unsigned exponent, unsigned pole_order,
                                    std::vector<MPoly> numerators) {
  SolutionBasis basis;
  basis.var = var;
  basis.denominator = denominator;
  basis.exponent = exponent;
  basis.pole_order = pole_order;
  basis.numerators = std::move(numerators);
  if (basis.numerators.empty()) {
    basis.wronskian = RatFunc(1L);
    basis.numerator_wronskian = MPoly(1L);
    return basis;
  }
  std::vector<RatFunc> elements;
  for (std::size_t i = 0; i < basis.numerators.size(); ++i) elements.push_back(basis.element(i));
  basis.wronskian = rational_wronskian(elements, var);
  basis.numerator_wronskian = polynomial_wronskian(basis.numerators, var);
  // W(P_i / g) = W(P_i) / g^n
  const RatFunc predicted(basis.numerator_wronskian,
                          basis.ansatz_denominator().pow(static_cast<unsigned>(basis.numerators.size())));
  if (!(predicted == basis.wronskian)) throw std::logic_error("Wronskian cross-check failed");
  return basis;
}

SolutionBasis rational_kernel(const LinearODE& ode, const KernelOptions& options) {
  if (ode.coeffs.empty() || ode.leading().is_zero()) throw std::invalid_argument("rational_kernel: zero leading coefficient");
  const Var v = ode.var;
  unsigned lead_x_power = 0;
  const MPoly lead_stripped = strip_var_power(ode.leading(), v, &lead_x_power);
  MPoly D = options.denominator.value_or(lead_stripped);
  if (!options.denominator) {
    const Rational f = joint_content({D}, D);
    D *= 1 / f;
  }
  const unsigned p = options.pole_order.value_or(lead_x_power > 0 ? 3u : 0u);
  const unsigned m = options.exponent;
  const unsigned N = options.degree_bound;

  std::vector<MPoly> columns;
  for (unsigned i = 0; i <= N; ++i) columns.push_back(ansatz_numerator(ode, X(v).pow(i), D, m, p));
  unsigned top = 0;
  for (const auto& c : columns) top = std::max(top, c.degree(v));

  const bool reversed = options.normalization == BasisNormalization::LowDegreeFree;
  Matrix<MPoly> system;
  for (unsigned row = 0; row <= top; ++row) {
    std::vector<MPoly> r;
    bool any = false;
    for (unsigned i = 0; i <= N; ++i) {
      r.push_back(columns[reversed ? N - i : i].coeff(v, row));
      any = any || !r.back().is_zero();
    }
    if (any) system.push_back(std::move(r));
  }

  const auto solution = solve_parametric_linear(LinearSystem{system, std::vector<MPoly>(system.size())});
  std::vector<MPoly> numerators;
  for (std::size_t j = 0; j < solution.kernel.size(); ++j) {
    auto vec = primitive_vector(solution.kernel[j]);
    if (vec[solution.free_columns[j]].leading_coeff() < 0)
      for (auto& q : vec) q = -q;
    MPoly P;
    for (unsigned i = 0; i <= N; ++i) P += vec[reversed ? N - i : i] * X(v).pow(i);
    numerators.push_back(std::move(P));
  }
  SolutionBasis basis = basis_from_numerators(v, D, m, p, std::move(numerators));
  basis.solver_conditions = solution.degeneration_conditions;
  return basis;
}

std::optional<std::vector<RatFunc>> coordinates_in(const SolutionBasis& basis, const MPoly& numerator) {
  const Var v = basis.var;
  unsigned top = numerator.degree(v);
  for (const auto& n : basis.numerators) top = std::max(top, n.degree(v));
  LinearSystem sys;
  for (unsigned row = 0; row <= top; ++row) {
    std::vector<MPoly> r;
    for (const auto& n : basis.numerators) r.push_back(n.coeff(v, row));
    sys.coeffs.push_back(std::move(r));
    sys.rhs.push_back(numerator.coeff(v, row));
  }
  const auto sol = solve_parametric_linear(sys);
  if (sol.kind == SolutionKind::Inconsistent) return std::nullopt;
  return sol.particular;
}

// ---------------------------------------------------------------- branches

Branch generic_branch() { return {"generic", {}, {sym::b, sym::c, sym::e}}; }

Branch zero_branch(Var v) {
  Branch b{var_name(v) + "_zero", {{v, Rational(0)}}, {}};
  for (Var p : {sym::b, sym::c, sym::e})
    if (p != v) b.live.push_back(p);
  return b;
}

DegenerationReport degeneration_branches(const SolutionBasis& basis, const std::vector<Var>& parameters,
                                         const std::vector<Var>& nonvanishing) {
  const MPoly& W = basis.numerator_wronskian;
  if (W.is_zero()) throw std::invalid_argument("degeneration_branches: Wronskian vanishes identically");
  DegenerationReport report;
  report.content = gcd_all(W.coeffs(basis.var));

  MPoly rest = report.content;
  for (Var p : parameters) {
    unsigned k = 0;
    rest = strip_var_power(rest, p, &k);
    const bool excluded = std::find(nonvanishing.begin(), nonvanishing.end(), p) != nonvanishing.end();
    if (k > 0) report.multiplicities.push_back({p, k});
    if (k > 0 && !excluded) report.branches.push_back(zero_branch(p));
  }
  report.other_factor = rest.monic();

  const MPoly primitive = divide_or_throw(W, report.content);
  for (const auto& c : primitive.coeffs(basis.var)) {
    if (c.is_zero()) continue;
    const bool pure = c.size() == 1 && std::all_of(c.variables().begin(), c.variables().end(), [&](Var u) {
      return std::find(nonvanishing.begin(), nonvanishing.end(), u) != nonvanishing.end();
    });
    if (pure) {
      report.primitive_part_nonvanishing = true;
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------- residuals

RatFunc residual(const LinearODE& ode, const RatFunc& candidate) {
  RatFunc out;
  RatFunc d = candidate;
  for (unsigned k = 0; k <= ode.order(); ++k) {
    if (!ode.coeffs[k].is_zero()) out += RatFunc(ode.coeffs[k]) * d;
    if (k < ode.order()) d = d.diff(ode.var);
  }
  return out;
}

RatFunc residual(const NonlinearODE& ode, const RatFunc& candidate) {
  unsigned top = 0;
  for (Var v : ode.poly.variables())
    if (is_jet(v) && jet_info(v).first == JetFamily::Unknown) top = std::max(top, jet_info(v).second);
  std::vector<RatFunc> ders{candidate};
  for (unsigned k = 0; k < top; ++k) ders.push_back(ders.back().diff(ode.var));
  // Substitute term by term; the jets enter polynomially.
  RatFunc out;
  for (const auto& t : ode.poly.terms()) {
    RatFunc term(MPoly(t.coeff));
    std::vector<Term> rest;
    Monomial other;
    for (const auto& [v, k] : t.mono.factors()) {
      if (is_jet(v) && jet_info(v).first == JetFamily::Unknown) {
        term *= ders[jet_info(v).second].pow(k);
      } else {
        other = other * Monomial::var(v, k);
      }
    }
    out += term * RatFunc(MPoly::monomial(other, Rational(1)));
  }
  return out;
}

LinearODE restrict_ode(const LinearODE& ode, const std::vector<std::pair<Var, Rational>>& constraints) {
  LinearODE out = ode;
  for (auto& c : out.coeffs)
    for (const auto& [v, value] : constraints) c = c.eval(v, value);
  return out;
}

NonlinearODE restrict_ode(const NonlinearODE& ode, const std::vector<std::pair<Var, Rational>>& constraints) {
  NonlinearODE out = ode;
  for (const auto& [v, value] : constraints) out.poly = out.poly.eval(v, value);
  return out;
}

}  // namespace qnve
