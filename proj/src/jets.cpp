#include "qnve/jets.hpp"

#include <stdexcept>

namespace qnve {

Var alpha_jet(unsigned r) { return jet(JetFamily::Alpha, r); }
Var phi_jet(unsigned s) { return jet(JetFamily::Phi, s); }
Var nve_jet(unsigned k) { return jet(JetFamily::NveCoeff, k); }

void check_jet_poly(const JetPoly& p) {
  for (Var v : p.variables()) {
    if (v == sym::x || v == sym::x1 || v == sym::x2 || v == sym::t)
      throw std::invalid_argument("jet polynomial contains the coordinate " + var_name(v));
    if (!is_jet(v)) continue;
    const auto [family, order] = jet_info(v);
    if (family == JetFamily::NveCoeff || family == JetFamily::Unknown)
      throw std::invalid_argument("jet polynomial contains " + var_name(v));
    if (family == JetFamily::Phi && order == 0) throw std::invalid_argument("phi0 cannot occur in a jet polynomial");
  }
}

unsigned max_jet_order(const JetPoly& p) {
  unsigned m = 0;
  for (Var v : p.variables())
    if (is_jet(v)) m = std::max(m, jet_info(v).second);
  return m;
}

JetPoly total_derivative(const JetPoly& p) {
  JetPoly out;
  for (Var v : p.variables()) {
    if (!is_jet(v)) continue;
    const auto [family, order] = jet_info(v);
    if (family != JetFamily::Alpha && family != JetFamily::Phi) continue;
    out += p.diff(v) * MPoly::variable(jet(family, order + 1));
  }
  return out;
}

JetPoly lie_derivative(const JetPoly& p) {
  return MPoly::variable(sym::y1) * total_derivative(p) - MPoly::variable(phi_jet(1)) * p.diff(sym::y1);
}

const JetPoly& EnkTable::at(int n, int k) const {
  static const JetPoly zero;
  const auto it = entries_.find({n, k});
  return it == entries_.end() ? zero : it->second;
}

void EnkTable::set(int n, int k, JetPoly p) {
  if (p.is_zero()) {
    entries_.erase({n, k});
  } else {
    entries_[{n, k}] = std::move(p);
  }
}

EnkTable enk_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("enk_table: max_n must be >= 1");
  EnkTable table(max_n);
  table.set(1, 1, MPoly::variable(alpha_jet(1)));
  const MPoly phi1 = MPoly::variable(phi_jet(1));
  for (int n = 1; n < max_n; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      JetPoly next = total_derivative(table.at(n, k - 1));
      const JetPoly& up = table.at(n, k + 1);
      if (!up.is_zero()) next -= Rational(k + 1) * (up * phi1);
      table.set(n + 1, k, std::move(next));
    }
  }
  return table;
}

std::string check_against_operator(const EnkTable& table) {
  JetPoly iterate = MPoly::variable(alpha_jet(0));
  for (int n = 1; n <= table.max_n(); ++n) {
    iterate = lie_derivative(iterate);
    const auto by_y1 = iterate.coeffs(sym::y1);
    for (int k = 0; k <= n + 1; ++k) {
      const JetPoly expected = k < static_cast<int>(by_y1.size()) ? by_y1[k] : JetPoly{};
      if (!(expected == table.at(n, k)))
        return "E_{" + std::to_string(n) + "," + std::to_string(k) + "}: recurrence " + to_string(table.at(n, k)) +
               " vs operator " + to_string(expected);
    }
  }
  return {};
}

DiffCondition generate_conditions(int degree) {
  if (degree < 0) throw std::invalid_argument("generate_conditions: degree must be >= 0");
  const int n = degree + 1;
  const EnkTable table = enk_table(n);
  DiffCondition out;
  out.degree = degree;
  for (int k = n; k >= 0; k -= 2)
    if (const JetPoly& p = table.at(n, k); !p.is_zero()) out.conditions.push_back({n, k, p});
  return out;
}

namespace {

void check_concrete(const MPoly& p, const char* what) {
  for (Var v : p.variables())
    if (v == sym::y1 || is_jet(v)) throw std::invalid_argument(std::string(what) + " must not contain " + var_name(v));
}

}  // namespace

MPoly specialize_jets(const JetPoly& p, const MPoly& alpha, const MPoly& phi) {
  check_concrete(alpha, "alpha");
  check_concrete(phi, "phi");
  std::map<Var, MPoly> values;
  for (Var v : p.variables()) {
    if (!is_jet(v)) continue;
    const auto [family, order] = jet_info(v);
    const MPoly* base = family == JetFamily::Alpha ? &alpha : family == JetFamily::Phi ? &phi : nullptr;
    if (base == nullptr) continue;
    MPoly d = *base;
    for (unsigned i = 0; i < order; ++i) d = d.diff(sym::x1);
    values.emplace(v, std::move(d));
  }
  return p.subs(values);
}

MPoly lie_derivative_concrete(const MPoly& p, const MPoly& phi) {
  return MPoly::variable(sym::y1) * p.diff(sym::x1) - phi.diff(sym::x1) * p.diff(sym::y1);
}

MPoly pullback_condition(const MPoly& Q, const MPoly& alpha, const MPoly& phi) {
  check_concrete(alpha, "alpha");
  check_concrete(phi, "phi");
  unsigned top = 0;
  for (Var v : Q.variables()) {
    if (!is_jet(v) || jet_info(v).first != JetFamily::NveCoeff)
      throw std::invalid_argument("pullback_condition: Q may only use a_k jets, found " + var_name(v));
    top = std::max(top, jet_info(v).second);
  }
  if (Q.is_constant()) return Q;
  std::map<Var, MPoly> values;
  MPoly iterate = alpha;
  for (unsigned k = 0; k <= top; ++k) {
    values.emplace(nve_jet(k), iterate);
    if (k < top) iterate = lie_derivative_concrete(iterate, phi);
  }
  return Q.subs(values);
}

}  // namespace qnve
