#include "qnve/certifier.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qnve/jets.hpp"
#include "qnve/literature.hpp"

namespace qnve {

const char* const kTheoremConclusion =
    "φ′ = 0; V = λ₀ + P₄(x₁)x₂² + O(x₂³)";

namespace {

constexpr std::array<Var, 3> kK{sym::K1, sym::K2, sym::K3};

bool is_unknown_jet(Var v) { return is_jet(v) && jet_info(v).first == JetFamily::Unknown; }

int k_index(Var v) {
  for (int i = 0; i < 3; ++i)
    if (kK[i] == v) return i;
  return -1;
}

// ---- univariate helpers (index = power) ----

using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_upoly(const MPoly& p, Var v) {
  UPoly out;
  for (const auto& t : p.terms()) {
    for (const auto& [u, k] : t.mono.factors())
      if (u != v) throw std::invalid_argument("rational_roots: polynomial is not univariate in " + var_name(v));
    const auto k = t.mono.degree(v);
    if (out.size() <= k) out.resize(k + 1);
    out[k] = t.coeff;
  }
  trim(out);
  return out;
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

UPoly remainder(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<UPoly> sturm_chain(const UPoly& f) {
  std::vector<UPoly> chain{f, derivative(f)};
  while (chain.back().size() > 1) {
    UPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct RootFinder {
  UPoly f;  // square-free, integer coefficients
  Integer lead;
  std::vector<UPoly> chain;
  std::vector<Rational> roots;

  int count(const Rational& lo, const Rational& hi) const { return sign_changes(chain, lo) - sign_changes(chain, hi); }

  void refine(Rational lo, Rational hi) {
    const int s_lo = sgn(eval(f, lo));
    while ((hi - lo) * lead >= 1) {
      Rational mid = (lo + hi) / 2;
      const int s = sgn(eval(f, mid));
      if (s == 0) {
        roots.push_back(mid);
        return;
      }
      (s == s_lo ? lo : hi) = mid;
    }
    // A rational root p/q of an integer polynomial has q | lead, so lead*root
    // is an integer in the open interval (lead*lo, lead*hi) of width < 1.
    Rational scaled = lo * lead;
    Integer n = scaled.get_num() / scaled.get_den();
    if (Rational(n) <= scaled) n += 1;
    Rational candidate(n, lead);
    candidate.canonicalize();
    if (candidate < hi && eval(f, candidate) == 0) roots.push_back(candidate);
  }

  void isolate(const Rational& lo, const Rational& hi, int n) {
    if (n == 0) return;
    if (n == 1) {
      refine(lo, hi);
      return;
    }
    // Split at a non-root; f has fewer than deg+1 roots among deg+1 candidates.
    const long parts = static_cast<long>(f.size()) + 1;
    for (long j = 0; j < parts - 1; ++j) {
      const long off = (j % 2 == 0) ? j / 2 : -(j + 1) / 2;
      const long idx = parts / 2 + off;
      if (idx <= 0 || idx >= parts) continue;
      Rational frac(idx, parts);
      frac.canonicalize();
      const Rational m = lo + (hi - lo) * frac;
      if (eval(f, m) == 0) continue;
      const int left = count(lo, m);
      isolate(lo, m, left);
      isolate(m, hi, n - left);
      return;
    }
    throw std::logic_error("rational_roots: no split point");
  }
};

// ---- elimination ----

struct Elimination {
  Var v = sym::K3;
  std::vector<EliminationStep> steps;
  MPoly gcd;  // zero when no nonzero binary form was produced
};

MPoly accumulate_gcd(const MPoly& g, const MPoly& r) {
  if (r.is_zero()) return g;
  if (g.is_zero()) return r.monic();
  return poly_gcd(g, r);
}

Elimination eliminate(const std::vector<MPoly>& polys, Var v) {
  Elimination out;
  out.v = v;
  auto done = [&] { return !out.gcd.is_zero() && out.gcd.is_constant(); };
  for (std::size_t i = 0; i < polys.size() && !done(); ++i) {
    if (polys[i].is_zero()) continue;
    if (!polys[i].contains(v)) {
      out.gcd = accumulate_gcd(out.gcd, polys[i]);
      out.steps.push_back({i, i, polys[i], out.gcd});
      continue;
    }
    for (std::size_t j = i + 1; j < polys.size() && !done(); ++j) {
      if (polys[j].is_zero() || !polys[j].contains(v)) continue;
      MPoly r = resultant(polys[i], polys[j], v);
      out.gcd = accumulate_gcd(out.gcd, r);
      out.steps.push_back({i, j, std::move(r), out.gcd});
    }
  }
  return out;
}

std::map<Var, Rational> unit_point(Var v) {
  std::map<Var, Rational> p;
  for (Var k : kK) p[k] = k == v ? 1 : 0;
  return p;
}

std::optional<std::size_t> unit_point_nonzero(const std::vector<MPoly>& polys, Var v) {
  const auto point = unit_point(v);
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!polys[i].is_zero() && polys[i].eval_all(point) != 0) return i;
  return std::nullopt;
}

ProjectivePoint normalize_point(ProjectivePoint p) {
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : p) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num_gcd == 0) return p;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (const auto& c : p)
    if (c != 0) {
      if (c < 0) scale = -scale;
      break;
    }
  for (auto& c : p) c *= scale;
  return p;
}

bool is_common_zero(const std::vector<MPoly>& polys, const ProjectivePoint& p) {
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) return false;
  const std::map<Var, Rational> at{{sym::K1, p[0]}, {sym::K2, p[1]}, {sym::K3, p[2]}};
  return std::all_of(polys.begin(), polys.end(), [&](const MPoly& q) { return q.is_zero() || q.eval_all(at) == 0; });
}

std::array<Var, 2> other_vars(Var v) {
  std::array<Var, 2> out{};
  std::size_t n = 0;
  for (Var k : kK)
    if (k != v) out[n++] = k;
  return out;
}

// Points (u:w) = (r:1) and (1:0) on the binary form, then solve all forms for v.
std::optional<ProjectivePoint> witness_on_roots(const std::vector<MPoly>& polys, const Elimination& elim) {
  if (elim.gcd.is_zero() || elim.gcd.is_constant()) return std::nullopt;
  const auto [u, w] = other_vars(elim.v);
  std::vector<std::pair<Rational, Rational>> candidates;
  const MPoly dehom = elim.gcd.eval(w, 1);
  if (!dehom.is_zero() && !dehom.is_constant())
    for (const auto& r : rational_roots(dehom, u)) candidates.emplace_back(r, 1);
  if (elim.gcd.eval(u, 1).eval(w, 0).is_zero()) candidates.emplace_back(1, 0);

  for (const auto& [uu, ww] : candidates) {
    MPoly g;
    for (const auto& q : polys) {
      if (q.is_zero()) continue;
      g = accumulate_gcd(g, q.eval(u, uu).eval(w, ww));
    }
    std::vector<Rational> values;
    if (g.is_zero()) {
      values.push_back(0);
    } else if (!g.is_constant()) {
      values = rational_roots(g, elim.v);
    }
    for (const auto& value : values) {
      ProjectivePoint p;
      p[k_index(u)] = uu;
      p[k_index(w)] = ww;
      p[k_index(elim.v)] = value;
      if (is_common_zero(polys, p)) return normalize_point(p);
    }
  }
  return std::nullopt;
}

// All forms share a linear factor: any point of that line works.
std::optional<ProjectivePoint> witness_on_common_line(const std::vector<MPoly>& polys) {
  std::vector<MPoly> nz;
  for (const auto& q : polys)
    if (!q.is_zero()) nz.push_back(q);
  if (nz.empty()) return std::nullopt;
  const MPoly h = gcd_all(nz);
  if (h.total_degree() != 1) return std::nullopt;
  for (Var v : kK) {
    const Rational a = h.coeff(v, 1).constant_value();
    if (a == 0) continue;
    for (Var o : other_vars(v)) {
      ProjectivePoint p;
      p[k_index(o)] = 1;
      p[k_index(v)] = -h.coeff(o, 1).constant_value() / a;
      if (is_common_zero(polys, p)) return normalize_point(p);
    }
  }
  return std::nullopt;
}

void check_branch(const Specialization& params, const Branch& branch) {
  for (const auto& [v, value] : branch.constraints) {
    auto it = params.find(v);
    if (it != params.end() && it->second != value)
      throw std::invalid_argument("specialization violates branch " + branch.name + ": " + var_name(v) + " must be " +
                                  value.get_str());
  }
  for (Var v : branch.live) {
    auto it = params.find(v);
    if (it != params.end() && it->second == 0)
      throw std::invalid_argument("specialization violates branch " + branch.name + ": " + var_name(v) +
                                  " must be nonzero");
  }
}

std::string point_text(const ProjectivePoint& p) {
  return "(" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ")";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Product of ansatz numerators: y^(k) = N_k / (X^(p+k) D^(m+k)).
struct JetSplit {
  unsigned degree = 0;  // total degree in the y jets
  unsigned weight = 0;  // sum of derivative orders
};

JetSplit split_of(const Monomial& m) {
  JetSplit s;
  for (const auto& [v, k] : m.factors())
    if (is_unknown_jet(v)) {
      s.degree += k;
      s.weight += k * jet_info(v).second;
    }
  return s;
}

}  // namespace

MPoly QuadraticForm::polynomial() const {
  MPoly out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!matrix[i][j].is_zero()) out += matrix[i][j] * MPoly::variable(kK[i]) * MPoly::variable(kK[j]);
  return out;
}

bool QuadraticForm::is_zero() const {
  for (const auto& row : matrix)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

BuiltQ build_Q(const NonlinearODE& nl, const SolutionBasis& basis) {
  if (nl.var != basis.var) throw std::invalid_argument("build_Q: equation and basis use different variables");
  if (basis.dimension() == 0 || basis.dimension() > 3)
    throw std::invalid_argument("build_Q: basis must have 1 to 3 elements");
  const Var var = basis.var;
  const unsigned p = basis.pole_order;
  const unsigned m = basis.exponent;
  const MPoly& D = basis.denominator;
  const MPoly X = p > 0 ? MPoly::variable(var) : MPoly(1L);

  MPoly P;
  for (std::size_t i = 0; i < basis.dimension(); ++i) P += MPoly::variable(kK[i]) * basis.numerators[i];

  // Group the equation by its y-monomials.
  std::map<Monomial, MPoly> groups;
  unsigned top = 0;
  for (const auto& t : nl.poly.terms()) {
    Monomial ys, rest;
    for (const auto& [v, k] : t.mono.factors()) {
      if (is_unknown_jet(v)) {
        ys = ys * Monomial::var(v, k);
        top = std::max(top, jet_info(v).second);
      } else if (is_jet(v) || k_index(v) >= 0) {
        throw std::invalid_argument("build_Q: unexpected symbol " + var_name(v));
      } else {
        rest = rest * Monomial::var(v, k);
      }
    }
    groups[ys] += MPoly::monomial(rest, t.coeff);
  }
  const auto N = ansatz_derivatives(P, D, m, p, var, top);

  // Each term's own denominator after cancelling the powers of X and D that
  // divide its coefficient; Q is the numerator over their lcm.
  struct Reduced {
    MPoly coeff;
    unsigned xp, dp;
  };
  std::vector<std::pair<Monomial, Reduced>> reduced;
  unsigned x_max = 0, d_max = 0;
  for (const auto& [ys, coeff] : groups) {
    const auto s = split_of(ys);
    Reduced r{coeff, p > 0 ? s.degree * p + s.weight : 0, s.degree * m + s.weight};
    while (r.dp > 0 && !D.is_constant()) {
      auto q = divide_exact(r.coeff, D);
      if (!q) break;
      r.coeff = std::move(*q);
      --r.dp;
    }
    while (r.xp > 0 && r.coeff.coeff(var, 0).is_zero()) {
      r.coeff = divide_or_throw(r.coeff, X);
      --r.xp;
    }
    x_max = std::max(x_max, r.xp);
    d_max = std::max(d_max, r.dp);
    reduced.emplace_back(ys, std::move(r));
  }

  BuiltQ out;
  for (const auto& [ys, r] : reduced) {
    MPoly term = r.coeff;
    for (const auto& [v, k] : ys.factors()) term *= N[jet_info(v).second].pow(k);
    if (p > 0) term *= X.pow(x_max - r.xp);
    term *= D.pow(d_max - r.dp);
    out.q += term;
  }
  out.x_power = x_max;
  out.d_power = d_max;

  // Cross-check against direct substitution at one exact point.
  std::map<Var, Rational> at;
  Rational next = 2;
  for (const auto& src : {out.q, nl.poly, D})
    for (Var v : src.variables())
      if (v != var && k_index(v) < 0 && !is_unknown_jet(v) && !at.count(v)) {
        at[v] = next;
        next += 1;
      }
  at[sym::K1] = 1;
  at[sym::K2] = -2;
  at[sym::K3] = 3;
  NonlinearODE nl_at{var, nl.poly.eval(at)};
  const MPoly den_at = D.eval(at);
  if (!den_at.is_zero()) {
    RatFunc y;
    for (std::size_t i = 0; i < basis.dimension(); ++i) y += RatFunc(basis.numerators[i].eval(at)) * RatFunc(at[kK[i]]);
    y = y / RatFunc(X.pow(p) * den_at.pow(m));
    const RatFunc direct = residual(nl_at, y);
    const RatFunc cleared(out.q.eval(at), X.pow(out.x_power) * den_at.pow(out.d_power));
    if (!(direct == cleared)) throw std::logic_error("build_Q: cleared numerator disagrees with direct substitution");
  }
  return out;
}

std::vector<QuadraticForm> extract_forms(const MPoly& Q, Var var) {
  const auto coeffs = Q.coeffs(var);
  std::vector<QuadraticForm> forms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    forms.emplace_back().index = static_cast<unsigned>(i);
    for (const auto& t : coeffs[i].terms()) {
      std::array<unsigned, 3> e{};
      Monomial rest;
      for (const auto& [v, k] : t.mono.factors()) {
        const int idx = k_index(v);
        if (idx >= 0) {
          e[idx] = k;
        } else {
          rest = rest * Monomial::var(v, k);
        }
      }
      if (e[0] + e[1] + e[2] != 2)
        throw std::invalid_argument("extract_forms: Q is not homogeneous of degree 2 in K1, K2, K3");
      const MPoly c = MPoly::monomial(rest, t.coeff);
      std::vector<int> idx;
      for (int j = 0; j < 3; ++j)
        for (unsigned r = 0; r < e[j]; ++r) idx.push_back(j);
      auto& M = forms.back().matrix;
      if (idx[0] == idx[1]) {
        M[idx[0]][idx[0]] += c;
      } else {
        const MPoly half = c * Rational(1, 2);
        M[idx[0]][idx[1]] += half;
        M[idx[1]][idx[0]] += half;
      }
    }
  }
  return forms;
}

MPoly reassemble(const std::vector<QuadraticForm>& forms, Var var) {
  MPoly out;
  for (const auto& f : forms) out += f.polynomial() * MPoly::variable(var).pow(f.index);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Incompatible: return "incompatible";
    case Verdict::Compatible: return "compatible";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Unevaluated: return "unevaluated";
  }
  return "?";
}

std::string Transcript::text() const {
  std::ostringstream os;
  os << "eliminate " << var_name(eliminated) << "\n";
  for (const auto& s : steps) {
    if (s.form_i == s.form_j) {
      os << "free C" << s.form_i << ": " << to_string(s.resultant) << "\n";
    } else {
      os << "res C" << s.form_i << " C" << s.form_j << ": " << to_string(s.resultant) << "\n";
    }
    os << "  gcd: " << to_string(s.running_gcd) << "\n";
  }
  if (unit_point_witness) os << "unit point: C" << *unit_point_witness << " nonzero\n";
  if (!notes.empty()) os << notes << "\n";
  return os.str();
}

std::string Transcript::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text())));
  return buf;
}

std::vector<MPoly> specialize_forms(const std::vector<QuadraticForm>& forms, const Specialization& params) {
  std::vector<MPoly> out;
  out.reserve(forms.size());
  for (const auto& f : forms) {
    MPoly q = f.polynomial().eval(params);
    for (Var v : q.variables())
      if (k_index(v) < 0) throw std::invalid_argument("specialization leaves " + var_name(v) + " unassigned");
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Rational> rational_roots(const MPoly& p, Var v) {
  UPoly f = to_upoly(p, v);
  if (f.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(low));
  }
  if (f.size() > 1) {
    // Square-free part, cleared to integer coefficients.
    MPoly q;
    for (std::size_t i = 0; i < f.size(); ++i) q += MPoly::variable(v).pow(static_cast<unsigned>(i)) * f[i];
    q = divide_or_throw(q, poly_gcd(q, q.diff(v)));
    RootFinder rf;
    rf.f = to_upoly(q, v);
    Integer den_lcm(1);
    for (const auto& c : rf.f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : rf.f) c *= den_lcm;
    rf.lead = abs(rf.f.back().get_num());
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < rf.f.size(); ++i) bound = std::max(bound, Rational(abs(rf.f[i] / rf.f.back())));
    bound += 1;
    rf.chain = sturm_chain(rf.f);
    rf.isolate(-bound, bound, rf.count(-bound, bound));
    roots.insert(roots.end(), rf.roots.begin(), rf.roots.end());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ConicResult conic_incompatibility(const std::vector<QuadraticForm>& forms, const Specialization& params) {
  const auto polys = specialize_forms(forms, params);
  ConicResult out;
  out.nonzero_forms = static_cast<std::size_t>(std::count_if(polys.begin(), polys.end(), [](const MPoly& q) { return !q.is_zero(); }));
  if (out.nonzero_forms == 0) {
    out.verdict = Verdict::Compatible;
    out.witness = ProjectivePoint{1, 0, 0};
    out.transcript.notes = "no nonzero forms";
    return out;
  }

  std::vector<Elimination> elims;
  for (Var v : {sym::K3, sym::K2, sym::K1}) {
    Elimination e = eliminate(polys, v);
    if (!e.gcd.is_zero() && e.gcd.is_constant()) {
      out.transcript.eliminated = v;
      out.transcript.steps = e.steps;
      if (auto idx = unit_point_nonzero(polys, v)) {
        out.verdict = Verdict::Incompatible;
        out.transcript.unit_point_witness = idx;
        return out;
      }
      ProjectivePoint p;
      p[k_index(v)] = 1;
      out.verdict = Verdict::Compatible;
      out.witness = p;
      out.transcript.notes = "unit point " + point_text(p) + " is a common zero";
      return out;
    }
    elims.push_back(std::move(e));
  }

  out.transcript.eliminated = elims.front().v;
  out.transcript.steps = elims.front().steps;
  std::optional<ProjectivePoint> w;
  for (const auto& e : elims)
    if (!w) w = witness_on_roots(polys, e);
  for (Var v : {sym::K3, sym::K2, sym::K1}) {
    if (w) break;
    ProjectivePoint p;
    p[k_index(v)] = 1;
    if (is_common_zero(polys, p)) w = p;
  }
  if (!w) w = witness_on_common_line(polys);
  if (w) {
    out.verdict = Verdict::Compatible;
    out.witness = w;
    out.transcript.notes = "common zero " + point_text(*w);
  } else {
    out.verdict = Verdict::Inconclusive;
    out.transcript.notes = "no constant gcd and no rational common zero found";
  }
  return out;
}

ConicResult conic_incompatibility(const std::vector<QuadraticForm>& forms, const Specialization& params,
                                  const Branch& branch) {
  check_branch(params, branch);
  return conic_incompatibility(forms, params);
}

bool recheck(const std::vector<QuadraticForm>& forms, const Specialization& params, const Transcript& t) {
  const auto polys = specialize_forms(forms, params);
  if (t.steps.empty() || !t.unit_point_witness) return false;
  const Var v = t.eliminated;
  if (k_index(v) < 0) return false;
  MPoly g;
  for (const auto& s : t.steps) {
    if (s.form_i >= polys.size() || s.form_j >= polys.size()) return false;
    const MPoly& a = polys[s.form_i];
    const MPoly& b = polys[s.form_j];
    MPoly r;
    if (s.form_i == s.form_j) {
      if (a.is_zero() || a.contains(v)) return false;
      r = a;
    } else {
      if (!a.contains(v) || !b.contains(v)) return false;
      r = resultant(a, b, v);
    }
    if (!(r == s.resultant)) return false;
    g = accumulate_gcd(g, r);
    if (!(g == s.running_gcd)) return false;
  }
  if (g.is_zero() || !g.is_constant()) return false;
  const std::size_t k = *t.unit_point_witness;
  return k < polys.size() && !polys[k].is_zero() && polys[k].eval_all(unit_point(v)) != 0;
}

// ---------------------------------------------------------------------------

namespace {

struct Pipeline {
  CenteredSystem centered;
  NonlinearODE nl2;
};

Pipeline run_front(const TheoremConfig& config, Certificate* cert) {
  const auto cond = generate_conditions(4);
  const auto sys = specialize_quartic(cond);
  if (cert) {
    cert->diagnostics.push_back(std::string("E_{5,3} proportional to the transcribed (L): ") +
                                (proportional(sys.linear, literature::L()) ? "yes" : "no"));
    cert->diagnostics.push_back(std::string("E_{5,1} proportional to the transcribed (NL): ") +
                                (proportional(sys.nonlinear, literature::NL()) ? "yes" : "no"));
  }
  Pipeline out{center_and_reduce(sys, QuarticCoeffs::symbolic()), {}};
  out.nl2 = config.nl_source == NlSource::Derived ? out.centered.nonlinear : literature::NL2();
  if (config.perturb) {
    const MPoly y0 = MPoly::variable(y_jet(0));
    out.nl2.poly += *config.perturb * MPoly::variable(sym::e) * MPoly::variable(out.nl2.var) * y0 * y0;
  }
  return out;
}

struct StageError : std::runtime_error {
  std::string stage;
  StageError(std::string s, const std::string& what) : std::runtime_error(what), stage(std::move(s)) {}
};

std::string denominator_text(const BuiltQ& q, const SolutionBasis& basis) {
  std::string out;
  if (q.x_power > 0) out += var_name(basis.var) + "^" + std::to_string(q.x_power);
  if (q.d_power > 0) {
    if (!out.empty()) out += "*";
    out += "(" + to_string(basis.denominator) + ")^" + std::to_string(q.d_power);
  }
  return out.empty() ? "1" : out;
}

Specialization draw(std::mt19937_64& rng, const Branch& branch) {
  std::uniform_int_distribution<long> dist(-20, 20);
  Specialization s;
  for (const auto& [v, value] : branch.constraints) s[v] = value;
  for (Var v : branch.live) {
    long n = 0;
    while (n == 0) n = dist(rng);
    s[v] = n;
  }
  return s;
}

std::string params_text(const Specialization& s) {
  std::string out;
  for (const auto& [v, value] : s) {
    if (!out.empty()) out += ", ";
    out += var_name(v) + "=" + value.get_str();
  }
  return out;
}

}  // namespace

NonlinearODE pipeline_nl2(const TheoremConfig& config) { return run_front(config, nullptr).nl2; }

Certificate verify_quartic_theorem(const TheoremConfig& config) {
  Certificate cert;
  cert.seed = config.seed;
  cert.nl_source = config.nl_source == NlSource::Derived ? "derived" : "literature";
  cert.theorem_form = "V = λ₀ + P₄(x₁)x₂² + β(x₁,x₂)x₂³";
  cert.nonintegrability_note =
      "Background, not computed here: in the Morales-Ramis framework a Hamiltonian with enough meromorphic first "
      "integrals has a variational equation whose differential Galois group has an abelian identity component. "
      "This certificate only classifies which potentials keep a quartic NVE coefficient; it does not compute Galois "
      "groups.";
  cert.scope_note =
      "Each verdict is exact for its listed rational parameter values. Parameter values outside the sampled points, "
      "in particular those satisfying extra algebraic relations among b, c, e, are not covered.";

  const std::string nl_label = cert.nl_source + (config.perturb ? " (perturbed)" : "");
  std::string stage = "conditions";
  try {
    const Pipeline front = run_front(config, &cert);
    cert.nl2 = to_string(front.nl2);
    stage = "centering";
    if (!proportional(front.centered.linear, literature::L2()))
      throw StageError(stage, "centered linear equation differs from the transcribed (L2)");
    cert.diagnostics.push_back(std::string("derived NL2 proportional to the transcribed (NL2): ") +
                               (proportional(front.centered.nonlinear, literature::NL2()) ? "yes" : "no"));
    cert.diagnostics.push_back("nonlinear equation used (" + nl_label + "): " + cert.nl2);

    // Where the generic kernel degenerates: pivots of the elimination and the
    // content of the low-degree-free Wronskian.
    stage = "branches";
    {
      KernelOptions low;
      low.degree_bound = config.degree_bound;
      low.normalization = BasisNormalization::LowDegreeFree;
      const auto basis = rational_kernel(front.centered.linear, low);
      const auto report = degeneration_branches(basis);
      std::string names;
      for (const auto& b : report.branches) names += (names.empty() ? "" : ", ") + b.name;
      cert.diagnostics.push_back("Wronskian content " + to_string(report.content) + " gives branches: " +
                                 (names.empty() ? "none" : names));
      const auto printed = basis_from_numerators(sym::x, literature::D(), 3, 0, literature::generic_numerators_repaired());
      const auto printed_report = degeneration_branches(printed);
      names.clear();
      for (const auto& b : printed_report.branches) names += (names.empty() ? "" : ", ") + b.name;
      cert.diagnostics.push_back("transcribed fundamental system: Wronskian content " + to_string(printed_report.content) +
                                 " gives branches: " + (names.empty() ? "none" : names));
      std::string pivots;
      for (const auto& c : basis.solver_conditions) pivots += (pivots.empty() ? "" : ", ") + to_string(c);
      cert.diagnostics.push_back("kernel pivots: " + (pivots.empty() ? std::string("none") : pivots));
    }

    const std::vector<Branch> branches{generic_branch(), zero_branch(sym::b), zero_branch(sym::c)};
    for (std::size_t bi = 0; bi < branches.size(); ++bi) {
      const Branch& branch = branches[bi];
      BranchCertificate bc;
      bc.branch = branch;

      stage = "kernel:" + branch.name;
      const LinearODE lin = restrict_ode(front.centered.linear, branch.constraints);
      const NonlinearODE nl = restrict_ode(front.nl2, branch.constraints);
      KernelOptions opts;
      opts.degree_bound = config.degree_bound;
      const auto basis = rational_kernel(lin, opts);
      bc.kernel_dimension = static_cast<unsigned>(basis.dimension());
      if (basis.dimension() != 3)
        throw StageError(stage, "kernel dimension " + std::to_string(basis.dimension()) + " instead of 3");
      for (std::size_t i = 0; i < basis.dimension(); ++i)
        if (!residual(lin, basis.element(i)).is_zero())
          throw StageError(stage, "basis element " + std::to_string(i + 1) + " has a nonzero residual");
      stage = "wronskian:" + branch.name;
      if (basis.numerator_wronskian.is_zero()) throw StageError(stage, "Wronskian vanishes on the branch");

      stage = "forms:" + branch.name;
      const auto q = build_Q(nl, basis);
      bc.q_degree = q.q.degree(sym::x);
      bc.denominator = denominator_text(q, basis);
      const auto forms = extract_forms(q.q);
      bc.num_equations = static_cast<unsigned>(forms.size());
      bc.reassembly_ok = reassemble(forms) == q.q;
      if (!bc.reassembly_ok) throw StageError(stage, "forms do not reassemble Q");

      stage = "incompatibility:" + branch.name;
      std::mt19937_64 rng(config.seed * 1000003ULL + bi);
      bool any_compatible = false, all_incompatible = true;
      for (int trial = 0; trial < config.trials; ++trial) {
        TrialRecord rec;
        rec.params = draw(rng, branch);
        const auto res = conic_incompatibility(forms, rec.params, branch);
        rec.verdict = res.verdict;
        rec.digest = res.transcript.digest();
        rec.witness = res.witness;
        if (res.verdict == Verdict::Incompatible) {
          rec.rechecked = recheck(forms, rec.params, res.transcript);
          if (!rec.rechecked) throw StageError(stage, "transcript failed re-verification at " + params_text(rec.params));
        } else {
          all_incompatible = false;
        }
        if (res.verdict == Verdict::Compatible) {
          any_compatible = true;
          // The common solution itself, checked against both equations.
          RatFunc y;
          std::vector<std::pair<Var, Rational>> at(rec.params.begin(), rec.params.end());
          for (std::size_t i = 0; i < 3; ++i)
            y += RatFunc(basis.numerators[i].eval(rec.params)) * RatFunc((*res.witness)[i]);
          const MPoly den = basis.ansatz_denominator().eval(rec.params);
          y = y / RatFunc(den);
          if (!residual(restrict_ode(lin, at), y).is_zero() || !residual(restrict_ode(nl, at), y).is_zero())
            throw StageError(stage, "witness does not solve both equations at " + params_text(rec.params));
          rec.solution = "y = " + to_string(y);
        }
        bc.trials.push_back(std::move(rec));
        if (any_compatible) break;  // a single witness settles the branch
      }
      if (bc.trials.empty()) {
        bc.verdict = Verdict::Unevaluated;
      } else if (any_compatible) {
        bc.verdict = Verdict::Compatible;
      } else {
        bc.verdict = all_incompatible ? Verdict::Incompatible : Verdict::Inconclusive;
      }
      cert.branches.push_back(std::move(bc));
    }
  } catch (const StageError& e) {
    cert.failed_stage = e.stage;
    cert.failure_detail = e.what();
  } catch (const std::exception& e) {
    cert.failed_stage = stage;
    cert.failure_detail = e.what();
  }

  if (!cert.failed_stage.empty()) {
    cert.conclusion = "pipeline failed at stage " + cert.failed_stage + ": " + cert.failure_detail;
    return cert;
  }
  const bool all = std::all_of(cert.branches.begin(), cert.branches.end(),
                               [](const BranchCertificate& b) { return b.verdict == Verdict::Incompatible; });
  if (all) {
    cert.conclusion = kTheoremConclusion;
    cert.theorem_confirmed = true;
    return cert;
  }
  std::string why;
  for (const auto& b : cert.branches) {
    if (b.verdict == Verdict::Incompatible) continue;
    if (!why.empty()) why += "; ";
    why += b.branch.name + " " + to_string(b.verdict);
    if (b.verdict == Verdict::Compatible) {
      const auto& t = b.trials.back();
      why += " at " + params_text(t.params) + " with K = " + point_text(*t.witness) + ", " + t.solution;
    }
  }
  cert.conclusion = "not confirmed: " + why;
  if (std::any_of(cert.branches.begin(), cert.branches.end(),
                  [](const BranchCertificate& b) { return b.verdict == Verdict::Compatible; })) {
    cert.failed_stage = "incompatibility";
    cert.failure_detail = why;
  }
  return cert;
}

std::string certificate_json(const Certificate& cert, int indent) {
  using nlohmann::json;
  auto value = [](const Rational& q) -> json {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
  };
  json branches = json::array();
  for (const auto& b : cert.branches) {
    json trials = json::array();
    for (const auto& t : b.trials) {
      json params = json::object();
      for (const auto& [v, q] : t.params) params[var_name(v)] = value(q);
      json tj{{"params", params}, {"verdict", to_string(t.verdict)}, {"digest", t.digest}};
      if (t.verdict == Verdict::Incompatible) tj["rechecked"] = t.rechecked;
      if (t.witness) tj["witness"] = json::array({value((*t.witness)[0]), value((*t.witness)[1]), value((*t.witness)[2])});
      if (!t.solution.empty()) tj["solution"] = t.solution;
      trials.push_back(std::move(tj));
    }
    branches.push_back({{"name", b.branch.name},
                        {"q_degree", b.q_degree},
                        {"num_equations", b.num_equations},
                        {"kernel_dimension", b.kernel_dimension},
                        {"denominator", b.denominator},
                        {"reassembly_ok", b.reassembly_ok},
                        {"trials", std::move(trials)},
                        {"verdict", to_string(b.verdict)}});
  }
  json doc{{"branches", std::move(branches)},
           {"conclusion", cert.conclusion},
           {"theorem_confirmed", cert.theorem_confirmed},
           {"theorem_form", cert.theorem_form},
           {"nonintegrability_note", cert.nonintegrability_note},
           {"scope_note", cert.scope_note},
           {"seed", cert.seed},
           {"nl_source", cert.nl_source},
           {"nl2", cert.nl2},
           {"diagnostics", cert.diagnostics}};
  if (!cert.failed_stage.empty()) doc["failed_stage"] = cert.failed_stage;
  if (!cert.failure_detail.empty()) doc["failure_detail"] = cert.failure_detail;
  return doc.dump(indent);
}

}  // namespace qnve
