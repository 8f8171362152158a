#include "qnve/algebra.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace qnve {

MPoly poly_diff(const MPoly& p, std::string_view var) { return p.diff(var_named(var)); }

namespace {

// gcd of two polynomials that are primitive in v and of positive degree in v.
MPoly subresultant_gcd(MPoly a, MPoly b, Var v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  MPoly g(1L);
  MPoly h(1L);
  while (true) {
    const auto delta = a.degree(v) - b.degree(v);
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return primitive_part(b, v);
    if (r.degree(v) == 0) return MPoly(1L);
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(delta));
    g = a.lc(v);
    if (delta == 0) continue;
    // h <- g^delta / h^(delta-1)
    h = divide_or_throw(g.pow(delta), h.pow(delta - 1));
  }
}


// ---- heuristic gcd over Z[vars]: evaluate the main variable at a large
// integer, recurse, and read the gcd back from its base-xi digits.

Integer integer_content(const MPoly& p) {
  Integer g(0);
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

Integer max_norm(const MPoly& p) {
  Integer m(0);
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

// Integer polynomial with coprime integer coefficients and the same sign.
MPoly integer_primitive(const MPoly& p) {
  Integer den(1);
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  MPoly q = p * Rational(den);
  return q * Rational(Integer(1), integer_content(q));
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

MPoly interpolate(MPoly h, const Integer& xi, Var v) {
  std::vector<Term> out;
  for (std::uint32_t i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer r = symmetric_mod(t.coeff.get_num(), xi);
      if (r != 0) digit.push_back({t.mono, Rational(r)});
    }
    MPoly g = MPoly::from_terms(digit);
    for (auto& t : digit) out.push_back({t.mono * Monomial::var(v, i), t.coeff});
    h = (h - g) * Rational(Integer(1), xi);
  }
  return MPoly::from_terms(std::move(out));
}

Integer isqrt(const Integer& a) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Both inputs integer polynomials, not both zero. nullopt when the heuristic
// gives up; the caller then falls back to the subresultant sequence.
std::optional<MPoly> heuristic_gcd(const MPoly& f, const MPoly& g, int depth) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() && g.is_constant()) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), f.constant_value().get_num_mpz_t(), g.constant_value().get_num_mpz_t());
    return MPoly(Rational(r));
  }
  if (depth > 12) return std::nullopt;
  const Integer cf = integer_content(f);
  const Integer cg = integer_content(g);
  Integer common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const MPoly F = f * Rational(Integer(1), cf);
  const MPoly G = g * Rational(Integer(1), cg);
  if (F.is_constant() || G.is_constant()) return MPoly(Rational(common));

  const Var v = std::min(*F.main_var(), *G.main_var());
  const Integer fn = max_norm(F);
  const Integer gn = max_norm(G);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  Integer xi = std::min(bound, Integer(99 * isqrt(bound)));
  const Integer lf = max_norm(F.lc(v));
  const Integer lg = max_norm(G.lc(v));
  const Integer alt = 2 * std::min(Integer(fn / lf), Integer(gn / lg)) + 4;
  if (alt > xi) xi = alt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    const MPoly ff = F.eval(v, Rational(xi));
    const MPoly gg = G.eval(v, Rational(xi));
    if (!ff.is_zero() && !gg.is_zero()) {
      const auto h_eval = heuristic_gcd(ff, gg, depth + 1);
      if (!h_eval) return std::nullopt;
      MPoly h = interpolate(*h_eval, xi, v);
      if (!h.is_zero()) {
        h = h * Rational(Integer(1), integer_content(h));
        if (h.leading_coeff() < 0) h = -h;
        if (divide_exact(F, h) && divide_exact(G, h)) return h * Rational(common);
      }
    }
    xi = 73794 * xi * isqrt(isqrt(xi)) / 27011;
  }
  return std::nullopt;
}

}  // namespace

MPoly content(const MPoly& p, Var v) {
  MPoly g;
  for (const auto& c : p.coeffs(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) return MPoly(1L);
  }
  return g;
}

MPoly primitive_part(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content(p, v));
}

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return MPoly(1L);
  if (p.monic() == q.monic()) return p.monic();

  if (auto h = heuristic_gcd(integer_primitive(p), integer_primitive(q), 0)) return h->monic();

  const Var v = std::min(*p.main_var(), *q.main_var());
  const auto dp = p.degree(v);
  const auto dq = q.degree(v);
  if (dp == 0) return poly_gcd(p, content(q, v));
  if (dq == 0) return poly_gcd(content(p, v), q);

  const MPoly cp = content(p, v);
  const MPoly cq = content(q, v);
  const MPoly pp = divide_or_throw(p, cp);
  const MPoly qq = divide_or_throw(q, cq);
  const MPoly c = poly_gcd(cp, cq);

  return (c * subresultant_gcd(pp, qq, v)).monic();
}

MPoly gcd_all(const std::vector<MPoly>& polys) {
  MPoly g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : poly_gcd(g, p);
    if (g.is_constant()) return MPoly(1L);
  }
  return g;
}

Matrix<MPoly> sylvester_matrix(const MPoly& p, const MPoly& q, Var v) {
  const auto m = p.degree(v);
  const auto n = q.degree(v);
  const auto size = m + n;
  Matrix<MPoly> s(size, std::vector<MPoly>(size));
  const auto pc = p.coeffs(v);
  const auto qc = q.coeffs(v);
  for (std::uint32_t row = 0; row < n; ++row)
    for (std::uint32_t k = 0; k <= m; ++k) s[row][row + k] = pc[m - k];
  for (std::uint32_t row = 0; row < m; ++row)
    for (std::uint32_t k = 0; k <= n; ++k) s[n + row][row + k] = qc[n - k];
  return s;
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
  if (p.degree(v) == 0 || q.degree(v) == 0)
    throw std::invalid_argument("resultant: both inputs need positive degree in " + var_name(v));
  return determinant(sylvester_matrix(p, q, v));
}

MPoly determinant(const Matrix<MPoly>& input) {
  const auto n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return MPoly(1L);
  if (n == 1) return input[0][0];
  if (n == 2) return input[0][0] * input[1][1] - input[0][1] * input[1][0];

  Matrix<MPoly> a = input;
  MPoly previous(1L);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPoly{};
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_or_throw(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
      }
      a[i][k] = MPoly{};
    }
    previous = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace qnve
