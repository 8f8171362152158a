#include "qnve/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace qnve {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(1L) {}

RatFunc::RatFunc(MPoly num, MPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1L);
    return;
  }
  const MPoly g = poly_gcd(num, den);
  if (!g.is_constant()) {
    num = divide_or_throw(num, g);
    den = divide_or_throw(den, g);
  }
  *this = RatFunc(std::move(num), std::move(den), Reduced{});
}

RatFunc::RatFunc(MPoly num, MPoly den, Reduced) {
  if (num.is_zero()) {
    num_ = MPoly{};
    den_ = MPoly(1L);
    return;
  }
  const Rational scale = 1 / den.leading_coeff();
  num_ = num * scale;
  den_ = den * scale;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

// a/b + c/d for reduced inputs (Henrici): with g = gcd(b, d) the only common
// factor the numerator can share with the new denominator divides g.
RatFunc add_reduced(const RatFunc& lhs, const RatFunc& rhs, int sign) {
  if (rhs.is_zero()) return lhs;
  if (lhs.is_zero()) return sign > 0 ? rhs : -rhs;
  const MPoly rnum = sign > 0 ? rhs.num() : -rhs.num();
  if (lhs.den() == rhs.den()) return RatFunc(lhs.num() + rnum, lhs.den());
  const MPoly g = poly_gcd(lhs.den(), rhs.den());
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    return RatFunc::from_reduced(lhs.num() * rhs.den() + rnum * lhs.den(), lhs.den() * rhs.den());
  }
  const MPoly b1 = divide_or_throw(lhs.den(), g);
  const MPoly d1 = divide_or_throw(rhs.den(), g);
  MPoly num = lhs.num() * d1 + rnum * b1;
  if (num.is_zero()) return {};
  MPoly rest = g;
  if (const MPoly h = poly_gcd(num, g); !h.is_constant()) {
    num = divide_or_throw(num, h);
    rest = divide_or_throw(g, h);
  }
  return RatFunc::from_reduced(std::move(num), b1 * d1 * rest);
}

}  // namespace

RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs) { return add_reduced(lhs, rhs, +1); }
RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs) { return add_reduced(lhs, rhs, -1); }

RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.is_polynomial() && rhs.is_polynomial())
    return RatFunc(lhs.num() * rhs.num() * (1 / (lhs.den().constant_value() * rhs.den().constant_value())));
  MPoly a = lhs.num();
  MPoly b = lhs.den();
  MPoly c = rhs.num();
  MPoly d = rhs.den();
  if (!d.is_constant()) {
    const MPoly g1 = poly_gcd(a, d);
    if (!g1.is_constant()) {
      a = divide_or_throw(a, g1);
      d = divide_or_throw(d, g1);
    }
  }
  if (!b.is_constant()) {
    const MPoly g2 = poly_gcd(c, b);
    if (!g2.is_constant()) {
      c = divide_or_throw(c, g2);
      b = divide_or_throw(b, g2);
    }
  }
  return RatFunc::from_reduced(a * c, b * d);
}

RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  return lhs * RatFunc::from_reduced(rhs.den(), rhs.num());
}

RatFunc RatFunc::pow(unsigned exponent) const {
  // Powers of coprime parts stay coprime.
  return RatFunc(num_.pow(exponent), den_.pow(exponent), Reduced{});
}

RatFunc RatFunc::diff(Var v) const {
  if (den_.is_constant()) return RatFunc(num_.diff(v) * (1 / den_.constant_value()));
  // (n/d)' = (n' d - n d') / d^2; reduce against d only.
  const MPoly dd = den_.diff(v);
  MPoly top = num_.diff(v) * den_ - num_ * dd;
  MPoly bottom = den_ * den_;
  return RatFunc(std::move(top), std::move(bottom));
}

RatFunc RatFunc::subs(Var v, const RatFunc& value) const {
  // Substitute into num and den as polynomials in v via Horner over RatFunc.
  auto horner = [&](const MPoly& p) {
    const auto cs = p.coeffs(v);
    RatFunc acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + RatFunc(*it);
    return acc;
  };
  return horner(num_) / horner(den_);
}

RatFunc RatFunc::eval(const std::map<Var, Rational>& values) const {
  MPoly n = num_.eval(values);
  MPoly d = den_.eval(values);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
  return RatFunc(std::move(n), std::move(d));
}

RatFunc normalize(const RatFunc& f) { return RatFunc(f.num(), f.den()); }

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num() * (1 / f.den().constant_value()));
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RatFunc determinant(const Matrix<RatFunc>& m) {
  const auto n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return RatFunc(1L);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 3) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  Matrix<RatFunc> a = m;
  RatFunc det(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det = det * a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const RatFunc factor = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = a[i][j] - factor * a[k][j];
    }
  }
  return det;
}

}  // namespace qnve
