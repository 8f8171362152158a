#pragma once

#include <map>
#include <string>
#include <utility>

#include "qnve/algebra.hpp"
#include "qnve/mpoly.hpp"

namespace qnve {

/// Reduced fraction num/den: gcd(num, den) is constant and den is monic.
/// Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(MPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& q) : RatFunc(MPoly(q)) {}  // NOLINT
  RatFunc(long q) : RatFunc(MPoly(q)) {}             // NOLINT
  RatFunc(int q) : RatFunc(MPoly(static_cast<long>(q))) {}  // NOLINT
  /// Throws std::domain_error for a zero denominator.
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs);
  RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
  RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
  RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) = default;

  /// For parts already known to be coprime; only rescales den to be monic.
  static RatFunc from_reduced(MPoly num, MPoly den) { return RatFunc(std::move(num), std::move(den), Reduced{}); }

  RatFunc pow(unsigned exponent) const;
  RatFunc diff(Var v) const;
  RatFunc subs(Var v, const RatFunc& value) const;
  /// Throws std::domain_error if the denominator vanishes at the point.
  RatFunc eval(const std::map<Var, Rational>& values) const;

 private:
  // Trusted constructor for already-reduced parts; only normalizes the sign/scale.
  struct Reduced {};
  RatFunc(MPoly num, MPoly den, Reduced);

  MPoly num_;
  MPoly den_;
};

/// Reapplies the normal form; idempotent.
RatFunc normalize(const RatFunc& f);

std::string to_string(const RatFunc& f);

/// Exact determinant: cofactor expansion for n <= 3, Gaussian elimination otherwise.
/// Throws std::invalid_argument for non-square input.
RatFunc determinant(const Matrix<RatFunc>& m);

}  // namespace qnve
