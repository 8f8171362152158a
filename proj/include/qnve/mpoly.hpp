#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnve/rational.hpp"
#include "qnve/symbols.hpp"

namespace qnve {

/// Power product with sparse exponents, sorted by ascending Var id.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial var(Var v, std::uint32_t exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;

  Monomial operator*(const Monomial& other) const;
  /// Quotient when `other` divides this monomial.
  std::optional<Monomial> divide(const Monomial& other) const;
  Monomial with_exponent(Var v, std::uint32_t exponent) const;

  /// Lexicographic order; a smaller Var id is the more significant variable.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs) = default;

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
/// in the lexicographic order with no zero coefficients, so structural
/// equality is polynomial equality.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MPoly(long constant);              // NOLINT(google-explicit-constructor)
  MPoly(int constant) : MPoly(static_cast<long>(constant)) {}  // NOLINT

  static MPoly variable(Var v);
  static MPoly monomial(Monomial mono, Rational coeff);
  /// Sorts, merges duplicates, drops zeros.
  static MPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of a constant polynomial; throws std::logic_error otherwise.
  Rational constant_value() const;
  Rational constant_term() const;

  const Term& leading_term() const;
  const Rational& leading_coeff() const { return leading_term().coeff; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& rhs);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MPoly operator*(const Rational& lhs, MPoly rhs) { return rhs *= lhs; }
  friend MPoly operator*(MPoly lhs, long rhs) { return lhs *= Rational(rhs); }
  friend MPoly operator*(long lhs, MPoly rhs) { return rhs *= Rational(lhs); }
  friend MPoly operator*(MPoly lhs, int rhs) { return lhs *= Rational(rhs); }
  friend MPoly operator*(int lhs, MPoly rhs) { return rhs *= Rational(lhs); }
  friend MPoly operator+(MPoly lhs, int rhs) { return lhs += MPoly(rhs); }
  friend MPoly operator+(int lhs, MPoly rhs) { return rhs += MPoly(lhs); }
  friend MPoly operator-(MPoly lhs, int rhs) { return lhs -= MPoly(rhs); }
  friend MPoly operator-(int lhs, const MPoly& rhs) { return MPoly(lhs) - rhs; }
  friend bool operator==(const MPoly& lhs, const MPoly& rhs);

  MPoly pow(unsigned exponent) const;
  MPoly mul_term(const Monomial& mono, const Rational& coeff) const;

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  /// Most significant variable present, if any.
  std::optional<Var> main_var() const;
  std::vector<Var> variables() const;
  bool contains(Var v) const { return degree(v) > 0; }

  /// Coefficient of v^k, a polynomial free of v.
  MPoly coeff(Var v, std::uint32_t k) const;
  /// All coefficients with respect to v; index = power. Empty for zero.
  std::vector<MPoly> coeffs(Var v) const;
  /// Leading coefficient with respect to v.
  MPoly lc(Var v) const { return coeff(v, degree(v)); }

  /// Formal partial derivative; throws SymbolError for an invalid symbol id.
  MPoly diff(Var v) const;
  MPoly subs(Var v, const MPoly& value) const;
  MPoly subs(const std::map<Var, MPoly>& values) const;
  MPoly eval(Var v, const Rational& value) const;
  MPoly eval(const std::map<Var, Rational>& values) const;
  /// Full evaluation; throws std::invalid_argument if a variable is unassigned.
  Rational eval_all(const std::map<Var, Rational>& values) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MPoly monic() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient p / q when q divides p, otherwise nullopt.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);
/// Like divide_exact but throws std::logic_error when the division is inexact.
MPoly divide_or_throw(const MPoly& p, const MPoly& q);

/// Pseudo-remainder of a by b with respect to v: lc_v(b)^(deg a - deg b + 1) * a mod b.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v);

/// Canonical text: terms in decreasing order, `*` products, `^` powers,
/// rational coefficients "n/m", "0" for the zero polynomial.
std::string to_string(const MPoly& p);
std::string to_string(const Monomial& m);

}  // namespace qnve
