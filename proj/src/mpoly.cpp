#include "qnve/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnve {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Var v, std::uint32_t exponent) {
  if (!is_valid_var(v)) throw SymbolError("unknown symbol id " + std::to_string(v));
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& [var, exp] : factors_) {
    if (var == v) return exp;
    if (var > v) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t total = 0;
  for (const auto& f : factors_) total += f.second;
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  for (const auto& [var, exp] : other.factors_) {
    while (i != factors_.end() && i->first < var) out.factors_.push_back(*i++);
    if (i == factors_.end() || i->first != var || i->second < exp) return std::nullopt;
    if (i->second > exp) out.factors_.emplace_back(var, i->second - exp);
    ++i;
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  return out;
}

Monomial Monomial::with_exponent(Var v, std::uint32_t exponent) const {
  Monomial out;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.first >= v) {
      if (exponent > 0) out.factors_.emplace_back(v, exponent);
      placed = true;
      if (f.first == v) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && exponent > 0) out.factors_.emplace_back(v, exponent);
  return out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  const auto n = std::min(lhs.factors_.size(), rhs.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = lhs.factors_[i];
    const auto& b = rhs.factors_[i];
    if (a.first != b.first) return a.first < b.first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.second != b.second) return a.second <=> b.second;
  }
  return lhs.factors_.size() <=> rhs.factors_.size();
}

// ---------------------------------------------------------------- MPoly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two strictly decreasing term lists; `sign` multiplies rhs.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, std::span<const Term> rhs, int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() && j != rhs.end()) {
    const auto cmp = i->mono <=> j->mono;
    if (cmp == 0) {
      Rational sum = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (sum != 0) out.push_back({i->mono, std::move(sum)});
      ++i;
      ++j;
    } else if (cmp > 0) {
      out.push_back(*i++);
    } else {
      out.push_back({j->mono, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    }
  }
  out.insert(out.end(), i, lhs.end());
  for (; j != rhs.end(); ++j) out.push_back({j->mono, sign > 0 ? j->coeff : Rational(-j->coeff)});
  return out;
}

}  // namespace

MPoly::MPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

MPoly::MPoly(long constant) : MPoly(Rational(constant)) {}

MPoly MPoly::variable(Var v) { return monomial(Monomial::var(v), Rational(1)); }

MPoly MPoly::monomial(Monomial mono, Rational coeff) {
  MPoly p;
  if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

const Term& MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= rhs;
  }
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1) return rhs.mul_term(lhs.terms_[0].mono, lhs.terms_[0].coeff);
  if (rhs.size() == 1) return lhs.mul_term(rhs.terms_[0].mono, rhs.terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) products.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return MPoly::from_terms(std::move(products));
}

bool operator==(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].coeff != rhs.terms_[i].coeff || !(lhs.terms_[i].mono == rhs.terms_[i].mono)) return false;
  }
  return true;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1L);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::mul_term(const Monomial& mono, const Rational& coeff) const {
  MPoly out;
  if (coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic order.
  for (const auto& t : terms_) out.terms_.push_back({t.mono * mono, t.coeff * coeff});
  return out;
}

std::uint32_t MPoly::degree(Var v) const {
  std::uint32_t deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.degree(v));
  return deg;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.total_degree());
  return deg;
}

std::optional<Var> MPoly::main_var() const {
  std::optional<Var> best;
  for (const auto& t : terms_) {
    if (!t.mono.is_one()) {
      const Var v = t.mono.factors().front().first;
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

MPoly MPoly::coeff(Var v, std::uint32_t k) const {
  std::vector<Term> picked;
  for (const auto& t : terms_)
    if (t.mono.degree(v) == k) picked.push_back({t.mono.with_exponent(v, 0), t.coeff});
  return from_terms(std::move(picked));
}

std::vector<MPoly> MPoly::coeffs(Var v) const {
  if (is_zero()) return {};
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.degree(v)].push_back({t.mono.with_exponent(v, 0), t.coeff});
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::diff(Var v) const {
  if (!is_valid_var(v)) throw SymbolError("derivative with respect to unknown symbol id " + std::to_string(v));
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto k = t.mono.degree(v);
    if (k == 0) continue;
    out.push_back({t.mono.with_exponent(v, k - 1), t.coeff * k});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::subs(Var v, const MPoly& value) const {
  if (!contains(v)) return *this;
  std::vector<MPoly> powers{MPoly(1L)};
  MPoly out;
  for (const auto& t : terms_) {
    const auto k = t.mono.degree(v);
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    out += powers[k].mul_term(t.mono.with_exponent(v, 0), t.coeff);
  }
  return out;
}

MPoly MPoly::subs(const std::map<Var, MPoly>& values) const {
  std::map<Var, std::vector<MPoly>> powers;
  for (const auto& [v, val] : values) powers[v] = {MPoly(1L)};
  MPoly out;
  for (const auto& t : terms_) {
    MPoly acc = MPoly::monomial(Monomial{}, t.coeff);
    Monomial rest;
    for (const auto& [v, k] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial::var(v, k);
        continue;
      }
      auto& pw = powers[v];
      while (pw.size() <= k) pw.push_back(pw.back() * it->second);
      acc = acc * pw[k];
    }
    out += acc.mul_term(rest, Rational(1));
  }
  return out;
}

MPoly MPoly::eval(Var v, const Rational& value) const { return eval(std::map<Var, Rational>{{v, value}}); }

MPoly MPoly::eval(const std::map<Var, Rational>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational coeff = t.coeff;
    Monomial rest;
    for (const auto& [v, k] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial::var(v, k);
      } else {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), k);
        mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), k);
        coeff *= p;
      }
    }
    out.push_back({std::move(rest), std::move(coeff)});
  }
  return from_terms(std::move(out));
}

Rational MPoly::eval_all(const std::map<Var, Rational>& values) const {
  MPoly r = eval(values);
  if (!r.is_constant()) throw std::invalid_argument("unassigned variables remain in " + to_string(r));
  return r.constant_value();
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading_coeff();
  return *this * inv;
}

// ---------------------------------------------------------------- division

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return MPoly{};
  if (q.is_constant()) return p * (1 / q.constant_value());
  const Term& lead = q.leading_term();
  const Rational inv = 1 / lead.coeff;
  MPoly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& top = rem.leading_term();
    auto mono = top.mono.divide(lead.mono);
    if (!mono) return std::nullopt;
    Rational coeff = top.coeff * inv;
    rem -= q.mul_term(*mono, coeff);
    quotient.push_back({std::move(*mono), std::move(coeff)});
  }
  return MPoly::from_terms(std::move(quotient));
}

MPoly divide_or_throw(const MPoly& p, const MPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("inexact polynomial division: (" + to_string(p) + ") / (" + to_string(q) + ")");
  return *r;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v) {
  const auto n = b.degree(v);
  auto m = a.degree(v);
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.is_zero() || m < n) return a;
  const MPoly lc = b.lc(v);
  MPoly r = a;
  int steps = 0;
  const int budget = static_cast<int>(m - n + 1);
  while (!r.is_zero() && r.degree(v) >= n) {
    const auto dr = r.degree(v);
    MPoly top = r.lc(v);
    r = lc * r - (top * b).mul_term(Monomial::var(v, dr - n), Rational(1));
    ++steps;
  }
  if (steps < budget) r = r * lc.pow(static_cast<unsigned>(budget - steps));
  return r;
}

// ---------------------------------------------------------------- text

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, k] : m.factors()) {
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += qnve::to_string(mag);
    } else if (mag == 1) {
      out += to_string(t.mono);
    } else {
      out += qnve::to_string(mag) + "*" + to_string(t.mono);
    }
  }
  return out;
}

}  // namespace qnve
