#include "qnve/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace qnve {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& allowed) : text_(text), allowed_(allowed) {}

  MPoly parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MPoly out = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expr := ('+'|'-')? term (('+'|'-') term)*
  MPoly expr() {
    skip();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MPoly out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  // term := factor (('*'|'/') factor)*, division only by nonzero constants
  MPoly term() {
    MPoly out = factor();
    while (true) {
      skip();
      if (accept('*')) {
        out *= factor();
      } else if (pos_ < text_.size() && text_[pos_] == '/') {
        const std::size_t at = pos_++;
        const MPoly divisor = factor();
        if (!divisor.is_constant()) throw ParseError("division by a non-constant (non-polynomial input)", at);
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        out *= 1 / divisor.constant_value();
      } else {
        return out;
      }
    }
  }

  // factor := base ('^' nonneg-int)?
  MPoly factor() {
    MPoly b = base();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '('))
        throw ParseError("exponent must be a non-negative integer literal", at);
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected exponent", at);
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') throw ParseError("exponent must be an integer", at);
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  // base := rational-literal | identifier | '(' expr ')'
  MPoly base() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      MPoly inner = expr();
      if (!accept(')')) throw ParseError("missing ')' for '(' opened at " + std::to_string(open), pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        throw ParseError("only integer and rational literals are supported", pos_);
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("implicit multiplication is not allowed, use '*'", pos_);
      return MPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!allowed_.empty() && std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end())
        throw ParseError("unknown symbol '" + name + "'", start);
      const auto v = var_from_name(name);
      if (!v) throw ParseError("unknown symbol '" + name + "'", start);
      return MPoly::variable(*v);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& allowed) {
  return Parser(text, allowed).parse();
}

Potential make_potential(const MPoly& v) {
  for (Var u : v.variables())
    if (u != sym::x1 && u != sym::x2)
      throw std::invalid_argument("potential may only depend on x1 and x2, found " + var_name(u));
  const MPoly linear = v.coeff(sym::x2, 1);
  if (!linear.is_zero()) {
    const MPoly terms = linear * MPoly::variable(sym::x2);
    throw InvariantPlaneError("invariant plane violated: dV/dx2 at x2 = 0 is " + to_string(linear) +
                                  " (offending terms: " + to_string(terms) + ")",
                              terms);
  }
  Potential out;
  out.v = v;
  out.phi = v.coeff(sym::x2, 0);
  out.alpha = Rational(-2) * v.coeff(sym::x2, 2);
  for (std::uint32_t k = 3; k <= v.degree(sym::x2); ++k) out.beta += v.coeff(sym::x2, k) * MPoly::variable(sym::x2).pow(k);
  out.beta_present = !out.beta.is_zero();
  return out;
}

Potential parse_potential(std::string_view text) { return make_potential(parse_polynomial(text, {"x1", "x2"})); }

std::string format_canonical(const MPoly& p) { return to_string(p); }

}  // namespace qnve
