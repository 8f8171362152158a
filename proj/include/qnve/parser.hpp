#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qnve/mpoly.hpp"

namespace qnve {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// 0-based character offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Potential V(x1, x2) = phi(x1) - alpha(x1) x2^2 / 2 + O(x2^3).
struct Potential {
  MPoly v;
  MPoly phi;    // V(x1, 0)
  MPoly alpha;  // -d^2V/dx2^2 (x1, 0)
  MPoly beta;   // terms of x2-degree >= 3
  bool beta_present = false;
};

class InvariantPlaneError : public std::invalid_argument {
 public:
  InvariantPlaneError(const std::string& message, MPoly offending)
      : std::invalid_argument(message), offending_(std::move(offending)) {}
  /// The part of V linear in x2.
  const MPoly& offending() const { return offending_; }

 private:
  MPoly offending_;
};

/// Polynomial in the named symbols. `allowed` restricts identifiers (empty
/// means any symbol from the table). Throws ParseError.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& allowed = {});

/// Potential in x1, x2. Throws ParseError on syntax errors or non-polynomial
/// input and InvariantPlaneError when dV/dx2 does not vanish at x2 = 0.
Potential parse_potential(std::string_view text);

/// Splits a polynomial potential into (phi, alpha, beta); same checks as above.
Potential make_potential(const MPoly& v);

/// Canonical text; parse_polynomial(format_canonical(p)) == p.
std::string format_canonical(const MPoly& p);

}  // namespace qnve
