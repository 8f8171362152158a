#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qnve/mpoly.hpp"

namespace qnve {

/// Differential polynomial in y1 and the jets alpha_r, phi_s (s >= 1).
using JetPoly = MPoly;

Var alpha_jet(unsigned r);
Var phi_jet(unsigned s);
Var nve_jet(unsigned k);

/// Throws std::invalid_argument if p uses anything besides y1, alpha_r, phi_s
/// (s >= 1). Free parameter symbols (b, c, d, e, a, K*) are allowed as constants.
void check_jet_poly(const JetPoly& p);

/// Largest jet order referenced (0 when no jet occurs).
unsigned max_jet_order(const JetPoly& p);

/// Formal d/dx1 of a y1-free jet polynomial: alpha_r -> alpha_{r+1},
/// phi_s -> phi_{s+1} by the chain rule.
JetPoly total_derivative(const JetPoly& p);

/// X_h p = y1 * (jet shift of p) - phi_1 * dp/dy1.
JetPoly lie_derivative(const JetPoly& p);

class EnkTable {
 public:
  explicit EnkTable(int max_n) : max_n_(max_n) {}
  int max_n() const { return max_n_; }
  /// Zero for indices outside 1 <= k <= n or with n - k odd.
  const JetPoly& at(int n, int k) const;
  void set(int n, int k, JetPoly p);
  const std::map<std::pair<int, int>, JetPoly>& entries() const { return entries_; }

 private:
  int max_n_;
  std::map<std::pair<int, int>, JetPoly> entries_;
};

/// E_{n+1,k} = d/dx1 E_{n,k-1} - (k+1) E_{n,k+1} phi_1 seeded with E_{1,1} = alpha_1.
/// Throws std::invalid_argument for max_n < 1.
EnkTable enk_table(int max_n);

/// Compares the table with the y1-coefficients of X_h^n alpha_0 for every n.
/// Returns an empty string on agreement, else a description of the first mismatch.
std::string check_against_operator(const EnkTable& table);

struct DiffCondition {
  int degree = 0;
  struct Entry {
    int n;
    int k;
    JetPoly poly;
  };
  /// Nonzero E_{d+1,k}, k descending.
  std::vector<Entry> conditions;
};

/// Conditions for the NVE coefficient to be a polynomial of degree <= d.
/// Throws std::invalid_argument for d < 0.
DiffCondition generate_conditions(int degree);

/// Replaces alpha_r, phi_s by the x1-derivatives of concrete alpha, phi.
MPoly specialize_jets(const JetPoly& p, const MPoly& alpha, const MPoly& phi);

/// X_h applied to a polynomial in (x1, y1) for concrete phi(x1).
MPoly lie_derivative_concrete(const MPoly& p, const MPoly& phi);

/// Q(a_0, a_1, ...) with a_k -> X_h^k alpha. Throws std::invalid_argument if Q
/// references any symbol other than the a_k jets, or if alpha/phi contain y1
/// or jet symbols.
MPoly pullback_condition(const MPoly& Q, const MPoly& alpha, const MPoly& phi);

}  // namespace qnve
