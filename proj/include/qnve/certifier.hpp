#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnve/ode.hpp"

namespace qnve {

/// C_i(K) = K^T M K, the coefficient of x^index in Q.
struct QuadraticForm {
  unsigned index = 0;
  std::array<std::array<MPoly, 3>, 3> matrix;

  /// K^T M K as a polynomial in K1, K2, K3.
  MPoly polynomial() const;
  bool is_zero() const;
};

struct BuiltQ {
  MPoly q;  // polynomial in x, K1..K3 and the live parameters
  /// Cleared denominator x^x_power * D^d_power.
  unsigned x_power = 0;
  unsigned d_power = 0;
};

/// Substitutes y = sum K_i N_i / (x^p D^m) into `nl` and returns the
/// numerator over the lcm of the term denominators, each term's denominator
/// first reduced by the powers of x and D dividing its coefficient.
/// Throws std::logic_error if the result disagrees with direct substitution.
BuiltQ build_Q(const NonlinearODE& nl, const SolutionBasis& basis);

/// One form per x-power 0..deg_x Q (zero forms included); empty for Q = 0. Throws std::invalid_argument if Q is not
/// homogeneous of degree 2 in K.
std::vector<QuadraticForm> extract_forms(const MPoly& Q, Var var = sym::x);

/// sum_i C_i(K) x^i.
MPoly reassemble(const std::vector<QuadraticForm>& forms, Var var = sym::x);

enum class Verdict { Incompatible, Compatible, Inconclusive, Unevaluated };
std::string to_string(Verdict v);

using ProjectivePoint = std::array<Rational, 3>;

struct EliminationStep {
  std::size_t form_i;
  std::size_t form_j;  // equal to form_i for a form free of the elimination variable
  MPoly resultant;     // binary form (or the free form itself)
  MPoly running_gcd;
};

struct Transcript {
  Var eliminated = sym::K3;
  std::vector<EliminationStep> steps;
  /// Index of a form that is nonzero at the unit point of `eliminated`.
  std::optional<std::size_t> unit_point_witness;
  std::string notes;

  std::string text() const;
  /// FNV-1a 64-bit digest of text(), as 16 hex digits.
  std::string digest() const;
};

struct ConicResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ProjectivePoint> witness;
  Transcript transcript;
  std::size_t nonzero_forms = 0;
};

using Specialization = std::map<Var, Rational>;

/// Exact incompatibility test of the specialized conic system.
ConicResult conic_incompatibility(const std::vector<QuadraticForm>& forms, const Specialization& params);

/// Same, after checking `params` against the branch: constrained parameters
/// must be absent or equal to their value, live parameters must be nonzero.
/// Throws std::invalid_argument on violation.
ConicResult conic_incompatibility(const std::vector<QuadraticForm>& forms, const Specialization& params,
                                  const Branch& branch);

/// Replays an incompatibility transcript from scratch: recomputes each listed
/// resultant and the gcd chain and checks the unit point.
bool recheck(const std::vector<QuadraticForm>& forms, const Specialization& params, const Transcript& transcript);

/// Distinct rational roots of a univariate polynomial in `v`, ascending.
/// Exact: Sturm isolation of the real roots, then bisection until at most one
/// candidate with denominator dividing the leading coefficient remains.
/// Throws std::invalid_argument if `p` is zero or involves another variable.
std::vector<Rational> rational_roots(const MPoly& p, Var v);

/// Forms evaluated at the parameter values; throws std::invalid_argument if a
/// parameter is left unassigned.
std::vector<MPoly> specialize_forms(const std::vector<QuadraticForm>& forms, const Specialization& params);

enum class NlSource { Derived, Literature };

struct TheoremConfig {
  int trials = 20;
  std::uint64_t seed = 0;
  unsigned degree_bound = 8;
  NlSource nl_source = NlSource::Derived;
  /// Added to the coefficient of e*x*y^2 in the centered nonlinear equation.
  std::optional<Rational> perturb;
};

struct TrialRecord {
  Specialization params;
  Verdict verdict = Verdict::Unevaluated;
  std::string digest;
  std::optional<ProjectivePoint> witness;
  /// For a compatible trial: the common solution y(x) at these parameters.
  std::string solution;
  bool rechecked = false;
};

struct BranchCertificate {
  Branch branch;
  unsigned q_degree = 0;
  unsigned num_equations = 0;
  unsigned kernel_dimension = 0;
  std::string denominator;  // remaining x^p D^k after cancellation
  std::vector<TrialRecord> trials;
  Verdict verdict = Verdict::Unevaluated;
  bool reassembly_ok = false;
};

struct Certificate {
  std::vector<BranchCertificate> branches;
  std::string conclusion;
  bool theorem_confirmed = false;
  std::string theorem_form;
  std::string nonintegrability_note;
  std::string scope_note;
  std::uint64_t seed = 0;
  std::string nl_source;
  std::string nl2;
  /// Stage name when a consistency check failed, empty otherwise.
  std::string failed_stage;
  std::string failure_detail;
  std::vector<std::string> diagnostics;
};

extern const char* const kTheoremConclusion;

Certificate verify_quartic_theorem(const TheoremConfig& config = {});

/// JSON document for a certificate (branches, conclusion, theorem_form,
/// nonintegrability_note plus diagnostic extras).
std::string certificate_json(const Certificate& cert, int indent = 2);

/// The centered nonlinear equation used by the pipeline for a config.
NonlinearODE pipeline_nl2(const TheoremConfig& config);

}  // namespace qnve
