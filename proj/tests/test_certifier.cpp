#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qnve/certifier.hpp"
#include "qnve/literature.hpp"
#include "qnve/parser.hpp"
#include "test_support.hpp"

using namespace qnve;
using qnve::testing::X;

namespace {
const MPoly x = X(sym::x), K1 = X(sym::K1), K2 = X(sym::K2), K3 = X(sym::K3);

std::vector<QuadraticForm> forms_of(const std::vector<MPoly>& polys) {
  std::vector<QuadraticForm> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto f = extract_forms(polys[i], sym::x);
    REQUIRE(f.size() == 1);
    f[0].index = static_cast<unsigned>(i);
    out.push_back(f[0]);
  }
  return out;
}

const CenteredSystem& centered() {
  static const CenteredSystem s = center_and_reduce(specialize_quartic(generate_conditions(4)), QuarticCoeffs::symbolic());
  return s;
}

struct BranchData {
  SolutionBasis basis;
  BuiltQ q;
  std::vector<QuadraticForm> forms;
};

BranchData branch_data(const Branch& br, const NonlinearODE& nl) {
  BranchData d;
  d.basis = rational_kernel(restrict_ode(centered().linear, br.constraints));
  d.q = build_Q(restrict_ode(nl, br.constraints), d.basis);
  d.forms = extract_forms(d.q.q);
  return d;
}

const BranchData& generic_data() {
  static const BranchData d = branch_data(generic_branch(), centered().nonlinear);
  return d;
}

Specialization at(long b, long c, long e) { return {{sym::b, b}, {sym::c, c}, {sym::e, e}}; }
}  // namespace

TEST_CASE("extract_forms on a small example") {
  const auto forms = extract_forms((K1 + K2).pow(2) * x);
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].is_zero());
  CHECK(forms[1].index == 1);
  const auto& M = forms[1].matrix;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(M[i][j] == MPoly((i < 2 && j < 2) ? 1 : 0));
  CHECK(reassemble(forms) == (K1 + K2).pow(2) * x);
  CHECK(extract_forms(MPoly{}).empty());
  CHECK_THROWS_AS(extract_forms(K1 * x + K2 * K3), std::invalid_argument);
  CHECK_THROWS_AS(extract_forms(K1 * K2 * K3), std::invalid_argument);
}

TEST_CASE("extract_forms reassembles random quadratic forms") {
  std::mt19937_64 rng(11);
  const MPoly b = X(sym::b), c = X(sym::c);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly q;
    const MPoly ks[3] = {K1, K2, K3};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) q += qnve::testing::random_poly(rng, {sym::x, sym::b, sym::c}, 3, 3) * ks[i] * ks[j];
    const auto forms = extract_forms(q);
    CHECK(reassemble(forms) == q);
    for (const auto& f : forms)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(f.matrix[i][j] == f.matrix[j][i]);
  }
  (void)b;
  (void)c;
}

TEST_CASE("rational_roots") {
  const MPoly t = X(sym::K1);
  auto r = rational_roots((2 * t - 1) * (t + 3) * (t * t - 2) * (t + 3), sym::K1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -3);
  CHECK(r[1] == Rational(1, 2));
  CHECK(rational_roots(t.pow(3), sym::K1) == std::vector<Rational>{0});
  CHECK(rational_roots(t * t + 1, sym::K1).empty());
  CHECK(rational_roots(MPoly(5L), sym::K1).empty());
  // Two close rational roots with large denominators.
  const Rational p(mpz_class("123456789012345678901"), mpz_class("98765432109"));
  const Rational q = p + Rational(1, mpz_class("1000000000000000000000"));
  r = rational_roots((t - MPoly(p)) * (t - MPoly(q)) * (t * t * t - 7), sym::K1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == p);
  CHECK(r[1] == q);
  CHECK_THROWS_AS(rational_roots(MPoly{}, sym::K1), std::invalid_argument);
  CHECK_THROWS_AS(rational_roots(t * K2, sym::K1), std::invalid_argument);
}

TEST_CASE("rational_roots agrees with planted roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  const MPoly t = X(sym::K1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> planted;
    MPoly p(1L);
    for (int i = 0; i < 3; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      planted.push_back(r);
      p *= t - MPoly(r);
    }
    p *= t * t + MPoly(Rational(den(rng)));  // no real roots
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    CHECK(rational_roots(p, sym::K1) == planted);
  }
}

TEST_CASE("conic_incompatibility on small systems") {
  SUBCASE("squares") {
    const auto forms = forms_of({K1 * K1, K2 * K2, K3 * K3});
    const auto r = conic_incompatibility(forms, {});
    CHECK(r.verdict == Verdict::Incompatible);
    CHECK(recheck(forms, {}, r.transcript));
  }
  SUBCASE("shared plane") {
    const auto forms = forms_of({K1 * K2, K1 * K3});
    const auto r = conic_incompatibility(forms, {});
    CHECK(r.verdict == Verdict::Compatible);
    REQUIRE(r.witness);
    CHECK(*r.witness == ProjectivePoint{0, 1, 0});
  }
  SUBCASE("two conics through a rational point") {
    // Both vanish at (1:2:3).
    const auto forms = forms_of({K1 * K3 - 3 * K1 * K1, K2 * K2 - 4 * K1 * K1 + K2 * K3 - 6 * K1 * K2});
    const auto r = conic_incompatibility(forms, {});
    REQUIRE(r.verdict == Verdict::Compatible);
    const auto w = *r.witness;
    for (const auto& f : forms)
      CHECK(f.polynomial().eval_all({{sym::K1, w[0]}, {sym::K2, w[1]}, {sym::K3, w[2]}}) == 0);
  }
  SUBCASE("common zeros only at irrational points") {
    // K1^2 - 2 K2^2 = 0 and K3 = 0 (as K3^2): zeros (±sqrt2 : 1 : 0).
    const auto forms = forms_of({K1 * K1 - 2 * K2 * K2, K3 * K3});
    CHECK(conic_incompatibility(forms, {}).verdict == Verdict::Inconclusive);
  }
  SUBCASE("no nonzero forms") {
    const auto forms = forms_of({K1 * K1});
    const auto r = conic_incompatibility(forms, {});
    CHECK(r.verdict == Verdict::Compatible);
  }
}

TEST_CASE("transcripts detect tampering") {
  const auto forms = forms_of({K1 * K1 + K2 * K2, K2 * K2 + K3 * K3, K3 * K3 + K1 * K1});
  const auto r = conic_incompatibility(forms, {});
  REQUIRE(r.verdict == Verdict::Incompatible);
  CHECK(recheck(forms, {}, r.transcript));
  CHECK(r.transcript.digest().size() == 16);
  auto bad = r.transcript;
  bad.steps.back().resultant = bad.steps.back().resultant * 2;
  CHECK_FALSE(recheck(forms, {}, bad));
  CHECK(bad.digest() != r.transcript.digest());
  bad = r.transcript;
  bad.unit_point_witness.reset();
  CHECK_FALSE(recheck(forms, {}, bad));
  // A transcript does not certify a different system.
  const auto other = forms_of({K1 * K1 + K2 * K2, K2 * K2 + K3 * K3, K1 * K2});
  CHECK_FALSE(recheck(other, {}, r.transcript));
}

TEST_CASE("build_Q on the generic branch") {
  const auto& d = generic_data();
  CHECK(d.q.q.eval({{sym::K1, 0}, {sym::K2, 0}, {sym::K3, 0}}).is_zero());
  CHECK(reassemble(d.forms) == d.q.q);
  CHECK(d.forms.size() == d.q.q.degree(sym::x) + 1);
  MESSAGE("deg_x Q = " << d.q.q.degree(sym::x) << ", remaining denominator D^" << d.q.d_power);

  // Q(lambda K) = lambda^2 Q(K)
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    Rational lambda(small(rng), 7);
    lambda.canonicalize();
    std::map<Var, Rational> k{{sym::K1, small(rng)}, {sym::K2, small(rng)}, {sym::K3, small(rng)}};
    std::map<Var, Rational> scaled;
    for (const auto& [v, val] : k) scaled[v] = lambda * val;
    CHECK(d.q.q.eval(scaled) == d.q.q.eval(k) * (lambda * lambda));
  }
  CHECK_THROWS_AS(build_Q(NonlinearODE{sym::x1, centered().nonlinear.poly}, d.basis), std::invalid_argument);
}

TEST_CASE("generic branch at (1,1,1) is incompatible") {
  const auto& d = generic_data();
  const auto params = at(1, 1, 1);
  const auto r = conic_incompatibility(d.forms, params, generic_branch());
  CHECK(r.verdict == Verdict::Incompatible);
  CHECK(recheck(d.forms, params, r.transcript));
  CHECK_FALSE(recheck(d.forms, at(1, 2, 1), r.transcript));
  CHECK_THROWS_AS(conic_incompatibility(d.forms, at(0, 1, 1), generic_branch()), std::invalid_argument);
  CHECK_THROWS_AS(conic_incompatibility(d.forms, at(1, 1, 1), zero_branch(sym::b)), std::invalid_argument);
  CHECK_THROWS_AS(conic_incompatibility(d.forms, {{sym::b, 1}, {sym::e, 1}}), std::invalid_argument);
}

TEST_CASE("the b = 0 branch admits y = 1/(4x^3) for the derived equation") {
  const auto d = branch_data(zero_branch(sym::b), centered().nonlinear);
  const Specialization params{{sym::b, 0}, {sym::c, 3}, {sym::e, -2}};
  const auto r = conic_incompatibility(d.forms, params, zero_branch(sym::b));
  REQUIRE(r.verdict == Verdict::Compatible);
  RatFunc y;
  for (std::size_t i = 0; i < 3; ++i) y += RatFunc(d.basis.numerators[i].eval(params)) * RatFunc((*r.witness)[i]);
  y = y / RatFunc(d.basis.ansatz_denominator().eval(params));
  // Proportional to 1/x^3.
  CHECK(y.num().is_constant());
  CHECK(y.den() == x.pow(3));

  // The transcribed equation has no such solution.
  const auto lit = branch_data(zero_branch(sym::b), literature::NL2());
  CHECK(conic_incompatibility(lit.forms, params, zero_branch(sym::b)).verdict == Verdict::Incompatible);
}

TEST_CASE("verify_quartic_theorem") {
  SUBCASE("no trials") {
    TheoremConfig cfg;
    cfg.trials = 0;
    const auto cert = verify_quartic_theorem(cfg);
    REQUIRE(cert.branches.size() == 3);
    for (const auto& b : cert.branches) CHECK(b.verdict == Verdict::Unevaluated);
    CHECK_FALSE(cert.theorem_confirmed);
    CHECK(cert.failed_stage.empty());
  }
  SUBCASE("transcribed nonlinear equation") {
    TheoremConfig cfg;
    cfg.trials = 3;
    cfg.nl_source = NlSource::Literature;
    const auto cert = verify_quartic_theorem(cfg);
    REQUIRE(cert.branches.size() == 3);
    for (const auto& b : cert.branches) {
      CHECK(b.verdict == Verdict::Incompatible);
      CHECK(b.num_equations == b.q_degree + 1);
      for (const auto& t : b.trials) CHECK(t.rechecked);
    }
    CHECK(cert.theorem_confirmed);
    CHECK(cert.conclusion == kTheoremConclusion);
  }
  SUBCASE("derived nonlinear equation") {
    TheoremConfig cfg;
    cfg.trials = 3;
    const auto cert = verify_quartic_theorem(cfg);
    REQUIRE(cert.branches.size() == 3);
    CHECK(cert.branches[0].verdict == Verdict::Incompatible);
    CHECK(cert.branches[1].verdict == Verdict::Compatible);
    CHECK(cert.branches[2].verdict == Verdict::Incompatible);
    CHECK_FALSE(cert.theorem_confirmed);
    CHECK(cert.failed_stage == "incompatibility");
    MESSAGE(cert.conclusion);
  }
  SUBCASE("seeded runs are reproducible") {
    TheoremConfig cfg;
    cfg.trials = 2;
    cfg.seed = 42;
    CHECK(certificate_json(verify_quartic_theorem(cfg)) == certificate_json(verify_quartic_theorem(cfg)));
  }
}
