#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qnve/jets.hpp"
#include "test_support.hpp"

using namespace qnve;
using qnve::testing::X;

namespace {
MPoly A(unsigned r) { return X(alpha_jet(r)); }
MPoly P(unsigned s) { return X(phi_jet(s)); }
const MPoly Y1 = X(sym::y1), x1 = X(sym::x1);
}  // namespace

TEST_CASE("lie derivative examples") {
  CHECK(lie_derivative(A(0)) == Y1 * A(1));
  CHECK(lie_derivative(Y1 * A(1)) == Y1.pow(2) * A(2) - P(1) * A(1));
  CHECK(lie_derivative(A(2)) == Y1 * A(3));
  CHECK(max_jet_order(lie_derivative(Y1 * A(1) * P(2))) == 3);
}

TEST_CASE("jet polynomial validation") {
  CHECK_NOTHROW(check_jet_poly(Y1 * A(3) + P(1)));
  CHECK_THROWS_AS(check_jet_poly(P(0)), std::invalid_argument);
  CHECK_THROWS_AS(check_jet_poly(x1 * A(1)), std::invalid_argument);
}

TEST_CASE("E_{n,k} table") {
  const auto table = enk_table(8);
  CHECK(table.at(5, 5) == A(5));
  CHECK(table.at(3, 2).is_zero());
  CHECK(table.at(3, 1) == -(P(2) * A(1) + 3 * P(1) * A(2)));
  CHECK(table.at(4, 2) == -(P(3) * A(1) + 4 * P(2) * A(2) + 6 * P(1) * A(3)));
  for (int n = 1; n <= 8; ++n) {
    CHECK(table.at(n, n) == A(n));
    for (int k = -1; k <= n + 1; ++k)
      if (k < 0 || k > n || (n - k) % 2 != 0) CHECK(table.at(n, k).is_zero());
  }
  CHECK(check_against_operator(table).empty());
  CHECK_THROWS_AS(enk_table(0), std::invalid_argument);
}

TEST_CASE("E_{5,3} and E_{5,1}") {
  const auto table = enk_table(5);
  // -(phi1 coefficient family): 10 phi1 alpha4 + 10 phi2 alpha3 + 5 phi3 alpha2 + phi4 alpha1, up to sign
  CHECK(table.at(5, 3) == -(P(4) * A(1) + 5 * P(3) * A(2) + 10 * P(2) * A(3) + 10 * P(1) * A(4)));
  CHECK(table.at(5, 1) ==
        3 * A(1) * P(1) * P(3) + A(1) * P(2).pow(2) + 15 * A(2) * P(1) * P(2) + 15 * A(3) * P(1).pow(2));
}

TEST_CASE("generate_conditions") {
  const auto d4 = generate_conditions(4);
  REQUIRE(d4.conditions.size() == 3);
  CHECK(d4.conditions[0].k == 5);
  CHECK(d4.conditions[1].k == 3);
  CHECK(d4.conditions[2].k == 1);
  const auto d0 = generate_conditions(0);
  REQUIRE(d0.conditions.size() == 1);
  CHECK(d0.conditions[0].poly == A(1));
  const auto d2 = generate_conditions(2);
  REQUIRE(d2.conditions.size() == 2);
  CHECK(d2.conditions[0].poly == A(3));
  CHECK(d2.conditions[1].poly == -(P(2) * A(1) + 3 * P(1) * A(2)));
  CHECK_THROWS_AS(generate_conditions(-1), std::invalid_argument);
  // Odd d: the y1^0 coefficient is part of the condition set.
  const auto d1 = generate_conditions(1);
  REQUIRE(d1.conditions.size() == 2);
  CHECK(d1.conditions[1].k == 0);
  CHECK(d1.conditions[1].poly == -(P(1) * A(1)));
  for (int d = 0; d <= 7; ++d)
    for (const auto& c : generate_conditions(d).conditions) {
      CHECK_FALSE(c.poly.contains(alpha_jet(0)));
      CHECK_FALSE(c.poly.contains(sym::y1));
      CHECK((d + 1 - c.k) % 2 == 0);
    }
}

TEST_CASE("pullback examples") {
  CHECK(pullback_condition(X(nve_jet(1)), x1.pow(2), x1.pow(3)) == 2 * x1 * Y1);
  CHECK(pullback_condition(X(nve_jet(0)), MPoly{}, x1).is_zero());
  CHECK(pullback_condition(X(nve_jet(5)), x1.pow(4), MPoly{}).is_zero());
  CHECK_THROWS_AS(pullback_condition(x1, x1, x1), std::invalid_argument);
  // Non-member: phi = x1^2/2, alpha = -2 x1^4
  CHECK_FALSE(pullback_condition(X(nve_jet(5)), -2 * x1.pow(4), Rational(1, 2) * x1.pow(2)).is_zero());
  // Inverse-square in disguise is not polynomial; here check the pullback agrees with the table.
  const MPoly alpha = 3 * x1.pow(4) - x1 + 2, phi = x1.pow(3) - x1;
  const auto table = enk_table(5);
  MPoly via_table;
  for (int k = 1; k <= 5; ++k) via_table += specialize_jets(table.at(5, k), alpha, phi) * Y1.pow(k);
  CHECK(via_table == pullback_condition(X(nve_jet(5)), alpha, phi));
}

TEST_CASE("property: constant phi and alpha of degree <= d pull back to zero") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = trial % 7;
    MPoly alpha;
    for (int i = 0; i <= d; ++i) alpha += coeff(rng) * x1.pow(i);
    const MPoly phi(coeff(rng));
    CHECK(pullback_condition(X(nve_jet(d + 1)), alpha, phi).is_zero());
  }
}
