#include "helpers.hpp"
#include "ncworlds/constraints.hpp"
#include "ncworlds/quotient.hpp"

#include <doctest.h>

using namespace ncw;
using namespace ncw::constraints;

namespace {

// Bell numbers by the recurrence B(n+1) = Σ C(n,k) B(k), independent of the tower code.
std::vector<long> bell_numbers(int count) {
  std::vector<long> b{1};
  for (int n = 0; n < count; ++n) {
    long next = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
      next += binom * b[static_cast<std::size_t>(k)];
      binom = binom * (n - k) / (k + 1);
    }
    b.push_back(next);
  }
  return b;
}

long choose(long n, long k) {
  long out = 1;
  for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

TEST_CASE("symmetrizer") {
  NcPoly x = gen("X"), y = gen("Y"), z = gen("Z");
  CHECK(symmetrize({x, y}) == Scalar::rational(1, 2) * (x * y + y * x));
  CHECK(symmetrize({x, x, y}) == Scalar::rational(1, 3) * (x * x * y + x * y * x + y * x * x));
  CHECK(symmetrize({x}) == x);
  CHECK_THROWS_AS(symmetrize(std::span<const NcPoly>{}), std::invalid_argument);
  CHECK(symmetrize({x, y, z}) == symmetrize({z, x, y}));
}

TEST_CASE("symmetrizer is permutation invariant and multilinear") {
  auto r = testing_support::rng(40);
  for (int t = 0; t < 10; ++t) {
    NcPoly a = testing_support::random_poly(r, 1, 3), b = testing_support::random_poly(r, 1, 3);
    NcPoly c = testing_support::random_poly(r, 1, 3), d = testing_support::random_poly(r, 1, 3);
    CHECK(symmetrize({a, b, c}) == symmetrize({c, a, b}));
    CHECK(symmetrize({a, b, c}) == symmetrize({b, a, c}));
    CHECK(symmetrize({a + d, b, c}) == symmetrize({a, b, c}) + symmetrize({d, b, c}));
    CHECK(symmetrize({Scalar(3) * a, b}) == Scalar(3) * symmetrize({a, b}));
  }
}

TEST_CASE("second constraint") {
  CHECK(second_constraint_residual(gen("Θ"), gen("H")).is_zero());
  CHECK(second_constraint_requirement_residual(gen("Θ"), gen("H")).is_zero());
  auto r = testing_support::rng(41);
  for (int t = 0; t < 10; ++t)
    CHECK(second_constraint_residual(testing_support::random_poly(r), testing_support::random_poly(r)).is_zero());
}

TEST_CASE("symmetrizer commutator identity under the abc relations") {
  AbcIdentity id = symmetrizer_commutator_identity();
  CHECK(id.holds());
  NcPoly a = gen("A"), b = gen("B"), c = gen("C");
  NcPoly expected = Scalar::rational(1, 12) * a * b * c - Scalar::rational(1, 6) * a * c * b +
                    Scalar::rational(1, 12) * c * a * b;
  CHECK(id.difference == expected);
  // without the relations the identity fails
  CHECK_FALSE(symmetrizer_commutator_identity(systems::free_algebra()).residual.is_zero());
  CHECK(symmetrizer_commutator_identity(systems::abc_commuting()).difference.is_zero());
}

TEST_CASE("third constraint ratio") {
  ThirdConstraint t = third_constraint_check(gen("Θ"), gen("H"), NcPoly::generator(Generator("H", 1)),
                                             NcPoly::generator(Generator("H", 2)));
  CHECK(t.holds());
  REQUIRE(t.ratio.has_value());
  CHECK(*t.ratio == Scalar::rational(1, 12));
}

TEST_CASE("first constraint with a quadratic hamiltonian") {
  CHECK(first_constraint_quadratic_check(1).is_zero());
  CHECK(first_constraint_quadratic_check(2).is_zero());
  CHECK(first_constraint_quadratic_check(2, NcPoly(1)).is_zero());
  CHECK(metric(2, 1) == metric(1, 2));
  CHECK(symmetric_theta(3, 1) == symmetric_theta(1, 3));
}

TEST_CASE("curvature form") {
  for (int n = 1; n <= 3; ++n) {
    CurvatureForm f = curvature_form_check(n);
    CHECK(f.pairs_hold());
    CHECK(f.pairs.size() == static_cast<std::size_t>(n * n));
    CHECK(f.summed_curvature.is_zero());
  }
}

TEST_CASE("derivative tower") {
  auto tower = derivative_tower(12);
  REQUIRE(tower.size() == 12);
  CHECK(tower[0].polynomial == CPoly::monomial(CMonomial::make(1, {1})));
  CHECK(tower[1].polynomial.to_string() == "h^2 θ + θ h'");
  auto bell = bell_numbers(12);
  for (std::size_t n = 0; n < tower.size(); ++n) CHECK(tower[n].polynomial.coefficient_sum() == bell[n + 1]);
  auto hp = h_prime_series(tower);
  REQUIRE(hp.size() == 11);
  for (std::size_t k = 0; k < hp.size(); ++k) CHECK(hp[k] == choose(static_cast<long>(k) + 2, 2));
  auto hp2 = h_prime_squared_series(tower);
  REQUIRE(hp2.size() == 9);
  // 3·C(n,4) counts the ways to split four of n slots into two pairs
  for (std::size_t k = 0; k < hp2.size(); ++k) CHECK(hp2[k] == 3 * choose(static_cast<long>(k) + 4, 4));
  auto d4 = forward_difference(hp2, 4);
  for (const auto& v : d4) CHECK(v == 3);
  CHECK_THROWS_AS(derivative_tower(0), std::invalid_argument);
}

TEST_CASE("tower derivation is a derivation") {
  CPoly a = CPoly::monomial(CMonomial::make(1, {2, 1}));
  CPoly b = CPoly::monomial(CMonomial::make(0, {0, 0, 1}), 3);
  CHECK(tower_derive(a + b) == tower_derive(a) + tower_derive(b));
}

TEST_CASE("symmetrized operator form") {
  auto tower = derivative_tower(2);
  NcPoly theta = gen("Θ"), h = gen("H"), hdot = NcPoly::generator(Generator("H", 1));
  CHECK(symmetrized_operator(tower[1].polynomial) == symmetrize({theta, h, h}) + symmetrize({theta, hdot}));
}
