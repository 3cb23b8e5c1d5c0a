#include "helpers.hpp"
#include "ncworlds/skewdiff.hpp"

#include <doctest.h>

using namespace ncw;
using namespace ncw::skew;

namespace {

Sequence random_sequence(std::mt19937_64& r, std::size_t n, long range = 4) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<long> v(n);
  for (auto& x : v) x = d(r);
  return Sequence::from_ints(v);
}

}  // namespace

TEST_CASE("sequences") {
  Sequence a = Sequence::from_ints({1, 2, 3, 4});
  CHECK(a.shifted(1) == Sequence::from_ints({2, 3, 4}));
  CHECK_THROWS_AS(a.shifted(4), WindowExhausted);
  CHECK(difference(a) == Sequence::from_ints({1, 1, 1}));
  CHECK(a * Sequence::from_ints({2, 2}) == Sequence::from_ints({2, 4}));
  CHECK_THROWS_AS(a + Sequence::from_ints({1}, 10), WindowExhausted);
  CHECK(a.to_string() == "@0[1, 2, 3, 4]");
}

TEST_CASE("skew rule f J = J f'") {
  Sequence f = Sequence::from_ints({1, 2, 3, 4, 5});
  SkewElement j = SkewElement::shift(1, 0, 5);
  CHECK(equal_on_windows(SkewElement(f) * j, SkewElement::term(1, f.shifted(1))));
}

TEST_CASE("skew algebra is associative") {
  auto r = testing_support::rng(30);
  for (int t = 0; t < 20; ++t) {
    SkewElement a = SkewElement(random_sequence(r, 12)) + SkewElement::term(1, random_sequence(r, 12));
    SkewElement b = SkewElement::term(2, random_sequence(r, 12)) + SkewElement(random_sequence(r, 12));
    SkewElement c = SkewElement::term(1, random_sequence(r, 12));
    CHECK(equal_on_windows((a * b) * c, a * (b * c)));
    CHECK(equal_on_windows(a * (b + c), a * b + a * c));
  }
}

TEST_CASE("discrete derivative") {
  auto r = testing_support::rng(31);
  for (int t = 0; t < 20; ++t) {
    SkewElement f(random_sequence(r, 10)), g(random_sequence(r, 10));
    CHECK((nabla(f * g) - nabla(f) * g - f * nabla(g)).is_zero());
  }
  // [x, ∇x] = J(Δx)²/Δt, checked entrywise against an independent computation
  Sequence x = Sequence::from_ints({0, 2, 1, 4});
  SkewElement c = position_velocity_commutator(x);
  REQUIRE(c.coefficient(1) != nullptr);
  CHECK(*c.coefficient(1) == Sequence::from_ints({4, 1, 9}));
  CHECK(equal_on_windows(position_velocity_commutator(x, Scalar(2)), diffusion_law(x, Scalar(2))));
}

TEST_CASE("commutator constancy") {
  CHECK(commutator_is_constant(Sequence::from_ints({0, 1, 0, 1, 0})));
  CHECK(commutator_is_constant(Sequence::from_ints({0, 3, 6, 9})));
  CHECK_FALSE(commutator_is_constant(Sequence::from_ints({0, 1, 3})));
  SkewElement walk = diffusion_walk({1, 1, -1, 1, -1});
  REQUIRE(walk.coefficient(1) != nullptr);
  for (const auto& v : walk.coefficient(1)->values()) CHECK(v == Scalar::param("k"));
}

TEST_CASE("levi-civita and the epsilon identity") {
  CHECK(levi_civita(1, 2, 3) == 1);
  CHECK(levi_civita(2, 1, 3) == -1);
  CHECK(levi_civita(1, 1, 3) == 0);
  EpsilonReport rep = epsilon_identity_check();
  CHECK(rep.holds());
  // independent oracle: brute force with the explicit formula
  int count = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          int lhs = 0;
          for (int i = 1; i <= 3; ++i) lhs += levi_civita(a, b, i) * levi_civita(c, d, i);
          int rhs = -(a == d) * (b == c) + (a == c) * (b == d);
          if (lhs == rhs) ++count;
        }
  CHECK(count == 81);
}

TEST_CASE("electromagnetic theorem on a fixed triple") {
  SeqVec3 x{Sequence::from_ints({0, 1, -1, 2, 0, 3, 1, -2, 0, 1, 2, -1}),
            Sequence::from_ints({1, 0, 2, -2, 1, 0, 3, 1, -1, 0, 2, 1}),
            Sequence::from_ints({-1, 2, 0, 1, 1, -3, 0, 2, 1, -1, 0, 3})};
  TrialResult r = em_trial(x);
  CHECK(r.residuals.holds());
  CHECK(r.closed_forms.holds());
  CHECK(r.b_cross_b_nonzero);
  TrialResult r2 = em_trial(x, Scalar::param("Δt"));
  CHECK(r2.residuals.holds());
  CHECK(r2.closed_forms.holds());
}

TEST_CASE("short windows are reported") {
  SeqVec3 x{Sequence::from_ints({0, 1, 2}), Sequence::from_ints({0, 1, 2}), Sequence::from_ints({0, 1, 2})};
  CHECK_THROWS_AS(em_trial(x), WindowExhausted);
}

TEST_CASE("random trials are deterministic") {
  CHECK(random_triple(7, 3, 12, 3) == random_triple(7, 3, 12, 3));
  CHECK_FALSE(random_triple(7, 3, 12, 3) == random_triple(7, 4, 12, 3));
  SimulationSummary s = em_simulation(11, 20);
  CHECK(s.holds());
  CHECK(s.b_cross_b_nonzero >= 18);
}

TEST_CASE("modified leibniz rule") {
  auto r = testing_support::rng(32);
  SeqVec3 x{random_sequence(r, 12, 3), random_sequence(r, 12, 3), random_sequence(r, 12, 3)};
  auto c = calculus(x);
  SkewElement f(random_sequence(r, 12)), g(random_sequence(r, 12));
  CHECK(em::modified_leibniz_residual(c, f, g).is_zero());
  auto sc = symbolic_calculus();
  CHECK(em::modified_leibniz_residual(sc, gen("F"), gen("G")).is_zero());
  CHECK(em::modified_leibniz_residual(sc, gen("F") * gen("G"), gen("F")).is_zero());
}

TEST_CASE("symbolic theorem and wick rotation") {
  CHECK(symbolic_em_check().holds());
  WickResult w = wick_heisenberg();
  CHECK(w.pq == Scalar::imaginary_unit() * Scalar::param("ħ"));
  CHECK(w.before_rotation == Scalar::param("ħ") * Scalar::param("m", -1));
}
