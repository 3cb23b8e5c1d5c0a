#include "helpers.hpp"
#include "ncworlds/ncpoly.hpp"

#include <doctest.h>

using namespace ncw;
using testing_support::random_poly;

TEST_CASE("rationals") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(parse_rational("-7/21") == make_rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK(exact_sqrt(make_rational(16, 25)) == make_rational(4, 5));
  CHECK_FALSE(exact_sqrt(make_rational(2)).has_value());
}

TEST_CASE("gaussian rationals") {
  Gaussian i = Gaussian::imaginary_unit();
  CHECK(i * i == Gaussian(-1));
  Gaussian z(make_rational(3), make_rational(4));
  CHECK(z * z.conj() == Gaussian(25));
  CHECK(z * z.inverse() == Gaussian(1));
  CHECK_THROWS_AS(Gaussian(0).inverse(), std::domain_error);
}

TEST_CASE("laurent scalars") {
  Scalar hbar = Scalar::param("ħ");
  Scalar m = Scalar::param("m");
  CHECK((hbar * m.inverse() * m) == hbar);
  CHECK((hbar + hbar) == Scalar(2) * hbar);
  CHECK((hbar - hbar).is_zero());
  CHECK_THROWS_AS((hbar + m).inverse(), std::domain_error);
  CHECK(pow(m, -2) * pow(m, 2) == Scalar(1));
  Scalar s = Scalar::param("Δx", 2) * Scalar::param("Δt", -1);
  CHECK(s.substitute("Δx", Scalar::param("τ")) == Scalar::param("τ", 2) * Scalar::param("Δt", -1));
  CHECK(Scalar::param("s", 3).replace_monomial(ParamMonomial::single("s", 2), Scalar::param("k")) ==
        Scalar::param("k") * Scalar::param("s"));
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
}

TEST_CASE("generator printing") {
  CHECK(Generator::upper("Q", 1).to_string() == "Q^1");
  CHECK(Generator::lower("P", 2).to_string() == "P_2");
  CHECK(Generator("Θ", IndexKind::Lower, {1, 2}).to_string() == "Θ_{1,2}");
  CHECK(Generator("H", 2).to_string() == "H''");
  CHECK(Generator("θ", IndexKind::None, {}, 0, {2, 1}).to_string() == "θ_{;1,2}");
  CHECK(Generator("g", IndexKind::Lower, {1, 1}).derivative(2).to_string() == "g_{1,1;2}");
}

TEST_CASE("polynomial basics") {
  NcPoly x = gen("X");
  NcPoly y = gen("Y");
  CHECK(commutator(x, y) == x * y - y * x);
  CHECK_FALSE(commutator(x, y).is_zero());
  CHECK(commutator(x, x).is_zero());
  CHECK((Scalar::rational(-1, 6) * x * y).to_string() == "(-1/6) X.Y");
  CHECK(NcPoly().to_string() == "0");
  CHECK(pow(x + y, 2) == x * x + x * y + y * x + y * y);
  CHECK((x * y).substitute(Generator("X"), y + NcPoly(1)) == y * y + y);
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = testing_support::rng(1);
  for (int t = 0; t < 30; ++t) {
    NcPoly a = random_poly(r), b = random_poly(r), c = random_poly(r);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(a * NcPoly(1) == a);
  }
}

TEST_CASE("jacobi identity") {
  auto r = testing_support::rng(2);
  for (int t = 0; t < 30; ++t) {
    NcPoly a = random_poly(r), b = random_poly(r), c = random_poly(r);
    CHECK((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
              .is_zero());
  }
}

TEST_CASE("inner derivations satisfy leibniz") {
  auto r = testing_support::rng(3);
  for (int t = 0; t < 30; ++t) {
    NcPoly n = random_poly(r), f = random_poly(r), g = random_poly(r);
    Operator d = derivation(n);
    CHECK(d(f * g) == d(f) * g + f * d(g));
  }
}

TEST_CASE("extended derivations satisfy leibniz") {
  auto r = testing_support::rng(4);
  auto prime = [](const Generator& g) { return NcPoly::generator(g.primed()); };
  for (int t = 0; t < 30; ++t) {
    NcPoly f = random_poly(r), g = random_poly(r);
    CHECK(apply_derivation(f * g, prime) == apply_derivation(f, prime) * g + f * apply_derivation(g, prime));
  }
  CHECK(apply_derivation(NcPoly(5), prime).is_zero());
}
