#include "helpers.hpp"
#include "ncworlds/iterant.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ncw;
using namespace ncw::iterant;

namespace {

Scalar p(const char* name) { return Scalar::param(name); }

Iterant random_element(std::mt19937_64& r, std::size_t n) {
  std::uniform_int_distribution<long> d(-4, 4);
  Iterant out(n);
  for (const auto& perm : all_permutations(n)) {
    Diagonal diag(n);
    for (auto& x : diag) x = Scalar(d(r));
    out += Iterant::term(diag, perm);
  }
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(1) == std::vector<Permutation>{{0}});
  CHECK(permuted({p("a"), p("b"), p("c")}, {2, 0, 1}) == Diagonal{p("c"), p("a"), p("b")});
}

TEST_CASE("order-two vocabulary") {
  Iterant minus_one = Iterant::scalar(2, Scalar(-1));
  CHECK(eta() * eta() == Iterant::scalar(2, Scalar(1)));
  CHECK(imaginary() * imaginary() == minus_one);
  Iterant shifted = pair(1, -1) * eta();
  CHECK(shifted * shifted == minus_one);
  CHECK(shifted == -imaginary());
  CHECK(imaginary().to_matrix() == Matrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(shifted.to_matrix() == Matrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK(eta() * pair(p("x"), p("y")) == pair(p("y"), p("x")) * eta());
  CHECK(overbar(pair(p("x"), p("y"))) == pair(p("y"), p("x")));
  CHECK(from_iterant_pair(pair(p("a"), p("d")), pair(p("b"), p("c"))).to_matrix() ==
        Matrix::from_rows({{p("a"), p("b")}, {p("c"), p("d")}}));
}

TEST_CASE("matrix rendering") {
  CHECK(Matrix::from_rows({{0, -1}, {1, 0}}).to_string() == "((0, -1), (1, 0))");
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  CHECK(Matrix::from_rows({{p("a"), p("b")}, {p("c"), p("d")}}).determinant2() == p("a") * p("d") - p("b") * p("c"));
}

TEST_CASE("permutation matrices place d_i at (i, π_i)") {
  Iterant t = Iterant::term({p("x"), p("y"), p("z")}, {1, 2, 0});
  Matrix m = t.to_matrix();
  CHECK(m.at(0, 1) == p("x"));
  CHECK(m.at(1, 2) == p("y"));
  CHECK(m.at(2, 0) == p("z"));
  CHECK(m.at(0, 0).is_zero());
}

TEST_CASE("order mismatch") {
  CHECK_THROWS_AS(eta() * Iterant::scalar(3, Scalar(1)), OrderMismatch);
  CHECK_THROWS_AS(Iterant(0), std::invalid_argument);
}

TEST_CASE("iterant algebra is associative and to_matrix is a homomorphism") {
  auto r = testing_support::rng(20);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int t = 0; t < 8; ++t) {
      Iterant a = random_element(r, n), b = random_element(r, n), c = random_element(r, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).to_matrix() == a.to_matrix() * b.to_matrix());
      CHECK((a + b).to_matrix() == a.to_matrix() + b.to_matrix());
    }
  }
}

TEST_CASE("decomposition of the symbolic 3x3 matrix") {
  Matrix m = Matrix::from_rows({{p("a"), p("b"), p("c")}, {p("d"), p("e"), p("f")}, {p("g"), p("h"), p("k")}});
  Decomposition d = matrix_decompose(m);
  CHECK(d.factor == make_rational(1, 2));
  REQUIRE(d.terms.size() == 6);
  auto find = [&](const Permutation& perm) {
    return std::find_if(d.terms.begin(), d.terms.end(), [&](const auto& t) { return t.permutation == perm; });
  };
  CHECK(find({0, 1, 2})->diagonal == Diagonal{p("a"), p("e"), p("k")});
  CHECK(find({1, 2, 0})->diagonal == Diagonal{p("b"), p("f"), p("g")});
  CHECK(find({2, 0, 1})->diagonal == Diagonal{p("c"), p("d"), p("h")});
  CHECK(find({2, 1, 0})->diagonal == Diagonal{p("c"), p("e"), p("g")});
  CHECK(find({1, 0, 2})->diagonal == Diagonal{p("b"), p("d"), p("k")});
  CHECK(find({0, 2, 1})->diagonal == Diagonal{p("a"), p("f"), p("h")});
  CHECK(d.element.to_matrix() == m);
}

TEST_CASE("decomposition round trip") {
  auto r = testing_support::rng(21);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(make_rational(num(r), den(r)));
      CHECK(matrix_decompose(m).element.to_matrix() == m);
    }
  }
  CHECK_THROWS_AS(matrix_decompose(Matrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(matrix_decompose(Matrix()), std::invalid_argument);
}

TEST_CASE("quaternions") {
  QuaternionTable t = quaternion_table();
  CHECK(t.i2_j2_k2_ijk_minus_one);
  CHECK(t.all_resolved);
  // rows/columns: 1, i, j, k
  CHECK(t.products[2][3] == std::pair{1, 1});   // jk = i
  CHECK(t.products[1][2] == std::pair{1, 3});   // ij = k
  CHECK(t.products[3][1] == std::pair{1, 2});   // ki = j
  CHECK(t.products[2][1] == std::pair{-1, 3});  // ji = -k
  for (const auto& row : t.matrix_agrees)
    for (bool ok : row) CHECK(ok);
}

TEST_CASE("lorentz boosts") {
  Event e{p("t"), p("x")};
  Event f = lorentz_boost(p("κ"), e);
  CHECK((f.t - f.x) * (f.t + f.x) == (e.t - e.x) * (e.t + e.x));
  CHECK_THROWS_AS(lorentz_boost(Scalar(0), e), std::domain_error);
  Event g = lorentz_boost_velocity(make_rational(3, 5), {Scalar(1), Scalar(0)});
  CHECK(g.t == Scalar::rational(5, 4));
  CHECK(g.x == Scalar::rational(-3, 4));
  CHECK_THROWS_AS(lorentz_boost_velocity(make_rational(1, 2), {Scalar(1), Scalar(0)}), std::domain_error);
  CHECK_THROWS_AS(lorentz_boost_velocity(make_rational(1), {Scalar(1), Scalar(0)}), std::domain_error);
}
