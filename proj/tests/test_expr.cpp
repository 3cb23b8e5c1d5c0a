#include "helpers.hpp"
#include "ncworlds/expr.hpp"

#include <doctest.h>

using namespace ncw;
using namespace ncw::expr;

namespace {

class AstGenerator {
public:
  explicit AstGenerator(std::uint64_t salt) : rng_(testing_support::rng(salt)) {}

  Expr make(int depth) {
    if (depth <= 0 || pick(4) == 0) return leaf();
    switch (pick(5)) {
      case 0: {
        std::size_t n = 1 + pick(3);
        std::vector<Expr> terms;
        std::vector<bool> negated;
        for (std::size_t k = 0; k < n; ++k) {
          terms.push_back(make(depth - 1));
          negated.push_back(pick(2) == 0);
        }
        if (n == 1) negated[0] = true;  // a lone positive term prints as the term itself
        return Expr::make_sum(std::move(terms), std::move(negated));
      }
      case 1: {
        std::vector<Expr> factors;
        for (std::size_t k = 0, n = 2 + pick(2); k < n; ++k) factors.push_back(make(depth - 1));
        return Expr::make_product(std::move(factors));
      }
      case 2:
        return Expr::make_commutator(make(depth - 1), make(depth - 1));
      case 3: {
        std::vector<Expr> slots;
        for (std::size_t k = 0, n = 1 + pick(3); k < n; ++k) slots.push_back(make(depth - 1));
        return Expr::make_symmetrizer(std::move(slots));
      }
      default:
        return leaf();
    }
  }

private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Expr leaf() {
    static const std::vector<std::string> names{"X", "Q", "P", "H", "Θ", "θ", "ψ", "g", "Ab"};
    static const std::vector<std::string> params{"ħ", "Δt", "Δx", "τ", "m", "k"};
    switch (pick(5)) {
      case 0:
        return Expr::make_number(make_rational(static_cast<long>(pick(20)), static_cast<long>(1 + pick(6))));
      case 1:
        return Expr::make_imaginary();
      case 2: {
        int e = static_cast<int>(pick(5)) - 2;
        return Expr::make_parameter(params[pick(params.size())], e == 0 ? 1 : e);
      }
      default: {
        IndexKind kind = pick(3) == 0 ? IndexKind::None : (pick(2) ? IndexKind::Upper : IndexKind::Lower);
        std::vector<int> indices;
        if (kind != IndexKind::None)
          for (std::size_t k = 0, n = 1 + pick(2); k < n; ++k) indices.push_back(static_cast<int>(1 + pick(3)));
        std::vector<int> derivs;
        if (pick(4) == 0) derivs.push_back(static_cast<int>(1 + pick(3)));
        return Expr::make_generator(Generator(names[pick(names.size())], kind, indices, static_cast<int>(pick(3)), derivs));
      }
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("parse and print") {
  CHECK(print(parse("[Q^1,P_1]")) == "[Q^1, P_1]");
  CHECK(print(parse("X.Y")) == "X Y");
  CHECK(print(parse("hbar dt^-1")) == "ħ Δt^-1");
  CHECK(print(parse("g_{1,1;2}")) == "g_{1,1;2}");
  CHECK(print(parse("- X + 2/4 Y")) == "-X + (1/2 Y)");
  CHECK(print(parse("H''")) == "H''");
}

TEST_CASE("evaluation") {
  RewriteSystem flat = systems::flat();
  CHECK(evaluate(parse("[Q^1, P_1]"), &flat).to_string() == "1");
  CHECK(evaluate(parse("{X Y}")).to_string() == "(1/2) X.Y + (1/2) Y.X");
  CHECK(evaluate(parse("i i")) == NcPoly(-1));
  CHECK(evaluate(parse("[X, Y] + [Y, X]")).is_zero());
  RewriteSystem abc = systems::abc_relations();
  CHECK(evaluate(parse("{A B C} - {A {B C}} - 1/12 [A, [B, C]]"), &abc).is_zero());
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse("(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 2);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse("X +\n  [Y, ]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse("X)"), ParseError);
  CHECK_THROWS_AS(parse("{}"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
}

TEST_CASE("round trip on 500 random trees") {
  AstGenerator g(50);
  for (int t = 0; t < 500; ++t) {
    Expr e = g.make(6);
    std::string text = print(e);
    Expr back = parse(text);
    CHECK_MESSAGE(back == e, text);
    CHECK(print(back) == text);
  }
}

TEST_CASE("printing normalizes") {
  for (const char* src : {"X.Y.Z", "(X)", "((X + Y))", "2/6 ħ", "{ X   Y }", "[X,[Y,Z]]"}) {
    std::string once = print(parse(src));
    CHECK(print(parse(once)) == once);
  }
}
