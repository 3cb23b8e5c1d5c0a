#ifndef NCWORLDS_EXPR_HPP
#define NCWORLDS_EXPR_HPP

#include "ncworlds/ncpoly.hpp"
#include "ncworlds/quotient.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncw::expr {

/// Surface syntax tree. Parentheses are not stored; the printer adds them
/// where the structure would otherwise be lost.
struct Expr {
  enum class Kind { Number, Imaginary, Parameter, Generator, Sum, Product, Commutator, Symmetrizer };

  Kind kind = Kind::Number;
  Rational number{0};         // Number: non-negative literal
  std::string param;          // Parameter: canonical name
  int exponent = 1;           // Parameter
  ncw::Generator generator;   // Generator
  std::vector<Expr> children;
  std::vector<bool> negated;  // Sum: sign of each child

  static Expr make_number(Rational r);
  static Expr make_imaginary();
  static Expr make_parameter(std::string name, int exponent = 1);
  static Expr make_generator(ncw::Generator g);
  static Expr make_sum(std::vector<Expr> terms, std::vector<bool> negated);
  static Expr make_product(std::vector<Expr> factors);
  static Expr make_commutator(Expr a, Expr b);
  static Expr make_symmetrizer(std::vector<Expr> slots);

  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

/// Built-in central parameters and their ASCII aliases. Returns the canonical
/// name (ħ, Δt, Δx, τ, m, k) or nullopt.
std::optional<std::string> canonical_parameter(std::string_view name);

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['.'] factor)*        juxtaposition is product
///   factor := number | 'i' | param ['^' int] | generator
///           | '[' expr ',' expr ']' | '{' factor+ '}' | '(' expr ')'
///   number := digits ['/' digits]
///   generator := name [('^'|'_') (digits | '{' [ints] [';' ints] '}')] '\''*
/// Names are maximal runs of letters; `i` and the built-in parameters are reserved.
Expr parse(std::string_view src);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluates in the free algebra, then reduces with `sys` when given.
NcPoly evaluate(const Expr& e, const RewriteSystem* sys = nullptr);

}  // namespace ncw::expr

#endif
