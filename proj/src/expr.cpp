#include "ncworlds/expr.hpp"

#include "ncworlds/constraints.hpp"

#include <array>
#include <cctype>

namespace ncw::expr {

Expr Expr::make_number(Rational r) {
  Expr e;
  e.kind = Kind::Number;
  e.number = std::move(r);
  return e;
}

Expr Expr::make_imaginary() {
  Expr e;
  e.kind = Kind::Imaginary;
  return e;
}

Expr Expr::make_parameter(std::string name, int exponent) {
  Expr e;
  e.kind = Kind::Parameter;
  e.param = std::move(name);
  e.exponent = exponent;
  return e;
}

Expr Expr::make_generator(ncw::Generator g) {
  Expr e;
  e.kind = Kind::Generator;
  e.generator = std::move(g);
  return e;
}

Expr Expr::make_sum(std::vector<Expr> terms, std::vector<bool> negated) {
  Expr e;
  e.kind = Kind::Sum;
  e.children = std::move(terms);
  e.negated = std::move(negated);
  return e;
}

Expr Expr::make_product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::make_commutator(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::Commutator;
  e.children = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::make_symmetrizer(std::vector<Expr> slots) {
  Expr e;
  e.kind = Kind::Symmetrizer;
  e.children = std::move(slots);
  return e;
}

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         join(expected, ", ") + " but found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

std::optional<std::string> canonical_parameter(std::string_view name) {
  static const std::array<std::pair<std::string_view, std::string_view>, 10> table{{
      {"ħ", "ħ"},
      {"hbar", "ħ"},
      {"Δt", "Δt"},
      {"dt", "Δt"},
      {"Δx", "Δx"},
      {"dx", "Δx"},
      {"τ", "τ"},
      {"tau", "τ"},
      {"m", "m"},
      {"k", "k"},
  }};
  for (const auto& [alias, canonical] : table)
    if (alias == name) return std::string(canonical);
  return std::nullopt;
}

// --- parser -------------------------------------------------------------------

namespace {

const std::vector<std::string> kFactorStart{"number", "name", "'i'", "'('", "'['", "'{'"};

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    skip_space();
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) fail({"'+'", "'-'", "factor", "end of input"});
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  std::size_t codepoint_length(std::size_t at) const {
    unsigned char c = static_cast<unsigned char>(src_[at]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
    return std::min(len, src_.size() - at);
  }

  void advance() {
    if (at_end()) return;
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      ++pos_;
      return;
    }
    pos_ += codepoint_length(pos_);
    ++column_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::string found() const {
    if (at_end()) return "end of input";
    return "'" + std::string(src_.substr(pos_, codepoint_length(pos_))) + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(line_, column_, std::move(expected), found());
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail({std::string("'") + c + "'"});
    advance();
  }

  bool is_letter_at(std::size_t at) const {
    if (at >= src_.size()) return false;
    unsigned char c = static_cast<unsigned char>(src_[at]);
    return c >= 0x80 || std::isalpha(c);
  }

  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '{' || is_letter_at(pos_);
  }

  Expr parse_expr() {
    std::vector<Expr> terms;
    std::vector<bool> negated;
    skip_space();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      advance();
    }
    terms.push_back(parse_term());
    negated.push_back(neg);
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negated.push_back(peek() == '-');
      advance();
      terms.push_back(parse_term());
    }
    if (terms.size() == 1 && !negated[0]) return std::move(terms[0]);
    return Expr::make_sum(std::move(terms), std::move(negated));
  }

  Expr parse_term() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    for (;;) {
      skip_space();
      if (peek() == '.') {
        advance();
        factors.push_back(parse_factor());
        continue;
      }
      if (!starts_factor()) break;
      factors.push_back(parse_factor());
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return Expr::make_product(std::move(factors));
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  int integer(bool allow_sign) {
    bool neg = false;
    if (allow_sign && peek() == '-') {
      neg = true;
      advance();
    }
    std::string d = digits();
    if (d.empty()) fail({"integer"});
    if (d.size() > 9) fail({"integer below 10^9"});
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  Expr parse_factor() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        advance();
        std::string den = digits();
        if (den.empty()) fail({"digits"});
        if (den.find_first_not_of('0') == std::string::npos) fail({"nonzero denominator"});
        num += "/" + den;
      }
      return Expr::make_number(parse_rational(num));
    }
    if (c == '(') {
      advance();
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      advance();
      Expr a = parse_expr();
      expect(',');
      Expr b = parse_expr();
      expect(']');
      return Expr::make_commutator(std::move(a), std::move(b));
    }
    if (c == '{') {
      advance();
      std::vector<Expr> slots;
      skip_space();
      if (!starts_factor()) fail(kFactorStart);
      while (starts_factor()) {
        slots.push_back(parse_factor());
        skip_space();
      }
      expect('}');
      return Expr::make_symmetrizer(std::move(slots));
    }
    if (is_letter_at(pos_)) return parse_name();
    fail(kFactorStart);
  }

  Expr parse_name() {
    std::string name;
    while (is_letter_at(pos_)) {
      std::size_t len = codepoint_length(pos_);
      name += src_.substr(pos_, len);
      advance();
    }
    if (name == "i") return Expr::make_imaginary();
    if (auto p = canonical_parameter(name)) {
      int exponent = 1;
      if (peek() == '^') {
        advance();
        if (peek() == '{') {
          advance();
          exponent = integer(true);
          expect('}');
        } else {
          exponent = integer(true);
        }
      }
      return Expr::make_parameter(*p, exponent);
    }
    IndexKind kind = IndexKind::None;
    std::vector<int> indices;
    std::vector<int> derivs;
    if (peek() == '^' || peek() == '_') {
      kind = peek() == '^' ? IndexKind::Upper : IndexKind::Lower;
      advance();
      if (peek() == '{') {
        advance();
        auto list = [&](std::vector<int>& into) {
          skip_space();
          if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            into.push_back(integer(true));
            skip_space();
            while (peek() == ',') {
              advance();
              skip_space();
              into.push_back(integer(true));
              skip_space();
            }
          }
        };
        list(indices);
        if (peek() == ';') {
          advance();
          list(derivs);
          if (derivs.empty()) fail({"integer"});
        }
        if (peek() != '}') fail({"','", "';'", "'}'"});
        advance();
        if (indices.empty() && derivs.empty()) fail({"index"});
      } else {
        indices.push_back(integer(false));
      }
    }
    int primes = 0;
    while (peek() == '\'') {
      ++primes;
      advance();
    }
    return Expr::make_generator(ncw::Generator(name, kind, indices, primes, derivs));
  }
};

}  // namespace

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

// --- printer ------------------------------------------------------------------

namespace {

std::string print_in(const Expr& e, bool wrap_compound);

std::string wrapped(const Expr& e) { return print_in(e, true); }

std::string print_in(const Expr& e, bool wrap_compound) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return e.number.get_str();
    case K::Imaginary:
      return "i";
    case K::Parameter:
      return e.exponent == 1 ? e.param : e.param + "^" + std::to_string(e.exponent);
    case K::Generator:
      return e.generator.to_string();
    case K::Sum: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        std::string child = wrapped(e.children[k]);
        if (k == 0) out = e.negated[k] ? "-" + child : child;
        else out += (e.negated[k] ? " - " : " + ") + child;
      }
      return wrap_compound ? "(" + out + ")" : out;
    }
    case K::Product: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out += " ";
        out += wrapped(e.children[k]);
      }
      return wrap_compound ? "(" + out + ")" : out;
    }
    case K::Commutator:
      return "[" + print_in(e.children[0], false) + ", " + print_in(e.children[1], false) + "]";
    case K::Symmetrizer: {
      std::string out = "{";
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out += " ";
        out += wrapped(e.children[k]);
      }
      return out + "}";
    }
  }
  return {};
}

}  // namespace

std::string print(const Expr& e) { return print_in(e, false); }

// --- evaluation ---------------------------------------------------------------

namespace {

NcPoly eval(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return NcPoly(Scalar(e.number));
    case K::Imaginary:
      return NcPoly(Scalar::imaginary_unit());
    case K::Parameter:
      return NcPoly(Scalar::param(e.param, e.exponent));
    case K::Generator:
      return NcPoly::generator(e.generator);
    case K::Sum: {
      NcPoly out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (e.negated[k]) out -= eval(e.children[k]);
        else out += eval(e.children[k]);
      }
      return out;
    }
    case K::Product: {
      NcPoly out(1);
      for (const auto& c : e.children) out = out * eval(c);
      return out;
    }
    case K::Commutator:
      return commutator(eval(e.children[0]), eval(e.children[1]));
    case K::Symmetrizer: {
      std::vector<NcPoly> slots;
      for (const auto& c : e.children) slots.push_back(eval(c));
      return constraints::symmetrize(slots);
    }
  }
  return {};
}

}  // namespace

NcPoly evaluate(const Expr& e, const RewriteSystem* sys) {
  NcPoly p = eval(e);
  return sys ? sys->reduce(p) : p;
}

}  // namespace ncw::expr
