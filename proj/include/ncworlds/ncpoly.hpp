#ifndef NCWORLDS_NCPOLY_HPP
#define NCWORLDS_NCPOLY_HPP

#include "ncworlds/scalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ncw {

enum class IndexKind : std::uint8_t { None, Upper, Lower };

/// A non-commuting generator such as Q^1, P_2, Θ_{1,2}, H'' or θ_{;1,2}.
///
/// `derivs` holds the formal partial-derivative multi-index used for function
/// symbols in the flat world; it is kept sorted because mixed partials commute.
/// When `indices` is empty the kind is normalised to None.
struct Generator {
  std::string name;
  IndexKind kind = IndexKind::None;
  std::vector<int> indices;
  int primes = 0;
  std::vector<int> derivs;

  Generator() = default;
  explicit Generator(std::string n, int primes_ = 0) : name(std::move(n)), primes(primes_) {}
  Generator(std::string n, IndexKind k, std::vector<int> idx, int primes_ = 0,
            std::vector<int> derivs_ = {});

  static Generator upper(std::string n, int i) { return {std::move(n), IndexKind::Upper, {i}}; }
  static Generator lower(std::string n, int i) { return {std::move(n), IndexKind::Lower, {i}}; }

  /// The formal partial derivative with respect to coordinate `coord`.
  Generator derivative(int coord) const;
  /// Same symbol with one more prime (time derivative marker).
  Generator primed() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;

  std::string to_string() const;
};

using Word = std::vector<Generator>;

std::string word_to_string(std::span<const Generator> w);

/// Graded lexicographic order: shorter words first, ties broken by generator order.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free associative algebra over Scalar.
class NcPoly {
public:
  using TermMap = std::map<Word, Scalar, GradedLex>;

  NcPoly() = default;
  NcPoly(Scalar c);
  NcPoly(long c) : NcPoly(Scalar(c)) {}
  NcPoly(int c) : NcPoly(Scalar(c)) {}

  static NcPoly generator(Generator g);
  static NcPoly word(Word w, Scalar c = Scalar(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& s);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(NcPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  /// Apply a map to every coefficient, dropping zeros.
  NcPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;
  /// Substitute a polynomial for every occurrence of generator `g`.
  NcPoly substitute(const Generator& g, const NcPoly& value) const;

  /// Canonical text: terms in graded-lex order joined by " + ", coefficients
  /// other than 1 in parentheses, words dot-separated. Zero prints as "0".
  std::string to_string() const;

private:
  TermMap terms_;
};

NcPoly add(const NcPoly& a, const NcPoly& b);
NcPoly scale(const Scalar& s, const NcPoly& a);
NcPoly mul(const NcPoly& a, const NcPoly& b);
NcPoly pow(const NcPoly& a, unsigned exponent);

/// ab - ba
NcPoly commutator(const NcPoly& a, const NcPoly& b);

using Operator = std::function<NcPoly(const NcPoly&)>;

/// The inner derivation f ↦ [f, n].
Operator derivation(NcPoly n);

/// Extend a map on generators to the unique linear derivation of the free
/// algebra (Leibniz rule on words); scalars are constants.
NcPoly apply_derivation(const NcPoly& f, const std::function<NcPoly(const Generator&)>& on_generator);

inline NcPoly gen(const std::string& name) { return NcPoly::generator(Generator(name)); }

}  // namespace ncw

#endif
