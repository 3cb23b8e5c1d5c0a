#ifndef NCWORLDS_SCALAR_HPP
#define NCWORLDS_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncw {

using Rational = mpq_class;

/// Builds p/q in canonical form. Throws std::domain_error when q == 0.
Rational make_rational(long p, long q = 1);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact square root of a non-negative rational when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Gaussian rational a + b i.
class Gaussian {
public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long re) : re_(re) {}

  static Gaussian imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  /// Throws std::domain_error on zero.
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

private:
  Rational re_{0};
  Rational im_{0};
};

/// Product of central parameters with integer (possibly negative) exponents.
/// Factors are kept sorted by name with zero exponents removed.
class ParamMonomial {
public:
  using Factor = std::pair<std::string, int>;

  ParamMonomial() = default;
  static ParamMonomial single(std::string name, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent_of(std::string_view name) const;

  ParamMonomial inverse() const;
  /// Returns the quotient when `divisor` divides this monomial in the Laurent
  /// sense used for pattern replacement: every exponent of the divisor has the
  /// same sign as, and no larger magnitude than, the matching exponent here.
  std::optional<ParamMonomial> divide_exact(const ParamMonomial& divisor) const;

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  std::string to_string() const;

private:
  std::vector<Factor> factors_;
};

/// Element of the coefficient ring: a finite sum of Gaussian rationals times
/// parameter monomials (Laurent polynomials over Q(i)). Canonical: no zero
/// coefficients, so structural equality is ring equality.
class Scalar {
public:
  Scalar() = default;
  Scalar(long n);
  Scalar(int n) : Scalar(static_cast<long>(n)) {}
  Scalar(Rational r);
  Scalar(Gaussian g);
  Scalar(Gaussian g, ParamMonomial m);

  static Scalar imaginary_unit() { return Scalar(Gaussian::imaginary_unit()); }
  static Scalar param(std::string name, int exponent = 1);
  static Scalar rational(long p, long q) { return Scalar(make_rational(p, q)); }

  const std::map<ParamMonomial, Gaussian>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// The numeric value when no parameters are present.
  std::optional<Gaussian> as_gaussian() const;
  std::optional<Rational> as_rational() const;

  /// Units of the Laurent ring are single nonzero terms. Throws
  /// std::domain_error for anything else.
  Scalar inverse() const;

  /// Replace every occurrence of parameter `name` by `value`. Negative
  /// exponents require `value` to be a unit.
  Scalar substitute(std::string_view name, const Scalar& value) const;
  /// Replace each maximal power of `pattern` dividing a term by `value`.
  Scalar replace_monomial(const ParamMonomial& pattern, const Scalar& value) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Text accepted back by the expression parser for built-in parameters.
  std::string to_string() const;

private:
  void add_term(const ParamMonomial& m, const Gaussian& g);

  std::map<ParamMonomial, Gaussian> terms_;
};

Scalar pow(const Scalar& base, int exponent);

}  // namespace ncw

#endif
