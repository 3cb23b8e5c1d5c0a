#include "ncworlds/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ncw {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw std::invalid_argument("not a rational: " + std::string(text));
  Rational r;
  r.get_num() = mpz_class(std::string(num));
  r.get_den() = mpz_class(std::string(den));
  if (sgn(r.get_den()) == 0) throw std::domain_error("rational with zero denominator");
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  Rational out;
  mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
  out.canonicalize();
  return out;
}

// --- Gaussian ---------------------------------------------------------------

Gaussian Gaussian::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero");
  return {Rational(re_ / norm), Rational(-im_ / norm)};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Gaussian::to_string() const {
  if (is_real()) return re_.get_str();
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + " i";
  };
  if (sgn(re_) == 0) return imag_part(im_);
  std::string out = "(" + re_.get_str();
  if (sgn(im_) < 0) {
    out += " - " + imag_part(Rational(-im_));
  } else {
    out += " + " + imag_part(im_);
  }
  return out + ")";
}

// --- ParamMonomial ----------------------------------------------------------

ParamMonomial ParamMonomial::single(std::string name, int exponent) {
  ParamMonomial m;
  if (exponent != 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int ParamMonomial::exponent_of(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

ParamMonomial ParamMonomial::inverse() const {
  ParamMonomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

std::optional<ParamMonomial> ParamMonomial::divide_exact(const ParamMonomial& divisor) const {
  for (const auto& [name, e] : divisor.factors_) {
    int have = exponent_of(name);
    if ((e > 0 && have < e) || (e < 0 && have > e)) return std::nullopt;
  }
  return *this * divisor.inverse();
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string ParamMonomial::to_string() const {
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += ' ';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// --- Scalar -----------------------------------------------------------------

Scalar::Scalar(long n) {
  if (n != 0) terms_.emplace(ParamMonomial{}, Gaussian(n));
}

Scalar::Scalar(Rational r) {
  if (sgn(r) != 0) terms_.emplace(ParamMonomial{}, Gaussian(std::move(r)));
}

Scalar::Scalar(Gaussian g) {
  if (!g.is_zero()) terms_.emplace(ParamMonomial{}, std::move(g));
}

Scalar::Scalar(Gaussian g, ParamMonomial m) {
  if (!g.is_zero()) terms_.emplace(std::move(m), std::move(g));
}

Scalar Scalar::param(std::string name, int exponent) {
  return Scalar(Gaussian(1), ParamMonomial::single(std::move(name), exponent));
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

std::optional<Gaussian> Scalar::as_gaussian() const {
  if (terms_.empty()) return Gaussian(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<Rational> Scalar::as_rational() const {
  auto g = as_gaussian();
  if (!g || !g->is_real()) return std::nullopt;
  return g->re();
}

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("scalar is not invertible: " + to_string());
  const auto& [m, g] = *terms_.begin();
  return Scalar(g.inverse(), m.inverse());
}

void Scalar::add_term(const ParamMonomial& m, const Gaussian& g) {
  if (g.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [m, g] : out.terms_) g = -g;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, g] : o.terms_) add_term(m, g);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, g] : o.terms_) add_term(m, -g);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_.begin()->first.is_unit() &&
      b.terms_.begin()->first.is_unit()) {
    out.add_term(ParamMonomial{}, a.terms_.begin()->second * b.terms_.begin()->second);
    return out;
  }
  for (const auto& [ma, ga] : a.terms_)
    for (const auto& [mb, gb] : b.terms_) out.add_term(ma * mb, ga * gb);
  return out;
}

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar out(1);
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

Scalar Scalar::substitute(std::string_view name, const Scalar& value) const {
  Scalar out;
  for (const auto& [m, g] : terms_) {
    int e = m.exponent_of(name);
    if (e == 0) {
      out.add_term(m, g);
      continue;
    }
    ParamMonomial rest = m * ParamMonomial::single(std::string(name), -e);
    out += Scalar(g, rest) * pow(value, e);
  }
  return out;
}

Scalar Scalar::replace_monomial(const ParamMonomial& pattern, const Scalar& value) const {
  if (pattern.is_unit()) throw std::invalid_argument("cannot replace the unit monomial");
  Scalar out;
  for (const auto& [m, g] : terms_) {
    ParamMonomial rest = m;
    int power = 0;
    while (auto q = rest.divide_exact(pattern)) {
      rest = *q;
      ++power;
    }
    out += Scalar(g, rest) * pow(value, power);
  }
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, g] : terms_) {
    std::string term;
    if (m.is_unit()) {
      term = g.to_string();
    } else if (g.is_one()) {
      term = m.to_string();
    } else if (g == Gaussian(-1)) {
      term = "-" + m.to_string();
    } else {
      term = g.to_string() + " " + m.to_string();
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace ncw
