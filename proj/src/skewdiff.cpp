#include "ncworlds/skewdiff.hpp"

#include <algorithm>
#include <random>

namespace ncw::skew {

// --- Sequence -----------------------------------------------------------------

Sequence Sequence::constant(const Scalar& c, long start, std::size_t length) {
  return Sequence(start, std::vector<Scalar>(length, c));
}

Sequence Sequence::from_ints(const std::vector<long>& values, long start) {
  std::vector<Scalar> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return Sequence(start, std::move(v));
}

bool Sequence::all_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Sequence Sequence::shifted(long b) const {
  if (b < 0) throw std::invalid_argument("shift must be non-negative");
  if (static_cast<std::size_t>(b) >= values_.size())
    throw WindowExhausted("window exhausted: shifting " + std::to_string(values_.size()) + " values by " +
                          std::to_string(b));
  return Sequence(start_, std::vector<Scalar>(values_.begin() + b, values_.end()));
}

Sequence Sequence::map(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(f(x));
  return Sequence(start_, std::move(v));
}

namespace {

template <class Op>
Sequence pointwise(const Sequence& a, const Sequence& b, Op op) {
  long lo = std::max(a.start(), b.start());
  long hi = std::min(a.end(), b.end());
  if (lo >= hi) throw WindowExhausted("window exhausted: sequences do not overlap");
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(hi - lo));
  for (long t = lo; t < hi; ++t) v.push_back(op(a.at(t), b.at(t)));
  return Sequence(lo, std::move(v));
}

}  // namespace

Sequence operator+(const Sequence& a, const Sequence& b) {
  return pointwise(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

Sequence operator-(const Sequence& a, const Sequence& b) {
  return pointwise(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

Sequence operator*(const Sequence& a, const Sequence& b) {
  return pointwise(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
}

Sequence operator*(const Scalar& s, const Sequence& a) {
  return a.map([&](const Scalar& x) { return s * x; });
}

std::string Sequence::to_string() const {
  std::string out = "@" + std::to_string(start_) + "[";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ", ";
    out += values_[k].to_string();
  }
  return out + "]";
}

Sequence difference(const Sequence& f) { return f.shifted(1) - f; }

Sequence raw_derivative(const Sequence& f, const Scalar& dt) { return dt.inverse() * difference(f); }

// --- SkewElement --------------------------------------------------------------

SkewElement::SkewElement(Sequence f) { add(0, f); }

SkewElement SkewElement::term(unsigned power, Sequence f) {
  SkewElement out;
  out.add(power, f);
  return out;
}

SkewElement SkewElement::shift(unsigned power, long start, std::size_t length) {
  return term(power, Sequence::constant(Scalar(1), start, length));
}

const Sequence* SkewElement::coefficient(unsigned power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? nullptr : &it->second;
}

void SkewElement::add(unsigned power, const Sequence& f) {
  if (f.empty()) throw WindowExhausted("window exhausted: empty sequence");
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    if (!f.all_zero()) terms_.emplace(power, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.all_zero()) terms_.erase(it);
}

SkewElement SkewElement::map_values(const std::function<Scalar(const Scalar&)>& f) const {
  SkewElement out;
  for (const auto& [p, s] : terms_) out.add(p, s.map(f));
  return out;
}

SkewElement SkewElement::operator-() const {
  return map_values([](const Scalar& x) { return -x; });
}

SkewElement operator+(const SkewElement& a, const SkewElement& b) {
  SkewElement out = a;
  for (const auto& [p, s] : b.terms_) out.add(p, s);
  return out;
}

SkewElement operator-(const SkewElement& a, const SkewElement& b) { return a + (-b); }

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  SkewElement out;
  for (const auto& [pa, f] : a.terms_)
    for (const auto& [pb, g] : b.terms_) out.add(pa + pb, f.shifted(pb) * g);
  return out;
}

SkewElement operator*(const Scalar& s, const SkewElement& a) {
  return a.map_values([&](const Scalar& x) { return s * x; });
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, s] : terms_) {
    if (!out.empty()) out += " + ";
    if (p == 1) out += "J ";
    else if (p > 1) out += "J^" + std::to_string(p) + " ";
    out += s.to_string();
  }
  return out;
}

SkewElement nabla(const SkewElement& f, const Scalar& dt) {
  const Scalar inv = dt.inverse();
  SkewElement out;
  for (const auto& [p, s] : f.terms()) out = out + SkewElement::term(p + 1, inv * difference(s));
  return out;
}

SkewElement position_velocity_commutator(const Sequence& x, const Scalar& dt) {
  SkewElement xe(x);
  return em::commutator(xe, nabla(xe, dt));
}

SkewElement diffusion_law(const Sequence& x, const Scalar& dt) {
  Sequence d = difference(x);
  return SkewElement::term(1, dt.inverse() * (d * d));
}

bool commutator_is_constant(const Sequence& x, const Scalar& dt) {
  SkewElement c = position_velocity_commutator(x, dt);
  if (c.is_zero()) return true;
  if (c.terms().size() != 1) return false;
  const Sequence* s = c.coefficient(1);
  if (s == nullptr) return false;
  const auto& v = s->values();
  return std::all_of(v.begin(), v.end(), [&](const Scalar& y) { return y == v.front(); });
}

// --- epsilon ------------------------------------------------------------------

int levi_civita(int i, int j, int k) { return em::epsilon(i - 1, j - 1, k - 1); }

EpsilonReport epsilon_identity_check() {
  EpsilonReport report;
  auto delta = [](int x, int y) { return x == y ? 1 : 0; };
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          int lhs = 0;
          for (int i = 1; i <= 3; ++i) lhs += levi_civita(a, b, i) * levi_civita(c, d, i);
          int rhs = -delta(a, d) * delta(b, c) + delta(a, c) * delta(b, d);
          report.tuples.push_back({a, b, c, d, lhs, rhs});
          if (lhs != rhs) ++report.failures;
        }
  return report;
}

// --- Electromagnetic theorem --------------------------------------------------

em::Calculus<SkewElement> calculus(const SeqVec3& x, const Scalar& dt) {
  em::Calculus<SkewElement> c;
  for (int i = 0; i < 3; ++i) c.xdot[i] = nabla(SkewElement(x[i]), dt);
  c.time_derivative = [dt](const SkewElement& f) { return nabla(f, dt); };
  return c;
}

namespace {

SeqVec3 differences(const SeqVec3& x) { return {difference(x[0]), difference(x[1]), difference(x[2])}; }

SeqVec3 shifted(const SeqVec3& x, long b) { return {x[0].shifted(b), x[1].shifted(b), x[2].shifted(b)}; }

Vec3 as_term(unsigned power, const SeqVec3& v, const Scalar& factor) {
  return {SkewElement::term(power, factor * v[0]), SkewElement::term(power, factor * v[1]),
          SkewElement::term(power, factor * v[2])};
}

ClosedForms closed_forms(const SeqVec3& x, const em::Fields<SkewElement>& f, const Scalar& dt) {
  using em::cross;
  const Scalar inv = dt.inverse();
  SeqVec3 d = differences(x);
  SeqVec3 d1 = shifted(d, 1);
  SeqVec3 d2 = shifted(d, 2);
  SeqVec3 dd = differences(d);
  SeqVec3 inner = cross(d1, d);
  ClosedForms out;
  out.b_residual = em::operator-(f.b, as_term(2, inner, pow(inv, 2)));
  Vec3 e_expected = em::operator-(as_term(2, dd, pow(inv, 2)), as_term(3, cross(d2, inner), pow(inv, 3)));
  out.e_residual = em::operator-(f.e, e_expected);
  return out;
}

}  // namespace

TrialResult em_trial(const SeqVec3& x, const Scalar& dt) {
  auto c = calculus(x, dt);
  TrialResult out{em::theorem_residuals(c), {}, false};
  out.closed_forms = closed_forms(x, out.residuals.fields, dt);
  out.b_cross_b_nonzero = !em::is_zero(out.residuals.b_cross_b);
  return out;
}

SeqVec3 random_triple(std::uint64_t seed, std::uint64_t trial, std::size_t length, long range) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> dist(-range, range);
  SeqVec3 out;
  for (auto& s : out) {
    std::vector<long> v(length);
    for (auto& y : v) y = dist(rng);
    s = Sequence::from_ints(v);
  }
  return out;
}

SimulationSummary em_simulation(std::uint64_t seed, std::size_t trials, std::size_t length, long range) {
  SimulationSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.length = length;
  summary.range = range;
  for (std::size_t t = 0; t < trials; ++t) {
    SeqVec3 x = random_triple(seed, t, length, range);
    try {
      TrialResult r = em_trial(x);
      const auto& res = r.residuals;
      auto record = [&](std::size_t eq, bool ok, const std::string& text) {
        if (ok) return;
        ++summary.failures[eq];
        if (summary.first_nonzero_residual == "0") summary.first_nonzero_residual = text;
      };
      auto vec_text = [](const Vec3& v) {
        return "(" + v[0].to_string() + "; " + v[1].to_string() + "; " + v[2].to_string() + ")";
      };
      record(0, res.lorentz_holds(), vec_text(res.lorentz));
      record(1, res.divergence_holds(), res.divergence.to_string());
      record(2, res.faraday_holds(), vec_text(res.faraday));
      record(3, res.ampere_holds(), vec_text(res.ampere));
      if (!r.closed_forms.holds()) ++summary.closed_form_failures;
      if (r.b_cross_b_nonzero) ++summary.b_cross_b_nonzero;
    } catch (const WindowExhausted&) {
      ++summary.window_errors;
    }
  }
  return summary;
}

ScalarDerivationForms scalar_derivation_forms(const SeqVec3& x, const Sequence& f, const Scalar& dt) {
  auto c = calculus(x, dt);
  const Scalar inv = dt.inverse();
  SkewElement fe(f);
  SkewElement fdot = nabla(fe, dt);
  SeqVec3 d = differences(x);
  Sequence df = difference(f);
  ScalarDerivationForms out;
  for (int i = 0; i < 3; ++i) out.partial_residual[i] = c.partial(i, fe) - fdot * SkewElement(d[i]);
  Sequence dd = shifted(d, 1)[0] * d[0] + shifted(d, 1)[1] * d[1] + shifted(d, 1)[2] * d[2];
  SkewElement expected = SkewElement::term(1, inv * df) - SkewElement::term(2, pow(inv, 2) * (dd * df));
  out.time_residual = c.partial_t(fe) - expected;
  return out;
}

em::Calculus<NcPoly> symbolic_calculus() {
  em::Calculus<NcPoly> c;
  for (int i = 0; i < 3; ++i) c.xdot[i] = NcPoly::generator(Generator::lower("Ẋ", i + 1));
  c.time_derivative = [](const NcPoly& f) {
    return apply_derivation(f, [](const Generator& g) { return NcPoly::generator(g.primed()); });
  };
  return c;
}

em::Residuals<NcPoly> symbolic_em_check() { return em::theorem_residuals(symbolic_calculus()); }

// --- scalar models ------------------------------------------------------------

WickResult wick_heisenberg(const Scalar& hbar, const Scalar& m) {
  ParamMonomial pattern = ParamMonomial::single("Δx", 2) * ParamMonomial::single("Δt", -1);
  Scalar ratio(Gaussian(1), pattern);
  Scalar law = hbar * m.inverse();
  WickResult out;
  out.ratio = ratio;
  out.before_rotation = ratio.replace_monomial(pattern, law);
  Scalar rotated = ratio.substitute("Δt", Scalar::imaginary_unit() * Scalar::param("Δt"));
  out.after_rotation = rotated.replace_monomial(pattern, law);
  // [p, q] = -[q, p] = -m [q, p/m]
  out.pq = -(m * out.after_rotation);
  return out;
}

SkewElement diffusion_walk(const std::vector<int>& signs) {
  const Scalar s = Scalar::param("s");
  std::vector<Scalar> values{Scalar(0)};
  for (int sign : signs) values.push_back(values.back() + Scalar(sign) * s);
  Sequence x(0, std::move(values));
  const Scalar tau = Scalar::param("τ");
  const Scalar k_tau = Scalar::param("k") * tau;
  SkewElement c = position_velocity_commutator(x, tau);
  return c.map_values([&](const Scalar& v) { return v.replace_monomial(ParamMonomial::single("s", 2), k_tau); });
}

}  // namespace ncw::skew
