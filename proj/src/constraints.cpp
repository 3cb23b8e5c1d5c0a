#include "ncworlds/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncw::constraints {

namespace {

mpz_class factorial(std::size_t n) {
  mpz_class out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= static_cast<unsigned long>(k);
  return out;
}

Scalar fraction(long p, long q) { return Scalar::rational(p, q); }

}  // namespace

NcPoly symmetrize(std::span<const NcPoly> factors) {
  if (factors.empty()) throw std::invalid_argument("symmetrizer needs at least one factor");
  std::vector<NcPoly> distinct;
  std::vector<std::size_t> ids;
  for (const auto& f : factors) {
    auto it = std::find(distinct.begin(), distinct.end(), f);
    if (it == distinct.end()) {
      ids.push_back(distinct.size());
      distinct.push_back(f);
    } else {
      ids.push_back(static_cast<std::size_t>(it - distinct.begin()));
    }
  }
  std::sort(ids.begin(), ids.end());
  mpz_class repeats = 1;
  for (std::size_t d = 0; d < distinct.size(); ++d)
    repeats *= factorial(static_cast<std::size_t>(std::count(ids.begin(), ids.end(), d)));

  NcPoly sum;
  do {
    NcPoly term = distinct[ids[0]];
    for (std::size_t k = 1; k < ids.size(); ++k) term = term * distinct[ids[k]];
    sum += term;
  } while (std::next_permutation(ids.begin(), ids.end()));

  Rational weight(repeats, factorial(factors.size()));
  weight.canonicalize();
  return Scalar(weight) * sum;
}

NcPoly symmetrize(std::initializer_list<NcPoly> factors) {
  return symmetrize(std::span<const NcPoly>(factors.begin(), factors.size()));
}

NcPoly second_constraint_residual(const NcPoly& theta, const NcPoly& h) {
  NcPoly lhs = symmetrize({theta, h, h}) - symmetrize({symmetrize({theta, h}), h});
  return lhs - fraction(1, 12) * commutator(commutator(theta, h), h);
}

NcPoly second_constraint_requirement_residual(const NcPoly& theta, const NcPoly& h) {
  NcPoly requirement = theta * h * h + h * h * theta - Scalar(2) * (h * theta * h);
  return requirement - commutator(commutator(theta, h), h);
}

AbcIdentity symmetrizer_commutator_identity(const RewriteSystem& sys) {
  NcPoly a = gen("A");
  NcPoly b = gen("B");
  NcPoly c = gen("C");
  AbcIdentity out;
  out.difference = sys.reduce(symmetrize({a, b, c}) - symmetrize({a, symmetrize({b, c})}));
  NcPoly displayed = fraction(1, 12) * (a * b * c - Scalar(2) * (a * c * b) + c * a * b);
  out.intermediate = sys.reduce(out.difference - displayed);
  out.residual = sys.reduce(out.difference - fraction(1, 12) * commutator(a, commutator(b, c)));
  return out;
}

ThirdConstraint third_constraint_check(const NcPoly& theta, const NcPoly& h, const NcPoly& hdot,
                                       const NcPoly& hddot) {
  const NcPoly& t = theta;
  const NcPoly h2 = h * h;
  ThirdConstraint out;
  out.residual_commutator =
      commutator(h2, commutator(h, t)) - (h * h2 * t - h2 * t * h - h * t * h2 + t * h * h2);
  NcPoly rhs = commutator(hdot, commutator(h, t)) - Scalar(2) * commutator(h, commutator(hdot, t));
  NcPoly displayed = (hdot * h * t + hdot * t * h + h * t * hdot + t * h * hdot) -
                     Scalar(2) * (h * hdot * t + t * hdot * h);
  out.residual_expansion = rhs - displayed;

  const NcPoly th = symmetrize({t, h});
  NcPoly third = symmetrize({t, h, h, h}) + Scalar(3) * symmetrize({t, h, hdot}) + symmetrize({t, hddot});
  NcPoly second_dot = symmetrize({th, h, h}) + Scalar(2) * symmetrize({t, h, hdot}) + symmetrize({th, hdot}) +
                      symmetrize({t, hddot});
  out.difference = third - second_dot;
  out.commutator_equation = commutator(h2, commutator(h, t)) - rhs;

  out.ratio_residual = out.difference;
  if (!out.commutator_equation.is_zero()) {
    const auto& [w, coeff] = *out.commutator_equation.terms().begin();
    Scalar c = out.difference.coefficient(w) * coeff.inverse();
    out.ratio = c;
    out.ratio_residual = out.difference - c * out.commutator_equation;
  }
  return out;
}

Generator symmetric_theta(int i, int j) {
  return Generator("Θ", IndexKind::Lower, {std::min(i, j), std::max(i, j)});
}

Generator metric(int i, int j) { return Generator("g", IndexKind::Lower, {std::min(i, j), std::max(i, j)}); }

bool CurvatureForm::pairs_hold() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CurvaturePair& p) { return p.residual.is_zero(); });
}

CurvatureForm curvature_form_check(int n) {
  CurvatureForm out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      NcPoly t = NcPoly::generator(symmetric_theta(i, j));
      NcPoly hi = NcPoly::generator(Generator::upper("H", i));
      NcPoly hj = NcPoly::generator(Generator::upper("H", j));
      NcPoly lhs = commutator(commutator(t, hj), hi);
      NcPoly curvature = commutator(commutator(hi, hj), t);
      out.pairs.push_back({i, j, lhs - commutator(commutator(t, hi), hj) - curvature});
      out.summed_curvature += curvature;
      out.summed_constraint += lhs;
    }
  }
  return out;
}

NcPoly quadratic_hamiltonian(int n) {
  NcPoly h;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      NcPoly g = NcPoly::generator(metric(i, j));
      NcPoly pp = NcPoly::generator(momentum(i)) * NcPoly::generator(momentum(j));
      h += g * pp + pp * g;
    }
  }
  return fraction(1, 4) * h;
}

NcPoly first_constraint_quadratic_check(int n, const std::optional<NcPoly>& theta) {
  const RewriteSystem sys = systems::flat_with_functions();
  const NcPoly t = theta.value_or(gen("θ"));
  const NcPoly h = quadratic_hamiltonian(n);
  NcPoly rhs;
  for (int i = 1; i <= n; ++i) {
    NcPoly hi = sys.reduce(commutator(NcPoly::generator(coordinate(i)), h));
    NcPoly ti = sys.reduce(commutator(t, NcPoly::generator(momentum(i))));
    rhs += fraction(1, 2) * (hi * ti + ti * hi);
  }
  return sys.reduce(commutator(t, h) - rhs);
}

// --- tower --------------------------------------------------------------------

CMonomial CMonomial::make(int theta, std::vector<int> h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  return {theta, std::move(h)};
}

int CMonomial::degree() const {
  int d = theta;
  for (int e : h) d += e;
  return d;
}

std::string CMonomial::to_string() const {
  std::vector<std::string> parts;
  auto power = [](std::string base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  if (h_exponent(0) > 0) parts.push_back(power("h", h_exponent(0)));
  if (theta > 0) parts.push_back(power("θ", theta));
  for (std::size_t k = 1; k < h.size(); ++k)
    if (h[k] > 0) parts.push_back(power("h" + std::string(k, '\''), h[k]));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " " + parts[k];
  return out;
}

CPoly CPoly::monomial(CMonomial m, Rational c) {
  CPoly p;
  p.add_term(m, c);
  return p;
}

Rational CPoly::coefficient(const CMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CPoly::add_term(const CMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

CPoly operator+(CPoly a, const CPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

Rational CPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest power of h first, matching the usual way the tower is displayed.
  std::vector<std::pair<CMonomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.h_exponent(0) > b.first.h_exponent(0);
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + " ";
    out += m.to_string();
  }
  return out;
}

CPoly tower_derive(const CPoly& p) {
  CPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.theta > 0) {
      // a θ^(a-1) · hθ = a h θ^a
      std::vector<int> h = m.h;
      if (h.empty()) h.resize(1, 0);
      ++h[0];
      out.add_term(CMonomial::make(m.theta, h), c * m.theta);
    }
    for (std::size_t k = 0; k < m.h.size(); ++k) {
      if (m.h[k] == 0) continue;
      std::vector<int> h = m.h;
      --h[k];
      if (h.size() <= k + 1) h.resize(k + 2, 0);
      ++h[k + 1];
      out.add_term(CMonomial::make(m.theta, h), c * m.h[k]);
    }
  }
  return out;
}

std::vector<TowerLevel> derivative_tower(int n) {
  if (n < 1) throw std::invalid_argument("tower needs at least one level");
  std::vector<TowerLevel> out;
  CPoly level = tower_derive(CPoly::monomial(CMonomial::make(1, {})));
  for (int k = 1; k <= n; ++k) {
    out.push_back({k, level});
    if (k < n) level = tower_derive(level);
  }
  return out;
}

std::vector<Rational> h_prime_series(const std::vector<TowerLevel>& tower) {
  std::vector<Rational> out;
  for (const auto& t : tower)
    if (t.level >= 2) out.push_back(t.polynomial.coefficient(CMonomial::make(1, {t.level - 2, 1})));
  return out;
}

std::vector<Rational> h_prime_squared_series(const std::vector<TowerLevel>& tower) {
  std::vector<Rational> out;
  for (const auto& t : tower)
    if (t.level >= 4) out.push_back(t.polynomial.coefficient(CMonomial::make(1, {t.level - 4, 2})));
  return out;
}

std::vector<Rational> forward_difference(const std::vector<Rational>& s, int k) {
  std::vector<Rational> out = s;
  for (int step = 0; step < k && !out.empty(); ++step) {
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) next.push_back(out[i + 1] - out[i]);
    out = std::move(next);
  }
  return out;
}

NcPoly symmetrized_operator(const CPoly& p) {
  NcPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<NcPoly> factors;
    for (int e = 0; e < m.theta; ++e) factors.push_back(gen("Θ"));
    for (std::size_t k = 0; k < m.h.size(); ++k)
      for (int e = 0; e < m.h[k]; ++e) factors.push_back(NcPoly::generator(Generator("H", static_cast<int>(k))));
    if (factors.empty()) {
      out += NcPoly(Scalar(c));
      continue;
    }
    out += Scalar(c) * symmetrize(factors);
  }
  return out;
}

}  // namespace ncw::constraints
