#include "ncworlds/suite.hpp"

#include "ncworlds/constraints.hpp"
#include "ncworlds/iterant.hpp"
#include "ncworlds/quotient.hpp"
#include "ncworlds/skewdiff.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ncw::suite {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"iterant",       "flat",          "gauge",         "schroedinger",
                                              "epsilon",       "em",            "constraints-1", "constraints-2",
                                              "constraints-3", "tower",         "bianchi"};
  return names;
}

NcPoly random_polynomial(std::mt19937_64& rng, const std::vector<Generator>& generators, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> length(0, degree);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  NcPoly out;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = length(rng);
    for (int k = 0; k < len; ++k) w.push_back(generators[pick(rng)]);
    out.add_term(w, Scalar(coeff(rng)));
  }
  return out;
}

namespace {

struct Outcome {
  bool passed = false;
  std::string residual = "0";
  std::string value;
  std::string note;
};

Outcome zero(const NcPoly& r) { return {r.is_zero(), r.to_string(), {}, {}}; }

Outcome all_of(const std::vector<NcPoly>& residuals) {
  for (const auto& r : residuals)
    if (!r.is_zero()) return {false, r.to_string(), {}, {}};
  return {true, "0", {}, {}};
}

class Builder {
public:
  Builder(std::string suite, const Options& options, std::uint64_t salt)
      : suite_(std::move(suite)), options_(options) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    rng.seed(seq);
  }

  void check(std::string id, std::string identity, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}, {}};
    }
    auto t1 = std::chrono::steady_clock::now();
    Check c;
    c.suite = suite_;
    c.id = std::move(id);
    c.identity = std::move(identity);
    c.passed = o.passed;
    c.residual = std::move(o.residual);
    c.value = std::move(o.value);
    c.note = std::move(o.note);
    c.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    checks.push_back(std::move(c));
  }

  const Options& options() const { return options_; }
  RewriteSystem world(const RewriteSystem& sys) const { return sys.with_max_steps(options_.max_steps); }

  std::mt19937_64 rng;
  std::vector<Check> checks;

private:
  std::string suite_;
  Options options_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return make_rational(num(rng), den(rng));
}

// --- iterant ------------------------------------------------------------------

Outcome iterant_zero(const iterant::Iterant& r) { return {r.is_zero(), r.to_string(), {}, {}}; }

Outcome matrix_equal(const iterant::Matrix& got, const iterant::Matrix& want) {
  if (got == want) return {true, "0", got.to_string(), {}};
  return {false, got.to_string() + " != " + want.to_string(), got.to_string(), {}};
}

iterant::Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  iterant::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(random_rational(rng));
  return m;
}

iterant::Iterant random_iterant(std::mt19937_64& rng, std::size_t n) {
  iterant::Iterant out(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& p : iterant::all_permutations(n)) {
    if (coin(rng) == 0) continue;
    iterant::Diagonal d(n);
    for (auto& x : d) x = Scalar(random_rational(rng));
    out += iterant::Iterant::term(d, p);
  }
  return out;
}

void iterant_suite(Builder& b) {
  using namespace iterant;
  const Iterant minus_one = Iterant::scalar(2, Scalar(-1));
  const Iterant one = Iterant::scalar(2, Scalar(1));
  auto p = [](const char* name) { return Scalar::param(name); };

  b.check("i-square-shift-form", "([1,-1]η)² = -1", [&] {
    Iterant i = pair(1, -1) * eta();
    return iterant_zero(i * i - minus_one);
  });
  b.check("i-square-epsilon-form", "(εη)² = -1", [&] { return iterant_zero(imaginary() * imaginary() - minus_one); });
  b.check("i-matrix", "εη = [-1,1]η ↦ ((0, -1), (1, 0))", [&] {
    return matrix_equal(imaginary().to_matrix(), Matrix::from_rows({{0, -1}, {1, 0}}));
  });
  b.check("i-shift-form-matrix", "[1,-1]η ↦ ((0, 1), (-1, 0))", [&] {
    Outcome o = matrix_equal((pair(1, -1) * eta()).to_matrix(), Matrix::from_rows({{0, 1}, {-1, 0}}));
    o.note = "[1,-1]η = -εη; both square to -1 and their images differ by sign";
    return o;
  });
  b.check("eta-square", "ηη = 1", [&] { return iterant_zero(eta() * eta() - one); });
  b.check("sigma-square", "σσ = 1", [&] { return iterant_zero(sigma() * sigma() - one); });
  b.check("epsilon-bar", "ε̄ = -ε", [&] { return iterant_zero(overbar(epsilon()) + epsilon()); });
  b.check("diagonal-product", "[a,b][c,d] = [ac,bd]", [&] {
    return iterant_zero(pair(p("a"), p("b")) * pair(p("c"), p("d")) - pair(p("a") * p("c"), p("b") * p("d")));
  });
  b.check("shift-rule", "η[x,y] = [y,x]η", [&] {
    return iterant_zero(eta() * pair(p("x"), p("y")) - pair(p("y"), p("x")) * eta());
  });
  b.check("matrix-image", "[a,d] + [b,c]η ↦ ((a, b), (c, d))", [&] {
    Iterant m = from_iterant_pair(pair(p("a"), p("d")), pair(p("b"), p("c")));
    return matrix_equal(m.to_matrix(), Matrix::from_rows({{p("a"), p("b")}, {p("c"), p("d")}}));
  });
  b.check("conjugate-determinant", "(A+Bη)(Ā-Bη) = AĀ - BB̄ = det", [&] {
    Iterant a = pair(p("a"), p("d"));
    Iterant bb = pair(p("b"), p("c"));
    Iterant lhs = (a + bb * eta()) * (overbar(a) - bb * eta());
    Iterant rhs = a * overbar(a) - bb * overbar(bb);
    Scalar det = from_iterant_pair(a, bb).to_matrix().determinant2();
    Iterant r = lhs - rhs;
    r += rhs - Iterant::scalar(2, det);
    Outcome o = iterant_zero(r);
    o.value = det.to_string();
    return o;
  });
  b.check("quaternion-relations", "i² = j² = k² = ijk = -1 with i = εη, j = √-1·ε̄, k = √-1·η", [&] {
    QuaternionTable t = quaternion_table();
    return Outcome{t.i2_j2_k2_ijk_minus_one, t.i2_j2_k2_ijk_minus_one ? "0" : "relation fails", {}, {}};
  });
  b.check("quaternion-table", "16 products of {1,i,j,k} close on ±{1,i,j,k}, cross-checked by 2×2 matrices", [&] {
    QuaternionTable t = quaternion_table();
    bool ok = t.all_resolved;
    std::string table;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        ok = ok && t.matrix_agrees[r][c] && t.residuals[r][c].is_zero();
        auto [sign, unit] = t.products[r][c];
        if (!table.empty()) table += " ";
        table += t.labels[r] + t.labels[c] + "=" + (sign < 0 ? "-" : "") +
                 (unit < 0 ? "?" : t.labels[static_cast<std::size_t>(unit)]);
      }
    }
    return Outcome{ok, ok ? "0" : "table mismatch", table, "handedness: jk = i"};
  });
  b.check("decompose-3x3-symbolic", "M = (1/2!) Σ_π Δ[M]_π [π] for M = ((a, b, c), (d, e, f), (g, h, k))", [&] {
    Matrix m = Matrix::from_rows(
        {{p("a"), p("b"), p("c")}, {p("d"), p("e"), p("f")}, {p("g"), p("h"), p("k")}});
    Decomposition d = matrix_decompose(m);
    const std::vector<std::pair<Permutation, std::vector<const char*>>> expected{
        {{0, 1, 2}, {"a", "e", "k"}}, {{1, 2, 0}, {"b", "f", "g"}}, {{2, 0, 1}, {"c", "d", "h"}},
        {{2, 1, 0}, {"c", "e", "g"}}, {{1, 0, 2}, {"b", "d", "k"}}, {{0, 2, 1}, {"a", "f", "h"}}};
    bool ok = d.factor == make_rational(1, 2) && d.terms.size() == 6;
    for (const auto& [perm, names] : expected) {
      auto it = std::find_if(d.terms.begin(), d.terms.end(),
                             [&](const DecompositionTerm& t) { return t.permutation == perm; });
      if (it == d.terms.end()) {
        ok = false;
        continue;
      }
      for (std::size_t i = 0; i < 3; ++i) ok = ok && it->diagonal[i] == p(names[i]);
    }
    Outcome o = matrix_equal(d.element.to_matrix(), m);
    o.passed = o.passed && ok;
    o.value = "factor " + d.factor.get_str() + ", " + std::to_string(d.terms.size()) + " terms";
    return o;
  });
  b.check("decompose-random", "to_matrix(decompose(M)) = M for 50 random rational M at n = 2, 3, 4", [&] {
    for (std::size_t n : {2u, 3u, 4u}) {
      for (int t = 0; t < 50; ++t) {
        Matrix m = random_matrix(b.rng, n);
        Matrix back = matrix_decompose(m).element.to_matrix();
        if (!(back == m)) return Outcome{false, back.to_string() + " != " + m.to_string(), {}, {}};
      }
    }
    return Outcome{true, "0", "150 matrices", {}};
  });
  b.check("matrix-homomorphism", "to_matrix(xy) = to_matrix(x)·to_matrix(y), random n = 2, 3", [&] {
    for (std::size_t n : {2u, 3u}) {
      for (int t = 0; t < 25; ++t) {
        Iterant x = random_iterant(b.rng, n);
        Iterant y = random_iterant(b.rng, n);
        if (!((x * y).to_matrix() == x.to_matrix() * y.to_matrix()))
          return Outcome{false, "product image differs for " + x.to_string() + " and " + y.to_string(), {}, {}};
      }
    }
    return Outcome{true, "0", {}, {}};
  });
  b.check("lorentz-invariance", "(t'-x')(t'+x') = (t-x)(t+x) for random rational k, t, x", [&] {
    for (int n = 0; n < 25; ++n) {
      Rational k = random_rational(b.rng);
      if (sgn(k) == 0) k = 1;
      Event e{Scalar(random_rational(b.rng)), Scalar(random_rational(b.rng))};
      Event f = lorentz_boost(Scalar(k), e);
      Scalar r = (f.t - f.x) * (f.t + f.x) - (e.t - e.x) * (e.t + e.x);
      if (!r.is_zero()) return Outcome{false, r.to_string(), {}, {}};
    }
    return Outcome{true, "0", {}, {}};
  });
  b.check("lorentz-velocity", "v = 3/5: (t, x) = (1, 0) ↦ (5/4, -3/4)", [&] {
    Event f = lorentz_boost_velocity(make_rational(3, 5), {Scalar(1), Scalar(0)});
    Scalar rt = f.t - Scalar::rational(5, 4);
    Scalar rx = f.x + Scalar::rational(3, 4);
    bool ok = rt.is_zero() && rx.is_zero();
    return Outcome{ok, ok ? "0" : rt.to_string() + ", " + rx.to_string(), "(" + f.t.to_string() + ", " + f.x.to_string() + ")",
                   {}};
  });
}

// --- flat ---------------------------------------------------------------------

void flat_suite(Builder& b) {
  const RewriteSystem flat = b.world(systems::flat());
  const RewriteSystem flat_fn = b.world(systems::flat_with_functions());
  b.check("heisenberg", "[Q^i, P_j] = δ_ij, [Q^i, Q^j] = [P_i, P_j] = 0 for i, j = 1..3", [&] {
    std::vector<NcPoly> residuals;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        NcPoly q = NcPoly::generator(coordinate(i));
        NcPoly pj = NcPoly::generator(momentum(j));
        residuals.push_back(flat.reduce(commutator(q, pj)) - NcPoly(i == j ? 1 : 0));
        residuals.push_back(flat.reduce(commutator(q, NcPoly::generator(coordinate(j)))));
        residuals.push_back(flat.reduce(commutator(NcPoly::generator(momentum(i)), pj)));
      }
    }
    return all_of(residuals);
  });
  const std::vector<Generator> phase{coordinate(1), coordinate(2), momentum(1), momentum(2)};
  b.check("hamilton", "dQ^i/dt = [Q^i,H] = ∂H/∂P_i, dP_i/dt = [P_i,H] = -∂H/∂Q^i for 20 random H of degree ≤ 3", [&] {
    std::vector<NcPoly> residuals;
    for (int t = 0; t < 20; ++t) {
      NcPoly h = random_polynomial(b.rng, phase, 3, 6);
      for (const auto& r : hamilton_check(h, 2, flat)) {
        residuals.push_back(r.position);
        residuals.push_back(r.momentum);
      }
    }
    return all_of(residuals);
  });
  b.check("hamilton-potential", "Hamilton's equations with a function symbol V(Q) in H, 20 random H", [&] {
    std::vector<Generator> gens = phase;
    gens.emplace_back("V");
    std::vector<NcPoly> residuals;
    for (int t = 0; t < 20; ++t) {
      NcPoly h = random_polynomial(b.rng, gens, 3, 6);
      for (const auto& r : hamilton_check(h, 2, flat_fn)) {
        residuals.push_back(r.position);
        residuals.push_back(r.momentum);
      }
    }
    return all_of(residuals);
  });
  b.check("reduce-idempotent", "reduce(reduce(F)) = reduce(F) for 20 random F", [&] {
    std::vector<NcPoly> residuals;
    for (int t = 0; t < 20; ++t) {
      NcPoly f = random_polynomial(b.rng, phase, 4, 6);
      NcPoly once = flat.reduce(f);
      residuals.push_back(flat.reduce(once) - once);
    }
    return all_of(residuals);
  });
}

// --- gauge --------------------------------------------------------------------

const char* kGaugeNote =
    "with ∇_i F = [F, G_i], G_i = P_i - A_i: successive application F_{:i:j} gives [∇_i,∇_j]F = [F, R_ij]; "
    "composition ∇_i(∇_j F) gives [R_ij, F]";

void gauge_suite(Builder& b) {
  const RewriteSystem flat = b.world(systems::flat());
  const RewriteSystem flat_fn = b.world(systems::flat_with_functions());
  std::vector<NcPoly> free_potentials;
  for (int i = 1; i <= 3; ++i) free_potentials.push_back(NcPoly::generator(Generator::lower("A", i)));
  const NcPoly f = gen("F");
  auto free_pairs = gauge_curvature_check(free_potentials, f, flat);

  b.check("curvature-application", "F_{:i:j} - F_{:j:i} = [F, R_ij], R_ij = ∂_iA_j - ∂_jA_i + [A_i,A_j]", [&] {
    std::vector<NcPoly> r;
    for (const auto& p : free_pairs) r.push_back(p.application_order);
    Outcome o = all_of(r);
    o.note = kGaugeNote;
    return o;
  });
  b.check("curvature-composition", "∇_i(∇_j F) - ∇_j(∇_i F) = [R_ij, F]", [&] {
    std::vector<NcPoly> r;
    for (const auto& p : free_pairs) r.push_back(p.composition_order);
    Outcome o = all_of(r);
    o.note = kGaugeNote;
    return o;
  });
  b.check("curvature-formula", "[G_i, G_j] = ∂_iA_j - ∂_jA_i + [A_i, A_j]", [&] {
    std::vector<NcPoly> r;
    for (const auto& p : free_pairs) r.push_back(p.curvature_formula);
    Outcome o = all_of(r);
    o.value = "R_12 = " + gauge_curvature(free_potentials, 1, 2, flat).to_string();
    return o;
  });
  b.check("curvature-function-potentials", "same identities with A_i(Q) and F = f(Q)P_1 + g(Q) in the flat-fn world", [&] {
    std::vector<NcPoly> potentials;
    for (int i = 1; i <= 3; ++i) potentials.push_back(NcPoly::generator(Generator::lower("a", i)));
    NcPoly field = gen("f") * NcPoly::generator(momentum(1)) + gen("g");
    std::vector<NcPoly> r;
    for (const auto& p : gauge_curvature_check(potentials, field, flat_fn)) {
      r.push_back(p.application_order);
      r.push_back(p.composition_order);
      r.push_back(p.curvature_formula);
    }
    Outcome o = all_of(r);
    o.value = "R_12 = " + gauge_curvature(potentials, 1, 2, flat_fn).to_string();
    return o;
  });
}

// --- schroedinger and the discrete commutator law -------------------------------

Outcome skew_zero(const skew::SkewElement& r) { return {r.is_zero(), r.to_string(), {}, {}}; }

skew::Sequence random_sequence(std::mt19937_64& rng, std::size_t length, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<long> v(length);
  for (auto& x : v) x = dist(rng);
  return skew::Sequence::from_ints(v);
}

void schroedinger_suite(Builder& b) {
  b.check("schroedinger", "[ψ, J/Δt] = iħ[ψ, H] with J = 1 + iħHΔt", [&] {
    std::vector<NcPoly> r{schroedinger_residual(gen("H"), gen("ψ"))};
    const std::vector<Generator> gens{Generator("H"), Generator("ψ"), Generator("X")};
    for (int t = 0; t < 10; ++t)
      r.push_back(schroedinger_residual(random_polynomial(b.rng, gens, 3, 5), random_polynomial(b.rng, gens, 3, 5)));
    return all_of(r);
  });
  b.check("wick-heisenberg", "(Δx)²/Δt = ħ/m and Δt → iΔt give [p, q] = iħ", [&] {
    auto w = skew::wick_heisenberg();
    Scalar hbar = Scalar::param("ħ");
    Scalar before = w.before_rotation - hbar * Scalar::param("m", -1);
    Scalar r = w.pq - Scalar::imaginary_unit() * hbar;
    bool ok = before.is_zero() && r.is_zero() && skew::wick_heisenberg(Scalar(0)).pq.is_zero();
    return Outcome{ok, ok ? "0" : r.to_string(), "[q, p/m] = " + w.before_rotation.to_string() + " → " +
                                                      w.after_rotation.to_string() + ", [p, q] = " + w.pq.to_string(),
                   {}};
  });
  b.check("commutator-law", "[x, ∇x] = J(Δx)²/Δt on random sequences, numeric and symbolic Δt", [&] {
    for (int t = 0; t < 20; ++t) {
      skew::Sequence x = random_sequence(b.rng, 10, 5);
      Rational dt = random_rational(b.rng);
      if (sgn(dt) <= 0) dt = make_rational(1, 3);
      for (const Scalar& step : {Scalar(dt), Scalar::param("Δt")}) {
        skew::SkewElement r = skew::position_velocity_commutator(x, step) - skew::diffusion_law(x, step);
        if (!r.is_zero()) return skew_zero(r);
      }
    }
    return Outcome{true, "0", {}, {}};
  });
  b.check("commutator-constancy", "[x, ∇x] constant ⇔ (Δx)²/Δt constant", [&] {
    using skew::Sequence;
    std::vector<std::pair<Sequence, bool>> walks{
        {Sequence::from_ints({0, 1, 0, 1, 0, 1, 0, 1}), true},
        {Sequence::from_ints({0, 3, 6, 9, 12, 15}), true},
        {Sequence::from_ints({0, 2, 0, -2, 0, 2, 4}), true},
        {Sequence::from_ints({0, 1, 3, 4, 6}), false},
        {Sequence::from_ints({5, 5, 6, 6, 7}), false},
    };
    for (int t = 0; t < 20; ++t) walks.push_back({random_sequence(b.rng, 8, 2), false});
    for (auto& [x, expected] : walks) {
      Sequence d = skew::difference(x);
      Sequence sq = d * d;
      bool law_constant = std::all_of(sq.values().begin(), sq.values().end(),
                                      [&](const Scalar& v) { return v == sq.values().front(); });
      if (skew::commutator_is_constant(x) != law_constant)
        return Outcome{false, "disagreement on " + x.to_string(), {}, {}};
    }
    Outcome o{true, "0", {}, {}};
    o.value = "0,1,0,1,… ↦ " + skew::position_velocity_commutator(Sequence::from_ints({0, 1, 0, 1})).to_string() +
              "; 3t ↦ " + skew::position_velocity_commutator(Sequence::from_ints({0, 3, 6, 9})).to_string();
    return o;
  });
  b.check("diffusion-constant", "steps ±s with s² = kτ and Δt = τ give [x, ∇x] = J k", [&] {
    skew::SkewElement c = skew::diffusion_walk({1, -1, -1, 1, 1, 1, -1, 1});
    bool ok = c.terms().size() == 1 && c.coefficient(1) != nullptr;
    if (ok)
      for (const auto& v : c.coefficient(1)->values()) ok = ok && v == Scalar::param("k");
    return Outcome{ok, ok ? "0" : c.to_string(), c.to_string(), {}};
  });
  b.check("nabla-leibniz", "∇(fg) = ∇(f)g + f∇(g) and D(fg) = D(f)g + f'D(g) on random sequences", [&] {
    for (int t = 0; t < 20; ++t) {
      skew::SkewElement f(random_sequence(b.rng, 10, 4));
      skew::SkewElement g(random_sequence(b.rng, 10, 4));
      skew::SkewElement r = skew::nabla(f * g) - skew::nabla(f) * g - f * skew::nabla(g);
      if (!r.is_zero()) return skew_zero(r);
      skew::Sequence fs = *f.coefficient(0);
      skew::Sequence gs = *g.coefficient(0);
      skew::Sequence raw = skew::raw_derivative(fs * gs) - skew::raw_derivative(fs) * gs -
                           fs.shifted(1) * skew::raw_derivative(gs);
      if (!raw.all_zero()) return Outcome{false, raw.to_string(), {}, {}};
    }
    return Outcome{true, "0", {}, {}};
  });
}

// --- epsilon ------------------------------------------------------------------

void epsilon_suite(Builder& b) {
  b.check("epsilon-identity", "Σ_i ε_abi ε_cdi = -δ_ad δ_bc + δ_ac δ_bd for all 81 (a,b,c,d)", [&] {
    auto rep = skew::epsilon_identity_check();
    return Outcome{rep.holds(), rep.holds() ? "0" : std::to_string(rep.failures) + " tuples fail",
                   std::to_string(rep.tuples.size()) + " tuples", {}};
  });
  b.check("epsilon-samples", "(1,2,1,2) ↦ 1, (1,2,2,1) ↦ -1, a = b ↦ 0", [&] {
    auto rep = skew::epsilon_identity_check();
    auto lhs = [&](int a, int bb, int c, int d) {
      for (const auto& t : rep.tuples)
        if (t.a == a && t.b == bb && t.c == c && t.d == d) return t.lhs;
      return 99;
    };
    bool ok = lhs(1, 2, 1, 2) == 1 && lhs(1, 2, 2, 1) == -1 && lhs(2, 2, 1, 3) == 0;
    return Outcome{ok, ok ? "0" : "sample mismatch", {}, {}};
  });
  b.check("bac-cab", "A × (B × C) = (A•C)B - (A•B)C for commuting sequence vectors", [&] {
    for (int t = 0; t < 10; ++t) {
      skew::Vec3 a, bb, c;
      for (int i = 0; i < 3; ++i) {
        a[i] = skew::SkewElement(random_sequence(b.rng, 6, 4));
        bb[i] = skew::SkewElement(random_sequence(b.rng, 6, 4));
        c[i] = skew::SkewElement(random_sequence(b.rng, 6, 4));
      }
      skew::Vec3 lhs = em::cross(a, em::cross(bb, c));
      skew::SkewElement ac = em::dot(a, c);
      skew::SkewElement ab = em::dot(a, bb);
      for (int k = 0; k < 3; ++k) {
        skew::SkewElement r = lhs[k] - (ac * bb[k] - ab * c[k]);
        if (!r.is_zero()) return skew_zero(r);
      }
    }
    return Outcome{true, "0", {}, {}};
  });
}

// --- em -----------------------------------------------------------------------

std::string vec_text(const em::Vec3<NcPoly>& v) {
  return "(" + v[0].to_string() + "; " + v[1].to_string() + "; " + v[2].to_string() + ")";
}

void em_suite(Builder& b) {
  const Options& o = b.options();
  const skew::SimulationSummary sim = skew::em_simulation(o.seed, o.trials, o.length, o.range);
  const std::string sample = std::to_string(sim.trials) + " trials, length " + std::to_string(sim.length) +
                             ", entries in [" + std::to_string(-sim.range) + ", " + std::to_string(sim.range) + "]";
  auto equation = [&](std::size_t eq) {
    bool ok = sim.failures[eq] == 0 && sim.window_errors == 0 && sim.trials > 0;
    std::string residual = ok ? "0" : sim.first_nonzero_residual;
    if (sim.window_errors > 0) residual = std::to_string(sim.window_errors) + " trials exhausted their window";
    return Outcome{ok, residual, sample, {}};
  };
  b.check("lorentz-force", "Ẍ = E + Ẋ × B", [&] { return equation(0); });
  b.check("no-monopoles", "∇ • B = 0", [&] { return equation(1); });
  b.check("faraday", "∂_t B + ∇ × E = B × B", [&] { return equation(2); });
  b.check("ampere", "∂_t E - ∇ × B = (∂_t² - ∇²)Ẋ", [&] { return equation(3); });
  b.check("b-cross-b-nonzero", "B × B ≠ 0 in at least 90% of trials", [&] {
    bool ok = sim.trials > 0 && sim.b_cross_b_nonzero * 10 >= sim.trials * 9;
    return Outcome{ok, ok ? "0" : "too few nonzero", std::to_string(sim.b_cross_b_nonzero) + "/" + std::to_string(sim.trials),
                   {}};
  });
  b.check("closed-forms", "B = J²ΔX' × ΔX, E = J²Δ²X - J³ΔX'' × (ΔX' × ΔX)", [&] {
    bool ok = sim.closed_form_failures == 0 && sim.window_errors == 0;
    return Outcome{ok, ok ? "0" : std::to_string(sim.closed_form_failures) + " trials differ", sample, {}};
  });
  b.check("linear-motion", "X linear in t: E = B = 0 and all residuals vanish", [&] {
    skew::SeqVec3 x{skew::Sequence::from_ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}),
                    skew::Sequence::from_ints({0, -2, -4, -6, -8, -10, -12, -14, -16, -18}),
                    skew::Sequence::from_ints({5, 5, 5, 5, 5, 5, 5, 5, 5, 5})};
    auto r = skew::em_trial(x);
    bool ok = r.residuals.holds() && em::is_zero(r.residuals.fields.e) && em::is_zero(r.residuals.fields.b);
    return Outcome{ok, ok ? "0" : "nonzero field", {}, {}};
  });
  b.check("free-algebra", "all four equations in the free algebra on Ẋ_1, Ẋ_2, Ẋ_3", [&] {
    auto r = skew::symbolic_em_check();
    if (!r.lorentz_holds()) return Outcome{false, vec_text(r.lorentz), {}, {}};
    if (!r.divergence_holds()) return Outcome{false, r.divergence.to_string(), {}, {}};
    if (!r.faraday_holds()) return Outcome{false, vec_text(r.faraday), {}, {}};
    if (!r.ampere_holds()) return Outcome{false, vec_text(r.ampere), {}, {}};
    return Outcome{true, "0", {}, {}};
  });
  b.check("modified-leibniz", "∂_t(FG) = ∂_t(F)G + F∂_t(G) + Σ_i ∂_i(F)∂_i(G)", [&] {
    for (std::uint64_t t = 0; t < 10; ++t) {
      skew::SeqVec3 x = skew::random_triple(o.seed, 1000 + t, o.length, o.range);
      auto c = skew::calculus(x);
      skew::SkewElement f(random_sequence(b.rng, o.length, o.range));
      skew::SkewElement g(random_sequence(b.rng, o.length, o.range));
      for (const auto& [ff, gg] : {std::pair{f, g}, std::pair{c.xdot[0], c.xdot[1]},
                                   std::pair{skew::SkewElement(x[0]), c.xdot[2]}}) {
        skew::SkewElement r = em::modified_leibniz_residual(c, ff, gg);
        if (!r.is_zero()) return skew_zero(r);
      }
    }
    auto sc = skew::symbolic_calculus();
    NcPoly r = em::modified_leibniz_residual(sc, gen("F"), gen("G"));
    return zero(r);
  });
  b.check("plain-leibniz-defect", "∂_t(FG) ≠ ∂_t(F)G + F∂_t(G) in general", [&] {
    auto sc = skew::symbolic_calculus();
    NcPoly f = gen("F");
    NcPoly g = gen("G");
    NcPoly defect = sc.partial_t(f * g) - sc.partial_t(f) * g - f * sc.partial_t(g);
    return Outcome{!defect.is_zero(), "0", defect.to_string(), {}};
  });
  b.check("scalar-derivations", "∂_i F = Ḟ Δ_i and ∂_t F = J[1 - JΔ'•Δ]ΔF for a commuting scalar series F", [&] {
    for (std::uint64_t t = 0; t < 10; ++t) {
      skew::SeqVec3 x = skew::random_triple(o.seed, 2000 + t, o.length, o.range);
      auto forms = skew::scalar_derivation_forms(x, random_sequence(b.rng, o.length, o.range));
      if (!forms.holds()) return Outcome{false, forms.time_residual.to_string(), {}, {}};
    }
    return Outcome{true, "0", {}, "holds in the commuting-scalar model"};
  });
}

// --- constraints ----------------------------------------------------------------

void constraints1_suite(Builder& b) {
  using namespace constraints;
  b.check("first-constraint-n1", "[θ, H] = {H^i Θ_i} for H = (1/4)(g_ij P_iP_j + P_iP_j g_ij), n = 1", [&] {
    Outcome o = zero(first_constraint_quadratic_check(1));
    const RewriteSystem sys = systems::flat_with_functions();
    o.value = "[θ, H] = " + sys.reduce(commutator(gen("θ"), quadratic_hamiltonian(1))).to_string();
    return o;
  });
  b.check("first-constraint-n2", "[θ, H] = {H^i Θ_i}, n = 2 with g_12 = g_21", [&] {
    return zero(first_constraint_quadratic_check(2));
  });
  b.check("first-constraint-constant", "θ constant: both sides vanish", [&] {
    return zero(first_constraint_quadratic_check(2, NcPoly(1)));
  });
}

void constraints2_suite(Builder& b) {
  using namespace constraints;
  const NcPoly theta = gen("Θ");
  const NcPoly h = gen("H");
  b.check("second-constraint", "{ΘH²} - {{ΘH}H} = (1/12)[[Θ,H],H]", [&] {
    return zero(second_constraint_residual(theta, h));
  });
  b.check("second-constraint-requirement", "ΘH² + H²Θ - 2HΘH = [[Θ,H],H]", [&] {
    return zero(second_constraint_requirement_residual(theta, h));
  });
  b.check("second-constraint-random", "the same identity for 10 random polynomial Θ, H", [&] {
    const std::vector<Generator> gens{Generator("X"), Generator("Y"), Generator("Z")};
    std::vector<NcPoly> r;
    for (int t = 0; t < 10; ++t)
      r.push_back(second_constraint_residual(random_polynomial(b.rng, gens, 2, 4), random_polynomial(b.rng, gens, 2, 4)));
    return all_of(r);
  });
  const RewriteSystem abc = b.world(systems::abc_relations());
  b.check("abc-intermediate", "{ABC} - {A{BC}} = (1/12)(ABC - 2ACB + CAB) under AB = BA, ACB = BCA", [&] {
    auto id = symmetrizer_commutator_identity(abc);
    Outcome o = zero(id.intermediate);
    o.value = id.difference.to_string();
    return o;
  });
  b.check("abc-identity", "{ABC} - {A{BC}} = (1/12)[A,[B,C]] under AB = BA, ACB = BCA", [&] {
    return zero(symmetrizer_commutator_identity(abc).residual);
  });
  b.check("abc-commuting", "pairwise commuting A, B, C: both sides vanish", [&] {
    auto id = symmetrizer_commutator_identity(b.world(systems::abc_commuting()));
    return all_of({id.difference, id.residual});
  });
  b.check("curvature-form-pairs", "[[Θ_ij,H^j],H^i] = [[Θ_ij,H^i],H^j] + [[H^i,H^j],Θ_ij] for n ≤ 3", [&] {
    std::vector<NcPoly> r;
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : curvature_form_check(n).pairs) r.push_back(p.residual);
    return all_of(r);
  });
  b.check("curvature-form-sum", "Σ_ij [[H^i,H^j],Θ_ij] with Θ_ij = Θ_ji, n = 2, 3", [&] {
    std::vector<NcPoly> r;
    for (int n = 2; n <= 3; ++n) r.push_back(curvature_form_check(n).summed_curvature);
    Outcome o = all_of(r);
    o.note = "the summed form vanishes identically by antisymmetry of [H^i,H^j]; per-index vanishing is a separate condition";
    return o;
  });
}

void constraints3_suite(Builder& b) {
  using namespace constraints;
  const auto t = third_constraint_check(gen("Θ"), gen("H"), NcPoly::generator(Generator("H", 1)),
                                        NcPoly::generator(Generator("H", 2)));
  b.check("third-commutator-expansion", "[H²,[H,Θ]] = H³Θ - H²ΘH - HΘH² + ΘH³", [&] {
    return zero(t.residual_commutator);
  });
  b.check("third-rhs-expansion", "[Ḣ,[H,Θ]] - 2[H,[Ḣ,Θ]] = (ḢHΘ + ḢΘH + HΘḢ + ΘHḢ) - 2(HḢΘ + ΘḢH)", [&] {
    return zero(t.residual_expansion);
  });
  b.check("third-constraint-ratio", "{Θ⃛} - {Θ̈}^• = c([H²,[H,Θ]] - [Ḣ,[H,Θ]] + 2[H,[Ḣ,Θ]])", [&] {
    Outcome o = zero(t.ratio_residual);
    o.passed = t.holds();
    o.value = t.ratio ? "c = " + t.ratio->to_string() : "no ratio";
    return o;
  });
}

// --- tower --------------------------------------------------------------------

constraints::CPoly displayed_level(int n) {
  using constraints::CMonomial;
  using constraints::CPoly;
  auto term = [](long c, int theta, std::vector<int> h) { return CPoly::monomial(CMonomial::make(theta, h), c); };
  switch (n) {
    case 1:
      return term(1, 1, {1});
    case 2:
      return term(1, 1, {0, 1}) + term(1, 1, {2});
    case 3:
      return term(1, 1, {0, 0, 1}) + term(3, 1, {1, 1}) + term(1, 1, {3});
    case 4:
      return term(1, 1, {4}) + term(6, 1, {2, 1}) + term(3, 1, {0, 2}) + term(4, 1, {1, 0, 1}) +
             term(1, 1, {0, 0, 0, 1});
    case 5:
      return term(1, 1, {5}) + term(10, 1, {3, 1}) + term(15, 1, {1, 2}) + term(10, 1, {2, 0, 1}) +
             term(10, 1, {0, 1, 1}) + term(5, 1, {1, 0, 0, 1}) + term(1, 1, {0, 0, 0, 0, 1});
    default:
      return {};
  }
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].get_str();
  }
  return out;
}

void tower_suite(Builder& b) {
  using namespace constraints;
  const int levels = std::max(b.options().levels, 8);
  const auto tower = derivative_tower(levels);
  b.check("tower-levels-1-5", "θ^(1..5) from θ' = hθ match the displayed expansions term for term", [&] {
    for (int n = 1; n <= 5; ++n) {
      const CPoly& got = tower[static_cast<std::size_t>(n - 1)].polynomial;
      if (!(got == displayed_level(n)))
        return Outcome{false, "level " + std::to_string(n) + ": " + got.to_string(), {}, {}};
    }
    return Outcome{true, "0", "θ^(5) = " + tower[4].polynomial.to_string(), {}};
  });
  b.check("h-prime-series", "coefficient of h^(n-2)θh' is C(n,2): 1, 3, 6, 10, 15, 21 for n = 2..7", [&] {
    auto s = h_prime_series(tower);
    std::vector<Rational> want{1, 3, 6, 10, 15, 21};
    bool ok = s.size() >= want.size() && std::equal(want.begin(), want.end(), s.begin());
    return Outcome{ok, ok ? "0" : "series differs", join_rationals(s), {}};
  });
  b.check("h-prime-squared-series", "coefficient of h^(n-4)θh'² for n = 4.." + std::to_string(levels) +
                                        "; fourth differences constant; levels 4, 5 give 3, 15", [&] {
    auto s = h_prime_squared_series(tower);
    auto d4 = forward_difference(s, 4);
    bool constant = !d4.empty() && std::all_of(d4.begin(), d4.end(), [&](const Rational& x) { return x == d4[0]; });
    bool anchors = s.size() >= 2 && s[0] == 3 && s[1] == 15;
    bool ok = constant && anchors;
    return Outcome{ok, ok ? "0" : "series check failed", join_rationals(s) + "; Δ⁴ = " + join_rationals(d4),
                   "the displayed series starts 1, 3, 15, …; the computed series starts at level 4 with 3, so "
                   "the leading 1 has no counterpart in the tower"};
  });
  b.check("operator-form-level-2", "symmetrized θ^(2) = {ΘH²} + {ΘḢ}", [&] {
    NcPoly theta = gen("Θ");
    NcPoly h = gen("H");
    NcPoly hdot = NcPoly::generator(Generator("H", 1));
    return zero(symmetrized_operator(tower[1].polynomial) - symmetrize({theta, h, h}) - symmetrize({theta, hdot}));
  });
}

// --- bianchi ------------------------------------------------------------------

void bianchi_suite(Builder& b) {
  b.check("bianchi", "R_ab:c + R_ca:b + R_bc:a = 0 with R_ab = [N_a,N_b], X_:c = [X, N_c], 25 random triples", [&] {
    const std::vector<Generator> gens{Generator("X"), Generator("Y"), Generator("Z")};
    std::vector<NcPoly> r;
    for (int t = 0; t < 25; ++t) {
      NcPoly na = random_polynomial(b.rng, gens, 2, 4);
      NcPoly nb = random_polynomial(b.rng, gens, 2, 4);
      NcPoly nc = random_polynomial(b.rng, gens, 2, 4);
      r.push_back(commutator(commutator(na, nb), nc) + commutator(commutator(nc, na), nb) +
                  commutator(commutator(nb, nc), na));
    }
    return all_of(r);
  });
}

void run_named(const std::string& name, Builder& b) {
  if (name == "iterant") iterant_suite(b);
  else if (name == "flat") flat_suite(b);
  else if (name == "gauge") gauge_suite(b);
  else if (name == "schroedinger") schroedinger_suite(b);
  else if (name == "epsilon") epsilon_suite(b);
  else if (name == "em") em_suite(b);
  else if (name == "constraints-1") constraints1_suite(b);
  else if (name == "constraints-2") constraints2_suite(b);
  else if (name == "constraints-3") constraints3_suite(b);
  else if (name == "tower") tower_suite(b);
  else if (name == "bianchi") bianchi_suite(b);
  else throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

Report run_suite(const std::string& name, const Options& options) {
  Report report;
  report.suite = name;
  report.seed = options.seed;
  const auto& names = suite_names();
  std::vector<std::string> selected;
  if (name == "all") selected = names;
  else if (std::find(names.begin(), names.end(), name) != names.end()) selected = {name};
  else throw std::invalid_argument("unknown suite '" + name + "'");
  for (const auto& s : selected) {
    auto salt = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), s) - names.begin());
    Builder b(s, options, salt);
    run_named(s, b);
    for (auto& c : b.checks) report.checks.push_back(std::move(c));
  }
  return report;
}

std::string emit_text(const Report& report) {
  std::ostringstream os;
  std::string current;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.suite != current) {
      current = c.suite;
      os << "suite " << current << "\n";
    }
    os << "  " << (c.passed ? "✓" : "✗") << " " << c.id << "  " << c.identity << "\n";
    if (!c.value.empty()) os << "      value: " << c.value << "\n";
    if (!c.passed) os << "      residual: " << c.residual << "\n";
    if (!c.note.empty()) os << "      note: " << c.note << "\n";
    if (c.passed) ++passed;
  }
  os << (report.passed() ? "PASS" : "FAIL") << " " << passed << "/" << report.checks.size() << " (seed "
     << report.seed << ")\n";
  return os.str();
}

std::string emit_json(const Report& report, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["status"] = report.passed() ? "pass" : "fail";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json o;
    o["suite"] = c.suite;
    o["id"] = c.id;
    o["identity"] = c.identity;
    o["status"] = c.passed ? "pass" : "fail";
    o["residual"] = c.residual;
    if (!c.value.empty()) o["value"] = c.value;
    if (!c.note.empty()) o["note"] = c.note;
    if (timing) o["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

}  // namespace ncw::suite
