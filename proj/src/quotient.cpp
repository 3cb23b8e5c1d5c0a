#include "ncworlds/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncw {

RewriteSystem::RewriteSystem(std::string name, std::string termination_note, std::vector<RewriteRule> rules,
                             bool function_symbols)
    : name_(std::move(name)),
      termination_note_(std::move(termination_note)),
      rules_(std::move(rules)),
      function_symbols_(function_symbols) {}

RewriteSystem RewriteSystem::with_max_steps(std::size_t steps) const {
  RewriteSystem out = *this;
  out.max_steps_ = steps;
  return out;
}

RewriteSystem RewriteSystem::with_rule(RewriteRule rule) const {
  RewriteSystem out = *this;
  out.rules_.push_back(std::move(rule));
  return out;
}

std::optional<NcPoly> RewriteSystem::rewrite_once(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& rule : rules_) {
      if (pos + rule.width > w.size()) continue;
      std::span<const Generator> window(w.data() + pos, rule.width);
      auto replacement = rule.apply(window);
      if (!replacement) continue;
      NcPoly prefix = NcPoly::word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos)));
      NcPoly suffix =
          NcPoly::word(Word(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.width), w.end()));
      return prefix * *replacement * suffix;
    }
  }
  return std::nullopt;
}

NcPoly RewriteSystem::reduce(const NcPoly& e) const {
  if (rules_.empty()) return e;
  // Pending terms are merged as they arrive so cancellations happen early.
  NcPoly::TermMap pending = e.terms();
  NcPoly result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    auto rewritten = rewrite_once(w);
    if (!rewritten) {
      result.add_term(w, node.mapped());
      continue;
    }
    if (++steps > max_steps_) throw StepLimitExceeded(max_steps_, word_to_string(w));
    for (const auto& [rw, rc] : rewritten->terms()) {
      Scalar c = rc * node.mapped();
      auto [it, inserted] = pending.try_emplace(rw, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

RewriteRule literal_rule(Word lhs, NcPoly rhs) {
  RewriteRule rule;
  rule.name = word_to_string(lhs) + " -> " + rhs.to_string();
  rule.width = lhs.size();
  rule.apply = [lhs = std::move(lhs), rhs = std::move(rhs)](std::span<const Generator> window)
      -> std::optional<NcPoly> {
    if (!std::equal(window.begin(), window.end(), lhs.begin(), lhs.end())) return std::nullopt;
    return rhs;
  };
  return rule;
}

NcPoly reduce(const NcPoly& e, const RewriteSystem& sys) { return sys.reduce(e); }

// --- flat world ---------------------------------------------------------------

Generator coordinate(int i) { return Generator::upper("Q", i); }
Generator momentum(int i) { return Generator::lower("P", i); }

bool is_coordinate(const Generator& g) {
  return g.name == "Q" && g.indices.size() == 1 && g.primes == 0 && g.derivs.empty();
}

bool is_momentum(const Generator& g) {
  return g.name == "P" && g.indices.size() == 1 && g.primes == 0 && g.derivs.empty();
}

namespace {

enum class FlatClass { Function, Coordinate, Momentum, Free };

FlatClass classify(const Generator& g, bool functions) {
  if (is_coordinate(g)) return FlatClass::Coordinate;
  if (is_momentum(g)) return FlatClass::Momentum;
  return functions ? FlatClass::Function : FlatClass::Free;
}

NcPoly swapped(std::span<const Generator> pair) { return NcPoly::word(Word{pair[1], pair[0]}); }

RewriteRule flat_rule(bool functions) {
  RewriteRule rule;
  rule.name = functions ? "flat-fn normal order" : "flat normal order";
  rule.width = 2;
  rule.apply = [functions](std::span<const Generator> pair) -> std::optional<NcPoly> {
    const Generator& a = pair[0];
    const Generator& b = pair[1];
    FlatClass ca = classify(a, functions);
    FlatClass cb = classify(b, functions);
    if (ca == FlatClass::Free || cb == FlatClass::Free) return std::nullopt;
    if (ca == cb) {
      if (b < a) return swapped(pair);
      return std::nullopt;
    }
    // Normal order: functions, then Q's, then P's.
    if (ca == FlatClass::Momentum && cb == FlatClass::Coordinate) {
      NcPoly out = swapped(pair);
      if (a.indices[0] == b.indices[0]) out -= NcPoly(1);
      return out;
    }
    if (ca == FlatClass::Coordinate && cb == FlatClass::Function) return swapped(pair);
    if (ca == FlatClass::Momentum && cb == FlatClass::Function) {
      NcPoly out = swapped(pair);
      out -= NcPoly::generator(b.derivative(a.indices[0]));
      return out;
    }
    return std::nullopt;
  };
  return rule;
}

Word abc_word(std::string_view letters) {
  Word w;
  for (char c : letters) w.emplace_back(std::string(1, c));
  return w;
}

}  // namespace

namespace systems {

RewriteSystem free_algebra() { return RewriteSystem("free", "no rules", {}); }

RewriteSystem flat() {
  return RewriteSystem("flat",
                       "each rule removes one inversion of the order Q < P (or between equal "
                       "families) or lowers the P-degree",
                       {flat_rule(false)});
}

RewriteSystem flat_with_functions() {
  return RewriteSystem("flat-fn",
                       "each rule removes one inversion of the order functions < Q < P or lowers "
                       "the P-degree",
                       {flat_rule(true)}, true);
}

RewriteSystem abc_relations() {
  return RewriteSystem("abc-relations",
                       "each rule lowers the inversion count for A < B < C (BA: 1 -> 0, BCA: 2 -> 1)",
                       {literal_rule(abc_word("BA"), NcPoly::word(abc_word("AB"))),
                        literal_rule(abc_word("BCA"), NcPoly::word(abc_word("ACB")))});
}

RewriteSystem abc_commuting() {
  return RewriteSystem("abc-commuting", "each rule removes one inversion of A < B < C",
                       {literal_rule(abc_word("BA"), NcPoly::word(abc_word("AB"))),
                        literal_rule(abc_word("CA"), NcPoly::word(abc_word("AC"))),
                        literal_rule(abc_word("CB"), NcPoly::word(abc_word("BC")))});
}

RewriteSystem by_name(std::string_view name) {
  if (name == "free") return free_algebra();
  if (name == "flat") return flat();
  if (name == "flat-fn") return flat_with_functions();
  if (name == "abc" || name == "abc-relations") return abc_relations();
  if (name == "abc-commuting") return abc_commuting();
  throw std::invalid_argument("unknown rewrite system '" + std::string(name) + "'");
}

}  // namespace systems

NcPoly flat_partial_q(const NcPoly& f, int i, const RewriteSystem& sys) {
  return sys.reduce(commutator(f, NcPoly::generator(momentum(i))));
}

NcPoly flat_partial_p(const NcPoly& f, int i, const RewriteSystem& sys) {
  return sys.reduce(commutator(NcPoly::generator(coordinate(i)), f));
}

NcPoly formal_partial_q(const NcPoly& normal_form, int i, const RewriteSystem& sys) {
  NcPoly out;
  for (const auto& [w, c] : normal_form.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Generator& g = w[k];
      if (is_coordinate(g)) {
        if (g.indices[0] != i) continue;
        Word rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        out.add_term(rest, c);
      } else if (!is_momentum(g) && sys.has_function_symbols()) {
        Word rest = w;
        rest[k] = g.derivative(i);
        out.add_term(rest, c);
      }
    }
  }
  return sys.reduce(out);
}

NcPoly formal_partial_p(const NcPoly& normal_form, int i, const RewriteSystem& sys) {
  NcPoly out;
  for (const auto& [w, c] : normal_form.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!is_momentum(w[k]) || w[k].indices[0] != i) continue;
      Word rest = w;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      out.add_term(rest, c);
    }
  }
  return sys.reduce(out);
}

std::vector<HamiltonResidual> hamilton_check(const NcPoly& h, int dims, const RewriteSystem& sys) {
  NcPoly normal = sys.reduce(h);
  std::vector<HamiltonResidual> out;
  for (int i = 1; i <= dims; ++i) {
    NcPoly q = NcPoly::generator(coordinate(i));
    NcPoly p = NcPoly::generator(momentum(i));
    NcPoly position = sys.reduce(commutator(q, h)) - formal_partial_p(normal, i, sys);
    NcPoly mom = sys.reduce(commutator(p, h)) + formal_partial_q(normal, i, sys);
    out.push_back({i, std::move(position), std::move(mom)});
  }
  return out;
}

NcPoly gauge_curvature(std::span<const NcPoly> potentials, int i, int j, const RewriteSystem& sys) {
  const NcPoly& ai = potentials[static_cast<std::size_t>(i - 1)];
  const NcPoly& aj = potentials[static_cast<std::size_t>(j - 1)];
  return sys.reduce(flat_partial_q(aj, i, sys) - flat_partial_q(ai, j, sys) + commutator(ai, aj));
}

std::vector<GaugePairResidual> gauge_curvature_check(std::span<const NcPoly> potentials, const NcPoly& f,
                                                     const RewriteSystem& sys) {
  const int n = static_cast<int>(potentials.size());
  std::vector<NcPoly> connection;
  for (int i = 1; i <= n; ++i)
    connection.push_back(NcPoly::generator(momentum(i)) - potentials[static_cast<std::size_t>(i - 1)]);
  auto nabla = [&](int i, const NcPoly& x) {
    return sys.reduce(commutator(x, connection[static_cast<std::size_t>(i - 1)]));
  };

  std::vector<GaugePairResidual> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      NcPoly r = gauge_curvature(potentials, i, j, sys);
      NcPoly ij = nabla(i, nabla(j, f));
      NcPoly ji = nabla(j, nabla(i, f));
      GaugePairResidual res{i, j, {}, {}, {}};
      res.composition_order = sys.reduce(ij - ji - commutator(r, f));
      res.application_order = sys.reduce(ji - ij - commutator(f, r));
      res.curvature_formula = sys.reduce(
          commutator(connection[static_cast<std::size_t>(i - 1)], connection[static_cast<std::size_t>(j - 1)]) -
          r);
      out.push_back(std::move(res));
    }
  }
  return out;
}

NcPoly schroedinger_residual(const NcPoly& hamiltonian, const NcPoly& psi, const Scalar& hbar, const Scalar& dt) {
  const Scalar i_hbar = Scalar::imaginary_unit() * hbar;
  NcPoly shift = NcPoly(1) + i_hbar * hamiltonian * dt;
  NcPoly scaled = shift * dt.inverse();
  return commutator(psi, scaled) - i_hbar * commutator(psi, hamiltonian);
}

}  // namespace ncw
