#ifndef NCWORLDS_QUOTIENT_HPP
#define NCWORLDS_QUOTIENT_HPP

#include "ncworlds/ncpoly.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncw {

class StepLimitExceeded : public std::runtime_error {
public:
  StepLimitExceeded(std::size_t limit, std::string word)
      : std::runtime_error("reduction step limit " + std::to_string(limit) +
                           " exceeded while rewriting " + word),
        word_(std::move(word)) {}
  const std::string& word() const { return word_; }

private:
  std::string word_;
};

/// An oriented rule matching a fixed-length window of a word. `apply` returns
/// the replacement for the window, or nullopt when the rule does not match.
struct RewriteRule {
  std::string name;
  std::size_t width = 2;
  std::function<std::optional<NcPoly>(std::span<const Generator>)> apply;
};

/// Ordered list of rules defining a quotient of the free algebra.
/// Reduction rewrites the leftmost reducible window (rules tried in order at
/// each position) until no rule applies.
class RewriteSystem {
public:
  static constexpr std::size_t kDefaultMaxSteps = 1'000'000;

  RewriteSystem(std::string name, std::string termination_note, std::vector<RewriteRule> rules,
                bool function_symbols = false);

  const std::string& name() const { return name_; }
  const std::string& termination_note() const { return termination_note_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// True when generators other than Q^i, P_i are functions of the Q's.
  bool has_function_symbols() const { return function_symbols_; }

  std::size_t max_steps() const { return max_steps_; }
  RewriteSystem with_max_steps(std::size_t steps) const;
  RewriteSystem with_rule(RewriteRule rule) const;

  /// One rewrite at the leftmost match, or nullopt for a normal-form word.
  std::optional<NcPoly> rewrite_once(const Word& w) const;
  bool is_normal(const Word& w) const { return !rewrite_once(w); }

  /// Throws StepLimitExceeded naming the offending word.
  NcPoly reduce(const NcPoly& e) const;

private:
  std::string name_;
  std::string termination_note_;
  std::vector<RewriteRule> rules_;
  std::size_t max_steps_ = kDefaultMaxSteps;
  bool function_symbols_ = false;
};

/// Literal rule lhs → rhs.
RewriteRule literal_rule(Word lhs, NcPoly rhs);

namespace systems {

/// The free algebra: no rules.
RewriteSystem free_algebra();
/// Q^i, P_i with [Q^i,Q^j] = [P_i,P_j] = 0 and [Q^i,P_j] = δ_ij; every other
/// generator is free.
RewriteSystem flat();
/// As flat, and every other generator is a function symbol of the Q's:
/// functions commute with each other and the Q's, and [f, P_j] = f_{,j}.
RewriteSystem flat_with_functions();
/// A, B, C with BA → AB and BCA → ACB.
RewriteSystem abc_relations();
/// A, B, C pairwise commuting.
RewriteSystem abc_commuting();

/// Names accepted: free, flat, flat-fn, abc, abc-relations, abc-commuting.
/// Throws std::invalid_argument for anything else.
RewriteSystem by_name(std::string_view name);

}  // namespace systems

NcPoly reduce(const NcPoly& e, const RewriteSystem& sys);

// --- Flat-world calculus ------------------------------------------------------

Generator coordinate(int i);  // Q^i
Generator momentum(int i);    // P_i

bool is_coordinate(const Generator& g);
bool is_momentum(const Generator& g);

/// ∂_i F = [F, P_i], reduced.
NcPoly flat_partial_q(const NcPoly& f, int i, const RewriteSystem& sys);
/// ∂̂_i F = [Q^i, F], reduced.
NcPoly flat_partial_p(const NcPoly& f, int i, const RewriteSystem& sys);

/// Term-by-term differentiation of a normal-ordered polynomial treating the
/// normal-ordered words as commutative monomials. Function symbols pick up a
/// derivative index. Used as the classical reference for the commutator forms.
NcPoly formal_partial_q(const NcPoly& normal_form, int i, const RewriteSystem& sys);
NcPoly formal_partial_p(const NcPoly& normal_form, int i, const RewriteSystem& sys);

struct HamiltonResidual {
  int index;
  NcPoly position;  // [Q^i,H] - ∂H/∂P_i
  NcPoly momentum;  // [P_i,H] + ∂H/∂Q^i
  bool holds() const { return position.is_zero() && momentum.is_zero(); }
};

/// Residuals of Hamilton's equations for i = 1..dims.
std::vector<HamiltonResidual> hamilton_check(const NcPoly& h, int dims, const RewriteSystem& sys);

struct GaugePairResidual {
  int i;
  int j;
  /// ∇_i∇_j F read as composition ∇_i(∇_j F): [∇_i,∇_j]F - [R_ij, F].
  NcPoly composition_order;
  /// ∇_i∇_j F read as successive application F_{:i:j}: [∇_i,∇_j]F - [F, R_ij].
  NcPoly application_order;
  /// [G_i, G_j] - (∂_i A_j - ∂_j A_i + [A_i, A_j]).
  NcPoly curvature_formula;
  bool holds() const {
    return composition_order.is_zero() && application_order.is_zero() && curvature_formula.is_zero();
  }
};

/// R_ij = ∂_i A_j - ∂_j A_i + [A_i, A_j], reduced. Indices are 1-based.
NcPoly gauge_curvature(std::span<const NcPoly> potentials, int i, int j, const RewriteSystem& sys);

/// With G_i = P_i - A_i and ∇_i F = [F, G_i], checks every pair i < j.
std::vector<GaugePairResidual> gauge_curvature_check(std::span<const NcPoly> potentials,
                                                     const NcPoly& f, const RewriteSystem& sys);

/// [ψ, J/Δt] - iħ[ψ, H] with J = 1 + iħHΔt. Zero in the free algebra.
NcPoly schroedinger_residual(const NcPoly& hamiltonian, const NcPoly& psi,
                             const Scalar& hbar = Scalar::param("ħ"),
                             const Scalar& dt = Scalar::param("Δt"));

}  // namespace ncw

#endif
