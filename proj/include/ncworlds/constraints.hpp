#ifndef NCWORLDS_CONSTRAINTS_HPP
#define NCWORLDS_CONSTRAINTS_HPP

#include "ncworlds/ncpoly.hpp"
#include "ncworlds/quotient.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncw::constraints {

/// {X_1⋯X_n} = (1/n!) Σ_σ X_σ1⋯X_σn. Equal factors are grouped so only
/// distinct orderings are expanded. Throws std::invalid_argument when empty.
NcPoly symmetrize(std::span<const NcPoly> factors);
NcPoly symmetrize(std::initializer_list<NcPoly> factors);

/// {ΘH²} - {{ΘH}H} - (1/12)[[Θ,H],H]
NcPoly second_constraint_residual(const NcPoly& theta, const NcPoly& h);
/// ΘH² + H²Θ - 2HΘH - [[Θ,H],H]
NcPoly second_constraint_requirement_residual(const NcPoly& theta, const NcPoly& h);

struct AbcIdentity {
  NcPoly difference;    // {ABC} - {A{BC}}, reduced
  NcPoly intermediate;  // difference - (1/12)(ABC - 2ACB + CAB), reduced
  NcPoly residual;      // difference - (1/12)[A,[B,C]], reduced
  bool holds() const { return intermediate.is_zero() && residual.is_zero(); }
};

/// Evaluates the symmetrizer identity for generators A, B, C under `sys`
/// (abc-relations by default).
AbcIdentity symmetrizer_commutator_identity(const RewriteSystem& sys = systems::abc_relations());

struct ThirdConstraint {
  NcPoly residual_commutator;   // [H²,[H,Θ]] - (H³Θ - H²ΘH - HΘH² + ΘH³)
  NcPoly residual_expansion;    // ([Ḣ,[H,Θ]] - 2[H,[Ḣ,Θ]]) - displayed expansion
  NcPoly difference;            // {Θ⃛} - {Θ̈}^•
  NcPoly commutator_equation;   // [H²,[H,Θ]] - [Ḣ,[H,Θ]] + 2[H,[Ḣ,Θ]]
  std::optional<Scalar> ratio;  // c with difference = c · commutator_equation
  NcPoly ratio_residual;        // difference - c · commutator_equation
  bool holds() const {
    return residual_commutator.is_zero() && residual_expansion.is_zero() && ratio && !ratio->is_zero() &&
           ratio_residual.is_zero();
  }
};

/// Ḣ and Ḧ are independent generators.
ThirdConstraint third_constraint_check(const NcPoly& theta, const NcPoly& h, const NcPoly& hdot,
                                       const NcPoly& hddot);

struct CurvaturePair {
  int i, j;
  NcPoly residual;  // [[Θ_ij,H^j],H^i] - [[Θ_ij,H^i],H^j] - [[H^i,H^j],Θ_ij]
};

struct CurvatureForm {
  std::vector<CurvaturePair> pairs;  // all (i,j) with 1 ≤ i,j ≤ n
  NcPoly summed_curvature;           // Σ_ij [[H^i,H^j],Θ_ij]
  NcPoly summed_constraint;          // Σ_ij [[Θ_ij,H^j],H^i]
  bool pairs_hold() const;
};

/// Generators H^1..H^n and Θ_ij = Θ_ji (stored with sorted indices).
CurvatureForm curvature_form_check(int n);

/// Θ_{ij} with sorted indices.
Generator symmetric_theta(int i, int j);
/// g_{ij} with sorted indices.
Generator metric(int i, int j);

/// H = (1/4) Σ_ij (g_ij P_i P_j + P_i P_j g_ij)
NcPoly quadratic_hamiltonian(int n);

/// [θ, H] - Σ_i (H^iΘ_i + Θ_iH^i)/2 in the flat-fn world with H^i = [Q^i,H]
/// and Θ_i = [θ, P_i]. `theta` defaults to the function symbol θ.
NcPoly first_constraint_quadratic_check(int n, const std::optional<NcPoly>& theta = std::nullopt);

// --- classical derivative tower -----------------------------------------------

/// θ^a h^e0 h'^e1 h''^e2 ⋯ with commuting factors.
struct CMonomial {
  int theta = 0;
  std::vector<int> h;  // h[k] = exponent of h^(k); no trailing zeros

  static CMonomial make(int theta, std::vector<int> h);
  int h_exponent(std::size_t k) const { return k < h.size() ? h[k] : 0; }
  int degree() const;

  friend auto operator<=>(const CMonomial&, const CMonomial&) = default;
  friend bool operator==(const CMonomial&, const CMonomial&) = default;

  /// e.g. "h^3 θ h'" with h powers first, then θ, then primed h's.
  std::string to_string() const;
};

class CPoly {
public:
  using TermMap = std::map<CMonomial, Rational>;

  CPoly() = default;
  static CPoly monomial(CMonomial m, Rational c = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const CMonomial& m) const;
  void add_term(const CMonomial& m, const Rational& c);

  friend CPoly operator+(CPoly a, const CPoly& b);
  friend bool operator==(const CPoly&, const CPoly&) = default;

  /// Value with every symbol set to 1.
  Rational coefficient_sum() const;
  std::string to_string() const;

private:
  TermMap terms_;
};

/// The tower derivation: D(θ) = hθ, D(h^(k)) = h^(k+1), Leibniz, linear.
CPoly tower_derive(const CPoly& p);

struct TowerLevel {
  int level;
  CPoly polynomial;
};

/// Levels 1..n of θ^(n), starting from θ^(1) = hθ. Throws std::invalid_argument when n < 1.
std::vector<TowerLevel> derivative_tower(int n);

/// Coefficient of h^(n-2) θ h' at each level n ≥ 2.
std::vector<Rational> h_prime_series(const std::vector<TowerLevel>& tower);
/// Coefficient of h^(n-4) θ h'^2 at each level n ≥ 4.
std::vector<Rational> h_prime_squared_series(const std::vector<TowerLevel>& tower);

/// k-th forward difference of a sequence.
std::vector<Rational> forward_difference(const std::vector<Rational>& s, int k = 1);

/// The operator image: each monomial's factor multiset symmetrized, with
/// θ ↦ Θ and h^(k) ↦ H with k primes.
NcPoly symmetrized_operator(const CPoly& p);

}  // namespace ncw::constraints

#endif
