#ifndef NCWORLDS_SKEWDIFF_HPP
#define NCWORLDS_SKEWDIFF_HPP

#include "ncworlds/em_theorem.hpp"
#include "ncworlds/ncpoly.hpp"
#include "ncworlds/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncw::skew {

class WindowExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite time series; the value at time t is values[t - start].
class Sequence {
public:
  Sequence() = default;
  Sequence(long start, std::vector<Scalar> values) : start_(start), values_(std::move(values)) {}
  static Sequence constant(const Scalar& c, long start, std::size_t length);
  static Sequence from_ints(const std::vector<long>& values, long start = 0);

  long start() const { return start_; }
  long end() const { return start_ + static_cast<long>(values_.size()); }  // one past the last time
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& at(long t) const { return values_.at(static_cast<std::size_t>(t - start_)); }

  bool all_zero() const;
  /// f^(b): the value at t becomes the old value at t + b; the window loses b ticks on the right.
  Sequence shifted(long b) const;
  Sequence map(const std::function<Scalar(const Scalar&)>& f) const;

  /// Pointwise operations on the window intersection. Throw WindowExhausted
  /// when the windows do not overlap.
  friend Sequence operator+(const Sequence& a, const Sequence& b);
  friend Sequence operator-(const Sequence& a, const Sequence& b);
  friend Sequence operator*(const Sequence& a, const Sequence& b);
  friend Sequence operator*(const Scalar& s, const Sequence& a);
  friend bool operator==(const Sequence&, const Sequence&) = default;

  std::string to_string() const;

private:
  long start_ = 0;
  std::vector<Scalar> values_;
};

/// Δf = f' - f
Sequence difference(const Sequence& f);
/// D f = (f' - f)/dt, the raw discrete derivative as a sequence.
Sequence raw_derivative(const Sequence& f, const Scalar& dt = Scalar(1));

/// Σ_a J^a f_a with the skew rule f J = J f'. All-zero terms are dropped.
class SkewElement {
public:
  SkewElement() = default;
  /// J^0 f
  SkewElement(Sequence f);
  static SkewElement term(unsigned power, Sequence f);
  /// J^power with coefficient 1 on the given window.
  static SkewElement shift(unsigned power, long start, std::size_t length);

  const std::map<unsigned, Sequence>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The sequence multiplying J^power, if present.
  const Sequence* coefficient(unsigned power) const;

  SkewElement map_values(const std::function<Scalar(const Scalar&)>& f) const;

  SkewElement operator-() const;
  friend SkewElement operator+(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator-(const SkewElement& a, const SkewElement& b);
  /// (J^a f)(J^b g) = J^{a+b}(f^(b)·g)
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator*(const Scalar& s, const SkewElement& a);

  /// Zero of a - b on the intersection of term windows.
  friend bool equal_on_windows(const SkewElement& a, const SkewElement& b) { return (a - b).is_zero(); }

  std::string to_string() const;

private:
  void add(unsigned power, const Sequence& f);

  std::map<unsigned, Sequence> terms_;
};

/// ∇f = [f, J]/dt = Σ J^{a+1}(f_a' - f_a)/dt
SkewElement nabla(const SkewElement& f, const Scalar& dt = Scalar(1));

/// [x, ∇x], which equals J(Δx)²/Δt pointwise.
SkewElement position_velocity_commutator(const Sequence& x, const Scalar& dt = Scalar(1));
/// J(Δx)²/Δt computed directly from the sequence.
SkewElement diffusion_law(const Sequence& x, const Scalar& dt = Scalar(1));
/// True when the J¹ coefficient of [x, ∇x] is constant along its window.
bool commutator_is_constant(const Sequence& x, const Scalar& dt = Scalar(1));

struct EpsilonTuple {
  int a, b, c, d;  // 1-based
  int lhs;         // Σ_i ε_abi ε_cdi
  int rhs;         // -δ_ad δ_bc + δ_ac δ_bd
};

struct EpsilonReport {
  std::vector<EpsilonTuple> tuples;  // all 81
  int failures = 0;
  bool holds() const { return failures == 0 && tuples.size() == 81; }
};

EpsilonReport epsilon_identity_check();
/// ε_ijk with 1-based indices.
int levi_civita(int i, int j, int k);

using Vec3 = em::Vec3<SkewElement>;
using SeqVec3 = em::Vec3<Sequence>;

/// Calculus with Ẋ_i = ∇X_i and Ḟ = ∇F.
em::Calculus<SkewElement> calculus(const SeqVec3& x, const Scalar& dt = Scalar(1));

struct ClosedForms {
  Vec3 b_residual;  // B - J²(ΔX' × ΔX)/dt²
  Vec3 e_residual;  // E - (J²Δ²X/dt² - J³ ΔX'' × (ΔX' × ΔX)/dt³)
  bool holds() const { return em::is_zero(b_residual) && em::is_zero(e_residual); }
};

struct TrialResult {
  em::Residuals<SkewElement> residuals;
  ClosedForms closed_forms;
  bool b_cross_b_nonzero = false;
};

/// Runs the theorem on one coordinate triple. Throws WindowExhausted when the
/// series are too short for the fourth-order terms.
TrialResult em_trial(const SeqVec3& x, const Scalar& dt = Scalar(1));

/// Deterministic integer series: trial t draws from mt19937_64 seeded with
/// seed_seq{seed, t}, entries uniform in [-range, range].
SeqVec3 random_triple(std::uint64_t seed, std::uint64_t trial, std::size_t length, long range);

struct SimulationSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t length = 0;
  long range = 0;
  std::array<std::size_t, 4> failures{};  // per equation: lorentz, divergence, faraday, ampere
  std::size_t closed_form_failures = 0;
  std::size_t b_cross_b_nonzero = 0;
  std::size_t window_errors = 0;
  std::string first_nonzero_residual = "0";
  bool holds() const {
    return failures == std::array<std::size_t, 4>{} && closed_form_failures == 0 && window_errors == 0;
  }
};

SimulationSummary em_simulation(std::uint64_t seed, std::size_t trials, std::size_t length = 12, long range = 3);

/// ∂_i F - Ḟ Δ_i and ∂_t F - (JΔF/dt - J²(Δ'•Δ)ΔF/dt²) for a commuting scalar series F.
struct ScalarDerivationForms {
  std::array<SkewElement, 3> partial_residual;
  SkewElement time_residual;
  bool holds() const {
    return partial_residual[0].is_zero() && partial_residual[1].is_zero() && partial_residual[2].is_zero() &&
           time_residual.is_zero();
  }
};

ScalarDerivationForms scalar_derivation_forms(const SeqVec3& x, const Sequence& f, const Scalar& dt = Scalar(1));

/// The same theorem in the free algebra over generators Ẋ_i, with Ḟ the
/// derivation that adds a prime to each generator.
em::Residuals<NcPoly> symbolic_em_check();
em::Calculus<NcPoly> symbolic_calculus();

struct WickResult {
  Scalar ratio;            // (Δx)²/Δt
  Scalar before_rotation;  // [q, p/m] = ħ/m
  Scalar after_rotation;   // [q, p/m] after Δt → iΔt
  Scalar pq;               // [p, q]
};

/// Uses (Δx)²/Δt = ħ/m and Δt → iΔt. `m` must be a unit of the scalar ring.
WickResult wick_heisenberg(const Scalar& hbar = Scalar::param("ħ"), const Scalar& m = Scalar::param("m"));

/// A walk whose steps are ±s, with s² standing for kτ; returns [x, ∇x] with
/// Δt = τ after the substitution, which is J·k on the whole window.
SkewElement diffusion_walk(const std::vector<int>& signs);

}  // namespace ncw::skew

#endif
