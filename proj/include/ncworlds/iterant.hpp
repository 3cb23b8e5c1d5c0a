#ifndef NCWORLDS_ITERANT_HPP
#define NCWORLDS_ITERANT_HPP

#include "ncworlds/scalar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncw::iterant {

/// One-line notation, 0-based: position i maps to perm[i].
using Permutation = std::vector<int>;
using Diagonal = std::vector<Scalar>;

class OrderMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Permutation identity_permutation(std::size_t n);
/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);
/// Δ^π with (Δ^π)_i = Δ_{π_i}.
Diagonal permuted(const Diagonal& d, const Permutation& p);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Scalar determinant2() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Element of the group ring of S_n over diagonal vectors: Σ Δ_π [π], with
/// the product rule [π]Δ = Δ^π[π]. Zero diagonals are not stored.
class Iterant {
public:
  Iterant() : order_(1) {}
  explicit Iterant(std::size_t order);

  static Iterant diagonal(Diagonal d);
  static Iterant permutation(Permutation p);
  static Iterant term(Diagonal d, Permutation p);
  static Iterant scalar(std::size_t order, const Scalar& s);

  std::size_t order() const { return order_; }
  const std::map<Permutation, Diagonal>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Iterant& operator+=(const Iterant& o);
  Iterant& operator-=(const Iterant& o);
  Iterant operator-() const;
  friend Iterant operator+(Iterant a, const Iterant& b) { return a += b; }
  friend Iterant operator-(Iterant a, const Iterant& b) { return a -= b; }
  /// (Δ₁,π₁)(Δ₂,π₂) = (Δ₁·Δ₂^{π₁}, σ) with σ_i = π₂(π₁(i)). Throws OrderMismatch.
  friend Iterant operator*(const Iterant& a, const Iterant& b);
  friend Iterant operator*(const Scalar& s, const Iterant& a);
  friend bool operator==(const Iterant&, const Iterant&) = default;

  /// Σ Δ_π [π] where row i of [π] is row π_i of the identity.
  Matrix to_matrix() const;
  std::string to_string() const;

private:
  void add_term(const Permutation& p, const Diagonal& d);

  std::size_t order_;
  std::map<Permutation, Diagonal> terms_;
};

// Order-2 vocabulary.
Iterant pair(const Scalar& a, const Scalar& b);  // [a,b]
Iterant eta();                                    // the shift η
Iterant epsilon();                                // ε = [-1,1]
Iterant sigma();                                  // σ = [-1,1], the polarity
Iterant imaginary();                              // i = εη
/// Q̄: swaps the two entries of an order-2 diagonal iterant.
Iterant overbar(const Iterant& q);
/// A + Bη for diagonal A = [a,d], B = [b,c]; its matrix is (a b / c d).
Iterant from_iterant_pair(const Iterant& a, const Iterant& b);

/// One summand of the decomposition: unscaled v(M,π) and the permutation.
struct DecompositionTerm {
  Diagonal diagonal;
  Permutation permutation;
};

struct Decomposition {
  Rational factor;  // 1/(n-1)!
  std::vector<DecompositionTerm> terms;  // one per permutation, zero terms kept
  Iterant element;  // Σ factor·Δ[M]_π [π]
};

/// M = (1/(n-1)!) Σ_π Δ[M]_π [π]. Throws std::invalid_argument for an empty
/// or non-square matrix.
Decomposition matrix_decompose(const Matrix& m);

struct QuaternionTable {
  std::array<std::string, 4> labels{"1", "i", "j", "k"};
  std::array<Iterant, 4> units{Iterant(2), Iterant(2), Iterant(2), Iterant(2)};
  /// products[r][c] = units[r] * units[c], expressed as (sign, unit index).
  std::array<std::array<std::pair<int, int>, 4>, 4> products{};
  /// Residual of each product against ±unit, through the iterant algebra.
  std::array<std::array<Iterant, 4>, 4> residuals;
  /// Residual of each product against the 2x2 matrix product of the images.
  std::array<std::array<bool, 4>, 4> matrix_agrees{};
  bool i2_j2_k2_ijk_minus_one = false;
  bool all_resolved = false;
};

/// Builds i = εη, j = √-1·ε̄, k = √-1·η and tabulates every product of
/// {1,i,j,k}; each product is matched against ±{1,i,j,k}.
QuaternionTable quaternion_table();

struct Event {
  Scalar t;
  Scalar x;
};

/// [t-x, t+x] ↦ [k(t-x), k⁻¹(t+x)]. Throws std::domain_error when k == 0.
Event lorentz_boost(const Scalar& k, const Event& e);
/// t' = γ(t - vx), x' = γ(x - vt) for rational v with rational γ = 1/√(1-v²).
/// Throws std::domain_error when |v| ≥ 1 or γ is irrational.
Event lorentz_boost_velocity(const Rational& v, const Event& e);

}  // namespace ncw::iterant

#endif
