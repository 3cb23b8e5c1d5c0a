#ifndef NCWORLDS_EM_THEOREM_HPP
#define NCWORLDS_EM_THEOREM_HPP

#include <array>
#include <functional>

namespace ncw::em {

template <class A>
using Vec3 = std::array<A, 3>;

/// Sign of the permutation (i,j,k) of (0,1,2); zero on repeats.
constexpr int epsilon(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

template <class A>
A commutator(const A& a, const A& b) {
  return a * b - b * a;
}

/// (a × b)_k = Σ ε_ijk a_i b_j, factors kept in the written order. Only the
/// cyclic (i,j) = (k+1,k+2) and its transpose contribute.
template <class A>
Vec3<A> cross(const Vec3<A>& a, const Vec3<A>& b) {
  Vec3<A> out;
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3;
    int j = (k + 2) % 3;
    out[k] = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

template <class A>
A dot(const Vec3<A>& a, const Vec3<A>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class A>
Vec3<A> operator-(const Vec3<A>& a, const Vec3<A>& b) {
  Vec3<A> out;
  for (int i = 0; i < 3; ++i) out[i] = a[i] - b[i];
  return out;
}

template <class A>
Vec3<A> operator+(const Vec3<A>& a, const Vec3<A>& b) {
  Vec3<A> out;
  for (int i = 0; i < 3; ++i) out[i] = a[i] + b[i];
  return out;
}

template <class A>
bool is_zero(const Vec3<A>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

/// Derivations built from the velocities Ẋ_i and a global time derivative:
/// ∂_i F = [F, Ẋ_i] and ∂_t F = Ḟ - Σ Ẋ_i ∂_i F.
template <class A>
struct Calculus {
  Vec3<A> xdot;
  std::function<A(const A&)> time_derivative;

  A partial(int i, const A& f) const { return commutator(f, xdot[i]); }

  A partial_t(const A& f) const {
    A out = time_derivative(f);
    for (int i = 0; i < 3; ++i) out = out - xdot[i] * partial(i, f);
    return out;
  }

  Vec3<A> partial_t(const Vec3<A>& v) const { return {partial_t(v[0]), partial_t(v[1]), partial_t(v[2])}; }
  Vec3<A> time(const Vec3<A>& v) const {
    return {time_derivative(v[0]), time_derivative(v[1]), time_derivative(v[2])};
  }

  A divergence(const Vec3<A>& v) const {
    A out{};
    for (int i = 0; i < 3; ++i) out = out + partial(i, v[i]);
    return out;
  }

  /// (∇ × v)_k = Σ ε_ijk ∂_i(v_j)
  Vec3<A> curl(const Vec3<A>& v) const {
    Vec3<A> out;
    for (int k = 0; k < 3; ++k) {
      int i = (k + 1) % 3;
      int j = (k + 2) % 3;
      out[k] = partial(i, v[j]) - partial(j, v[i]);
    }
    return out;
  }

  A laplacian(const A& f) const {
    A out{};
    for (int i = 0; i < 3; ++i) out = out + partial(i, partial(i, f));
    return out;
  }
  Vec3<A> laplacian(const Vec3<A>& v) const { return {laplacian(v[0]), laplacian(v[1]), laplacian(v[2])}; }
};

template <class A>
struct Fields {
  Vec3<A> e;  // ∂_t Ẋ
  Vec3<A> b;  // Ẋ × Ẋ
};

template <class A>
Fields<A> fields(const Calculus<A>& c) {
  return {c.partial_t(c.xdot), cross(c.xdot, c.xdot)};
}

template <class A>
struct Residuals {
  Fields<A> fields;
  Vec3<A> b_cross_b;
  Vec3<A> lorentz;  // Ẍ - E - Ẋ × B
  A divergence;     // ∇ • B
  Vec3<A> faraday;  // ∂_t B + ∇ × E - B × B
  Vec3<A> ampere;   // ∂_t E - ∇ × B - (∂_t² - ∇²) Ẋ

  bool lorentz_holds() const { return is_zero(lorentz); }
  bool divergence_holds() const { return divergence.is_zero(); }
  bool faraday_holds() const { return is_zero(faraday); }
  bool ampere_holds() const { return is_zero(ampere); }
  bool holds() const { return lorentz_holds() && divergence_holds() && faraday_holds() && ampere_holds(); }
};

template <class A>
Residuals<A> theorem_residuals(const Calculus<A>& c) {
  Residuals<A> r;
  r.fields = fields(c);
  const Vec3<A>& e = r.fields.e;
  const Vec3<A>& b = r.fields.b;
  r.b_cross_b = cross(b, b);
  Vec3<A> xddot = c.time(c.xdot);
  r.lorentz = xddot - e - cross(c.xdot, b);
  r.divergence = c.divergence(b);
  r.faraday = c.partial_t(b) + c.curl(e) - r.b_cross_b;
  Vec3<A> dte = c.partial_t(e);
  Vec3<A> wave = c.partial_t(c.partial_t(c.xdot)) - c.laplacian(c.xdot);
  r.ampere = dte - c.curl(b) - wave;
  return r;
}

/// ∂_t(FG) - ∂_t(F)G - F∂_t(G) - Σ ∂_i(F)∂_i(G)
template <class A>
A modified_leibniz_residual(const Calculus<A>& c, const A& f, const A& g) {
  A out = c.partial_t(f * g) - c.partial_t(f) * g - f * c.partial_t(g);
  for (int i = 0; i < 3; ++i) out = out - c.partial(i, f) * c.partial(i, g);
  return out;
}

}  // namespace ncw::em

#endif
