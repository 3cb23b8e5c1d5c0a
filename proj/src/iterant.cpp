#include "ncworlds/iterant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ncw::iterant {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Diagonal permuted(const Diagonal& d, const Permutation& p) {
  Diagonal out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[static_cast<std::size_t>(p[i])];
  return out;
}

namespace {

bool all_zero(const Diagonal& d) {
  return std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

// --- Matrix -------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& s, Matrix a) {
  for (auto& x : a.data_) x = s * x;
  return a;
}

Scalar Matrix::determinant2() const {
  if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("determinant2 needs a 2x2 matrix");
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

// --- Iterant ------------------------------------------------------------------

Iterant::Iterant(std::size_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("iterant order must be positive");
}

Iterant Iterant::diagonal(Diagonal d) {
  Permutation p = identity_permutation(d.size());
  return term(std::move(d), std::move(p));
}

Iterant Iterant::permutation(Permutation p) {
  Diagonal d(p.size(), Scalar(1));
  return term(std::move(d), std::move(p));
}

Iterant Iterant::term(Diagonal d, Permutation p) {
  if (d.size() != p.size()) throw OrderMismatch("diagonal and permutation lengths differ");
  Iterant out(d.size());
  out.add_term(p, d);
  return out;
}

Iterant Iterant::scalar(std::size_t order, const Scalar& s) { return diagonal(Diagonal(order, s)); }

void Iterant::add_term(const Permutation& p, const Diagonal& d) {
  if (d.size() != order_ || p.size() != order_) throw OrderMismatch("iterant order mismatch");
  if (all_zero(d)) return;
  auto [it, inserted] = terms_.try_emplace(p, d);
  if (inserted) return;
  for (std::size_t i = 0; i < order_; ++i) it->second[i] += d[i];
  if (all_zero(it->second)) terms_.erase(it);
}

Iterant& Iterant::operator+=(const Iterant& o) {
  if (o.order_ != order_) throw OrderMismatch("iterant order mismatch");
  for (const auto& [p, d] : o.terms_) add_term(p, d);
  return *this;
}

Iterant& Iterant::operator-=(const Iterant& o) { return *this += -o; }

Iterant Iterant::operator-() const {
  Iterant out = *this;
  for (auto& [p, d] : out.terms_)
    for (auto& x : d) x = -x;
  return out;
}

Iterant operator*(const Iterant& a, const Iterant& b) {
  if (a.order_ != b.order_) throw OrderMismatch("iterant order mismatch");
  const std::size_t n = a.order_;
  Iterant out(n);
  for (const auto& [pa, da] : a.terms_) {
    for (const auto& [pb, db] : b.terms_) {
      Diagonal moved = permuted(db, pa);
      Diagonal d(n);
      Permutation p(n);
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = da[i] * moved[i];
        p[i] = pb[static_cast<std::size_t>(pa[i])];
      }
      out.add_term(p, d);
    }
  }
  return out;
}

Iterant operator*(const Scalar& s, const Iterant& a) { return Iterant::scalar(a.order(), s) * a; }

Matrix Iterant::to_matrix() const {
  Matrix m(order_, order_);
  for (const auto& [p, d] : terms_)
    for (std::size_t i = 0; i < order_; ++i) m.at(i, static_cast<std::size_t>(p[i])) += d[i];
  return m;
}

std::string Iterant::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, d] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) out += ", ";
      out += d[i].to_string();
    }
    out += "]";
    if (p != identity_permutation(order_)) {
      out += "<";
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i] + 1);
      }
      out += ">";
    }
  }
  return out;
}

// --- order two ----------------------------------------------------------------

Iterant pair(const Scalar& a, const Scalar& b) { return Iterant::diagonal({a, b}); }
Iterant eta() { return Iterant::permutation({1, 0}); }
Iterant epsilon() { return pair(Scalar(-1), Scalar(1)); }
Iterant sigma() { return pair(Scalar(-1), Scalar(1)); }
Iterant imaginary() { return epsilon() * eta(); }

Iterant overbar(const Iterant& q) {
  if (q.order() != 2) throw OrderMismatch("overbar is defined for order-2 iterants");
  Iterant out(2);
  for (const auto& [p, d] : q.terms()) out += Iterant::term(permuted(d, {1, 0}), p);
  return out;
}

Iterant from_iterant_pair(const Iterant& a, const Iterant& b) { return a + b * eta(); }

Decomposition matrix_decompose(const Matrix& m) {
  if (m.rows() == 0) throw std::invalid_argument("cannot decompose an empty matrix");
  if (!m.is_square()) throw std::invalid_argument("matrix must be square");
  const std::size_t n = m.rows();
  mpz_class fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= static_cast<unsigned long>(k);
  Decomposition out{Rational(mpz_class(1), fact), {}, Iterant(n)};
  out.factor.canonicalize();
  for (auto& p : all_permutations(n)) {
    Diagonal v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m.at(i, static_cast<std::size_t>(p[i]));
    Diagonal scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = Scalar(out.factor) * v[i];
    out.element += Iterant::term(scaled, p);
    out.terms.push_back({std::move(v), std::move(p)});
  }
  return out;
}

// --- quaternions --------------------------------------------------------------

QuaternionTable quaternion_table() {
  QuaternionTable table;
  const Scalar root = Scalar::imaginary_unit();
  const Iterant one = Iterant::scalar(2, Scalar(1));
  table.units = {one, imaginary(), root * overbar(epsilon()), root * eta()};

  std::array<Matrix, 4> images;
  for (std::size_t u = 0; u < 4; ++u) images[u] = table.units[u].to_matrix();

  bool resolved = true;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Iterant product = table.units[r] * table.units[c];
      std::pair<int, int> match{0, -1};
      for (int sign : {1, -1}) {
        for (std::size_t u = 0; u < 4 && match.second < 0; ++u) {
          if (product == Scalar(sign) * table.units[u]) match = {sign, static_cast<int>(u)};
        }
      }
      table.products[r][c] = match;
      if (match.second < 0) {
        resolved = false;
        table.residuals[r][c] = product;
        table.matrix_agrees[r][c] = false;
        continue;
      }
      const Iterant& target = table.units[static_cast<std::size_t>(match.second)];
      table.residuals[r][c] = product - Scalar(match.first) * target;
      table.matrix_agrees[r][c] =
          images[r] * images[c] == Scalar(match.first) * images[static_cast<std::size_t>(match.second)];
    }
  }
  table.all_resolved = resolved;

  const Iterant minus_one = Iterant::scalar(2, Scalar(-1));
  const auto& [u1, i, j, k] = table.units;
  (void)u1;
  table.i2_j2_k2_ijk_minus_one = i * i == minus_one && j * j == minus_one && k * k == minus_one &&
                                 i * j * k == minus_one;
  return table;
}

// --- Lorentz ------------------------------------------------------------------

Event lorentz_boost(const Scalar& k, const Event& e) {
  if (k.is_zero()) throw std::domain_error("boost parameter k must be nonzero");
  Iterant point = pair(e.t - e.x, e.t + e.x);
  Iterant boosted = pair(k, k.inverse()) * point;
  const Diagonal& d = boosted.terms().empty() ? Diagonal{Scalar(), Scalar()}
                                              : boosted.terms().begin()->second;
  const Scalar half = Scalar::rational(1, 2);
  return {half * (d[0] + d[1]), half * (d[1] - d[0])};
}

Event lorentz_boost_velocity(const Rational& v, const Event& e) {
  Rational one_minus = Rational(1) - v * v;
  if (sgn(one_minus) <= 0) throw std::domain_error("velocity must satisfy |v| < 1");
  auto root = exact_sqrt(one_minus);
  if (!root) throw std::domain_error("1 - v^2 is not a rational square; use the k form");
  Rational gamma = Rational(1) / *root;
  Scalar g(gamma);
  Scalar vs(v);
  return {g * (e.t - e.x * vs), g * (e.x - vs * e.t)};
}

}  // namespace ncw::iterant
