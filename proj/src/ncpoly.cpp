#include "ncworlds/ncpoly.hpp"

#include <algorithm>

namespace ncw {

Generator::Generator(std::string n, IndexKind k, std::vector<int> idx, int primes_, std::vector<int> derivs_)
    : name(std::move(n)), kind(k), indices(std::move(idx)), primes(primes_), derivs(std::move(derivs_)) {
  if (indices.empty()) kind = IndexKind::None;
  else if (kind == IndexKind::None) kind = IndexKind::Lower;
  std::sort(derivs.begin(), derivs.end());
}

Generator Generator::derivative(int coord) const {
  Generator g = *this;
  g.derivs.insert(std::upper_bound(g.derivs.begin(), g.derivs.end(), coord), coord);
  return g;
}

Generator Generator::primed() const {
  Generator g = *this;
  ++g.primes;
  return g;
}

std::string Generator::to_string() const {
  std::string out = name;
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(v[k]);
    }
    return s;
  };
  if (!indices.empty() || !derivs.empty()) {
    out += kind == IndexKind::Upper ? '^' : '_';
    if (indices.size() == 1 && derivs.empty() && indices[0] >= 0) {
      out += std::to_string(indices[0]);
    } else {
      out += "{" + join(indices);
      if (!derivs.empty()) out += ";" + join(derivs);
      out += "}";
    }
  }
  out.append(static_cast<std::size_t>(primes), '\'');
  return out;
}

std::string word_to_string(std::span<const Generator> w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '.';
    out += w[k].to_string();
  }
  return out;
}

// --- NcPoly -----------------------------------------------------------------

NcPoly::NcPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NcPoly NcPoly::generator(Generator g) { return word(Word{std::move(g)}); }

NcPoly NcPoly::word(Word w, Scalar c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.clear();
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NcPoly NcPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, f(c));
  return out;
}

NcPoly NcPoly::substitute(const Generator& g, const NcPoly& value) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) {
    NcPoly term(c);
    Word run;
    for (const auto& x : w) {
      if (x == g) {
        term = term * NcPoly::word(run) * value;
        run.clear();
      } else {
        run.push_back(x);
      }
    }
    out += term * NcPoly::word(run);
  }
  return out;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += c.is_one() ? "1" : "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      out += word_to_string(w);
    } else {
      out += "(" + c.to_string() + ") " + word_to_string(w);
    }
  }
  return out;
}

NcPoly add(const NcPoly& a, const NcPoly& b) { return a + b; }
NcPoly scale(const Scalar& s, const NcPoly& a) { return s * a; }
NcPoly mul(const NcPoly& a, const NcPoly& b) { return a * b; }

NcPoly pow(const NcPoly& a, unsigned exponent) {
  NcPoly out(1);
  for (unsigned k = 0; k < exponent; ++k) out = out * a;
  return out;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

Operator derivation(NcPoly n) {
  return [n = std::move(n)](const NcPoly& f) { return commutator(f, n); };
}

NcPoly apply_derivation(const NcPoly& f, const std::function<NcPoly(const Generator&)>& on_generator) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      NcPoly left = NcPoly::word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), c);
      NcPoly right = NcPoly::word(Word(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end()));
      out += left * on_generator(w[k]) * right;
    }
  }
  return out;
}

}  // namespace ncw
