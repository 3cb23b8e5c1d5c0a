#ifndef NCWORLDS_TEST_HELPERS_HPP
#define NCWORLDS_TEST_HELPERS_HPP

#include "ncworlds/ncpoly.hpp"
#include "ncworlds/suite.hpp"

#include <random>
#include <vector>

namespace testing_support {

inline std::mt19937_64 rng(std::uint64_t salt) {
  std::seed_seq seq{20261018u, static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

inline const std::vector<ncw::Generator>& xyz() {
  static const std::vector<ncw::Generator> g{ncw::Generator("X"), ncw::Generator("Y"), ncw::Generator("Z")};
  return g;
}

inline ncw::NcPoly random_poly(std::mt19937_64& r, int degree = 2, int terms = 4) {
  return ncw::suite::random_polynomial(r, xyz(), degree, terms);
}

}  // namespace testing_support

#endif
