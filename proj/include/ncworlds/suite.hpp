#ifndef NCWORLDS_SUITE_HPP
#define NCWORLDS_SUITE_HPP

#include "ncworlds/ncpoly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ncw::suite {

struct Options {
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  std::size_t length = 12;
  long range = 3;
  int levels = 12;
  std::size_t max_steps = 1'000'000;
  bool timing = false;
};

struct Check {
  std::string suite;
  std::string id;
  std::string identity;  // the formula being checked
  bool passed = false;
  std::string residual;  // canonical text of the residual, "0" when it vanishes
  std::string value;     // computed quantity, when the check produces one
  std::string note;
  double elapsed_ms = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool passed() const;
};

const std::vector<std::string>& suite_names();  // without "all"

/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& name, const Options& options = {});

std::string emit_text(const Report& report);
/// Deterministic JSON; elapsed times are included only when `timing` is set.
std::string emit_json(const Report& report, bool timing = false);

/// Random polynomial over `generators`: up to `terms` words of length ≤
/// `degree` with integer coefficients in [-3, 3].
NcPoly random_polynomial(std::mt19937_64& rng, const std::vector<Generator>& generators, int degree,
                         int terms);

}  // namespace ncw::suite

#endif
