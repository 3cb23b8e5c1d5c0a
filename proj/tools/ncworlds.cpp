// ncworlds: command-line driver for the algebra library and verification suites.

#include "ncworlds/constraints.hpp"
#include "ncworlds/expr.hpp"
#include "ncworlds/iterant.hpp"
#include "ncworlds/quotient.hpp"
#include "ncworlds/skewdiff.hpp"
#include "ncworlds/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Settings {
  std::string world = "flat";
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  std::size_t length = 12;
  long range = 3;
  int levels = 12;
  std::size_t max_steps = ncw::RewriteSystem::kDefaultMaxSteps;
  bool json = false;
  bool timing = false;
};

std::size_t step_limit(const Settings& s) {
  if (const char* env = std::getenv("NCWORLDS_MAX_STEPS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("NCWORLDS_MAX_STEPS", "not a number: " + std::string(env));
    }
  }
  return s.max_steps;
}

ncw::suite::Options suite_options(const Settings& s) {
  ncw::suite::Options o;
  o.seed = s.seed;
  o.trials = s.trials;
  o.length = s.length;
  o.range = s.range;
  o.levels = s.levels;
  o.max_steps = step_limit(s);
  o.timing = s.timing;
  return o;
}

int print_report(const ncw::suite::Report& report, const Settings& s) {
  if (s.json) std::cout << ncw::suite::emit_json(report, s.timing) << "\n";
  else std::cout << ncw::suite::emit_text(report);
  return report.passed() ? kPass : kFail;
}

int cmd_reduce(const std::string& source, const Settings& s) {
  ncw::expr::Expr e = ncw::expr::parse(source);
  ncw::RewriteSystem sys = ncw::systems::by_name(s.world).with_max_steps(step_limit(s));
  ncw::NcPoly value = ncw::expr::evaluate(e, &sys);
  if (s.json) {
    json j;
    j["input"] = ncw::expr::print(e);
    j["world"] = sys.name();
    j["result"] = value.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return kPass;
}

int cmd_em_sim(const Settings& s) {
  using namespace ncw::skew;
  static const std::array<const char*, 4> ids{"lorentz-force", "no-monopoles", "faraday", "ampere"};
  std::array<bool, 4> holds{true, true, true, true};
  std::string residual_max = "0";
  json trials = json::array();
  std::size_t nonzero = 0;
  bool windows_ok = true;
  for (std::size_t t = 0; t < s.trials; ++t) {
    json row;
    row["trial"] = t;
    try {
      TrialResult r = em_trial(random_triple(s.seed, t, s.length, s.range));
      const std::array<bool, 4> eq{r.residuals.lorentz_holds(), r.residuals.divergence_holds(),
                                   r.residuals.faraday_holds(), r.residuals.ampere_holds()};
      for (std::size_t k = 0; k < 4; ++k) {
        holds[k] = holds[k] && eq[k];
        row[ids[k]] = eq[k];
      }
      if (!r.residuals.divergence_holds() && residual_max == "0") residual_max = r.residuals.divergence.to_string();
      for (const auto* v : {&r.residuals.lorentz, &r.residuals.faraday, &r.residuals.ampere})
        for (const auto& c : *v)
          if (!c.is_zero() && residual_max == "0") residual_max = c.to_string();
      row["b_cross_b_nonzero"] = r.b_cross_b_nonzero;
      if (r.b_cross_b_nonzero) ++nonzero;
    } catch (const WindowExhausted& e) {
      windows_ok = false;
      row["error"] = e.what();
    }
    trials.push_back(std::move(row));
  }
  bool all = windows_ok;
  for (bool h : holds) all = all && h;
  if (s.json) {
    json j;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["length"] = s.length;
    j["range"] = s.range;
    j["residual_max"] = residual_max;
    json eqs = json::array();
    for (std::size_t k = 0; k < 4; ++k) eqs.push_back({{"id", ids[k]}, {"holds", holds[k] && windows_ok}});
    j["equations"] = std::move(eqs);
    j["b_cross_b_nonzero"] = nonzero;
    j["per_trial"] = std::move(trials);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : trials) {
      std::cout << "trial " << row["trial"].get<std::size_t>();
      if (row.contains("error")) {
        std::cout << "  error: " << row["error"].get<std::string>() << "\n";
        continue;
      }
      for (const char* id : ids) std::cout << "  " << id << " " << (row[id].get<bool>() ? "✓" : "✗");
      std::cout << "  B×B " << (row["b_cross_b_nonzero"].get<bool>() ? "≠ 0" : "= 0") << "\n";
    }
    std::cout << "seed " << s.seed << ", " << s.trials << " trials, length " << s.length << ", range ±" << s.range
              << "\n";
    for (std::size_t k = 0; k < 4; ++k) std::cout << "  " << (holds[k] && windows_ok ? "✓ " : "✗ ") << ids[k] << "\n";
    std::cout << "  B×B nonzero in " << nonzero << "/" << s.trials << " trials\n";
    std::cout << "residual max: " << residual_max << "\n";
  }
  return all ? kPass : kFail;
}

int cmd_tower(const Settings& s, const std::string& series) {
  if (s.levels < 1) throw CLI::ValidationError("--levels", "must be at least 1");
  auto tower = ncw::constraints::derivative_tower(s.levels);
  auto join = [](const std::vector<ncw::Rational>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].get_str();
    return out;
  };
  if (!series.empty()) {
    auto values = series == "h-prime" ? ncw::constraints::h_prime_series(tower)
                                      : ncw::constraints::h_prime_squared_series(tower);
    int first = series == "h-prime" ? 2 : 4;
    if (s.json) {
      json j;
      j["series"] = series;
      j["first_level"] = first;
      json arr = json::array();
      for (const auto& v : values) arr.push_back(v.get_str());
      j["values"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << series << " (levels " << first << ".." << s.levels << "): " << join(values) << "\n";
    }
    return kPass;
  }
  if (s.json) {
    json arr = json::array();
    for (const auto& level : tower)
      arr.push_back({{"level", level.level},
                     {"polynomial", level.polynomial.to_string()},
                     {"coefficient_sum", level.polynomial.coefficient_sum().get_str()}});
    std::cout << json{{"levels", std::move(arr)}}.dump(2) << "\n";
  } else {
    for (const auto& level : tower) std::cout << "θ^(" << level.level << ") = " << level.polynomial.to_string() << "\n";
  }
  return kPass;
}

int cmd_iterant_demo(const Settings& s) {
  ncw::suite::Report report = ncw::suite::run_suite("iterant", suite_options(s));
  if (!s.json) {
    using namespace ncw::iterant;
    Iterant i = pair(1, -1) * eta();
    std::cout << "[1,-1]η = " << i.to_string() << "\n"
              << "([1,-1]η)² = " << (i * i).to_string() << "\n"
              << "εη = " << imaginary().to_string() << " ↦ " << imaginary().to_matrix().to_string() << "\n";
    QuaternionTable q = quaternion_table();
    std::cout << "quaternion units:";
    for (std::size_t k = 0; k < 4; ++k) std::cout << " " << q.labels[k] << " = " << q.units[k].to_string() << ";";
    std::cout << "\n";
    for (std::size_t r = 0; r < 4; ++r) {
      std::cout << "  ";
      for (std::size_t c = 0; c < 4; ++c) {
        auto [sign, unit] = q.products[r][c];
        std::cout << (sign < 0 ? " -" : "  ") << (unit < 0 ? "?" : q.labels[static_cast<std::size_t>(unit)]);
      }
      std::cout << "\n";
    }
    Event e = lorentz_boost_velocity(ncw::make_rational(3, 5), {ncw::Scalar(1), ncw::Scalar(0)});
    std::cout << "boost v = 3/5: (1, 0) ↦ (" << e.t.to_string() << ", " << e.x.to_string() << ")\n\n";
  }
  return print_report(report, s);
}

ncw::Scalar json_scalar(const json& v) {
  if (v.is_number_integer()) return ncw::Scalar(v.get<long>());
  if (v.is_string()) return ncw::Scalar(ncw::parse_rational(v.get<std::string>()));
  throw std::invalid_argument("matrix entries must be integers or rational strings");
}

int cmd_matrix_decompose(const std::string& text) {
  json input = json::parse(text);
  if (!input.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  std::vector<std::vector<ncw::Scalar>> rows;
  for (const auto& row : input) {
    if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<ncw::Scalar> r;
    for (const auto& v : row) r.push_back(json_scalar(v));
    rows.push_back(std::move(r));
  }
  auto m = ncw::iterant::Matrix::from_rows(rows);
  auto d = ncw::iterant::matrix_decompose(m);
  json j;
  j["factor"] = d.factor.get_str();
  json terms = json::array();
  for (const auto& t : d.terms) {
    json diag = json::array();
    for (const auto& x : t.diagonal) diag.push_back(x.to_string());
    terms.push_back({{"diagonal", std::move(diag)}, {"permutation", t.permutation}});
  }
  j["terms"] = std::move(terms);
  j["reconstructs"] = d.element.to_matrix() == m;
  std::cout << j.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of non-commutative worlds"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", s.seed, "random seed");
    c->add_option("--max-steps", s.max_steps, "rewrite step limit");
    c->add_flag("--json", s.json, "JSON output");
  };

  std::string source;
  auto* reduce = app.add_subcommand("reduce", "parse, evaluate and reduce an expression");
  reduce->add_option("expression", source)->required();
  reduce->add_option("--world", s.world, "free | flat | flat-fn | abc | abc-commuting");
  add_common(reduce);

  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name)->required();
  verify->add_option("--trials", s.trials);
  verify->add_option("--length", s.length);
  verify->add_option("--range", s.range);
  verify->add_option("--levels", s.levels);
  verify->add_flag("--timing", s.timing, "include elapsed times");
  add_common(verify);

  auto* em = app.add_subcommand("em-sim", "electromagnetic theorem on random time series");
  em->add_option("--trials", s.trials);
  em->add_option("--length", s.length);
  em->add_option("--range", s.range);
  add_common(em);

  std::string series;
  auto* tower = app.add_subcommand("tower", "derivative tower of θ' = hθ");
  tower->add_option("--levels", s.levels);
  tower->add_option("--coeff-series", series)->check(CLI::IsMember({"h-prime", "h-prime-squared"}));
  add_common(tower);

  auto* iterant = app.add_subcommand("iterant", "iterant algebra");
  iterant->require_subcommand(1);
  auto* demo = iterant->add_subcommand("demo", "square root of -1, quaternions and boosts");
  add_common(demo);

  std::string matrix_text;
  auto* matrix = app.add_subcommand("matrix", "matrix operations");
  matrix->require_subcommand(1);
  auto* decompose = matrix->add_subcommand("decompose", "decompose a square matrix into iterants");
  decompose->add_option("matrix", matrix_text, "JSON array of rows")->required();

  std::string order = "all";
  auto* constraints = app.add_subcommand("constraints", "constraint identities");
  constraints->require_subcommand(1);
  auto* cverify = constraints->add_subcommand("verify", "verify constraint identities");
  cverify->add_option("--order", order)->check(CLI::IsMember({"1", "2", "3", "all"}));
  cverify->add_flag("--timing", s.timing);
  add_common(cverify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(source, s);
    if (*verify) {
      if (suite_name != "all") {
        const auto& names = ncw::suite::suite_names();
        if (std::find(names.begin(), names.end(), suite_name) == names.end()) {
          std::cerr << "error: unknown suite '" << suite_name << "'\n";
          return kUsage;
        }
      }
      return print_report(ncw::suite::run_suite(suite_name, suite_options(s)), s);
    }
    if (*em) return cmd_em_sim(s);
    if (*tower) return cmd_tower(s, series);
    if (*demo) return cmd_iterant_demo(s);
    if (*decompose) return cmd_matrix_decompose(matrix_text);
    if (*cverify) {
      ncw::suite::Report all;
      all.suite = "constraints";
      all.seed = s.seed;
      for (const char* k : {"1", "2", "3"}) {
        if (order != "all" && order != k) continue;
        auto r = ncw::suite::run_suite(std::string("constraints-") + k, suite_options(s));
        for (auto& c : r.checks) all.checks.push_back(std::move(c));
      }
      return print_report(all, s);
    }
  } catch (const ncw::expr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
