// ncergo: experiment runner for the quantum-torus and free-group dual
// systems. Subcommands:
//   verify   -- run the property suites, one PASS/FAIL line per invariant
//   average  -- ergodic averages of a torus monomial vs. its expectation limit
//   disjoint -- coupling averages vs. the limiting joining
//   group    -- dual-system correlation averages vs. the finite-orbit target
//   oracle   -- symbolic algebra against the truncated matrix representation
// Tables are CSV (size,re_value,im_value,re_limit,im_limit,abs_error) written
// atomically; identical config and seed give byte-identical output.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncergo/action.hpp"
#include "ncergo/config.hpp"
#include "ncergo/coupling.hpp"
#include "ncergo/csv.hpp"
#include "ncergo/dual_system.hpp"
#include "ncergo/folner.hpp"
#include "ncergo/verify.hpp"

namespace {

using namespace ncergo;

int run_verify(const std::string& suite, std::uint64_t seed) {
  const std::vector<SuiteResult> results = run_verify_suites(seed, suite);
  if (results.empty()) {
    std::cerr << "error: no suite named '" << suite << "'\n";
    return 2;
  }
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    if (r.pass) {
      std::printf("PASS %s %s\n", r.suite.c_str(), r.invariant.c_str());
    } else {
      std::printf("FAIL %s %s %.17g\n", r.suite.c_str(), r.invariant.c_str(), r.deviation);
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}

int run_average(const std::string& config_path, const std::string& out_path) {
  const ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (cfg.kind != ExperimentConfig::SystemKind::QTorus || !cfg.observable_a) {
    throw std::invalid_argument(
        "average needs [system] kind = qtorus and an [observable] a = u^INT v^INT entry");
  }
  const ActionSpec spec = cfg.action();
  const RegionFactory make_region = cfg.region_factory();
  const Monomial w = *cfg.observable_a;
  const auto freq = spec.frequency(w);
  const Complex limit{spec.is_fixed(w) ? 1.0 : 0.0, 0.0};

  std::vector<AverageRow> rows;
  for (const SurdScalar& size : cfg.sizes) {
    const Complex value =
        char_average(std::span<const SurdScalar>(freq.data(),
                                                 static_cast<std::size_t>(spec.dimension())),
                     make_region(size));
    rows.push_back({size.to_double(), value, limit, std::abs(value - limit)});
  }
  write_rows_csv(out_path, rows);
  return 0;
}

int run_disjoint(const std::string& config_path, const std::string& out_path) {
  const ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if ((cfg.kind != ExperimentConfig::SystemKind::QTorusPair &&
       cfg.kind != ExperimentConfig::SystemKind::QTorusMirror) ||
      !cfg.observable_c) {
    throw std::invalid_argument(
        "disjoint needs [system] kind = qtorus_pair or qtorus_mirror and an [observable] "
        "c = u^INT v^INT w^INT z^INT entry");
  }
  const TensorElement c =
      TensorElement::monomial_term(cfg.theta1, cfg.theta2, *cfg.observable_c);
  const std::vector<AverageRow> rows =
      disjointness_average(cfg.state(), c, cfg.action(), cfg.sizes, cfg.region_factory());
  write_rows_csv(out_path, rows);
  return 0;
}

int run_group(const std::string& config_path, const std::string& out_path) {
  const ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (cfg.kind != ExperimentConfig::SystemKind::GroupDual || !cfg.dual || !cfg.word_a ||
      !cfg.word_b) {
    throw std::invalid_argument(
        "group needs [system] kind = group_dual and [observable] a and b word entries");
  }
  const std::vector<AverageRow> rows =
      correlation_experiment(GroupObservable::basis(*cfg.word_a),
                             GroupObservable::basis(*cfg.word_b), *cfg.dual,
                             cfg.integer_sizes());
  write_rows_csv(out_path, rows);
  return 0;
}

int run_oracle(const std::string& theta_literal, int truncation, int samples,
               std::uint64_t seed) {
  const SurdScalar theta = SurdScalar::parse(theta_literal);
  const int support = std::min(4, truncation / 4 + 1);
  const double deviation =
      oracle_equivalence_deviation(seed, theta, samples, truncation, support, 8);
  if (deviation <= 1e-9) {
    std::printf("PASS oracle %.17g\n", deviation);
    return 0;
  }
  std::printf("FAIL oracle oracle_equivalence %.17g\n", deviation);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum torus / free group ergodic average experiments"};
  app.require_subcommand(1);

  std::string suite;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "restrict to one suite");
  verify->add_option("--seed", seed, "seed for the randomized suites");

  std::string config_path, out_path;
  auto* average = app.add_subcommand("average", "ergodic average table");
  average->add_option("--config", config_path, "experiment config")->required();
  average->add_option("--out", out_path, "output CSV")->required();

  auto* disjoint = app.add_subcommand("disjoint", "coupling average table");
  disjoint->add_option("--config", config_path, "experiment config")->required();
  disjoint->add_option("--out", out_path, "output CSV")->required();

  auto* group = app.add_subcommand("group", "dual-system correlation table");
  group->add_option("--config", config_path, "experiment config")->required();
  group->add_option("--out", out_path, "output CSV")->required();

  std::string theta_literal = "1/5";
  int truncation = 16;
  int samples = 100;
  auto* oracle = app.add_subcommand("oracle", "matrix representation cross-check");
  oracle->add_option("--theta", theta_literal, "deformation parameter literal");
  oracle->add_option("--truncation", truncation, "basis radius")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--samples", samples, "number of random elements")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed, "sample seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(suite, seed);
    if (average->parsed()) return run_average(config_path, out_path);
    if (disjoint->parsed()) return run_disjoint(config_path, out_path);
    if (group->parsed()) return run_group(config_path, out_path);
    if (oracle->parsed()) return run_oracle(theta_literal, truncation, samples, seed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
