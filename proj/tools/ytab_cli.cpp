// ytab: batch entry point for sampling and verification experiments.
//
// Exit codes: 0 success, 1 configuration error, 2 verification failure,
// 3 infeasible sampler request.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ytab/error.hpp"
#include "ytab/experiments.hpp"
#include "ytab/version.hpp"

namespace {

using ytab::ExperimentConfig;
using ytab::ExperimentKind;

// Flag storage shared by all subcommands; only the parsed one is read.
struct Flags {
  std::string config_file;
  int m = 0;
  int n = 0;
  int k = 0;
  double t = 0.0;
  int replicates = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string sample;
  std::string jacobi_method;
  std::string conditional;
  int gibbs_sweeps = 0;
  int mcmc_sweeps = 0;
  std::uint64_t rejection_cap = 0;
  std::string centering;
  int bins = 0;
  std::vector<int> windows;
  std::string output_dir;
  int parallelism = 0;
};

struct Override {
  std::string flag;
  std::function<void(ExperimentConfig&)> apply;
};

struct Subcommand {
  CLI::App* app;
  ExperimentKind kind;
  ExperimentConfig defaults;
  std::vector<Override> overrides;
};

void add_common(Subcommand& sc, Flags& f) {
  CLI::App* app = sc.app;
  auto opt = [&](const std::string& flag, auto& storage, const std::string& help,
                 std::function<void(ExperimentConfig&)> apply) {
    app->add_option(flag, storage, help);
    sc.overrides.push_back({flag, std::move(apply)});
  };
  app->add_option("--config", f.config_file, "JSON config file; flags override its values");
  opt("--m", f.m, "rows (0: square)", [&f](ExperimentConfig& c) { c.m = f.m; });
  opt("--n", f.n, "columns / square size", [&f](ExperimentConfig& c) { c.n = f.n; });
  opt("--k", f.k, "diagonal index (0: experiment default)",
      [&f](ExperimentConfig& c) { c.k = f.k; });
  opt("--t", f.t, "diagonal parameter / aspect ratio", [&f](ExperimentConfig& c) { c.t = f.t; });
  opt("--replicates", f.replicates, "number of replicates",
      [&f](ExperimentConfig& c) { c.replicates = f.replicates; });
  opt("--seed", f.seed, "master seed", [&f](ExperimentConfig& c) { c.seed.seed = f.seed; });
  opt("--stream", f.stream, "first stream index",
      [&f](ExperimentConfig& c) { c.seed.stream = f.stream; });
  opt("--sampler", f.sample,
      "hook-walk | coupled | diagonal-algorithm | rejection | diagonal",
      [&f](ExperimentConfig& c) { c.sample = ytab::parse_sample_kind(f.sample); });
  opt("--jacobi-method", f.jacobi_method, "tridiagonal | mcmc | rejection",
      [&f](ExperimentConfig& c) { c.sampler.method = ytab::parse_jacobi_method(f.jacobi_method); });
  opt("--conditional", f.conditional, "gibbs | rejection", [&f](ExperimentConfig& c) {
    c.sampler.conditional = ytab::parse_conditional_method(f.conditional);
  });
  opt("--gibbs-sweeps", f.gibbs_sweeps, "Gibbs sweeps per conditional (0: 8 x length)",
      [&f](ExperimentConfig& c) { c.sampler.gibbs_sweeps = f.gibbs_sweeps; });
  opt("--mcmc-sweeps", f.mcmc_sweeps, "slice-sampling sweeps for --jacobi-method mcmc",
      [&f](ExperimentConfig& c) { c.sampler.mcmc_sweeps = f.mcmc_sweeps; });
  opt("--rejection-cap", f.rejection_cap, "proposal budget of rejection samplers",
      [&f](ExperimentConfig& c) { c.sampler.rejection_cap = f.rejection_cap; });
  opt("--centering", f.centering, "empirical-mean | lambda-plus",
      [&f](ExperimentConfig& c) { c.centering = ytab::parse_centering(f.centering); });
  opt("--bins", f.bins, "histogram bins", [&f](ExperimentConfig& c) { c.bins = f.bins; });
  opt("--windows", f.windows, "window sizes a_n for explore-conjecture",
      [&f](ExperimentConfig& c) { c.windows = f.windows; });
  opt("--output-dir", f.output_dir,
      std::string("output directory (default: $") + ytab::kOutputDirEnv + " or ytab_out)",
      [&f](ExperimentConfig& c) { c.output_dir = f.output_dir; });
  opt("--parallelism", f.parallelism, "replicate worker threads",
      [&f](ExperimentConfig& c) { c.parallelism = f.parallelism; });
}

ExperimentConfig defaults_for(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  switch (kind) {
    case ExperimentKind::kSample:
      c.n = 3;
      c.replicates = 10;
      break;
    case ExperimentKind::kCornerLaw:
      c.m = 2;
      c.n = 3;
      c.replicates = 10000;
      break;
    case ExperimentKind::kCornerClt:
      c.n = 50;
      c.t = 1.0;
      c.replicates = 10000;
      break;
    case ExperimentKind::kEdgeTw:
      c.n = 400;
      c.t = 0.5;
      c.replicates = 1000;
      break;
    case ExperimentKind::kLimitShape:
      c.n = 500;
      c.t = 0.5;
      c.replicates = 1;
      break;
    case ExperimentKind::kGueLink:
      c.n = 500;
      c.k = 2;
      c.replicates = 100000;
      break;
    case ExperimentKind::kVerify:
      break;
    case ExperimentKind::kExploreConjecture:
      c.n = 200;
      c.replicates = 500;
      break;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random rectangular Young tableaux: sampling, exact laws and "
               "asymptotic checks"};
  app.set_version_flag("--version", ytab::kVersion);
  app.require_subcommand(1);

  Flags flags;
  std::vector<Subcommand> subs;
  const std::pair<ExperimentKind, const char*> table[] = {
      {ExperimentKind::kSample, "draw tableaux or diagonals as NDJSON"},
      {ExperimentKind::kCornerLaw, "exact corner law, enumeration check, hook-walk histogram"},
      {ExperimentKind::kCornerClt, "gaussian fluctuations of the corner entry"},
      {ExperimentKind::kEdgeTw, "Tracy-Widom fluctuations of the largest diagonal point"},
      {ExperimentKind::kLimitShape, "diagonal empirical law against the limit shape"},
      {ExperimentKind::kGueLink, "short central diagonals against the GUE"},
      {ExperimentKind::kVerify, "run the invariant suite"},
      {ExperimentKind::kExploreConjecture, "dump scaled samples for intermediate windows"},
  };
  subs.reserve(std::size(table));
  for (const auto& [kind, help] : table) {
    Subcommand sc{app.add_subcommand(ytab::to_string(kind), help), kind, defaults_for(kind), {}};
    add_common(sc, flags);
    subs.push_back(std::move(sc));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (Subcommand& sc : subs) {
      if (!sc.app->parsed()) continue;
      ExperimentConfig cfg = sc.defaults;
      if (!flags.config_file.empty()) {
        std::ifstream in(flags.config_file);
        if (!in) throw ytab::ConfigError("cannot read " + flags.config_file);
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          throw ytab::ConfigError(std::string("config file is not JSON: ") + e.what());
        }
        cfg = ytab::experiment_config_from_json(j, cfg);
        cfg.kind = sc.kind;
      }
      for (const Override& o : sc.overrides) {
        if (sc.app->count(o.flag) > 0) o.apply(cfg);
      }
      const ytab::ExperimentResult result = ytab::run_experiment(cfg);
      std::cout << result.summary.dump(2) << '\n';
      for (const auto& p : result.files) std::cerr << "wrote " << p.string() << '\n';
      return result.passed ? 0 : 2;
    }
  } catch (const ytab::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const ytab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
