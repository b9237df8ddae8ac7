#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relax/errors.hpp"
#include "relax/harness.hpp"
#include "relax/oracles.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw relax::ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, double> parse_kv(const std::vector<std::string>& pairs) {
  std::map<std::string, double> out;
  for (const std::string& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw relax::ConfigError("--params expects key=value, got " + p);
    out[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxation-based online learning experiments"};
  app.require_subcommand(1);

  std::string config_path, battery_path, game_path, out_dir, format;
  std::vector<std::string> params;
  std::string bound_id, oracle_kind;
  long long seed = -1, seeds = -1;

  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "JSON experiment config")->required();
  run->add_option("--seed", seed, "Override the base seed");
  run->add_option("--seeds", seeds, "Override the seed count");
  run->add_option("--out-dir", out_dir, "Write reports to this directory");
  run->add_option("--format", format, "Report format: csv|json");

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate a regret bound");
  bounds->add_option("bound_id", bound_id, "Bound identifier")->required();
  bounds->add_option("--params", params, "key=value bound parameters");

  CLI::App* admiss = app.add_subcommand(
      "check-admissibility", "Sweep the admissibility checker over a battery");
  admiss->add_option("--battery", battery_path, "JSON battery file");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Exact game value / sequential complexity");
  oracle->add_option("kind", oracle_kind, "value|rademacher")->required();
  oracle->add_option("game", game_path, "JSON game file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      relax::ExperimentConfig cfg =
          relax::parse_experiment_config(read_file(config_path));
      if (seed >= 0) cfg.seed_base = static_cast<uint64_t>(seed);
      if (seeds >= 0) cfg.seed_count = static_cast<int>(seeds);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (!format.empty()) {
        if (format != "csv" && format != "json")
          throw relax::ConfigError("outputs.format");
        cfg.format = format;
      }
      relax::ExperimentResult result = relax::run_experiment(cfg);
      relax::write_experiment_outputs(cfg, result);
      std::cout << result.aggregate_json() << "\n";
      return result.all_passed ? 0 : 1;
    }
    if (*bounds) {
      double v = relax::evaluate_bound(bound_id, parse_kv(params));
      std::printf("%.17g\n", v);
      return 0;
    }
    if (*admiss) {
      relax::SweepResult result =
          battery_path.empty()
              ? relax::admissibility_sweep()
              : relax::admissibility_sweep_on(
                    relax::load_battery_json(read_file(battery_path)));
      std::cout << result.to_json() << "\n";
      return result.all_ok ? 0 : 1;
    }
    if (*oracle) {
      relax::OnlineGame game = relax::load_game_json(read_file(game_path));
      if (oracle_kind == "value") {
        std::printf("%.17g\n", relax::exact_value(game).root());
        return 0;
      }
      if (oracle_kind == "rademacher") {
        std::printf("%.17g\n", relax::seq_rademacher(game, {}, 2.0));
        return 0;
      }
      throw relax::ConfigError("oracle kind must be value or rademacher");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
