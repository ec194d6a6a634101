#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "staircut/generator.hpp"
#include "staircut/router.hpp"

namespace staircut {

struct SweepInput {
  std::string name;
  std::string path;             // native JSON file; empty when generated
  std::optional<GenSpec> gen;   // generated instances when set
};

struct SweepConfig {
  std::vector<SweepInput> inputs;
  int instances_per_circuit = 4;  // applies to generated inputs; files run once
  std::vector<Frac> gamma_grid;   // defaults 0.1 .. 0.7 step 0.1
  std::vector<Frac> beta_grid;    // defaults 0.0 .. 0.3 step 0.1
  std::vector<Mode> modes{Mode::BFS, Mode::DFS, Mode::RAND};
  BalanceType baltype = BalanceType::Area;
  std::uint64_t seed = 1;
  int trials = 3;
  bool route = true;
  RouteModel model;
};

SweepConfig sweep_config_from_json(const nlohmann::json& j);
std::vector<Frac> default_gamma_grid();
std::vector<Frac> default_beta_grid();

// One concrete run unit: a loaded or generated floorplan plus the seed its
// trees are built with. Load/generation failures land in error instead of
// throwing so a sweep can carry on.
struct SweepInstance {
  std::string circuit;
  int index = 0;
  Floorplan fp;
  std::uint64_t seed = 0;
  std::string error;
};

std::vector<SweepInstance> sweep_instances(const SweepConfig& cfg);

struct SweepRow {
  std::string circuit;
  int instance = 0;
  Mode mode = Mode::BFS;
  Frac gamma;
  Frac beta;
  double balr_mean = 0.0;
  double bend_ratio_mean = 0.0;
  double netcut_ratio_mean = 0.0;
  double gain_mean = 0.0;
  int tree_height = 0;
  int max_segments = 0;
  std::int64_t total_vias = 0;
  double total_length = 0.0;
  double max_congestion = 0.0;
  double wall_ms = 0.0;
  std::string error;  // empty on success
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::string rng_algorithm;
  std::uint64_t seed = 0;
};

// Runs the full grid: every input instance x mode x (gamma, beta) with
// gamma + beta <= 1. Row-level failures are recorded, not thrown.
SweepReport run_sweep(const SweepConfig& cfg);

// Deterministic CSV: wall-clock time is deliberately left out so repeated
// runs of the same config are byte-identical; timings live in the JSON view.
std::string sweep_csv(const SweepReport& report);
nlohmann::json sweep_json(const SweepReport& report);

struct BenchRow {
  std::string circuit;
  Mode mode = Mode::BFS;
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::pair<Mode, double>> normalized_geomean;  // vs the BFS mode
};

// Times tree construction per circuit and mode (min over reps), at the first
// grid point (parsing and generation excluded from the timed section).
BenchReport run_bench(const SweepConfig& cfg, int reps = 3);
std::string bench_table(const BenchReport& report);

}  // namespace staircut
