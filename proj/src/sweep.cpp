#include "staircut/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "staircut/floorplan_io.hpp"
#include "staircut/rng.hpp"
#include "staircut/tree.hpp"

namespace staircut {

std::vector<Frac> default_gamma_grid() {
  std::vector<Frac> g;
  for (int k = 1; k <= 7; ++k) g.push_back(Frac::of(k, 10));
  return g;
}

std::vector<Frac> default_beta_grid() {
  std::vector<Frac> g;
  for (int k = 0; k <= 3; ++k) g.push_back(Frac::of(k, 10));
  return g;
}

namespace {

void check_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                const char* what) {
  for (const auto& [key, val] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw Error(std::string("sweep config: unknown key '") + key + "' in " + what);
  }
}

std::vector<Frac> grid_from(const nlohmann::json& j) {
  std::vector<Frac> g;
  for (const auto& v : j) g.push_back(Frac::from_decimal(v.get<double>()));
  return g;
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  check_keys(j,
             {"inputs", "instances_per_circuit", "gamma_grid", "beta_grid", "modes", "balance",
              "seed", "trials", "route", "model"},
             "config");
  SweepConfig cfg;
  cfg.gamma_grid = default_gamma_grid();
  cfg.beta_grid = default_beta_grid();
  if (!j.contains("inputs") || !j["inputs"].is_array() || j["inputs"].empty())
    throw Error("sweep config: needs a non-empty 'inputs' array");
  for (const auto& in : j["inputs"]) {
    check_keys(in, {"name", "path", "gen"}, "input");
    SweepInput si;
    si.name = in.at("name").get<std::string>();
    if (in.contains("path") == in.contains("gen"))
      throw Error("sweep config: input '" + si.name + "' needs exactly one of path/gen");
    if (in.contains("path")) si.path = in["path"].get<std::string>();
    if (in.contains("gen")) {
      const auto& g = in["gen"];
      check_keys(g, {"blocks", "seed", "nets", "aspect_lo", "aspect_hi", "deg_min", "deg_max"},
                 "gen");
      GenSpec gs;
      gs.n_blocks = g.at("blocks").get<int>();
      gs.n_nets = g.at("nets").get<int>();
      if (g.contains("seed")) gs.seed = g["seed"].get<std::uint64_t>();
      if (g.contains("aspect_lo")) gs.aspect_lo = g["aspect_lo"].get<double>();
      if (g.contains("aspect_hi")) gs.aspect_hi = g["aspect_hi"].get<double>();
      if (g.contains("deg_min")) gs.deg_min = g["deg_min"].get<int>();
      if (g.contains("deg_max")) gs.deg_max = g["deg_max"].get<int>();
      si.gen = gs;
    }
    cfg.inputs.push_back(std::move(si));
  }
  if (j.contains("instances_per_circuit"))
    cfg.instances_per_circuit = j["instances_per_circuit"].get<int>();
  if (cfg.instances_per_circuit < 1) throw Error("sweep config: instances must be >= 1");
  if (j.contains("gamma_grid")) cfg.gamma_grid = grid_from(j["gamma_grid"]);
  if (j.contains("beta_grid")) cfg.beta_grid = grid_from(j["beta_grid"]);
  if (j.contains("modes")) {
    cfg.modes.clear();
    for (const auto& m : j["modes"]) cfg.modes.push_back(mode_from_name(m.get<std::string>()));
  }
  if (j.contains("balance")) {
    std::string b = j["balance"].get<std::string>();
    if (b == "area")
      cfg.baltype = BalanceType::Area;
    else if (b == "number")
      cfg.baltype = BalanceType::Number;
    else
      throw Error("sweep config: balance must be 'area' or 'number'");
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("route")) cfg.route = j["route"].get<bool>();
  if (j.contains("model")) {
    const auto& m = j["model"];
    check_keys(m, {"layers", "wire_pitch", "escape_vias"}, "model");
    if (m.contains("layers")) cfg.model.layers = m["layers"].get<int>();
    if (m.contains("wire_pitch")) cfg.model.wire_pitch = m["wire_pitch"].get<Coord>();
    if (m.contains("escape_vias")) cfg.model.escape_vias = m["escape_vias"].get<int>();
  }
  return cfg;
}

namespace {

bool weights_fit(const Frac& g, const Frac& b) {
  // gamma + beta <= 1, exactly.
  return g.num * b.den + b.num * g.den <= g.den * b.den;
}

}  // namespace

std::vector<SweepInstance> sweep_instances(const SweepConfig& cfg) {
  std::vector<SweepInstance> out;
  for (const SweepInput& in : cfg.inputs) {
    int count = in.gen ? cfg.instances_per_circuit : 1;
    for (int i = 0; i < count; ++i) {
      SweepInstance inst;
      inst.circuit = in.name;
      inst.index = i;
      inst.seed = derive_seed(derive_seed(cfg.seed, in.name), static_cast<std::uint64_t>(i));
      try {
        if (in.gen) {
          GenSpec gs = *in.gen;
          gs.seed = derive_seed(gs.seed, static_cast<std::uint64_t>(i));
          inst.fp = generate_floorplan(gs);
        } else {
          inst.fp = load_floorplan_file(in.path);
        }
      } catch (const std::exception& e) {
        inst.error = e.what();
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  SweepReport rep;
  rep.rng_algorithm = kRngAlgorithm;
  rep.seed = cfg.seed;
  for (const SweepInstance& inst : sweep_instances(cfg)) {
    for (Mode mode : cfg.modes) {
      for (const Frac& gamma : cfg.gamma_grid) {
        for (const Frac& beta : cfg.beta_grid) {
          if (!weights_fit(gamma, beta)) continue;
          SweepRow row;
          row.circuit = inst.circuit;
          row.instance = inst.index;
          row.mode = mode;
          row.gamma = gamma;
          row.beta = beta;
          if (!inst.error.empty()) {
            row.error = inst.error;
            rep.rows.push_back(std::move(row));
            continue;
          }
          auto t0 = std::chrono::steady_clock::now();
          try {
            Params p = Params::make(gamma, beta, cfg.baltype);
            auto tree = build_tree(inst.fp, p, mode, inst.seed, cfg.trials);
            TreeMetrics tm = tree_metrics(*tree);
            row.balr_mean = tm.mean_balr;
            row.bend_ratio_mean = tm.mean_bend_ratio;
            row.netcut_ratio_mean = tm.mean_netcut_ratio;
            row.gain_mean = tm.mean_gain;
            row.tree_height = tm.height;
            row.max_segments = tm.max_segments;
            if (cfg.route && !inst.fp.nets.empty()) {
              RouteResult rr = route_nets(*tree, inst.fp, cfg.model);
              ViaSummary vs = via_summary(rr.nets);
              row.total_vias = vs.total_vias;
              row.total_length = vs.total_length;
              row.max_congestion = rr.congestion.max_ratio;
            }
          } catch (const std::exception& e) {
            row.error = e.what();
          }
          auto t1 = std::chrono::steady_clock::now();
          row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          rep.rows.push_back(std::move(row));
        }
      }
    }
  }
  return rep;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "circuit,instance,mode,gamma,beta,balr_mean,bend_ratio_mean,netcut_ratio_mean,"
        "gain_mean,tree_height,max_segments,total_vias,total_length,max_congestion,rng,seed,"
        "error\n";
  for (const SweepRow& r : report.rows) {
    os << csv_quote(r.circuit) << "," << r.instance << "," << mode_name(r.mode) << ","
       << r.gamma.str() << "," << r.beta.str() << "," << fmt(r.balr_mean) << ","
       << fmt(r.bend_ratio_mean) << "," << fmt(r.netcut_ratio_mean) << "," << fmt(r.gain_mean)
       << "," << r.tree_height << "," << r.max_segments << "," << r.total_vias << ","
       << fmt(r.total_length) << "," << fmt(r.max_congestion) << "," << report.rng_algorithm
       << "," << report.seed << "," << csv_quote(r.error) << "\n";
  }
  return os.str();
}

nlohmann::json sweep_json(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"circuit", r.circuit},
                    {"instance", r.instance},
                    {"mode", mode_name(r.mode)},
                    {"gamma", r.gamma.str()},
                    {"beta", r.beta.str()},
                    {"balr_mean", r.balr_mean},
                    {"bend_ratio_mean", r.bend_ratio_mean},
                    {"netcut_ratio_mean", r.netcut_ratio_mean},
                    {"gain_mean", r.gain_mean},
                    {"tree_height", r.tree_height},
                    {"max_segments", r.max_segments},
                    {"total_vias", r.total_vias},
                    {"total_length", r.total_length},
                    {"max_congestion", r.max_congestion},
                    {"wall_ms", r.wall_ms},
                    {"rng", report.rng_algorithm},
                    {"seed", report.seed},
                    {"error", r.error}});
  }
  return {{"rng", report.rng_algorithm}, {"seed", report.seed}, {"rows", std::move(rows)}};
}

BenchReport run_bench(const SweepConfig& cfg, int reps) {
  if (reps < 1) throw Error("bench: need at least one rep");
  Frac gamma = cfg.gamma_grid.empty() ? Frac::of(2, 5) : cfg.gamma_grid.front();
  Frac beta = cfg.beta_grid.empty() ? Frac::of(0, 1) : cfg.beta_grid.front();
  if (!weights_fit(gamma, beta)) throw Error("bench: first grid point has gamma + beta > 1");
  Params p = Params::make(gamma, beta, cfg.baltype);

  BenchReport rep;
  std::vector<std::vector<double>> per_mode(cfg.modes.size());  // ratios vs BFS
  for (const SweepInstance& inst : sweep_instances(cfg)) {
    if (inst.index != 0) continue;  // one instance per circuit
    if (!inst.error.empty()) throw Error("bench: " + inst.circuit + ": " + inst.error);
    std::vector<double> secs;
    for (Mode mode : cfg.modes) {
      double best = 0.0;
      for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        auto tree = build_tree(inst.fp, p, mode, inst.seed, cfg.trials);
        auto t1 = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(t1 - t0).count();
        if (r == 0 || s < best) best = s;
      }
      rep.rows.push_back({inst.circuit, mode, best});
      secs.push_back(best);
    }
    auto bfs = std::find(cfg.modes.begin(), cfg.modes.end(), Mode::BFS);
    if (bfs != cfg.modes.end()) {
      double base = secs[static_cast<size_t>(bfs - cfg.modes.begin())];
      if (base > 0.0)
        for (size_t m = 0; m < cfg.modes.size(); ++m) per_mode[m].push_back(secs[m] / base);
    }
  }
  for (size_t m = 0; m < cfg.modes.size(); ++m) {
    if (per_mode[m].empty()) continue;
    double acc = 0.0;
    for (double v : per_mode[m]) acc += std::log(v);
    rep.normalized_geomean.emplace_back(cfg.modes[m],
                                        std::exp(acc / static_cast<double>(per_mode[m].size())));
  }
  return rep;
}

std::string bench_table(const BenchReport& report) {
  std::ostringstream os;
  char buf[128];
  os << "circuit              mode   seconds\n";
  for (const BenchRow& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "%-20s %-6s %10.6f\n", r.circuit.c_str(),
                  mode_name(r.mode), r.seconds);
    os << buf;
  }
  if (!report.normalized_geomean.empty()) {
    os << "\ngeomean vs BFS\n";
    for (const auto& [mode, g] : report.normalized_geomean) {
      std::snprintf(buf, sizeof(buf), "%-6s %10.4f\n", mode_name(mode), g);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace staircut
