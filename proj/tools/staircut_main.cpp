#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "staircut/enumeration.hpp"
#include "staircut/floorplan_io.hpp"
#include "staircut/svg.hpp"
#include "staircut/sweep.hpp"

namespace fs = std::filesystem;
using namespace staircut;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write '" + path + "'");
  os << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// Shared --in/--gen input selection for render and oracle.
struct InputArgs {
  std::string in;
  int gen_blocks = 0;
  int gen_nets = -1;
  std::uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, InputArgs& a) {
  cmd->add_option("--in", a.in, "floorplan JSON file");
  cmd->add_option("--gen", a.gen_blocks, "generate a mosaic with this many blocks instead");
  cmd->add_option("--nets", a.gen_nets, "net count for --gen (default 3x blocks)");
  cmd->add_option("--seed", a.seed, "seed for generation and randomized search");
}

Floorplan resolve_input(const InputArgs& a) {
  if (a.in.empty() == (a.gen_blocks == 0)) throw Error("give exactly one of --in or --gen");
  if (!a.in.empty()) return load_floorplan_file(a.in);
  GenSpec gs;
  gs.n_blocks = a.gen_blocks;
  gs.n_nets = a.gen_nets < 0 ? 3 * a.gen_blocks : a.gen_nets;
  gs.seed = a.seed;
  return generate_floorplan(gs);
}

BalanceType balance_from(const std::string& s) {
  if (s == "area") return BalanceType::Area;
  if (s == "number") return BalanceType::Number;
  throw Error("balance must be 'area' or 'number'");
}

bool weights_fit(const Frac& g, const Frac& b) {
  return g.num * b.den + b.num * g.den <= g.den * b.den;
}

int run_gen(const GenSpec& gs, const std::string& out) {
  Floorplan fp = generate_floorplan(gs);
  emit(out, save_floorplan(fp));
  if (!out.empty()) {
    FloorplanStats st = stats(fp);
    std::cout << out << ": n=" << st.n << " k=" << st.k << " avg_degree=" << st.avg_net_degree
              << "\n";
  }
  return 0;
}

int run_sweep_cmd(SweepConfig cfg, const std::string& outdir, bool svg) {
  SweepReport rep = run_sweep(cfg);
  fs::create_directories(outdir);
  write_file(outdir + "/report.csv", sweep_csv(rep));
  write_file(outdir + "/report.json", sweep_json(rep).dump(2) + "\n");
  if (svg && !cfg.modes.empty()) {
    const Frac* g0 = nullptr;
    const Frac* b0 = nullptr;
    for (const Frac& g : cfg.gamma_grid) {
      for (const Frac& b : cfg.beta_grid)
        if (weights_fit(g, b)) {
          g0 = &g;
          b0 = &b;
          break;
        }
      if (g0) break;
    }
    if (g0) {
      Params p = Params::make(*g0, *b0, cfg.baltype);
      for (const SweepInstance& inst : sweep_instances(cfg)) {
        if (!inst.error.empty()) continue;
        auto tree = build_tree(inst.fp, p, cfg.modes.front(), inst.seed, cfg.trials);
        write_file(outdir + "/" + inst.circuit + "-" + std::to_string(inst.index) + ".svg",
                   render_tree_svg(inst.fp, *tree));
      }
    }
  }
  int bad = 0;
  for (const SweepRow& r : rep.rows)
    if (!r.error.empty()) ++bad;
  std::cout << outdir << "/report.csv: " << rep.rows.size() << " rows";
  if (bad) std::cout << ", " << bad << " failed";
  std::cout << "\n";
  return bad ? 2 : 0;
}

int run_render(const Floorplan& fp, const Params& p, Mode mode, std::uint64_t seed, int trials,
               bool root_only, const RenderOptions& opts, const std::string& out) {
  auto tree = build_tree(fp, p, mode, seed, trials);
  if (root_only) {
    std::vector<std::pair<Polyline, StairDir>> cuts;
    CutBoundary cb = trace_cut_boundary(fp, tree->cut.left, tree->stype);
    for (Polyline& pl : cb.paths) cuts.emplace_back(std::move(pl), tree->stype);
    emit(out, render_svg(fp, cuts, opts));
  } else {
    emit(out, render_tree_svg(fp, *tree, opts));
  }
  return 0;
}

int run_oracle(const Floorplan& fp, const Params& p, std::uint64_t seed, int trials, int cap,
               const std::vector<Mode>& modes, const std::string& dot_out) {
  Bag bag = build_bag(fp, StairDir::MIS);
  StaircaseSet set = enumerate_staircases(bag, cap);
  HasseDiagram hasse = build_hasse(set);
  CutEval oracle = best_staircase(set, fp, fp.nets, p);

  auto names = [&](const std::vector<int>& ids) {
    std::string s = "{";
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) s += ",";
      s += fp.blocks[ids[i]].name;
    }
    return s + "}";
  };
  std::cout << "blocks: " << fp.n() << ", nets: " << fp.k() << "\n";
  std::cout << "staircases: " << set.ideals.size() << "\n";
  std::cout << "oracle best: gain=" << oracle.gain << " left=" << names(oracle.left) << "\n";

  int rc = 0;
  std::vector<const Chain*> highlight;
  std::vector<SearchResult> results;
  results.reserve(modes.size());
  for (Mode m : modes) results.push_back(run_search(m, bag, fp, fp.nets, p, seed, trials));
  for (size_t i = 0; i < modes.size(); ++i) {
    const SearchResult& sr = results[i];
    bool chains_ok = true;
    for (const Chain& c : sr.chains) {
      chains_ok = chains_ok && verify_chain(c, hasse);
      highlight.push_back(&c);
    }
    bool bound_ok = !cut_better(sr.best, oracle, p);
    std::cout << mode_name(modes[i]) << " best: gain=" << sr.best.gain
              << " left=" << names(sr.best.left) << " chains=" << sr.chains.size()
              << " valid=" << (chains_ok ? "yes" : "NO")
              << " within-oracle=" << (bound_ok ? "yes" : "NO") << "\n";
    if (!chains_ok || !bound_ok) rc = 2;
  }
  if (!dot_out.empty()) write_file(dot_out, hasse_to_dot(hasse, fp, highlight));
  return rc;
}

int run_bench_cmd(const SweepConfig& cfg, int reps, const std::string& out) {
  BenchReport rep = run_bench(cfg, reps);
  std::string table = bench_table(rep);
  emit(out, table);
  if (!out.empty()) std::cout << table;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-bend monotone staircase bipartitioning of rectangular floorplans"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a mosaic floorplan with a random netlist");
  GenSpec gs;
  std::string gen_out;
  gen->add_option("--blocks", gs.n_blocks, "number of blocks")->required();
  int gen_nets = -1;
  gen->add_option("--nets", gen_nets, "number of nets (default 3x blocks)");
  gen->add_option("--seed", gs.seed, "generator seed");
  gen->add_option("--aspect-lo", gs.aspect_lo, "lower split-ratio bound");
  gen->add_option("--aspect-hi", gs.aspect_hi, "upper split-ratio bound");
  gen->add_option("--deg-min", gs.deg_min, "minimum net degree");
  gen->add_option("--deg-max", gs.deg_max, "maximum net degree");
  gen->add_option("--out", gen_out, "output file (stdout when absent)");

  // sweep
  auto* sw = app.add_subcommand("sweep", "run the (gamma, beta) grid over instances and modes");
  std::string sw_config, sw_out = "out";
  std::uint64_t sw_seed = 0;
  std::vector<std::string> sw_modes;
  std::vector<double> sw_gamma, sw_beta;
  bool sw_no_svg = false;
  sw->add_option("--config", sw_config, "sweep config JSON")->required();
  sw->add_option("--out", sw_out, "output directory");
  auto* sw_seed_opt = sw->add_option("--seed", sw_seed, "override config seed");
  sw->add_option("--modes", sw_modes, "override mode list")->delimiter(',');
  sw->add_option("--gamma", sw_gamma, "override gamma grid")->delimiter(',');
  sw->add_option("--beta", sw_beta, "override beta grid")->delimiter(',');
  sw->add_flag("--no-svg", sw_no_svg, "skip per-instance SVG rendering");

  // render
  auto* rd = app.add_subcommand("render", "render a floorplan with its staircase cuts as SVG");
  InputArgs rd_in;
  add_input_flags(rd, rd_in);
  std::string rd_mode = "BFS", rd_balance = "area", rd_out;
  double rd_gamma = 0.4, rd_beta = 0.0;
  int rd_trials = 3;
  bool rd_root_only = false;
  RenderOptions rd_opts;
  bool rd_no_labels = false, rd_no_marks = false;
  rd->add_option("--mode", rd_mode, "search mode (BFS/DFS/RAND)");
  rd->add_option("--gamma", rd_gamma, "balance weight");
  rd->add_option("--beta", rd_beta, "bend weight");
  rd->add_option("--balance", rd_balance, "balance type (area/number)");
  rd->add_option("--trials", rd_trials, "RAND trials");
  rd->add_flag("--root-only", rd_root_only, "draw only the top-level cut");
  rd->add_option("--width", rd_opts.width, "drawing width in px");
  rd->add_flag("--no-labels", rd_no_labels, "omit block names");
  rd->add_flag("--no-bend-marks", rd_no_marks, "omit bend markers");
  rd->add_option("--out", rd_out, "output file (stdout when absent)");

  // oracle
  auto* orc = app.add_subcommand(
      "oracle", "enumerate all staircase cuts and check the search modes against them");
  InputArgs orc_in;
  add_input_flags(orc, orc_in);
  std::string orc_balance = "area", orc_dot;
  double orc_gamma = 0.4, orc_beta = 0.0;
  int orc_trials = 3, orc_cap = 20;
  std::vector<std::string> orc_modes{"BFS", "DFS", "RAND"};
  orc->add_option("--gamma", orc_gamma, "balance weight");
  orc->add_option("--beta", orc_beta, "bend weight");
  orc->add_option("--balance", orc_balance, "balance type (area/number)");
  orc->add_option("--trials", orc_trials, "RAND trials");
  orc->add_option("--cap", orc_cap, "block-count cap for enumeration");
  orc->add_option("--modes", orc_modes, "modes to verify")->delimiter(',');
  orc->add_option("--dot", orc_dot, "write the cut diagram with chains highlighted");

  // bench
  auto* bn = app.add_subcommand("bench", "time tree construction per circuit and mode");
  std::string bn_config, bn_out;
  int bn_reps = 3;
  bn->add_option("--config", bn_config, "sweep config JSON")->required();
  bn->add_option("--reps", bn_reps, "repetitions (minimum is reported)");
  bn->add_option("--out", bn_out, "write the table here as well");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gs.n_nets = gen_nets < 0 ? 3 * gs.n_blocks : gen_nets;
      return run_gen(gs, gen_out);
    }
    if (sw->parsed()) {
      nlohmann::json j = nlohmann::json::parse(read_file(sw_config));
      SweepConfig cfg = sweep_config_from_json(j);
      if (sw_seed_opt->count()) cfg.seed = sw_seed;
      if (!sw_modes.empty()) {
        cfg.modes.clear();
        for (const std::string& m : sw_modes) cfg.modes.push_back(mode_from_name(m));
      }
      if (!sw_gamma.empty()) {
        cfg.gamma_grid.clear();
        for (double g : sw_gamma) cfg.gamma_grid.push_back(Frac::from_decimal(g));
      }
      if (!sw_beta.empty()) {
        cfg.beta_grid.clear();
        for (double b : sw_beta) cfg.beta_grid.push_back(Frac::from_decimal(b));
      }
      return run_sweep_cmd(std::move(cfg), sw_out, !sw_no_svg);
    }
    if (rd->parsed()) {
      rd_opts.labels = !rd_no_labels;
      rd_opts.mark_bends = !rd_no_marks;
      return run_render(resolve_input(rd_in), Params::make(rd_gamma, rd_beta, balance_from(rd_balance)),
                        mode_from_name(rd_mode), rd_in.seed, rd_trials, rd_root_only, rd_opts,
                        rd_out);
    }
    if (orc->parsed()) {
      std::vector<Mode> modes;
      for (const std::string& m : orc_modes) modes.push_back(mode_from_name(m));
      return run_oracle(resolve_input(orc_in),
                        Params::make(orc_gamma, orc_beta, balance_from(orc_balance)),
                        orc_in.seed, orc_trials, orc_cap, modes, orc_dot);
    }
    if (bn->parsed()) {
      nlohmann::json j = nlohmann::json::parse(read_file(bn_config));
      return run_bench_cmd(sweep_config_from_json(j), bn_reps, bn_out);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
