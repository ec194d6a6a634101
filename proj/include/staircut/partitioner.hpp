#pragma once

#include <cstdint>
#include <vector>

#include "staircut/staircase.hpp"

namespace staircut {

enum class Mode { BFS, DFS, RAND };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// One greedy growth sequence: cuts with |left| = 1 .. n-1, each extending the
// previous one by a single block, every one a valid staircase cut.
struct Chain {
  Mode mode = Mode::BFS;
  int trial = 0;
  std::vector<CutEval> cuts;
  int max_segments = 0;  // largest per-cut segment count along the sequence
};

struct SearchResult {
  CutEval best;
  std::vector<CutEval> explored;  // deduplicated by left set, discovery order
  std::vector<Chain> chains;
  int max_segments = 0;
};

// Level-order growth from the source. A vertex is admitted once all its
// predecessors are inside; each admission is evaluated. When the edge
// frontier stalls on a multi-minimal graph (degenerate sub-floorplans), the
// smallest admissible vertex is pulled in directly so the chain always
// reaches n-1 cuts.
SearchResult search_bfs(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                        const Params& p);

// Depth-first variant: admitted vertices are expanded immediately; vertices
// seen before their predecessors close are picked up along the backtrack.
SearchResult search_dfs(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                        const Params& p);

// Randomized variant: per trial, repeatedly picks a uniformly random
// unexplored cut edge and admits its target when predecessor-closed.
// explored is the union over all trials. Deterministic in (seed, trials).
SearchResult search_rand(const Bag& bag, const Floorplan& fp, const std::vector<Net>& nets,
                         const Params& p, std::uint64_t seed, int trials = 3);

SearchResult run_search(Mode mode, const Bag& bag, const Floorplan& fp,
                        const std::vector<Net>& nets, const Params& p,
                        std::uint64_t seed = 0, int trials = 3);

struct PickHistogram {
  std::vector<std::int64_t> counts;  // counts[i] = picks of position i+1
  double mean = 0.0;
};

// Samples uniform picks over a vertex's successor positions 1..p. The mean
// estimates (p + 1) / 2.
PickHistogram neighbor_pick_distribution(const Bag& bag, int vertex, std::int64_t samples,
                                         std::uint64_t seed);

}  // namespace staircut
