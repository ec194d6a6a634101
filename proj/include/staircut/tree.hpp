#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "staircut/partitioner.hpp"

namespace staircut {

// Node of the recursive bipartition tree. Orientation alternates with depth
// (MIS on even levels). Each node carries its own sub-floorplan with local
// block ids plus the mapping back to top-level ids; nets inside fp keep
// their top-level origin id. Children exist only for sides with >= 2 blocks;
// one-block sides stay recorded on the node.
struct MscNode {
  int level = 0;
  StairDir stype = StairDir::MIS;
  std::string path;               // "" root, then "L"/"R" appended per level
  std::vector<int> block_ids;     // local id -> top-level id
  Floorplan fp;                   // local sub-floorplan
  CutEval cut;                    // left holds local ids
  std::vector<int> left_global;   // cut sides in top-level ids
  std::vector<int> right_global;
  std::vector<int> assigned_nets;  // origins of nets first split at this node
  int max_segments = 0;            // per-sequence maximum from this node's search
  std::unique_ptr<MscNode> left;
  std::unique_ptr<MscNode> right;
};

// Builds the full tree. seed feeds the randomized mode; child seeds are
// derived per subtree so results are reproducible node by node.
std::unique_ptr<MscNode> build_tree(const Floorplan& fp, const Params& p, Mode mode,
                                    std::uint64_t seed, int trials = 3);

struct LevelStats {
  int nodes = 0;
  double gain = 0.0;  // per-level means
  double balr = 0.0;
  double bend_ratio = 0.0;
  double netcut_ratio = 0.0;
};

struct TreeMetrics {
  int height = 0;      // max level + 1
  int node_count = 0;
  double mean_gain = 0.0;  // means over all nodes
  double mean_balr = 0.0;
  double mean_bend_ratio = 0.0;
  double mean_netcut_ratio = 0.0;
  int max_segments = 0;
  std::vector<LevelStats> per_level;
  std::vector<int> leaf_block_counts;  // sizes of undivided sides
};

TreeMetrics tree_metrics(const MscNode& root);

struct NetAssignment {
  int net_id = 0;  // top-level net id
  std::string path;
  int level = 0;
};

// Every top-level net mapped to the unique node where it is first split,
// ordered by level then by path ("L" before "R").
std::vector<NetAssignment> routing_order(const MscNode& root);

nlohmann::json tree_to_json(const MscNode& root);

}  // namespace staircut
