#pragma once

#include <string>
#include <vector>

#include "staircut/floorplan.hpp"

namespace staircut {

// Staircase orientation. MIS cuts separate the top-left corner region from
// the bottom-right one with a monotonically increasing staircase; MDS cuts
// separate bottom-left from top-right with a decreasing staircase.
enum class StairDir { MIS, MDS };

inline const char* stair_name(StairDir d) { return d == StairDir::MIS ? "MIS" : "MDS"; }

struct BagEdge {
  int to = -1;
  Segment seg;  // shared boundary piece, re-derivable from the two rectangles
};

// Block adjacency graph: a directed acyclic graph over blocks. For MIS the
// edge (i,j) means block i lies left of or above j across a shared boundary
// piece; for MDS, left of or below. Successor lists are kept in a canonical
// order (shared segment top-to-bottom, then left-to-right) so greedy
// traversals are deterministic.
struct Bag {
  StairDir dir = StairDir::MIS;
  int n = 0;
  std::vector<std::vector<BagEdge>> adj;
  std::vector<std::vector<int>> preds;
  int source = -1;
  int sink = -1;
  int edge_count() const {
    int m = 0;
    for (const auto& a : adj) m += static_cast<int>(a.size());
    return m;
  }
};

struct BagOptions {
  Coord eps = 0;                 // abutment tolerance for imported near-abutments
  bool corner_fallback = false;  // allow source/sink designation when a bbox
                                 // corner is uncovered (non-mosaic children)
};

// Builds the adjacency graph. Throws on a cyclic structure, on two blocks
// claiming the same corner, or (without corner_fallback) on an uncovered
// corner.
Bag build_bag(const Floorplan& fp, StairDir dir, const BagOptions& opts = {});

// Rebuilds predecessor lists from adj; call after editing edges by hand.
void recompute_predecessors(Bag& bag);

struct StructureReport {
  bool acyclic = false;
  std::vector<int> topo_order;  // valid only when acyclic
  int edges = 0;
  bool planar_bound_ok = false;  // |E| <= 3n - 6 (vacuous for n < 3)
  std::vector<int> sources;      // in-degree zero vertices
  std::vector<int> sinks;        // out-degree zero vertices
  bool unique_source = false;
  bool unique_sink = false;
  bool ok = false;
};

StructureReport check_structure(const Bag& bag);

std::string bag_to_dot(const Bag& bag, const Floorplan& fp);

}  // namespace staircut
