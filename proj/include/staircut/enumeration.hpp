#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staircut/partitioner.hpp"

namespace staircut {

// Exhaustive reference layer: every valid staircase cut of a bag is a
// predecessor-closed vertex set containing the source and excluding the
// sink. Cuts are stored as bitmasks over local block ids.
struct StaircaseSet {
  int n = 0;
  StairDir dir = StairDir::MIS;
  int source = -1;
  int sink = -1;
  std::vector<std::uint64_t> ideals;  // sorted by popcount, then value
};

// Enumerates all cuts by reverse search over one-element extensions with a
// canonical parent rule (polynomial delay per cut). Throws when n exceeds
// the cap.
StaircaseSet enumerate_staircases(const Bag& bag, int cap = 20);

// Cover graph of the cut family: edges join cuts differing by one block.
struct HasseDiagram {
  StaircaseSet set;
  std::vector<std::pair<int, int>> edges;  // (smaller, larger) by index
  std::vector<std::vector<int>> up;        // successors per index
  int start = -1;  // {source}
  int stop = -1;   // all blocks but the sink
};

HasseDiagram build_hasse(const StaircaseSet& s);

// Evaluates every enumerated cut directly from geometry and returns the best
// one under the usual ordering. Independent of the greedy search path.
CutEval best_staircase(const StaircaseSet& s, const Floorplan& fp,
                       const std::vector<Net>& nets, const Params& p);

// True iff the chain's left sets form a start-to-stop path in the diagram.
bool verify_chain(const Chain& chain, const HasseDiagram& d);

std::string hasse_to_dot(const HasseDiagram& d, const Floorplan& fp,
                         const std::vector<const Chain*>& highlight = {});

}  // namespace staircut
