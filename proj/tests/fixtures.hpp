#pragma once

#include <cstdint>
#include <vector>

#include "staircut/bag.hpp"
#include "staircut/generator.hpp"

// Shared hand-built instances. f2 is the smallest dissection (two unit
// squares side by side), f4 the canonical 2x2 quad used all over the tests:
//
//   A B     nets: n1 = {A, D}, n2 = {C, D}
//   C D
namespace fixtures {

inline staircut::Floorplan make_f2() {
  staircut::Floorplan fp;
  fp.bbox = {0, 0, 2, 1};
  fp.blocks = {{0, "A", {0, 0, 1, 1}}, {1, "B", {1, 0, 1, 1}}};
  return fp;
}

inline staircut::Floorplan make_f4() {
  staircut::Floorplan fp;
  fp.bbox = {0, 0, 2, 2};
  fp.blocks = {{0, "A", {0, 1, 1, 1}},
               {1, "B", {1, 1, 1, 1}},
               {2, "C", {0, 0, 1, 1}},
               {3, "D", {1, 0, 1, 1}}};
  fp.nets = {{0, "n1", {0, 3}, 0, false}, {1, "n2", {2, 3}, 1, false}};
  return fp;
}

// Staircase-shaped (non-rectangular) region: the quad minus its top-left
// block. Exercises corner fallback and multi-minimal adjacency graphs.
//
//     X b2
//   b0 b1
inline staircut::Floorplan make_l3() {
  staircut::Floorplan fp;
  fp.bbox = {0, 0, 2, 2};
  fp.blocks = {{0, "b0", {0, 0, 1, 1}}, {1, "b1", {1, 0, 1, 1}}, {2, "b2", {1, 1, 1, 1}}};
  return fp;
}

// 2x3 grid, rows top to bottom:  A B / C D / E F
inline staircut::Floorplan make_grid6() {
  staircut::Floorplan fp;
  fp.bbox = {0, 0, 2, 3};
  fp.blocks = {{0, "A", {0, 2, 1, 1}}, {1, "B", {1, 2, 1, 1}}, {2, "C", {0, 1, 1, 1}},
               {3, "D", {1, 1, 1, 1}}, {4, "E", {0, 0, 1, 1}}, {5, "F", {1, 0, 1, 1}}};
  return fp;
}

// Reference enumeration by brute force: all 2^n subsets, kept when they
// contain the source, miss the sink, and no bag edge enters them from
// outside. Deliberately a different route than the library's enumerator.
inline std::vector<std::uint64_t> brute_force_staircases(const staircut::Bag& bag) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bag.n); ++m) {
    if (!(m >> bag.source & 1) || (m >> bag.sink & 1)) continue;
    bool closed = true;
    for (int u = 0; u < bag.n && closed; ++u)
      for (const auto& e : bag.adj[u]) {
        if ((m >> e.to & 1) && !(m >> u & 1)) {
          closed = false;
          break;
        }
      }
    if (closed) out.push_back(m);
  }
  return out;
}

inline staircut::Floorplan mosaic(int n, std::uint64_t seed, int nets = -1) {
  staircut::GenSpec gs;
  gs.n_blocks = n;
  gs.seed = seed;
  gs.n_nets = nets < 0 ? 3 * n : nets;
  return staircut::generate_floorplan(gs);
}

}  // namespace fixtures
