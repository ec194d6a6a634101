#pragma once

#include <utility>
#include <vector>

#include "staircut/bag.hpp"
#include "staircut/floorplan.hpp"
#include "staircut/fraction.hpp"

namespace staircut {

enum class BalanceType { Area, Number };

// Objective weights. The score of a cut is
//   gamma * balance + (1 - gamma - beta) * (1 - k_c/k) + beta * (1 - z/z_max)
// with the conventions k == 0 -> net factor 1 and z_max == 0 -> bend
// factor 1. Requires gamma, beta >= 0 and gamma + beta <= 1, which keeps the
// score inside [0, 1].
struct Params {
  Frac gamma = Frac::of(2, 5);
  Frac beta = Frac::of(0, 1);
  BalanceType baltype = BalanceType::Area;

  static Params make(double gamma, double beta, BalanceType bt = BalanceType::Area);
  static Params make(Frac gamma, Frac beta, BalanceType bt = BalanceType::Area);
};

struct Polyline {
  std::vector<Point> pts;
  int segments() const { return pts.empty() ? 0 : static_cast<int>(pts.size()) - 1; }
  Coord length() const;
};

// One evaluated bipartition. left holds sorted block ids; bal_min/bal_max are
// the exact balance ingredients (areas or counts) backing the double ratio.
struct CutEval {
  std::vector<int> left;
  std::int64_t bal_min = 0;
  std::int64_t bal_max = 1;
  double balr = 0.0;
  int k_c = 0;
  int k = 0;
  int z = 0;
  int z_max = 0;
  int segments = 0;
  double gain = 0.0;
};

// True iff left is predecessor-closed in the bag (no edge enters it from
// outside). Requires source in left and sink outside; throws otherwise.
bool is_valid_mscut(const Bag& bag, const std::vector<int>& left);

// Boundary between the left and right block unions as one monotone polyline.
// MIS polylines are traversed from the top end downward (x and y both
// non-increasing), MDS from the left end rightward (x non-decreasing, y
// non-increasing). Throws when the boundary is not a single simple path.
Polyline boundary_polyline(const Floorplan& fp, const std::vector<int>& left, StairDir dir);

// (z, z_max): z counts orientation changes between consecutive segments,
// z_max is segments - 1. After collinear merging the two coincide for a
// single path; they are the per-cut quantities entering the score.
std::pair<int, int> count_bends(const Polyline& poly);

struct NetSplit {
  int k_c = 0;
  std::vector<Net> left;
  std::vector<Net> right;
};

// Splits a netlist by the cut. Uncut nets keep their flags; restrictions of
// cut nets survive only with >= 2 members and are marked as fragments.
NetSplit partition_nets(const std::vector<Net>& nets, const std::vector<int>& left);

double balance_ratio(const Floorplan& fp, const std::vector<int>& left, BalanceType bt);
std::pair<std::int64_t, std::int64_t> balance_minmax(const Floorplan& fp,
                                                     const std::vector<int>& left,
                                                     BalanceType bt);

double gain_value(const Params& p, double balr, int k_c, int k, int z, int z_max);

// Full evaluation of one cut against the bag's geometry and the netlist.
CutEval evaluate_cut(const Floorplan& fp, const Bag& bag, const std::vector<Net>& nets,
                     const std::vector<int>& left, const Params& p);

// Strict "a beats b" order: higher score first (exact rational comparison,
// falling back to a 1e-12 double tolerance on overflow), then smaller left
// set, then lexicographically smaller left set.
bool cut_better(const CutEval& a, const CutEval& b, const Params& p);

// Internals shared with the router and renderer: a cut boundary may fall
// apart into several paths on degenerate (non-mosaic) sub-floorplans, or
// vanish entirely when the two sides only touch in corner points (carved
// sides of deeper cuts). An empty boundary reports zero segments and bends.
struct CutBoundary {
  std::vector<Polyline> paths;
  int segments = 0;
  int z = 0;      // orientation changes summed over paths
  int z_max = 0;  // segments - 1, floored at zero for empty boundaries
  Coord length = 0;
};

CutBoundary trace_cut_boundary(const Floorplan& fp, const std::vector<int>& left,
                               StairDir dir);

}  // namespace staircut
