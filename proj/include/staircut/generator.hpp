#pragma once

#include <cstdint>

#include "staircut/floorplan.hpp"

namespace staircut {

// Random mosaic instances built from a slicing tree: n_blocks - 1 axis
// splits with alternating orientation preference and split ratios drawn
// uniformly from [aspect_lo, aspect_hi]. Coordinates are exact integers and
// the result always tiles its bounding box. Identical specs produce
// identical floorplans.
struct GenSpec {
  int n_blocks = 2;
  std::uint64_t seed = 1;
  double aspect_lo = 0.35;
  double aspect_hi = 0.65;
  int n_nets = 0;
  int deg_min = 2;  // net degrees drawn uniformly from [deg_min, deg_max]
  int deg_max = 3;
};

Floorplan generate_floorplan(const GenSpec& spec);

}  // namespace staircut
