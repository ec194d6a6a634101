#pragma once

#include <string>
#include <utility>
#include <vector>

#include "staircut/tree.hpp"

namespace staircut {

struct RenderOptions {
  double width = 800.0;  // drawing width in px; height follows the aspect
  bool labels = true;
  bool mark_bends = true;
};

// Deterministic SVG of a floorplan with zero or more cut polylines. MIS and
// MDS cuts use distinct strokes; interior polyline vertices are marked as
// bend squares.
std::string render_svg(const Floorplan& fp,
                       const std::vector<std::pair<Polyline, StairDir>>& cuts,
                       const RenderOptions& opts = {});

// Renders the whole tree: one polyline per node with >= 2 blocks.
std::string render_tree_svg(const Floorplan& fp, const MscNode& tree,
                            const RenderOptions& opts = {});

}  // namespace staircut
