#pragma once

#include <cstdint>
#include <string>

#include "staircut/floorplan.hpp"

namespace staircut {

// Native JSON document:
//   { "unit": 1, "bbox": {"w":.., "h":..},
//     "blocks": [{"name":"A","x":0,"y":1,"w":1,"h":1}, ...],
//     "nets":   [{"name":"n1","blocks":["A","D"]}, ...] }
// Coordinates must be multiples of "unit"; unknown keys are rejected; nets
// need at least two distinct member blocks; blocks must be disjoint and
// inside the bbox. Errors name the offending entity.
Floorplan load_floorplan(const std::string& text);

// Inverse of load_floorplan up to unit normalization: load(save(fp)) == fp.
std::string save_floorplan(const Floorplan& fp);

// Reads the file and hands its contents to load_floorplan.
Floorplan load_floorplan_file(const std::string& path);

// Bookshelf triple (.blocks / .pl / .nets). Terminals are dropped, pin
// offsets discarded, real coordinates snapped to a 1/snap_denominator grid.
// Soft rectangular entries are imported as squares of the declared area.
// Nets are restricted to surviving blocks; nets left with fewer than two
// distinct members are removed.
Floorplan import_bookshelf(const std::string& blocks_text, const std::string& pl_text,
                           const std::string& nets_text, std::int64_t snap_denominator = 1000);

}  // namespace staircut
