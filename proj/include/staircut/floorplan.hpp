#pragma once

#include <string>
#include <utility>
#include <vector>

#include "staircut/geometry.hpp"

namespace staircut {

struct Block {
  int id = -1;
  std::string name;
  Rect rect;
  Point center2() const {  // center in half-units, kept integral
    return Point{2 * rect.x + rect.w, 2 * rect.y + rect.h};
  }
  bool operator==(const Block&) const = default;
};

struct Net {
  int id = -1;
  std::string name;
  std::vector<int> members;  // sorted, distinct block ids
  int origin = -1;           // id of the top-level net this descends from
  bool fragment = false;     // true for a restriction of a net split higher up
  bool operator==(const Net&) const = default;
};

struct Floorplan {
  Rect bbox;
  std::vector<Block> blocks;
  std::vector<Net> nets;
  int n() const { return static_cast<int>(blocks.size()); }
  int k() const { return static_cast<int>(nets.size()); }
  Area total_block_area() const;
  bool operator==(const Floorplan&) const = default;
};

enum class ValidateMode { Mosaic, Packed };

struct ValidationReport {
  bool ok = true;
  std::vector<std::pair<int, int>> overlaps;  // block id pairs with interior overlap
  std::vector<int> outside;                   // block ids not inside the bbox
  Area uncovered = 0;                         // bbox area minus block area (mosaic mode)
  std::string summary() const;
};

// Checks geometric invariants. Mosaic mode additionally requires the blocks
// to tile the bounding box exactly.
ValidationReport validate(const Floorplan& fp, ValidateMode mode);

struct FloorplanStats {
  int n = 0;
  int k = 0;
  double avg_net_degree = 0.0;
};

FloorplanStats stats(const Floorplan& fp);

}  // namespace staircut
