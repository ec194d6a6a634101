#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircut {

// All layout geometry lives on an integer grid. Inputs with fractional
// coordinates are scaled onto this grid by their declared unit.
using Coord = std::int64_t;
using Area = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  Coord x = 0;
  Coord y = 0;
  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

struct Rect {
  Coord x = 0;
  Coord y = 0;
  Coord w = 0;
  Coord h = 0;
  Coord right() const { return x + w; }
  Coord top() const { return y + h; }
  Area area() const { return static_cast<Area>(w) * h; }
  bool contains(Point p) const {
    return p.x >= x && p.x <= right() && p.y >= y && p.y <= top();
  }
  bool operator==(const Rect&) const = default;
};

// Axis-parallel segment; endpoints ordered so that a <= b.
struct Segment {
  Point a;
  Point b;
  bool operator==(const Segment&) const = default;
  bool vertical() const { return a.x == b.x; }
  Coord length() const { return (b.x - a.x) + (b.y - a.y); }
};

// Length of the overlap of intervals [a0,a1] and [b0,b1]; negative when disjoint.
inline Coord overlap_len(Coord a0, Coord a1, Coord b0, Coord b1) {
  return std::min(a1, b1) - std::max(a0, b0);
}

// L-infinity distance from a point to a rectangle (0 when inside).
inline Coord linf_dist(Point p, const Rect& r) {
  Coord dx = std::max({r.x - p.x, p.x - r.right(), Coord{0}});
  Coord dy = std::max({r.y - p.y, p.y - r.top(), Coord{0}});
  return std::max(dx, dy);
}

}  // namespace staircut
