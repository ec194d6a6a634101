#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "staircut/tree.hpp"

namespace staircut {

// Simplified layer-count model used by the via estimate and the region
// capacities. This is a proxy router: pins sit at block centers, every
// connection is an L-shaped monotone path, and vias are charged per bend
// plus a constant escape at the two route ends.
struct RouteModel {
  int layers = 8;       // total metal layers; half run per direction
  Coord wire_pitch = 1;
  int escape_vias = 1;  // 0 or 1 per route endpoint
};

struct RoutedNet {
  int net_id = -1;  // top-level net id
  std::string node_path;
  std::vector<Point> route;  // merged polyline in half-units (2x coordinates)
  int bends = 0;
  int vias = 0;
  double length = 0.0;  // Manhattan length in layout units
};

struct RegionLoad {
  std::string node_path;
  double demand = 0.0;
  double capacity = 0.0;
  double ratio = 0.0;
};

struct CongestionReport {
  std::vector<RegionLoad> regions;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  bool feasible = true;  // max_ratio <= 1
};

struct RouteResult {
  std::vector<RoutedNet> nets;
  CongestionReport congestion;
};

// Routes every top-level net at its assignment node, members ordered by
// projection onto the node's staircase, consecutive pins joined by
// horizontal-first L-paths. vias(net) = bends(net) + 2 * escape_vias.
RouteResult route_nets(const MscNode& tree, const Floorplan& fp, const RouteModel& model);

struct ViaSummary {
  std::int64_t total_vias = 0;
  double total_length = 0.0;
  double vias_per_net = 0.0;
};

ViaSummary via_summary(const std::vector<RoutedNet>& nets);

std::string congestion_csv(const CongestionReport& report);
nlohmann::json routes_to_json(const std::vector<RoutedNet>& nets);

}  // namespace staircut
