#include "staircut/router.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace staircut {

namespace {

void index_nodes(const MscNode& node, std::map<std::string, const MscNode*>& out) {
  out.emplace(node.path, &node);
  if (node.left) index_nodes(*node.left, out);
  if (node.right) index_nodes(*node.right, out);
}

// Projection of a pin onto the staircase direction of the cut: increasing
// staircases run along x+y, decreasing ones along x-y.
Coord projection(StairDir dir, Point pin) {
  return dir == StairDir::MIS ? pin.x + pin.y : pin.x - pin.y;
}

int sign(Coord v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

void append_point(std::vector<Point>& pts, Point p) {
  if (!pts.empty() && pts.back() == p) return;
  if (pts.size() >= 2) {
    Point& a = pts[pts.size() - 2];
    Point& b = pts.back();
    // Extend a straight run only when the direction is preserved; a
    // doubled-back spur keeps its turning point so no length is lost.
    bool same_dir = (a.x == b.x && b.x == p.x && sign(b.y - a.y) == sign(p.y - b.y)) ||
                    (a.y == b.y && b.y == p.y && sign(b.x - a.x) == sign(p.x - b.x));
    if (same_dir) {
      b = p;
      return;
    }
  }
  pts.push_back(p);
}

}  // namespace

RouteResult route_nets(const MscNode& tree, const Floorplan& fp, const RouteModel& model) {
  if (model.wire_pitch <= 0) throw Error("route: wire pitch must be positive");
  if (model.escape_vias != 0 && model.escape_vias != 1)
    throw Error("route: pin escape must be 0 or 1");
  std::map<std::string, const MscNode*> nodes;
  index_nodes(tree, nodes);

  RouteResult res;
  std::map<std::string, double> demand;
  for (const NetAssignment& asg : routing_order(tree)) {
    const MscNode& node = *nodes.at(asg.path);
    const Net& net = fp.nets[asg.net_id];
    std::vector<Point> pins;
    for (int b : net.members) pins.push_back(fp.blocks[b].center2());
    std::stable_sort(pins.begin(), pins.end(), [&](Point a, Point b) {
      return projection(node.stype, a) < projection(node.stype, b);
    });

    RoutedNet rn;
    rn.net_id = asg.net_id;
    rn.node_path = "/" + asg.path;
    rn.route.push_back(pins.front());
    for (size_t i = 1; i < pins.size(); ++i) {
      Point prev = rn.route.back();
      append_point(rn.route, Point{pins[i].x, prev.y});  // horizontal leg first
      append_point(rn.route, pins[i]);
    }
    Coord half_len = 0;
    for (size_t i = 1; i < rn.route.size(); ++i) {
      const Point& a = rn.route[i - 1];
      const Point& b = rn.route[i];
      half_len += std::llabs(b.x - a.x) + std::llabs(b.y - a.y);
      if (i >= 2) {
        const Point& o = rn.route[i - 2];
        bool va = o.x == a.x, vb = a.x == b.x;
        if (va != vb) ++rn.bends;
      }
    }
    rn.length = static_cast<double>(half_len) / 2.0;
    rn.vias = rn.bends + 2 * model.escape_vias;
    demand[asg.path] += rn.length;
    res.nets.push_back(std::move(rn));
  }

  int tracks = model.layers / 2;  // reserved-layer pairs, one per direction
  double sum = 0.0;
  for (const auto& [path, node] : nodes) {
    CutBoundary cb = trace_cut_boundary(node->fp, node->cut.left, node->stype);
    double cap = static_cast<double>(cb.length) * tracks / static_cast<double>(model.wire_pitch);
    // A real boundary that the layer model zeroes out is a configuration
    // error. A zero-length boundary (sides touching only in corner points)
    // is normal deep in the hierarchy: capacity is honestly zero there, so
    // any demand across it reports as unbounded congestion instead of
    // aborting the whole route.
    if (cap <= 0.0 && cb.length > 0)
      throw Error("route: zero-capacity region at '/" + path + "'");
    RegionLoad rl;
    rl.node_path = "/" + path;
    auto it = demand.find(path);
    rl.demand = it == demand.end() ? 0.0 : it->second;
    rl.capacity = cap;
    rl.ratio = cap > 0.0 ? rl.demand / cap
                         : (rl.demand > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    res.congestion.max_ratio = std::max(res.congestion.max_ratio, rl.ratio);
    sum += rl.ratio;
    res.congestion.regions.push_back(std::move(rl));
  }
  res.congestion.mean_ratio = res.congestion.regions.empty()
                                  ? 0.0
                                  : sum / static_cast<double>(res.congestion.regions.size());
  res.congestion.feasible = res.congestion.max_ratio <= 1.0;
  return res;
}

ViaSummary via_summary(const std::vector<RoutedNet>& nets) {
  ViaSummary s;
  for (const RoutedNet& rn : nets) {
    s.total_vias += rn.vias;
    s.total_length += rn.length;
  }
  s.vias_per_net =
      nets.empty() ? 0.0 : static_cast<double>(s.total_vias) / static_cast<double>(nets.size());
  return s;
}

std::string congestion_csv(const CongestionReport& report) {
  std::ostringstream os;
  os << "region,demand,capacity,ratio\n";
  char buf[128];
  for (const RegionLoad& rl : report.regions) {
    std::snprintf(buf, sizeof(buf), ",%.6f,%.6f,%.6f\n", rl.demand, rl.capacity, rl.ratio);
    os << rl.node_path << buf;
  }
  return os.str();
}

nlohmann::json routes_to_json(const std::vector<RoutedNet>& nets) {
  nlohmann::json j = nlohmann::json::array();
  for (const RoutedNet& rn : nets) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& p : rn.route) pts.push_back({p.x, p.y});
    j.push_back({{"net", rn.net_id},
                 {"region", rn.node_path},
                 {"bends", rn.bends},
                 {"vias", rn.vias},
                 {"length", rn.length},
                 {"points", std::move(pts)}});
  }
  return j;
}

}  // namespace staircut
