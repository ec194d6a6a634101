#include "staircut/staircase.hpp"

#include <cmath>
#include <map>

namespace staircut {

Params Params::make(double gamma, double beta, BalanceType bt) {
  return make(Frac::from_decimal(gamma), Frac::from_decimal(beta), bt);
}

Params Params::make(Frac gamma, Frac beta, BalanceType bt) {
  auto in_unit = [](const Frac& f) { return f.num >= 0 && f.num <= f.den; };
  if (!in_unit(gamma) || !in_unit(beta))
    throw Error("params: gamma and beta must lie in [0, 1]");
  // gamma + beta <= 1  <=>  g.num * b.den + b.num * g.den <= g.den * b.den
  if (gamma.num * beta.den + beta.num * gamma.den > gamma.den * beta.den)
    throw Error("params: gamma + beta must not exceed 1");
  Params p;
  p.gamma = gamma;
  p.beta = beta;
  p.baltype = bt;
  return p;
}

Coord Polyline::length() const {
  Coord len = 0;
  for (size_t i = 1; i < pts.size(); ++i)
    len += std::llabs(pts[i].x - pts[i - 1].x) + std::llabs(pts[i].y - pts[i - 1].y);
  return len;
}

bool is_valid_mscut(const Bag& bag, const std::vector<int>& left) {
  std::vector<char> in(bag.n, 0);
  for (int v : left) {
    if (v < 0 || v >= bag.n) throw Error("cut: block id out of range");
    in[v] = 1;
  }
  if (!in[bag.source]) throw Error("cut: source must lie in the left set");
  if (in[bag.sink]) throw Error("cut: sink must lie outside the left set");
  for (int u = 0; u < bag.n; ++u) {
    if (in[u]) continue;
    for (const auto& e : bag.adj[u])
      if (in[e.to]) return false;  // edge entering the left set from outside
  }
  return true;
}

namespace {

// Collects the shared boundary pieces between the two sides of a cut.
std::vector<Segment> cut_segments(const Floorplan& fp, const std::vector<char>& in) {
  std::vector<Segment> segs;
  int n = fp.n();
  for (int i = 0; i < n; ++i) {
    if (!in[i]) continue;
    const Rect& a = fp.blocks[i].rect;
    for (int j = 0; j < n; ++j) {
      if (in[j]) continue;
      const Rect& b = fp.blocks[j].rect;
      if (a.right() == b.x || b.right() == a.x) {
        Coord x = a.right() == b.x ? b.x : a.x;
        Coord lo = std::max(a.y, b.y), hi = std::min(a.top(), b.top());
        if (hi > lo) segs.push_back(Segment{Point{x, lo}, Point{x, hi}});
      }
      if (a.top() == b.y || b.top() == a.y) {
        Coord y = a.top() == b.y ? b.y : a.y;
        Coord lo = std::max(a.x, b.x), hi = std::min(a.right(), b.right());
        if (hi > lo) segs.push_back(Segment{Point{lo, y}, Point{hi, y}});
      }
    }
  }
  return segs;
}

void append_merged(std::vector<Point>& pts, Point p) {
  if (pts.size() >= 2) {
    const Point& a = pts[pts.size() - 2];
    const Point& b = pts.back();
    if ((a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y)) {
      pts.back() = p;
      return;
    }
  }
  pts.push_back(p);
}

void check_monotone(const Polyline& poly, StairDir dir) {
  for (size_t i = 1; i < poly.pts.size(); ++i) {
    const Point& a = poly.pts[i - 1];
    const Point& b = poly.pts[i];
    bool ok = dir == StairDir::MIS ? (b.x <= a.x && b.y <= a.y)
                                   : (b.x >= a.x && b.y <= a.y);
    if (!ok) throw Error("cut: boundary is not a monotone staircase");
  }
}

// Assembles raw boundary pieces into simple paths with collinear merging.
// An empty piece list yields no paths: the two sides touch at most in corner
// points (degenerate carved geometry), which is a legal zero-length boundary.
std::vector<Polyline> assemble_paths(std::vector<Segment> segs, StairDir dir) {
  if (segs.empty()) return {};
  std::map<Point, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    at[segs[i].a].push_back(i);
    at[segs[i].b].push_back(i);
  }
  for (const auto& [p, lst] : at)
    if (lst.size() > 2)
      throw Error("cut: boundary is self-touching (not a simple staircase)");

  std::vector<char> used(segs.size(), 0);
  std::vector<Polyline> paths;
  for (const auto& [endpt, lst] : at) {
    if (lst.size() != 1 || used[lst.front()]) continue;
    Polyline poly;
    poly.pts.push_back(endpt);
    Point cur = endpt;
    for (;;) {
      int next = -1;
      for (int si : at[cur])
        if (!used[si]) next = si;
      if (next < 0) break;
      used[next] = 1;
      Point other = segs[next].a == cur ? segs[next].b : segs[next].a;
      append_merged(poly.pts, other);
      cur = other;
    }
    // Canonical traversal: MIS from the top end downward, MDS from the left
    // end rightward.
    const Point& front = poly.pts.front();
    const Point& back = poly.pts.back();
    bool reverse;
    if (dir == StairDir::MIS) {
      reverse = std::pair(back.y, back.x) > std::pair(front.y, front.x);
    } else {
      reverse = std::pair(back.x, -back.y) < std::pair(front.x, -front.y);
    }
    if (reverse) std::reverse(poly.pts.begin(), poly.pts.end());
    check_monotone(poly, dir);
    paths.push_back(std::move(poly));
  }
  for (char u : used)
    if (!u) throw Error("cut: boundary contains a closed loop");
  // Deterministic path order: by first point.
  std::sort(paths.begin(), paths.end(),
            [](const Polyline& a, const Polyline& b) { return a.pts.front() < b.pts.front(); });
  return paths;
}

std::vector<char> membership(const Floorplan& fp, const std::vector<int>& left) {
  std::vector<char> in(fp.n(), 0);
  for (int v : left) {
    if (v < 0 || v >= fp.n()) throw Error("cut: block id out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

CutBoundary trace_cut_boundary(const Floorplan& fp, const std::vector<int>& left,
                               StairDir dir) {
  std::vector<char> in = membership(fp, left);
  CutBoundary cb;
  cb.paths = assemble_paths(cut_segments(fp, in), dir);
  for (const auto& poly : cb.paths) {
    cb.segments += poly.segments();
    cb.length += poly.length();
    auto [z, zmax] = count_bends(poly);
    cb.z += z;
    (void)zmax;
  }
  cb.z_max = cb.segments > 0 ? cb.segments - 1 : 0;
  return cb;
}

Polyline boundary_polyline(const Floorplan& fp, const std::vector<int>& left, StairDir dir) {
  CutBoundary cb = trace_cut_boundary(fp, left, dir);
  if (cb.paths.empty()) throw Error("cut: boundary is empty");
  if (cb.paths.size() != 1) throw Error("cut: boundary is disconnected");
  return cb.paths.front();
}

std::pair<int, int> count_bends(const Polyline& poly) {
  int z = 0;
  int segs = poly.segments();
  for (int i = 2; i < static_cast<int>(poly.pts.size()); ++i) {
    bool prev_vertical = poly.pts[i - 1].x == poly.pts[i - 2].x;
    bool cur_vertical = poly.pts[i].x == poly.pts[i - 1].x;
    if (prev_vertical != cur_vertical) ++z;
  }
  return {z, segs > 0 ? segs - 1 : 0};
}

NetSplit partition_nets(const std::vector<Net>& nets, const std::vector<int>& left) {
  int top = -1;
  for (const auto& net : nets)
    for (int m : net.members) top = std::max(top, m);
  for (int v : left) top = std::max(top, v);
  std::vector<char> in(top + 1, 0);
  for (int v : left) in[v] = 1;

  NetSplit out;
  for (const auto& net : nets) {
    std::vector<int> lm, rm;
    for (int m : net.members) (in[m] ? lm : rm).push_back(m);
    if (!lm.empty() && !rm.empty()) {
      ++out.k_c;
      if (lm.size() >= 2) {
        Net sub = net;
        sub.id = static_cast<int>(out.left.size());
        sub.members = std::move(lm);
        sub.fragment = true;
        out.left.push_back(std::move(sub));
      }
      if (rm.size() >= 2) {
        Net sub = net;
        sub.id = static_cast<int>(out.right.size());
        sub.members = std::move(rm);
        sub.fragment = true;
        out.right.push_back(std::move(sub));
      }
    } else {
      Net copy = net;
      auto& side = lm.empty() ? out.right : out.left;
      copy.id = static_cast<int>(side.size());
      side.push_back(std::move(copy));
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> balance_minmax(const Floorplan& fp,
                                                     const std::vector<int>& left,
                                                     BalanceType bt) {
  std::vector<char> in = membership(fp, left);
  std::int64_t l = 0, r = 0;
  for (int i = 0; i < fp.n(); ++i) {
    std::int64_t v = bt == BalanceType::Area ? fp.blocks[i].rect.area() : 1;
    (in[i] ? l : r) += v;
  }
  return {std::min(l, r), std::max(l, r)};
}

double balance_ratio(const Floorplan& fp, const std::vector<int>& left, BalanceType bt) {
  auto [lo, hi] = balance_minmax(fp, left, bt);
  return hi == 0 ? 0.0 : static_cast<double>(lo) / static_cast<double>(hi);
}

double gain_value(const Params& p, double balr, int k_c, int k, int z, int z_max) {
  double g = p.gamma.value();
  double b = p.beta.value();
  double net_factor = k > 0 ? 1.0 - static_cast<double>(k_c) / k : 1.0;
  double bend_factor = z_max > 0 ? 1.0 - static_cast<double>(z) / z_max : 1.0;
  return g * balr + (1.0 - g - b) * net_factor + b * bend_factor;
}

CutEval evaluate_cut(const Floorplan& fp, const Bag& bag, const std::vector<Net>& nets,
                     const std::vector<int>& left, const Params& p) {
  if (!is_valid_mscut(bag, left))
    throw Error("cut: left set is not a valid monotone staircase cut");
  CutEval ev;
  ev.left = left;
  std::sort(ev.left.begin(), ev.left.end());

  std::vector<char> in(bag.n, 0);
  for (int v : ev.left) in[v] = 1;
  // Boundary pieces come straight off the bag edges that cross the cut; for
  // a valid cut every crossing edge leaves the left set.
  std::vector<Segment> segs;
  for (int u = 0; u < bag.n; ++u) {
    if (!in[u]) continue;
    for (const auto& e : bag.adj[u])
      if (!in[e.to]) segs.push_back(e.seg);
  }
  auto paths = assemble_paths(std::move(segs), bag.dir);
  for (const auto& poly : paths) {
    ev.segments += poly.segments();
    ev.z += count_bends(poly).first;
  }
  ev.z_max = ev.segments > 0 ? ev.segments - 1 : 0;

  for (const auto& net : nets) {
    bool l = false, r = false;
    for (int m : net.members) (in[m] ? l : r) = true;
    if (l && r) ++ev.k_c;
  }
  ev.k = static_cast<int>(nets.size());

  auto [lo, hi] = balance_minmax(fp, ev.left, p.baltype);
  ev.bal_min = lo;
  ev.bal_max = hi;
  ev.balr = hi == 0 ? 0.0 : static_cast<double>(lo) / static_cast<double>(hi);
  ev.gain = gain_value(p, ev.balr, ev.k_c, ev.k, ev.z, ev.z_max);
  return ev;
}

namespace {

Rat128 exact_gain(const CutEval& c, const Params& p) {
  Rat128 gamma = Rat128::of(p.gamma.num, p.gamma.den);
  Rat128 beta = Rat128::of(p.beta.num, p.beta.den);
  // 1 - gamma - beta with small exact denominators.
  Rat128 mid = Rat128::of(
      p.gamma.den * p.beta.den - p.gamma.num * p.beta.den - p.beta.num * p.gamma.den,
      p.gamma.den * p.beta.den);
  Rat128 balr = Rat128::of(c.bal_min, c.bal_max == 0 ? 1 : c.bal_max);
  Rat128 netf = c.k > 0 ? Rat128::of(c.k - c.k_c, c.k) : Rat128::of(1, 1);
  Rat128 bendf = c.z_max > 0 ? Rat128::of(c.z_max - c.z, c.z_max) : Rat128::of(1, 1);
  return rat_add(rat_add(rat_mul(gamma, balr), rat_mul(mid, netf)), rat_mul(beta, bendf));
}

// -1 / 0 / +1 comparison of two cut scores; exact when representable.
int compare_gain(const CutEval& a, const CutEval& b, const Params& p) {
  Rat128 ga = exact_gain(a, p);
  Rat128 gb = exact_gain(b, p);
  if (ga.exact && gb.exact) {
    bool ok = false;
    int c = rat_cmp(ga, gb, &ok);
    if (ok) return c;
  }
  double d = a.gain - b.gain;
  if (d > 1e-12) return 1;
  if (d < -1e-12) return -1;
  return 0;
}

}  // namespace

bool cut_better(const CutEval& a, const CutEval& b, const Params& p) {
  int c = compare_gain(a, b, p);
  if (c != 0) return c > 0;
  if (a.left.size() != b.left.size()) return a.left.size() < b.left.size();
  return a.left < b.left;
}

}  // namespace staircut
