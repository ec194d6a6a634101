#include "staircut/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace staircut {

namespace {

using Mask = std::uint64_t;

bool closed_in(const Bag& bag, int v, Mask m) {
  for (int u : bag.preds[v])
    if (!(m >> u & 1)) return false;
  return true;
}

// Largest-id element of m (source excluded) with no successor inside m.
// Removing it yields the canonical parent.
int canonical_removal(const Bag& bag, Mask m) {
  for (int v = bag.n - 1; v >= 0; --v) {
    if (v == bag.source || !(m >> v & 1)) continue;
    bool maximal = true;
    for (const auto& e : bag.adj[v])
      if (m >> e.to & 1) {
        maximal = false;
        break;
      }
    if (maximal) return v;
  }
  return -1;
}

void reverse_search(const Bag& bag, Mask m, std::vector<Mask>& out) {
  out.push_back(m);
  for (int v = 0; v < bag.n; ++v) {
    if (v == bag.sink || (m >> v & 1) || !closed_in(bag, v, m)) continue;
    Mask child = m | (Mask{1} << v);
    if (canonical_removal(bag, child) == v) reverse_search(bag, child, out);
  }
}

}  // namespace

StaircaseSet enumerate_staircases(const Bag& bag, int cap) {
  if (bag.n < 2) throw Error("enumeration: need at least 2 blocks");
  if (cap > 63) cap = 63;
  if (bag.n > cap)
    throw Error("enumeration: " + std::to_string(bag.n) + " blocks exceed the cap of " +
                std::to_string(cap));
  StaircaseSet s;
  s.n = bag.n;
  s.dir = bag.dir;
  s.source = bag.source;
  s.sink = bag.sink;
  reverse_search(bag, Mask{1} << bag.source, s.ideals);
  std::sort(s.ideals.begin(), s.ideals.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return s;
}

HasseDiagram build_hasse(const StaircaseSet& s) {
  HasseDiagram d;
  d.set = s;
  std::unordered_map<Mask, int> index;
  for (size_t i = 0; i < s.ideals.size(); ++i) index.emplace(s.ideals[i], static_cast<int>(i));
  d.up.assign(s.ideals.size(), {});
  for (size_t j = 0; j < s.ideals.size(); ++j) {
    Mask m = s.ideals[j];
    for (Mask rest = m; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      auto it = index.find(m ^ (Mask{1} << v));
      if (it == index.end()) continue;
      d.edges.emplace_back(it->second, static_cast<int>(j));
      d.up[it->second].push_back(static_cast<int>(j));
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  for (auto& ups : d.up) std::sort(ups.begin(), ups.end());
  Mask start = Mask{1} << s.source;
  Mask stop = ((s.n == 64 ? ~Mask{0} : (Mask{1} << s.n) - 1)) ^ (Mask{1} << s.sink);
  auto is = index.find(start);
  auto ip = index.find(stop);
  d.start = is == index.end() ? -1 : is->second;
  d.stop = ip == index.end() ? -1 : ip->second;
  return d;
}

CutEval best_staircase(const StaircaseSet& s, const Floorplan& fp,
                       const std::vector<Net>& nets, const Params& p) {
  if (s.ideals.empty()) throw Error("enumeration: empty cut family");
  bool have = false;
  CutEval best;
  for (Mask m : s.ideals) {
    // Evaluate straight from geometry; no bag adjacency involved.
    CutEval ev;
    for (int v = 0; v < s.n; ++v)
      if (m >> v & 1) ev.left.push_back(v);
    auto [lo, hi] = balance_minmax(fp, ev.left, p.baltype);
    ev.bal_min = lo;
    ev.bal_max = hi;
    ev.balr = hi > 0 ? static_cast<double>(lo) / static_cast<double>(hi) : 0.0;
    ev.k = static_cast<int>(nets.size());
    for (const Net& nt : nets) {
      bool l = false, r = false;
      for (int v : nt.members) ((m >> v & 1) ? l : r) = true;
      if (l && r) ++ev.k_c;
    }
    CutBoundary cb = trace_cut_boundary(fp, ev.left, s.dir);
    ev.segments = cb.segments;
    ev.z = cb.z;
    ev.z_max = cb.z_max;
    ev.gain = gain_value(p, ev.balr, ev.k_c, ev.k, ev.z, ev.z_max);
    if (!have || cut_better(ev, best, p)) {
      best = std::move(ev);
      have = true;
    }
  }
  return best;
}

bool verify_chain(const Chain& chain, const HasseDiagram& d) {
  if (chain.cuts.empty() || d.start < 0 || d.stop < 0) return false;
  std::unordered_map<Mask, int> index;
  for (size_t i = 0; i < d.set.ideals.size(); ++i)
    index.emplace(d.set.ideals[i], static_cast<int>(i));
  std::vector<int> steps;
  for (const CutEval& ev : chain.cuts) {
    Mask m = 0;
    for (int v : ev.left) m |= Mask{1} << v;
    auto it = index.find(m);
    if (it == index.end()) return false;
    steps.push_back(it->second);
  }
  if (steps.front() != d.start || steps.back() != d.stop) return false;
  for (size_t i = 0; i + 1 < steps.size(); ++i) {
    const auto& ups = d.up[steps[i]];
    if (!std::binary_search(ups.begin(), ups.end(), steps[i + 1])) return false;
  }
  return true;
}

std::string hasse_to_dot(const HasseDiagram& d, const Floorplan& fp,
                         const std::vector<const Chain*>& highlight) {
  static const char* kColors[] = {"red", "blue", "forestgreen", "orange", "purple"};
  std::unordered_map<Mask, int> index;
  for (size_t i = 0; i < d.set.ideals.size(); ++i)
    index.emplace(d.set.ideals[i], static_cast<int>(i));
  // Edge -> colors of the chains walking it.
  std::unordered_map<std::uint64_t, std::vector<int>> marked;
  auto key = [](int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  for (size_t c = 0; c < highlight.size(); ++c) {
    const Chain* ch = highlight[c];
    if (!ch) continue;
    int prev = -1;
    for (const CutEval& ev : ch->cuts) {
      Mask m = 0;
      for (int v : ev.left) m |= Mask{1} << v;
      auto it = index.find(m);
      if (it == index.end()) break;
      if (prev >= 0) marked[key(prev, it->second)].push_back(static_cast<int>(c));
      prev = it->second;
    }
  }
  std::ostringstream os;
  os << "digraph staircases {\n  rankdir=BT;\n  node [shape=box fontname=\"Helvetica\"];\n";
  for (size_t i = 0; i < d.set.ideals.size(); ++i) {
    os << "  s" << i << " [label=\"{";
    bool first = true;
    for (int v = 0; v < d.set.n; ++v) {
      if (!(d.set.ideals[i] >> v & 1)) continue;
      if (!first) os << ",";
      os << fp.blocks[v].name;
      first = false;
    }
    os << "}\"";
    if (static_cast<int>(i) == d.start || static_cast<int>(i) == d.stop)
      os << " peripheries=2";
    os << "];\n";
  }
  for (const auto& [a, b] : d.edges) {
    os << "  s" << a << " -> s" << b;
    auto it = marked.find(key(a, b));
    if (it != marked.end()) {
      os << " [penwidth=2.5 color=\"";
      for (size_t c = 0; c < it->second.size(); ++c) {
        if (c) os << ":";
        os << kColors[it->second[c] % 5];
      }
      os << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace staircut
