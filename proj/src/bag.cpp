#include "staircut/bag.hpp"

#include <queue>
#include <sstream>

namespace staircut {

namespace {

// Abutment scan. For MIS an edge runs left block -> right block across a
// vertical shared piece, or upper block -> lower block across a horizontal
// one; MDS flips the vertical relation. eps both tolerates a gap between the
// facing edges and sets the minimum shared length.
void add_abutment_edges(const Floorplan& fp, StairDir dir, Coord eps, Bag* bag) {
  const auto& bs = fp.blocks;
  int n = fp.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rect& a = bs[i].rect;
      const Rect& b = bs[j].rect;
      // a left of b
      if (std::llabs(a.right() - b.x) <= eps) {
        Coord lo = std::max(a.y, b.y), hi = std::min(a.top(), b.top());
        if (hi - lo > eps) {
          Segment s{Point{b.x, lo}, Point{b.x, hi}};
          bag->adj[i].push_back(BagEdge{j, s});
          continue;
        }
      }
      bool above = dir == StairDir::MIS;  // MIS: upper -> lower, MDS: lower -> upper
      Coord a_edge = above ? a.y : a.top();
      Coord b_edge = above ? b.top() : b.y;
      if (std::llabs(a_edge - b_edge) <= eps) {
        Coord lo = std::max(a.x, b.x), hi = std::min(a.right(), b.right());
        if (hi - lo > eps) {
          Coord y = above ? b.top() : b.y;
          Segment s{Point{lo, y}, Point{hi, y}};
          bag->adj[i].push_back(BagEdge{j, s});
        }
      }
    }
  }
  // Canonical successor order: shared piece top-to-bottom, then left-to-right.
  for (auto& lst : bag->adj) {
    std::sort(lst.begin(), lst.end(), [](const BagEdge& e1, const BagEdge& e2) {
      Coord y1 = e1.seg.a.y + e1.seg.b.y, y2 = e2.seg.a.y + e2.seg.b.y;
      if (y1 != y2) return y1 > y2;
      Coord x1 = e1.seg.a.x + e1.seg.b.x, x2 = e2.seg.a.x + e2.seg.b.x;
      if (x1 != x2) return x1 < x2;
      return e1.to < e2.to;
    });
  }
}

// exclude keeps the sink designation from reusing the source block: on
// corner-touching two-block sides both fallback distances tie, and without
// the exclusion both corners would elect the same block.
int designate(const Floorplan& fp, Point corner, const std::vector<int>& degree_zero,
              bool fallback, const char* role, int exclude = -1) {
  std::vector<int> claiming;
  for (const auto& b : fp.blocks)
    if (b.id != exclude && b.rect.contains(corner)) claiming.push_back(b.id);
  // A corner belongs to exactly one block in a dissection; several claimants
  // with matching extremal corners mean overlapping geometry.
  std::vector<int> exact;
  for (int id : claiming) {
    const Rect& r = fp.blocks[id].rect;
    bool at_x = r.x == corner.x || r.right() == corner.x;
    bool at_y = r.y == corner.y || r.top() == corner.y;
    if (at_x && at_y) exact.push_back(id);
  }
  if (exact.size() > 1)
    throw Error(std::string("bag: multiple blocks claim the ") + role + " corner");
  if (!exact.empty()) {
    int id = exact.front();
    for (int z : degree_zero)
      if (z == id) return id;
    if (!fallback)
      throw Error(std::string("bag: ") + role + " corner block is not extremal");
  } else if (!fallback) {
    throw Error(std::string("bag: no block covers the ") + role + " corner");
  }
  // Fallback: nearest degree-zero vertex to the corner, lowest id on ties.
  int best = -1;
  Coord best_d = 0;
  for (int id : degree_zero) {
    if (id == exclude) continue;
    Coord d = linf_dist(corner, fp.blocks[id].rect);
    if (best < 0 || d < best_d) {
      best = id;
      best_d = d;
    }
  }
  if (best < 0) throw Error(std::string("bag: no candidate for the ") + role + " corner");
  return best;
}

}  // namespace

void recompute_predecessors(Bag& bag) {
  bag.preds.assign(bag.n, {});
  for (int u = 0; u < bag.n; ++u)
    for (const auto& e : bag.adj[u]) bag.preds[e.to].push_back(u);
  for (auto& p : bag.preds) std::sort(p.begin(), p.end());
}

Bag build_bag(const Floorplan& fp, StairDir dir, const BagOptions& opts) {
  if (fp.n() < 1) throw Error("bag: empty floorplan");
  Bag bag;
  bag.dir = dir;
  bag.n = fp.n();
  bag.adj.assign(bag.n, {});
  add_abutment_edges(fp, dir, opts.eps, &bag);
  recompute_predecessors(bag);

  // Cycle check (Kahn).
  std::vector<int> indeg(bag.n, 0), outdeg(bag.n, 0);
  for (int u = 0; u < bag.n; ++u) {
    outdeg[u] = static_cast<int>(bag.adj[u].size());
    for (const auto& e : bag.adj[u]) ++indeg[e.to];
  }
  {
    std::vector<int> work = indeg;
    std::queue<int> q;
    for (int v = 0; v < bag.n; ++v)
      if (work[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++seen;
      for (const auto& e : bag.adj[u])
        if (--work[e.to] == 0) q.push(e.to);
    }
    if (seen != bag.n) throw Error("bag: cycle detected");
  }

  std::vector<int> zero_in, zero_out;
  for (int v = 0; v < bag.n; ++v) {
    if (indeg[v] == 0) zero_in.push_back(v);
    if (outdeg[v] == 0) zero_out.push_back(v);
  }

  Coord L = fp.bbox.x, R = fp.bbox.right(), B = fp.bbox.y, T = fp.bbox.top();
  Point src_corner = dir == StairDir::MIS ? Point{L, T} : Point{L, B};
  Point snk_corner = dir == StairDir::MIS ? Point{R, B} : Point{R, T};
  bag.source = designate(fp, src_corner, zero_in, opts.corner_fallback, "source");
  bag.sink = designate(fp, snk_corner, zero_out, opts.corner_fallback, "sink",
                       bag.n > 1 ? bag.source : -1);
  if (bag.n > 1 && bag.source == bag.sink) throw Error("bag: source equals sink");
  return bag;
}

StructureReport check_structure(const Bag& bag) {
  StructureReport rep;
  rep.edges = bag.edge_count();
  std::vector<int> indeg(bag.n, 0);
  for (int u = 0; u < bag.n; ++u)
    for (const auto& e : bag.adj[u]) ++indeg[e.to];
  for (int v = 0; v < bag.n; ++v) {
    if (indeg[v] == 0) rep.sources.push_back(v);
    if (bag.adj[v].empty()) rep.sinks.push_back(v);
  }
  // Deterministic topological order: smallest available vertex first.
  std::vector<int> work = indeg;
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int v = 0; v < bag.n; ++v)
    if (work[v] == 0) q.push(v);
  while (!q.empty()) {
    int u = q.top();
    q.pop();
    rep.topo_order.push_back(u);
    for (const auto& e : bag.adj[u])
      if (--work[e.to] == 0) q.push(e.to);
  }
  rep.acyclic = static_cast<int>(rep.topo_order.size()) == bag.n;
  if (!rep.acyclic) rep.topo_order.clear();
  rep.planar_bound_ok = bag.n < 3 || rep.edges <= 3 * bag.n - 6;
  rep.unique_source = rep.sources.size() == 1;
  rep.unique_sink = rep.sinks.size() == 1;
  rep.ok = rep.acyclic && rep.planar_bound_ok && rep.unique_source && rep.unique_sink;
  return rep;
}

std::string bag_to_dot(const Bag& bag, const Floorplan& fp) {
  std::ostringstream os;
  os << "digraph bag {\n  rankdir=LR;\n";
  for (int v = 0; v < bag.n; ++v) {
    os << "  n" << v << " [label=\"" << fp.blocks[v].name << "\"";
    if (v == bag.source) os << " shape=doublecircle";
    if (v == bag.sink) os << " shape=doubleoctagon";
    os << "];\n";
  }
  for (int u = 0; u < bag.n; ++u)
    for (const auto& e : bag.adj[u]) os << "  n" << u << " -> n" << e.to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace staircut
