#include "staircut/tree.hpp"

#include <algorithm>

#include "staircut/rng.hpp"

namespace staircut {

namespace {

// Child floorplan for one cut side. Blocks keep their absolute coordinates;
// the bounding box shrinks to the side's extent. side holds parent-local ids.
struct SideInput {
  Floorplan fp;
  std::vector<int> block_ids;  // child-local id -> top-level id
};

SideInput make_side(const Floorplan& parent, const std::vector<int>& parent_ids,
                    const std::vector<int>& side, std::vector<Net> side_nets) {
  SideInput out;
  std::vector<int> remap(parent.blocks.size(), -1);
  Coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  for (size_t i = 0; i < side.size(); ++i) {
    const Block& src = parent.blocks[side[i]];
    remap[side[i]] = static_cast<int>(i);
    Block b = src;
    b.id = static_cast<int>(i);
    if (i == 0) {
      x0 = b.rect.x;
      y0 = b.rect.y;
      x1 = b.rect.right();
      y1 = b.rect.top();
    } else {
      x0 = std::min(x0, b.rect.x);
      y0 = std::min(y0, b.rect.y);
      x1 = std::max(x1, b.rect.right());
      y1 = std::max(y1, b.rect.top());
    }
    out.fp.blocks.push_back(std::move(b));
    out.block_ids.push_back(parent_ids[side[i]]);
  }
  out.fp.bbox = Rect{x0, y0, x1 - x0, y1 - y0};
  for (size_t j = 0; j < side_nets.size(); ++j) {
    Net& nt = side_nets[j];
    nt.id = static_cast<int>(j);
    for (int& m : nt.members) m = remap[m];
  }
  out.fp.nets = std::move(side_nets);
  return out;
}

std::unique_ptr<MscNode> build_node(Floorplan fp, std::vector<int> block_ids, int level,
                                    std::string path, const Params& p, Mode mode,
                                    std::uint64_t seed, int trials) {
  auto node = std::make_unique<MscNode>();
  node->level = level;
  node->stype = (level % 2 == 0) ? StairDir::MIS : StairDir::MDS;
  node->path = std::move(path);
  node->fp = std::move(fp);
  node->block_ids = std::move(block_ids);

  BagOptions opt;
  opt.corner_fallback = true;  // carved sides need not keep corner blocks
  Bag bag = build_bag(node->fp, node->stype, opt);
  SearchResult sr = run_search(mode, bag, node->fp, node->fp.nets, p, seed, trials);
  node->cut = sr.best;
  node->max_segments = sr.max_segments;

  int m = node->fp.n();
  std::vector<char> in(m, 0);
  for (int v : node->cut.left) in[v] = 1;
  std::vector<int> right_local;
  for (int v = 0; v < m; ++v)
    if (!in[v]) right_local.push_back(v);
  for (int v : node->cut.left) node->left_global.push_back(node->block_ids[v]);
  for (int v : right_local) node->right_global.push_back(node->block_ids[v]);

  // A net is pinned to the shallowest node whose cut splits it; deeper splits
  // of its fragments never reassign it.
  for (const Net& nt : node->fp.nets) {
    bool l = false, r = false;
    for (int v : nt.members) (in[v] ? l : r) = true;
    if (l && r && !nt.fragment) node->assigned_nets.push_back(nt.origin);
  }

  NetSplit split = partition_nets(node->fp.nets, node->cut.left);
  if (node->cut.left.size() >= 2) {
    SideInput s = make_side(node->fp, node->block_ids, node->cut.left, std::move(split.left));
    node->left = build_node(std::move(s.fp), std::move(s.block_ids), level + 1,
                            node->path + "L", p, mode, derive_seed(seed, "L"), trials);
  }
  if (right_local.size() >= 2) {
    SideInput s = make_side(node->fp, node->block_ids, right_local, std::move(split.right));
    node->right = build_node(std::move(s.fp), std::move(s.block_ids), level + 1,
                             node->path + "R", p, mode, derive_seed(seed, "R"), trials);
  }
  return node;
}

}  // namespace

std::unique_ptr<MscNode> build_tree(const Floorplan& fp, const Params& p, Mode mode,
                                    std::uint64_t seed, int trials) {
  if (fp.n() < 2) throw Error("tree: need at least 2 blocks");
  std::vector<int> ids(fp.blocks.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return build_node(fp, std::move(ids), 0, "", p, mode, seed, trials);
}

namespace {

double bend_ratio_of(const CutEval& c) {
  return c.z_max > 0 ? static_cast<double>(c.z) / c.z_max : 0.0;
}

double netcut_ratio_of(const CutEval& c) {
  return c.k > 0 ? static_cast<double>(c.k_c) / c.k : 0.0;
}

void walk_metrics(const MscNode& node, TreeMetrics& tm) {
  tm.height = std::max(tm.height, node.level + 1);
  ++tm.node_count;
  tm.mean_gain += node.cut.gain;
  tm.mean_balr += node.cut.balr;
  tm.mean_bend_ratio += bend_ratio_of(node.cut);
  tm.mean_netcut_ratio += netcut_ratio_of(node.cut);
  tm.max_segments = std::max(tm.max_segments, node.max_segments);
  if (static_cast<int>(tm.per_level.size()) <= node.level)
    tm.per_level.resize(node.level + 1);
  LevelStats& ls = tm.per_level[node.level];
  ++ls.nodes;
  ls.gain += node.cut.gain;
  ls.balr += node.cut.balr;
  ls.bend_ratio += bend_ratio_of(node.cut);
  ls.netcut_ratio += netcut_ratio_of(node.cut);
  if (node.left)
    walk_metrics(*node.left, tm);
  else
    tm.leaf_block_counts.push_back(static_cast<int>(node.cut.left.size()));
  if (node.right)
    walk_metrics(*node.right, tm);
  else
    tm.leaf_block_counts.push_back(node.fp.n() - static_cast<int>(node.cut.left.size()));
}

}  // namespace

TreeMetrics tree_metrics(const MscNode& root) {
  TreeMetrics tm;
  walk_metrics(root, tm);
  tm.mean_gain /= tm.node_count;
  tm.mean_balr /= tm.node_count;
  tm.mean_bend_ratio /= tm.node_count;
  tm.mean_netcut_ratio /= tm.node_count;
  for (LevelStats& ls : tm.per_level) {
    ls.gain /= ls.nodes;
    ls.balr /= ls.nodes;
    ls.bend_ratio /= ls.nodes;
    ls.netcut_ratio /= ls.nodes;
  }
  return tm;
}

namespace {

void collect_assignments(const MscNode& node, std::vector<NetAssignment>& out) {
  for (int origin : node.assigned_nets) out.push_back({origin, node.path, node.level});
  if (node.left) collect_assignments(*node.left, out);
  if (node.right) collect_assignments(*node.right, out);
}

}  // namespace

std::vector<NetAssignment> routing_order(const MscNode& root) {
  std::vector<NetAssignment> out;
  collect_assignments(root, out);
  std::stable_sort(out.begin(), out.end(), [](const NetAssignment& a, const NetAssignment& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.path < b.path;
  });
  return out;
}

nlohmann::json tree_to_json(const MscNode& root) {
  nlohmann::json j;
  j["level"] = root.level;
  j["type"] = stair_name(root.stype);
  j["path"] = root.path;
  j["blocks"] = root.block_ids;
  j["cut"] = {{"left", root.left_global},
              {"right", root.right_global},
              {"gain", root.cut.gain},
              {"balance", root.cut.balr},
              {"cut_nets", root.cut.k_c},
              {"nets", root.cut.k},
              {"bends", root.cut.z},
              {"max_bends", root.cut.z_max},
              {"segments", root.cut.segments}};
  j["assigned_nets"] = root.assigned_nets;
  j["max_segments"] = root.max_segments;
  j["left"] = root.left ? tree_to_json(*root.left) : nlohmann::json(nullptr);
  j["right"] = root.right ? tree_to_json(*root.right) : nlohmann::json(nullptr);
  return j;
}

}  // namespace staircut
