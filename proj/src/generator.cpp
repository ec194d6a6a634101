#include "staircut/generator.hpp"

#include <cmath>
#include <numeric>

#include "staircut/rng.hpp"

namespace staircut {

namespace {

struct Leaf {
  Rect r;
  bool prefer_vertical;  // orientation of the next split through this leaf
};

int pick_largest(const std::vector<Leaf>& leaves) {
  int best = 0;
  Area best_area = leaves[0].r.area();
  for (int i = 1; i < static_cast<int>(leaves.size()); ++i) {
    if (leaves[i].r.area() > best_area) {
      best_area = leaves[i].r.area();
      best = i;
    }
  }
  return best;
}

Coord split_pos(Coord lo, Coord extent, double ratio) {
  Coord off = static_cast<Coord>(std::llround(ratio * static_cast<double>(extent)));
  off = std::max<Coord>(1, std::min<Coord>(extent - 1, off));
  return lo + off;
}

}  // namespace

Floorplan generate_floorplan(const GenSpec& spec) {
  if (spec.n_blocks < 2) throw Error("generator: need at least 2 blocks");
  if (!(spec.aspect_lo > 0.0 && spec.aspect_lo <= spec.aspect_hi && spec.aspect_hi < 1.0))
    throw Error("generator: aspect range must satisfy 0 < lo <= hi < 1");
  if (spec.n_nets < 0 || spec.deg_min < 2 || spec.deg_max < spec.deg_min)
    throw Error("generator: bad net parameters");

  // Side grows with the block count so every leaf keeps integral extent >= 1.
  Coord side = 32;
  while (side < 16 * static_cast<Coord>(spec.n_blocks)) side <<= 1;

  SplitMix64 rng(derive_seed(spec.seed, "mosaic"));
  std::vector<Leaf> leaves{{Rect{0, 0, side, side}, true}};
  for (int i = 1; i < spec.n_blocks; ++i) {
    int li = pick_largest(leaves);
    Leaf leaf = leaves[li];
    double ratio = spec.aspect_lo + rng.next_double() * (spec.aspect_hi - spec.aspect_lo);
    bool vertical = leaf.prefer_vertical;
    if (vertical && leaf.r.w < 2) vertical = false;
    if (!vertical && leaf.r.h < 2) vertical = true;
    Leaf a = leaf, b = leaf;
    if (vertical) {
      Coord cut = split_pos(leaf.r.x, leaf.r.w, ratio);
      a.r.w = cut - leaf.r.x;
      b.r.x = cut;
      b.r.w = leaf.r.right() - cut;
    } else {
      Coord cut = split_pos(leaf.r.y, leaf.r.h, ratio);
      a.r.h = cut - leaf.r.y;
      b.r.y = cut;
      b.r.h = leaf.r.top() - cut;
    }
    a.prefer_vertical = b.prefer_vertical = !vertical;
    leaves[li] = a;
    leaves.push_back(b);
  }

  Floorplan fp;
  fp.bbox = Rect{0, 0, side, side};
  for (int i = 0; i < spec.n_blocks; ++i) {
    fp.blocks.push_back(Block{i, "b" + std::to_string(i), leaves[i].r});
  }

  SplitMix64 nrng(derive_seed(spec.seed, "nets"));
  std::vector<int> idx(spec.n_blocks);
  for (int j = 0; j < spec.n_nets; ++j) {
    int span = spec.deg_max - spec.deg_min + 1;
    int d = spec.deg_min + static_cast<int>(nrng.below(static_cast<std::uint64_t>(span)));
    d = std::min(d, spec.n_blocks);
    std::iota(idx.begin(), idx.end(), 0);
    for (int t = 0; t < d; ++t) {
      int r = t + static_cast<int>(nrng.below(static_cast<std::uint64_t>(spec.n_blocks - t)));
      std::swap(idx[t], idx[r]);
    }
    Net net;
    net.id = j;
    net.origin = j;
    net.name = "n" + std::to_string(j);
    net.members.assign(idx.begin(), idx.begin() + d);
    std::sort(net.members.begin(), net.members.end());
    fp.nets.push_back(std::move(net));
  }
  return fp;
}

}  // namespace staircut
