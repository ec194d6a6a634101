#include "staircut/floorplan.hpp"

#include <sstream>

namespace staircut {

Area Floorplan::total_block_area() const {
  Area sum = 0;
  for (const auto& b : blocks) sum += b.rect.area();
  return sum;
}

static bool interiors_overlap(const Rect& a, const Rect& b) {
  return overlap_len(a.x, a.right(), b.x, b.right()) > 0 &&
         overlap_len(a.y, a.top(), b.y, b.top()) > 0;
}

ValidationReport validate(const Floorplan& fp, ValidateMode mode) {
  ValidationReport rep;
  const auto& bs = fp.blocks;
  for (int i = 0; i < fp.n(); ++i) {
    const Rect& r = bs[i].rect;
    if (r.w <= 0 || r.h <= 0 || r.x < fp.bbox.x || r.y < fp.bbox.y ||
        r.right() > fp.bbox.right() || r.top() > fp.bbox.top()) {
      rep.outside.push_back(bs[i].id);
    }
  }
  // Sweep by x so only x-overlapping pairs are compared.
  std::vector<int> order(bs.size());
  for (size_t i = 0; i < bs.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return bs[a].rect.x < bs[b].rect.x; });
  for (size_t i = 0; i < order.size(); ++i) {
    const Rect& a = bs[order[i]].rect;
    for (size_t j = i + 1; j < order.size(); ++j) {
      const Rect& b = bs[order[j]].rect;
      if (b.x >= a.right()) break;
      if (interiors_overlap(a, b)) {
        int u = bs[order[i]].id, v = bs[order[j]].id;
        rep.overlaps.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
  std::sort(rep.overlaps.begin(), rep.overlaps.end());
  if (mode == ValidateMode::Mosaic) {
    rep.uncovered = fp.bbox.area() - fp.total_block_area();
  }
  rep.ok = rep.overlaps.empty() && rep.outside.empty() &&
           (mode == ValidateMode::Packed || rep.uncovered == 0);
  return rep;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "invalid");
  if (!overlaps.empty()) os << "; " << overlaps.size() << " overlapping pair(s)";
  if (!outside.empty()) os << "; " << outside.size() << " block(s) outside bbox";
  if (uncovered != 0) os << "; uncovered area " << uncovered;
  return os.str();
}

FloorplanStats stats(const Floorplan& fp) {
  FloorplanStats s;
  s.n = fp.n();
  s.k = fp.k();
  if (s.k > 0) {
    std::int64_t pins = 0;
    for (const auto& net : fp.nets) pins += static_cast<std::int64_t>(net.members.size());
    s.avg_net_degree = static_cast<double>(pins) / s.k;
  }
  return s;
}

}  // namespace staircut
