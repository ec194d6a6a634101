#include "staircut/svg.hpp"

#include <cstdio>
#include <sstream>

namespace staircut {

namespace {

// Fixed-point pixel formatting keeps the output byte-stable across platforms.
std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Canvas {
  double scale, ox, oy, h;
  double x(Coord cx) const { return ox + static_cast<double>(cx) * scale; }
  double y(Coord cy) const { return h - (oy + static_cast<double>(cy) * scale); }
};

const char* cut_color(StairDir dir) {
  return dir == StairDir::MIS ? "#d62728" : "#1f77b4";
}

void draw_cut(std::ostringstream& os, const Canvas& c, const Polyline& poly, StairDir dir,
              const RenderOptions& opts) {
  if (poly.pts.size() < 2) return;
  os << "  <polyline fill=\"none\" stroke=\"" << cut_color(dir)
     << "\" stroke-width=\"3\" points=\"";
  for (size_t i = 0; i < poly.pts.size(); ++i) {
    if (i) os << " ";
    os << px(c.x(poly.pts[i].x)) << "," << px(c.y(poly.pts[i].y));
  }
  os << "\"/>\n";
  if (opts.mark_bends) {
    for (size_t i = 1; i + 1 < poly.pts.size(); ++i) {
      double bx = c.x(poly.pts[i].x), by = c.y(poly.pts[i].y);
      os << "  <rect x=\"" << px(bx - 4) << "\" y=\"" << px(by - 4)
         << "\" width=\"8\" height=\"8\" fill=\"" << cut_color(dir)
         << "\" stroke=\"white\" stroke-width=\"1\"/>\n";
    }
  }
}

std::string render(const Floorplan& fp,
                   const std::vector<std::pair<Polyline, StairDir>>& cuts,
                   const RenderOptions& opts) {
  const double margin = 20.0;
  double bw = static_cast<double>(fp.bbox.w), bh = static_cast<double>(fp.bbox.h);
  if (bw <= 0 || bh <= 0) throw Error("render: empty bounding box");
  double scale = (opts.width - 2 * margin) / bw;
  double height = bh * scale + 2 * margin;
  Canvas c{scale, margin - static_cast<double>(fp.bbox.x) * scale,
           margin - static_cast<double>(fp.bbox.y) * scale, height};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(opts.width)
     << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(opts.width) << " "
     << px(height) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << px(opts.width) << "\" height=\"" << px(height)
     << "\" fill=\"white\"/>\n";
  os << "  <rect x=\"" << px(c.x(fp.bbox.x)) << "\" y=\"" << px(c.y(fp.bbox.top()))
     << "\" width=\"" << px(bw * scale) << "\" height=\"" << px(bh * scale)
     << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
  for (const Block& b : fp.blocks) {
    os << "  <rect x=\"" << px(c.x(b.rect.x)) << "\" y=\"" << px(c.y(b.rect.top()))
       << "\" width=\"" << px(static_cast<double>(b.rect.w) * scale) << "\" height=\""
       << px(static_cast<double>(b.rect.h) * scale)
       << "\" fill=\"#f2e8cf\" stroke=\"#6b705c\" stroke-width=\"1\"/>\n";
    if (opts.labels) {
      Point ctr = b.center2();  // doubled coordinates, hence half scale here
      double tx = c.ox + static_cast<double>(ctr.x) * scale / 2.0;
      double ty = c.h - (c.oy + static_cast<double>(ctr.y) * scale / 2.0);
      os << "  <text x=\"" << px(tx) << "\" y=\"" << px(ty)
         << "\" font-family=\"Helvetica\" font-size=\"12\" text-anchor=\"middle\" "
            "dominant-baseline=\"middle\" fill=\"#333\">"
         << b.name << "</text>\n";
    }
  }
  for (const auto& [poly, dir] : cuts) draw_cut(os, c, poly, dir, opts);
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Floorplan& fp,
                       const std::vector<std::pair<Polyline, StairDir>>& cuts,
                       const RenderOptions& opts) {
  return render(fp, cuts, opts);
}

namespace {

void collect_cuts(const MscNode& node, std::vector<std::pair<Polyline, StairDir>>& out) {
  CutBoundary cb = trace_cut_boundary(node.fp, node.cut.left, node.stype);
  for (Polyline& p : cb.paths) out.emplace_back(std::move(p), node.stype);
  if (node.left) collect_cuts(*node.left, out);
  if (node.right) collect_cuts(*node.right, out);
}

}  // namespace

std::string render_tree_svg(const Floorplan& fp, const MscNode& tree,
                            const RenderOptions& opts) {
  std::vector<std::pair<Polyline, StairDir>> cuts;
  collect_cuts(tree, cuts);
  return render_svg(fp, cuts, opts);
}

}  // namespace staircut
