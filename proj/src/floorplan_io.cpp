#include "staircut/floorplan_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace staircut {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("floorplan: " + msg); }

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown key '" + it.key() + "' in " + where);
  }
}

Coord to_coord(const json& v, double unit, const std::string& what) {
  if (!v.is_number()) fail(what + " is not a number");
  double q = v.get<double>() / unit;
  double r = std::llround(q);
  if (std::abs(q - r) > 1e-6) fail(what + " is not a multiple of the unit");
  return static_cast<Coord>(r);
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void validate_loaded(const Floorplan& fp) {
  ValidationReport rep = validate(fp, ValidateMode::Packed);
  if (!rep.overlaps.empty()) {
    auto [a, b] = rep.overlaps.front();
    fail("blocks '" + fp.blocks[a].name + "' and '" + fp.blocks[b].name + "' overlap");
  }
  if (!rep.outside.empty())
    fail("block '" + fp.blocks[rep.outside.front()].name + "' lies outside the bounding box");
}

}  // namespace

Floorplan load_floorplan(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    fail("parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!j.is_object()) fail("top-level document is not an object");
  check_keys(j, {"unit", "bbox", "blocks", "nets"}, "document");
  if (!j.contains("bbox") || !j.contains("blocks")) fail("missing 'bbox' or 'blocks'");

  double unit = 1.0;
  if (j.contains("unit")) {
    if (!j["unit"].is_number() || j["unit"].get<double>() <= 0) fail("'unit' must be positive");
    unit = j["unit"].get<double>();
  }

  Floorplan fp;
  const json& bb = j["bbox"];
  if (!bb.is_object()) fail("'bbox' is not an object");
  check_keys(bb, {"w", "h"}, "bbox");
  if (!bb.contains("w") || !bb.contains("h")) fail("bbox needs 'w' and 'h'");
  fp.bbox = Rect{0, 0, to_coord(bb["w"], unit, "bbox.w"), to_coord(bb["h"], unit, "bbox.h")};
  if (fp.bbox.w <= 0 || fp.bbox.h <= 0) fail("bbox must have positive extent");

  if (!j["blocks"].is_array()) fail("'blocks' is not an array");
  std::map<std::string, int> by_name;
  for (const json& b : j["blocks"]) {
    if (!b.is_object()) fail("block entry is not an object");
    check_keys(b, {"name", "x", "y", "w", "h"}, "block");
    for (const char* k : {"name", "x", "y", "w", "h"})
      if (!b.contains(k)) fail(std::string("block missing '") + k + "'");
    Block blk;
    blk.id = fp.n();
    blk.name = b["name"].get<std::string>();
    if (blk.name.empty()) fail("block with empty name");
    blk.rect = Rect{to_coord(b["x"], unit, "block '" + blk.name + "' x"),
                    to_coord(b["y"], unit, "block '" + blk.name + "' y"),
                    to_coord(b["w"], unit, "block '" + blk.name + "' w"),
                    to_coord(b["h"], unit, "block '" + blk.name + "' h")};
    if (blk.rect.w <= 0 || blk.rect.h <= 0)
      fail("block '" + blk.name + "' must have positive extent");
    if (!by_name.emplace(blk.name, blk.id).second)
      fail("duplicate block name '" + blk.name + "'");
    fp.blocks.push_back(std::move(blk));
  }
  if (fp.n() == 0) fail("no blocks");

  if (j.contains("nets")) {
    if (!j["nets"].is_array()) fail("'nets' is not an array");
    for (const json& njs : j["nets"]) {
      if (!njs.is_object()) fail("net entry is not an object");
      check_keys(njs, {"name", "blocks"}, "net");
      if (!njs.contains("name") || !njs.contains("blocks")) fail("net needs 'name' and 'blocks'");
      Net net;
      net.id = fp.k();
      net.origin = net.id;
      net.name = njs["name"].get<std::string>();
      std::set<int> members;
      for (const json& m : njs["blocks"]) {
        auto it = by_name.find(m.get<std::string>());
        if (it == by_name.end())
          fail("net '" + net.name + "' references unknown block '" + m.get<std::string>() + "'");
        members.insert(it->second);
      }
      if (members.size() < 2)
        fail("net '" + net.name + "' has fewer than two distinct blocks");
      net.members.assign(members.begin(), members.end());
      fp.nets.push_back(std::move(net));
    }
  }

  validate_loaded(fp);
  return fp;
}

std::string save_floorplan(const Floorplan& fp) {
  ordered_json j;
  j["unit"] = 1;
  j["bbox"] = {{"w", fp.bbox.w}, {"h", fp.bbox.h}};
  j["blocks"] = ordered_json::array();
  for (const auto& b : fp.blocks) {
    j["blocks"].push_back({{"name", b.name},
                           {"x", b.rect.x},
                           {"y", b.rect.y},
                           {"w", b.rect.w},
                           {"h", b.rect.h}});
  }
  j["nets"] = ordered_json::array();
  for (const auto& net : fp.nets) {
    ordered_json names = ordered_json::array();
    for (int m : net.members) names.push_back(fp.blocks[m].name);
    j["nets"].push_back({{"name", net.name}, {"blocks", names}});
  }
  return j.dump(2) + "\n";
}

Floorplan load_floorplan_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  return load_floorplan(buf.str());
}

namespace {

// Shared tokenizer for the bookshelf files: strips comments and header
// counters, yields whitespace-separated tokens per logical line.
std::vector<std::vector<std::string>> bookshelf_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    for (char& c : line)
      if (c == ',' || c == '(' || c == ')' || c == ':') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "UCSC" || toks[0] == "UCLA") continue;
    out.push_back(std::move(toks));
  }
  return out;
}

bool is_counter(const std::vector<std::string>& toks) {
  return toks.size() >= 2 && toks[0].rfind("Num", 0) == 0;
}

Coord snap(double v, std::int64_t denom) {
  return static_cast<Coord>(std::llround(v * static_cast<double>(denom)));
}

}  // namespace

Floorplan import_bookshelf(const std::string& blocks_text, const std::string& pl_text,
                           const std::string& nets_text, std::int64_t snap_denominator) {
  struct Entry {
    Coord w = 0, h = 0;
    bool terminal = false;
  };
  // Ids follow file order, matching the native loader's convention.
  std::vector<std::pair<std::string, Entry>> entries;
  std::map<std::string, size_t> entry_ix;
  auto entry_of = [&](const std::string& name) -> Entry& {
    auto [it, fresh] = entry_ix.emplace(name, entries.size());
    if (fresh) entries.emplace_back(name, Entry{});
    return entries[it->second].second;
  };

  for (const auto& toks : bookshelf_lines(blocks_text)) {
    if (is_counter(toks)) continue;
    if (toks.size() >= 2 && toks[1] == "terminal") {
      entry_of(toks[0]).terminal = true;
    } else if (toks.size() >= 3 && toks[1] == "hardrectilinear") {
      // name hardrectilinear N x1 y1 x2 y2 ... : take the corner bounding box
      double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
      bool first = true;
      for (size_t i = 3; i + 1 < toks.size(); i += 2) {
        double x = std::stod(toks[i]), y = std::stod(toks[i + 1]);
        if (first) {
          xmin = xmax = x;
          ymin = ymax = y;
          first = false;
        } else {
          xmin = std::min(xmin, x);
          xmax = std::max(xmax, x);
          ymin = std::min(ymin, y);
          ymax = std::max(ymax, y);
        }
      }
      if (first) throw Error("bookshelf: block '" + toks[0] + "' has no vertices");
      Entry& e = entry_of(toks[0]);
      e.w = snap(xmax - xmin, snap_denominator);
      e.h = snap(ymax - ymin, snap_denominator);
    } else if (toks.size() >= 3 && toks[1] == "softrectangular") {
      // Soft entries carry area only; imported as a square of that area.
      double area = std::stod(toks[2]);
      Coord side = snap(std::sqrt(area), snap_denominator);
      Entry& e = entry_of(toks[0]);
      e.w = e.h = std::max<Coord>(side, 1);
    }
  }

  std::map<std::string, std::pair<Coord, Coord>> placement;
  for (const auto& toks : bookshelf_lines(pl_text)) {
    if (is_counter(toks) || toks.size() < 3) continue;
    placement[toks[0]] = {snap(std::stod(toks[1]), snap_denominator),
                          snap(std::stod(toks[2]), snap_denominator)};
  }

  Floorplan fp;
  std::map<std::string, int> by_name;
  for (const auto& [name, e] : entries) {
    if (e.terminal) continue;
    auto it = placement.find(name);
    if (it == placement.end()) throw Error("bookshelf: missing placement for block '" + name + "'");
    Block b;
    b.id = fp.n();
    b.name = name;
    b.rect = Rect{it->second.first, it->second.second, e.w, e.h};
    by_name.emplace(name, b.id);
    fp.blocks.push_back(std::move(b));
  }
  if (fp.n() == 0) throw Error("bookshelf: no placed blocks");

  Coord xmin = fp.blocks[0].rect.x, ymin = fp.blocks[0].rect.y;
  Coord xmax = fp.blocks[0].rect.right(), ymax = fp.blocks[0].rect.top();
  for (const auto& b : fp.blocks) {
    xmin = std::min(xmin, b.rect.x);
    ymin = std::min(ymin, b.rect.y);
    xmax = std::max(xmax, b.rect.right());
    ymax = std::max(ymax, b.rect.top());
  }
  for (auto& b : fp.blocks) {
    b.rect.x -= xmin;
    b.rect.y -= ymin;
  }
  fp.bbox = Rect{0, 0, xmax - xmin, ymax - ymin};

  auto lines = bookshelf_lines(nets_text);
  int net_no = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    if (toks[0] != "NetDegree") {
      if (is_counter(toks)) continue;
      continue;
    }
    int degree = std::stoi(toks[1]);
    std::string name = toks.size() >= 3 ? toks[2] : "net" + std::to_string(net_no);
    std::set<int> members;
    for (int d = 0; d < degree && i + 1 < lines.size(); ++d) {
      const auto& pin = lines[++i];
      const std::string& ref = pin[0];
      auto it = by_name.find(ref);
      if (it != by_name.end()) {
        members.insert(it->second);
      } else if (!entry_ix.count(ref)) {
        throw Error("bookshelf: net '" + name + "' references unknown name '" + ref + "'");
      }
      // terminals fall through and are dropped
    }
    ++net_no;
    if (members.size() < 2) continue;
    Net net;
    net.id = fp.k();
    net.origin = net.id;
    net.name = name;
    net.members.assign(members.begin(), members.end());
    fp.nets.push_back(std::move(net));
  }
  return fp;
}

}  // namespace staircut
