#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "staircut/tree.hpp"

using namespace staircut;

namespace {

void check_partition_closure(const MscNode& node) {
  std::set<int> sides(node.left_global.begin(), node.left_global.end());
  for (int id : node.right_global) {
    CHECK(sides.count(id) == 0);
    sides.insert(id);
  }
  CHECK(sides == std::set<int>(node.block_ids.begin(), node.block_ids.end()));
  CHECK(node.cut.gain >= 0.0);
  CHECK(node.cut.gain <= 1.0 + 1e-12);
  if (node.left) {
    CHECK(node.left->level == node.level + 1);
    CHECK(node.left->path == node.path + "L");
    CHECK(node.left->stype != node.stype);
    check_partition_closure(*node.left);
  }
  if (node.right) {
    CHECK(node.right->path == node.path + "R");
    check_partition_closure(*node.right);
  }
}

}  // namespace

TEST_CASE("quad tree: shape, scores, assignments") {
  Floorplan fp = fixtures::make_f4();
  Params p = Params::make(0.4, 0.3);
  auto root = build_tree(fp, p, Mode::BFS, 1);

  CHECK(root->level == 0);
  CHECK(root->stype == StairDir::MIS);
  CHECK(root->path == "");
  CHECK(root->left_global == (std::vector<int>{0, 1}));
  CHECK(root->right_global == (std::vector<int>{2, 3}));
  CHECK(root->cut.gain == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(root->assigned_nets == std::vector<int>{0});

  REQUIRE(root->left);
  CHECK(root->left->stype == StairDir::MDS);
  CHECK(root->left->block_ids == (std::vector<int>{0, 1}));
  CHECK(root->left->fp.n() == 2);
  CHECK(root->left->fp.nets.empty());
  CHECK(root->left->cut.gain == doctest::Approx(1.0));
  CHECK(root->left->assigned_nets.empty());
  CHECK_FALSE(root->left->left);
  CHECK_FALSE(root->left->right);

  REQUIRE(root->right);
  CHECK(root->right->block_ids == (std::vector<int>{2, 3}));
  REQUIRE(root->right->fp.nets.size() == 1);
  CHECK(root->right->fp.nets[0].origin == 1);
  CHECK(root->right->fp.nets[0].members == (std::vector<int>{0, 1}));
  CHECK(root->right->cut.gain == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(root->right->assigned_nets == std::vector<int>{1});

  check_partition_closure(*root);
}

TEST_CASE("quad tree: metrics") {
  Floorplan fp = fixtures::make_f4();
  Params p = Params::make(0.4, 0.3);
  auto root = build_tree(fp, p, Mode::BFS, 1);
  TreeMetrics tm = tree_metrics(*root);

  CHECK(tm.height == 2);
  CHECK(tm.node_count == 3);
  CHECK(tm.mean_gain == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(tm.mean_balr == doctest::Approx(1.0));
  CHECK(tm.mean_bend_ratio == doctest::Approx(0.0));
  CHECK(tm.mean_netcut_ratio == doctest::Approx(0.5));
  CHECK(tm.max_segments == 2);
  CHECK(tm.leaf_block_counts == (std::vector<int>{1, 1, 1, 1}));
  REQUIRE(tm.per_level.size() == 2);
  CHECK(tm.per_level[0].nodes == 1);
  CHECK(tm.per_level[0].gain == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(tm.per_level[1].nodes == 2);
  CHECK(tm.per_level[1].gain == doctest::Approx(0.85).epsilon(1e-9));
}

TEST_CASE("nets pin to the shallowest splitting node") {
  Floorplan fp = fixtures::make_f4();
  fp.nets.push_back({2, "n3", {0, 1, 2}, 2, false});
  Params p = Params::make(0.4, 0.3);
  auto root = build_tree(fp, p, Mode::BFS, 1);

  // n3 splits at the root; its {A,B} fragment splits again in the left child
  // but stays assigned to the root.
  CHECK(root->assigned_nets == (std::vector<int>{0, 2}));
  REQUIRE(root->left);
  REQUIRE(root->left->fp.nets.size() == 1);
  CHECK(root->left->fp.nets[0].fragment);
  CHECK(root->left->fp.nets[0].origin == 2);
  CHECK(root->left->assigned_nets.empty());

  std::vector<NetAssignment> order = routing_order(*root);
  REQUIRE(order.size() == 3);
  CHECK(order[0].net_id == 0);
  CHECK(order[0].path == "");
  CHECK(order[0].level == 0);
  CHECK(order[1].net_id == 2);
  CHECK(order[1].path == "");
  CHECK(order[2].net_id == 1);
  CHECK(order[2].path == "R");
  CHECK(order[2].level == 1);
}

TEST_CASE("tree export is complete and deterministic") {
  Floorplan fp = fixtures::make_f4();
  Params p = Params::make(0.4, 0.3);
  auto a = build_tree(fp, p, Mode::BFS, 1);
  auto b = build_tree(fp, p, Mode::BFS, 1);
  nlohmann::json ja = tree_to_json(*a);
  CHECK(ja.dump() == tree_to_json(*b).dump());

  CHECK(ja["type"] == "MIS");
  CHECK(ja["path"] == "");
  CHECK(ja["cut"]["left"] == nlohmann::json({0, 1}));
  CHECK(ja["cut"]["cut_nets"] == 1);
  CHECK(ja["cut"]["nets"] == 2);
  CHECK(ja["cut"]["segments"] == 1);
  CHECK(ja["left"]["type"] == "MDS");
  CHECK(ja["left"]["left"].is_null());
  CHECK(ja["assigned_nets"] == nlohmann::json({0}));
}

TEST_CASE("random-mode trees reproduce from the seed") {
  Floorplan fp = fixtures::mosaic(18, 77, 40);
  Params p = Params::make(0.4, 0.2);
  auto a = build_tree(fp, p, Mode::RAND, 1234, 2);
  auto b = build_tree(fp, p, Mode::RAND, 1234, 2);
  CHECK(tree_to_json(*a).dump() == tree_to_json(*b).dump());
}

TEST_CASE("trees over generated mosaics are full bipartitions") {
  Params p = Params::make(0.4, 0.1);
  for (int n : {9, 16, 24}) {
    Floorplan fp = fixtures::mosaic(n, 5 * n + 2, 3 * n);
    for (Mode m : {Mode::BFS, Mode::DFS, Mode::RAND}) {
      auto root = build_tree(fp, p, m, 7, 2);
      check_partition_closure(*root);
      TreeMetrics tm = tree_metrics(*root);
      CHECK(tm.node_count == n - 1);
      CHECK(static_cast<int>(tm.leaf_block_counts.size()) == n);
      CHECK(std::all_of(tm.leaf_block_counts.begin(), tm.leaf_block_counts.end(),
                        [](int c) { return c == 1; }));
      int floor_h = static_cast<int>(std::ceil(std::log2(n)));
      CHECK(tm.height >= floor_h);
      CHECK(tm.height <= n - 1);

      // Every top-level net lands on exactly one node.
      std::vector<NetAssignment> order = routing_order(*root);
      std::set<int> seen;
      for (const auto& asg : order) CHECK(seen.insert(asg.net_id).second);
      CHECK(seen.size() == fp.nets.size());
      CHECK(std::is_sorted(order.begin(), order.end(),
                           [](const NetAssignment& x, const NetAssignment& y) {
                             return std::pair(x.level, x.path) < std::pair(y.level, y.path);
                           }));
    }
  }
}

TEST_CASE("tree input validation") {
  Params p = Params::make(0.4, 0.3);
  Floorplan solo;
  solo.bbox = {0, 0, 1, 1};
  solo.blocks = {{0, "x", {0, 0, 1, 1}}};
  CHECK_THROWS_WITH(build_tree(solo, p, Mode::BFS, 1), "tree: need at least 2 blocks");
}
