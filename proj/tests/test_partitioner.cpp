#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "staircut/partitioner.hpp"

using namespace staircut;

namespace {

std::vector<std::vector<int>> lefts(const Chain& c) {
  std::vector<std::vector<int>> out;
  for (const auto& ev : c.cuts) out.push_back(ev.left);
  return out;
}

// Signature of a whole result for determinism comparisons.
std::vector<std::vector<int>> lefts(const SearchResult& r) {
  std::vector<std::vector<int>> out;
  for (const auto& c : r.chains)
    for (const auto& ev : c.cuts) out.push_back(ev.left);
  return out;
}

void check_chain_laws(const Bag& bag, const SearchResult& res) {
  for (const Chain& c : res.chains) {
    REQUIRE(static_cast<int>(c.cuts.size()) == bag.n - 1);
    for (size_t i = 0; i < c.cuts.size(); ++i) {
      const auto& left = c.cuts[i].left;
      CHECK(static_cast<int>(left.size()) == static_cast<int>(i) + 1);
      CHECK(is_valid_mscut(bag, left));
      if (i > 0) {
        // Each step extends the previous left set by exactly one block.
        CHECK(std::includes(left.begin(), left.end(), c.cuts[i - 1].left.begin(),
                            c.cuts[i - 1].left.end()));
      }
    }
  }
}

}  // namespace

TEST_CASE("mode names round-trip") {
  CHECK(mode_name(Mode::BFS) == std::string("BFS"));
  CHECK(mode_name(Mode::DFS) == std::string("DFS"));
  CHECK(mode_name(Mode::RAND) == std::string("RAND"));
  CHECK(mode_from_name("bfs") == Mode::BFS);
  CHECK(mode_from_name("DFS") == Mode::DFS);
  CHECK(mode_from_name("rand") == Mode::RAND);
  CHECK_THROWS_WITH(mode_from_name("dijkstra"), "unknown mode 'dijkstra'");
}

TEST_CASE("quad: level-order growth") {
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.3);
  SearchResult res = search_bfs(bag, fp, fp.nets, p);

  REQUIRE(res.chains.size() == 1);
  CHECK(lefts(res.chains[0]) ==
        (std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}}));
  CHECK(res.best.left == (std::vector<int>{0, 1}));
  CHECK(res.best.gain == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(res.max_segments == 2);
  CHECK(res.explored.size() == 3);
  check_chain_laws(bag, res);
}

TEST_CASE("quad: depth-first growth matches here") {
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.3);
  SearchResult res = search_dfs(bag, fp, fp.nets, p);
  CHECK(lefts(res.chains[0]) ==
        (std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}}));
  CHECK(res.best.gain == doctest::Approx(0.85).epsilon(1e-9));
  check_chain_laws(bag, res);
}

TEST_CASE("pair: the only cut scores perfectly") {
  Floorplan fp = fixtures::make_f2();
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.3);
  for (Mode m : {Mode::BFS, Mode::DFS, Mode::RAND}) {
    SearchResult res = run_search(m, bag, fp, fp.nets, p, 1, 2);
    CHECK(res.best.left == std::vector<int>{0});
    CHECK(res.best.gain == doctest::Approx(1.0));
  }
}

TEST_CASE("random growth is deterministic in seed and trials") {
  Floorplan fp = fixtures::mosaic(14, 23, 30);
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.2);
  SearchResult a = search_rand(bag, fp, fp.nets, p, 42, 4);
  SearchResult b = search_rand(bag, fp, fp.nets, p, 42, 4);
  CHECK(lefts(a) == lefts(b));
  CHECK(a.best.left == b.best.left);
  CHECK(a.best.gain == b.best.gain);
  CHECK(a.chains.size() == 4);
  for (int t = 0; t < 4; ++t) CHECK(a.chains[t].trial == t);
  check_chain_laws(bag, a);

  SearchResult c = run_search(Mode::RAND, bag, fp, fp.nets, p, 42, 4);
  CHECK(lefts(c) == lefts(a));
}

TEST_CASE("random trials cover cuts the greedy orders miss") {
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.3);
  SearchResult res = search_rand(bag, fp, fp.nets, p, 5, 8);
  std::set<std::vector<int>> seen;
  for (const auto& ev : res.explored) seen.insert(ev.left);
  // All four valid cuts of the quad show up across eight trials.
  CHECK(seen == std::set<std::vector<int>>{{0}, {0, 1}, {0, 2}, {0, 1, 2}});
  CHECK(res.best.gain == doctest::Approx(0.85).epsilon(1e-9));
  check_chain_laws(bag, res);
}

TEST_CASE("every chain runs the full ladder") {
  Params p = Params::make(0.4, 0.1);
  for (int n = 4; n <= 12; ++n) {
    Floorplan fp = fixtures::mosaic(n, 100 + n, 2 * n);
    for (StairDir dir : {StairDir::MIS, StairDir::MDS}) {
      Bag bag = build_bag(fp, dir);
      for (Mode m : {Mode::BFS, Mode::DFS, Mode::RAND}) {
        SearchResult res = run_search(m, bag, fp, fp.nets, p, 9, 2);
        check_chain_laws(bag, res);
        for (const auto& ev : res.explored) CHECK(ev.gain <= res.best.gain + 1e-12);
      }
    }
  }
}

TEST_CASE("stalled frontier falls back to direct admission") {
  Floorplan fp = fixtures::make_l3();
  BagOptions opts;
  opts.corner_fallback = true;
  Bag bag = build_bag(fp, StairDir::MIS, opts);
  Params p = Params::make(0.5, 0.0);
  for (Mode m : {Mode::BFS, Mode::DFS, Mode::RAND}) {
    SearchResult res = run_search(m, bag, fp, fp.nets, p, 3, 2);
    for (const Chain& c : res.chains)
      CHECK(lefts(c) == (std::vector<std::vector<int>>{{0}, {0, 2}}));
  }
}

TEST_CASE("search input validation") {
  Floorplan fp = fixtures::make_f2();
  Params p = Params::make(0.4, 0.3);

  Floorplan solo;
  solo.bbox = {0, 0, 1, 1};
  solo.blocks = {{0, "x", {0, 0, 1, 1}}};
  Bag one = build_bag(solo, StairDir::MIS);
  CHECK_THROWS_WITH(search_bfs(one, solo, {}, p), "search: need at least 2 blocks");

  Bag bare;
  bare.n = 2;
  bare.adj.assign(2, {});
  bare.source = 0;
  bare.sink = 1;
  CHECK_THROWS_WITH(search_bfs(bare, fp, {}, p), "search: bag has no predecessor lists");

  Bag bag = build_bag(fp, StairDir::MIS);
  CHECK_THROWS_WITH(search_rand(bag, fp, {}, p, 1, 0), "search: need at least one trial");

  // A vertex whose predecessor is the sink can never be admitted.
  Bag stuck;
  stuck.n = 3;
  stuck.adj.assign(3, {});
  stuck.adj[0].push_back(BagEdge{1, {Point{1, 0}, Point{1, 1}}});
  stuck.adj[1].push_back(BagEdge{2, {Point{2, 0}, Point{2, 1}}});
  stuck.source = 0;
  stuck.sink = 1;
  recompute_predecessors(stuck);
  Floorplan trio;
  trio.bbox = {0, 0, 3, 1};
  trio.blocks = {{0, "a", {0, 0, 1, 1}}, {1, "b", {1, 0, 1, 1}}, {2, "c", {2, 0, 1, 1}}};
  CHECK_THROWS_WITH(search_bfs(stuck, trio, {}, p),
                    "search: unreachable vertices (not a dissection)");
}

TEST_CASE("uniform successor picks have the expected mean") {
  Bag bag = build_bag(fixtures::make_f4(), StairDir::MIS);

  PickHistogram two = neighbor_pick_distribution(bag, 0, 200000, 7);
  REQUIRE(two.counts.size() == 2);
  CHECK(two.counts[0] + two.counts[1] == 200000);
  CHECK(std::abs(two.mean - 1.5) < 0.015);

  PickHistogram one = neighbor_pick_distribution(bag, 1, 1000, 7);
  CHECK(one.mean == doctest::Approx(1.0));

  // A fan-out of five, fed to the sampler directly.
  Bag star;
  star.n = 6;
  star.adj.assign(6, {});
  for (int v = 1; v < 6; ++v) star.adj[0].push_back(BagEdge{v, {}});
  PickHistogram five = neighbor_pick_distribution(star, 0, 500000, 11);
  REQUIRE(five.counts.size() == 5);
  CHECK(std::abs(five.mean - 3.0) < 0.03);

  CHECK_THROWS_WITH(neighbor_pick_distribution(bag, 3, 10, 1), "pick: vertex has no successors");
  CHECK_THROWS_WITH(neighbor_pick_distribution(bag, 9, 10, 1), "pick: vertex out of range");
  CHECK_THROWS_WITH(neighbor_pick_distribution(bag, 0, 0, 1),
                    "pick: need a positive sample count");
}
