#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "staircut/staircase.hpp"

using namespace staircut;

namespace {

std::vector<int> bits(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("weights: construction and validation") {
  Params p = Params::make(0.4, 0.3);
  CHECK(p.gamma == Frac::of(2, 5));
  CHECK(p.beta == Frac::of(3, 10));
  CHECK(p.baltype == BalanceType::Area);
  CHECK_NOTHROW(Params::make(1.0, 0.0));
  CHECK_NOTHROW(Params::make(0.0, 1.0));
  CHECK_THROWS_WITH(Params::make(-0.1, 0.0), "params: gamma and beta must lie in [0, 1]");
  CHECK_THROWS_WITH(Params::make(0.5, 1.2), "params: gamma and beta must lie in [0, 1]");
  CHECK_THROWS_WITH(Params::make(0.5, 0.6), "params: gamma + beta must not exceed 1");
}

TEST_CASE("fractions: normalisation and rendering") {
  CHECK(Frac::of(2, 4) == Frac::of(1, 2));
  CHECK(Frac::of(1, -2).num == -1);
  CHECK(Frac::of(1, -2).den == 2);
  CHECK_THROWS_WITH(Frac::of(1, 0), "fraction with zero denominator");
  CHECK(Frac::from_decimal(0.4) == Frac::of(2, 5));
  CHECK(Frac::from_decimal(0.35) == Frac::of(7, 20));
  CHECK(Frac::of(7, 20).str() == "0.35");
  CHECK(Frac::of(0, 5).str() == "0");
  CHECK(Frac::of(-1, 2).str() == "-0.5");
  CHECK(Frac::of(3, 1).str() == "3");
}

TEST_CASE("rationals: exact arithmetic with overflow flagging") {
  Rat128 half = Rat128::of(1, 2);
  Rat128 third = Rat128::of(1, 3);
  Rat128 sum = rat_add(half, third);
  CHECK(sum.exact);
  CHECK(static_cast<std::int64_t>(sum.num) == 5);
  CHECK(static_cast<std::int64_t>(sum.den) == 6);
  Rat128 prod = rat_mul(half, third);
  CHECK(static_cast<std::int64_t>(prod.num) == 1);
  CHECK(static_cast<std::int64_t>(prod.den) == 6);

  bool ok = false;
  CHECK(rat_cmp(third, half, &ok) == -1);
  CHECK(ok);
  CHECK(rat_cmp(half, Rat128::of(2, 4), &ok) == 0);

  // 2^62 squared still fits in 128 bits; the cube does not.
  Rat128 big = Rat128::of(std::int64_t{1} << 62, 1);
  Rat128 sq = rat_mul(big, big);
  CHECK(sq.exact);
  Rat128 cube = rat_mul(sq, big);
  CHECK_FALSE(cube.exact);
  CHECK_FALSE(rat_add(sq, Rat128::of(1, std::int64_t{1} << 62)).exact);
  rat_cmp(sq, Rat128::of(1, std::int64_t{1} << 62), &ok);
  CHECK_FALSE(ok);
}

TEST_CASE("valid cuts are exactly the predecessor-closed sets") {
  Bag bag = build_bag(fixtures::make_f4(), StairDir::MIS);
  CHECK(is_valid_mscut(bag, {0}));
  CHECK(is_valid_mscut(bag, {0, 1}));
  CHECK(is_valid_mscut(bag, {0, 2}));
  CHECK(is_valid_mscut(bag, {0, 1, 2}));
  CHECK_THROWS_WITH(is_valid_mscut(bag, {1}), "cut: source must lie in the left set");
  CHECK_THROWS_WITH(is_valid_mscut(bag, {0, 3}), "cut: sink must lie outside the left set");
  CHECK_THROWS_WITH(is_valid_mscut(bag, {0, 7}), "cut: block id out of range");

  Bag grid = build_bag(fixtures::make_grid6(), StairDir::MIS);
  CHECK(is_valid_mscut(grid, {0, 1, 2}));
  CHECK_FALSE(is_valid_mscut(grid, {0, 1, 3}));  // D needs C first
}

TEST_CASE("quad gains are the hand-computed values") {
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MIS);
  Params p = Params::make(0.4, 0.3);

  CutEval top = evaluate_cut(fp, bag, fp.nets, {0, 1}, p);
  CHECK(top.gain == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(top.balr == doctest::Approx(1.0));
  CHECK(top.k_c == 1);
  CHECK(top.k == 2);
  CHECK(top.z == 0);
  CHECK(top.z_max == 0);
  CHECK(top.segments == 1);

  CutEval west = evaluate_cut(fp, bag, fp.nets, {0, 2}, p);
  CHECK(west.gain == doctest::Approx(0.70).epsilon(1e-9));
  CHECK(west.k_c == 2);

  CutEval lone = evaluate_cut(fp, bag, fp.nets, {0}, p);
  CHECK(lone.gain == doctest::Approx(0.4 / 3 + 0.15).epsilon(1e-9));
  CHECK(lone.bal_min == 1);
  CHECK(lone.bal_max == 3);
  CHECK(lone.k_c == 1);
  CHECK(lone.z == 1);
  CHECK(lone.z_max == 1);
  CHECK(lone.segments == 2);

  CutEval rest = evaluate_cut(fp, bag, fp.nets, {2, 1, 0}, p);
  CHECK(rest.left == std::vector<int>{0, 1, 2});  // sorted on evaluation
  CHECK(rest.gain == doctest::Approx(0.4 / 3).epsilon(1e-9));

  CHECK_THROWS_WITH(evaluate_cut(fp, bag, fp.nets, {0, 3}, p),
                    "cut: sink must lie outside the left set");
}

TEST_CASE("rising quad mirrors the falling scores") {
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MDS);
  Params p = Params::make(0.4, 0.3);
  CHECK(evaluate_cut(fp, bag, fp.nets, {2}, p).gain ==
        doctest::Approx(0.4 / 3 + 0.15).epsilon(1e-9));
  CHECK(evaluate_cut(fp, bag, fp.nets, {2, 0}, p).gain == doctest::Approx(0.70).epsilon(1e-9));
  CHECK(evaluate_cut(fp, bag, fp.nets, {2, 3}, p).gain == doctest::Approx(0.85).epsilon(1e-9));
}

TEST_CASE("score conventions for missing nets and straight cuts") {
  Params p = Params::make(0.4, 0.3);
  CHECK(gain_value(p, 1.0, 0, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(gain_value(p, 0.0, 4, 4, 1, 1) == doctest::Approx(0.0));
  CHECK(gain_value(p, 0.5, 1, 4, 1, 3) ==
        doctest::Approx(0.4 * 0.5 + 0.3 * 0.75 + 0.3 * (2.0 / 3)));
}

TEST_CASE("boundary polylines follow the stair direction") {
  Floorplan fp = fixtures::make_f4();

  Polyline top = boundary_polyline(fp, {0, 1}, StairDir::MIS);
  CHECK(top.pts == (std::vector<Point>{{2, 1}, {0, 1}}));
  CHECK(top.length() == 2);

  Polyline west = boundary_polyline(fp, {0, 2}, StairDir::MIS);
  CHECK(west.pts == (std::vector<Point>{{1, 2}, {1, 0}}));

  Polyline lone = boundary_polyline(fp, {0}, StairDir::MIS);
  CHECK(lone.pts == (std::vector<Point>{{1, 2}, {1, 1}, {0, 1}}));
  CHECK(lone.length() == 2);

  Polyline rise = boundary_polyline(fp, {2}, StairDir::MDS);
  CHECK(rise.pts == (std::vector<Point>{{0, 1}, {1, 1}, {1, 0}}));
}

TEST_CASE("bend counting on raw polylines") {
  CHECK(count_bends(Polyline{}) == std::pair<int, int>{0, 0});
  CHECK(count_bends(Polyline{{{2, 1}, {0, 1}}}) == std::pair<int, int>{0, 0});
  CHECK(count_bends(Polyline{{{1, 2}, {1, 1}, {0, 1}}}) == std::pair<int, int>{1, 1});
  CHECK(count_bends(Polyline{{{3, 3}, {3, 2}, {1, 2}, {1, 0}, {0, 0}}}) ==
        std::pair<int, int>{3, 3});
  // Unmerged collinear input: a slack pair, no orientation change.
  CHECK(count_bends(Polyline{{{0, 0}, {1, 0}, {2, 0}}}) == std::pair<int, int>{0, 1});
}

TEST_CASE("net partitioning keeps usable fragments only") {
  std::vector<Net> nets = {{0, "n1", {0, 3}, 0, false},
                           {1, "n2", {2, 3}, 1, false},
                           {2, "n3", {0, 1, 2}, 2, false}};
  NetSplit split = partition_nets(nets, {0, 1});

  CHECK(split.k_c == 2);  // n1 and n3 straddle the cut
  REQUIRE(split.left.size() == 1);
  CHECK(split.left[0].name == "n3");
  CHECK(split.left[0].members == (std::vector<int>{0, 1}));
  CHECK(split.left[0].fragment);
  CHECK(split.left[0].origin == 2);
  CHECK(split.left[0].id == 0);

  REQUIRE(split.right.size() == 1);
  CHECK(split.right[0].name == "n2");
  CHECK(split.right[0].members == (std::vector<int>{2, 3}));
  CHECK_FALSE(split.right[0].fragment);
  CHECK(split.right[0].origin == 1);
}

TEST_CASE("balance by area and by count") {
  Floorplan fp;
  fp.bbox = {0, 0, 4, 1};
  fp.blocks = {{0, "s", {0, 0, 1, 1}}, {1, "w", {1, 0, 3, 1}}};
  CHECK(balance_ratio(fp, {0}, BalanceType::Area) == doctest::Approx(1.0 / 3));
  CHECK(balance_ratio(fp, {0}, BalanceType::Number) == doctest::Approx(1.0));
  CHECK(balance_minmax(fp, {0}, BalanceType::Area) == std::pair<std::int64_t, std::int64_t>{1, 3});
  CHECK(balance_minmax(fp, {0}, BalanceType::Number) ==
        std::pair<std::int64_t, std::int64_t>{1, 1});
}

TEST_CASE("scores are invariant under grid scaling") {
  Floorplan fp = fixtures::mosaic(12, 99, 36);
  Floorplan big = fp;
  big.bbox = {3 * fp.bbox.x, 3 * fp.bbox.y, 3 * fp.bbox.w, 3 * fp.bbox.h};
  for (auto& b : big.blocks)
    b.rect = {3 * b.rect.x, 3 * b.rect.y, 3 * b.rect.w, 3 * b.rect.h};

  Bag bag = build_bag(fp, StairDir::MIS);
  Bag big_bag = build_bag(big, StairDir::MIS);
  Params p = Params::make(0.4, 0.2);
  for (std::uint64_t mask : fixtures::brute_force_staircases(bag)) {
    std::vector<int> left = bits(mask, bag.n);
    CutEval a = evaluate_cut(fp, bag, fp.nets, left, p);
    CutEval b = evaluate_cut(big, big_bag, big.nets, left, p);
    CHECK(a.gain == doctest::Approx(b.gain).epsilon(1e-14));
    CHECK(a.z == b.z);
    CHECK(a.segments == b.segments);
    CHECK(9 * a.bal_min == b.bal_min);
  }
}

TEST_CASE("edge-derived and geometry-derived boundaries agree") {
  Params p = Params::make(0.5, 0.1);
  for (int n : {6, 9, 12}) {
    Floorplan fp = fixtures::mosaic(n, 17 * n, 2 * n);
    for (StairDir dir : {StairDir::MIS, StairDir::MDS}) {
      Bag bag = build_bag(fp, dir);
      for (std::uint64_t mask : fixtures::brute_force_staircases(bag)) {
        std::vector<int> left = bits(mask, bag.n);
        CutEval ev = evaluate_cut(fp, bag, fp.nets, left, p);
        CutBoundary cb = trace_cut_boundary(fp, left, dir);
        CHECK(ev.segments == cb.segments);
        CHECK(ev.z == cb.z);
        CHECK(ev.z_max == cb.z_max);
        CHECK(cb.z == cb.segments - static_cast<int>(cb.paths.size()));
        CHECK(cb.length > 0);
      }
    }
  }
}

TEST_CASE("cut ordering: score, then size, then lexicographic") {
  Params p = Params::make(0.4, 0.3);
  Floorplan fp = fixtures::make_f4();
  Bag bag = build_bag(fp, StairDir::MIS);
  CutEval top = evaluate_cut(fp, bag, fp.nets, {0, 1}, p);
  CutEval west = evaluate_cut(fp, bag, fp.nets, {0, 2}, p);
  CutEval lone = evaluate_cut(fp, bag, fp.nets, {0}, p);
  CHECK(cut_better(top, west, p));
  CHECK(cut_better(top, lone, p));
  CHECK_FALSE(cut_better(west, top, p));
  CHECK_FALSE(cut_better(top, top, p));

  // Ties on score break towards the smaller, then lexicographically
  // earlier left set.
  CutEval a = top;
  CutEval b = top;
  b.left = {0, 1, 2};
  CHECK(cut_better(a, b, p));
  b.left = {0, 2};
  CHECK(cut_better(a, b, p));
  CHECK_FALSE(cut_better(b, a, p));
}

TEST_CASE("score comparison stays exact below double noise") {
  // Balance ratios 1/3 and (N-1)/3N differ by ~1e-15: the doubles tie inside
  // the comparison tolerance and only the rational route can order them.
  Params p = Params::make(1.0, 0.0);
  std::int64_t third = 333333333333333;
  CutEval a, b;
  a.left = {0};
  a.bal_min = third / 3;
  a.bal_max = third;
  a.balr = static_cast<double>(a.bal_min) / static_cast<double>(a.bal_max);
  a.gain = gain_value(p, a.balr, 0, 0, 0, 0);
  b = a;
  b.bal_min = third / 3 - 1;
  b.balr = static_cast<double>(b.bal_min) / static_cast<double>(b.bal_max);
  b.gain = gain_value(p, b.balr, 0, 0, 0, 0);

  CHECK(std::abs(a.gain - b.gain) < 1e-12);  // the double route cannot tell
  CHECK(cut_better(a, b, p));
  CHECK_FALSE(cut_better(b, a, p));
}

TEST_CASE("separated sides evaluate as a zero-length degenerate cut") {
  Floorplan fp;
  fp.bbox = {0, 0, 6, 1};
  fp.blocks = {{0, "a", {0, 0, 1, 1}}, {1, "b", {5, 0, 1, 1}}};

  CutBoundary cb = trace_cut_boundary(fp, {0}, StairDir::MIS);
  CHECK(cb.paths.empty());
  CHECK(cb.segments == 0);
  CHECK(cb.z == 0);
  CHECK(cb.z_max == 0);
  CHECK(cb.length == 0);

  // A single polyline cannot be produced from nothing.
  CHECK_THROWS_WITH(boundary_polyline(fp, {0}, StairDir::MIS), "cut: boundary is empty");

  // The edge-driven evaluation applies the zero-boundary conventions: no
  // segments, no bends, full bend credit.
  Bag bag = build_bag(fp, StairDir::MIS);
  CutEval ev = evaluate_cut(fp, bag, {}, {0}, Params::make(0.4, 0.3));
  CHECK(ev.segments == 0);
  CHECK(ev.z == 0);
  CHECK(ev.z_max == 0);
  CHECK(ev.gain == doctest::Approx(1.0));
}
