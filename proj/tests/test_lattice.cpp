#include "doctest.h"

#include <set>

#include "polyomino/binomial.hpp"
#include "support.hpp"

using namespace polyomino;

TEST_CASE("make_polyomino") {
  auto P = Polyomino::make({cell(0, 0)});
  CHECK(P.vertices().size() == 4);
  CHECK(P.edges().size() == 4);

  CHECK_THROWS_AS(Polyomino::make({}), Error);
  try {
    Polyomino::make({cell(0, 0), cell(5, 5)});
    FAIL("expected disconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::disconnected);
  }

  auto R = Polyomino::make(support::ring(3, 3));
  // the 3x3 ring touches every point of the 4x4 vertex grid
  CHECK(R.vertices().size() == 16);
  CHECK(R.edges().size() == 24);

  auto D = Polyomino::make({cell(0, 0), cell(0, 0), cell(1, 0)});
  CHECK(D.size() == 2);
}

TEST_CASE("inner intervals match the brute-force oracle") {
  CHECK(inner_intervals(Polyomino::make({cell(0, 0)})).size() == 1);
  CHECK(inner_intervals(Polyomino::make(support::block(2, 2))).size() == 9);

  auto ring = support::ring(3, 3);
  auto R = Polyomino::make(ring);
  auto got = inner_intervals(R);
  CHECK(got == support::inner_intervals_oracle(ring));
  CHECK(got.size() == 20);
  for (const auto& I : got) CHECK_FALSE((I.contains(Point{1, 1}) && I.contains(Point{2, 2})));
  CHECK(generators(R).size() == got.size());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto cells = support::grown(1 + rng() % 14, rng);
    auto P = Polyomino::make(cells);
    REQUIRE(inner_intervals(P) == support::inner_intervals_oracle(cells));
    REQUIRE(generators(P).size() == inner_intervals(P).size());
  }
}

TEST_CASE("maximal blocks") {
  auto strip = Polyomino::make({cell(0, 0), cell(1, 0), cell(2, 0)});
  auto h = maximal_blocks(strip, Direction::horizontal);
  REQUIRE(h.size() == 1);
  CHECK(h[0].rank() == 3);
  auto v = maximal_blocks(strip, Direction::vertical);
  CHECK(v.size() == 3);
  for (const auto& b : v) CHECK(b.rank() == 1);

  auto R = Polyomino::make(support::ring(3, 3));
  auto rh = maximal_blocks(R, Direction::horizontal);
  std::multiset<std::size_t> ranks;
  for (const auto& b : rh) ranks.insert(b.rank());
  CHECK(ranks == std::multiset<std::size_t>{1, 1, 3, 3});

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto P = Polyomino::make(support::grown(1 + rng() % 12, rng));
    for (auto dir : {Direction::horizontal, Direction::vertical}) {
      auto blocks = maximal_blocks(P, dir);
      std::size_t covered = 0;
      for (const auto& b : blocks) {
        covered += b.rank();
        // cannot be extended at either end
        Point step = dir == Direction::horizontal ? Point{1, 0} : Point{0, 1};
        CHECK_FALSE(P.contains(Cell{b.first.lower_left - step}));
        CHECK_FALSE(P.contains(Cell{b.last.lower_left + step}));
      }
      CHECK(covered == P.size());
    }
  }
}

TEST_CASE("maximal edge intervals") {
  auto R = Polyomino::make(support::ring(3, 3));
  auto h = maximal_edge_intervals(R, Direction::horizontal);
  // every row of vertices carries one edge interval across the ring
  CHECK(h.size() == 4);
  for (const auto& e : h) {
    CHECK(e.maximal);
    CHECK(e.length() == 3);
  }
  auto v = maximal_edge_intervals(R, Direction::vertical);
  CHECK(v.size() == 4);

  auto strip = Polyomino::make({cell(0, 0), cell(1, 0), cell(2, 0)});
  auto sh = maximal_edge_intervals(strip, Direction::horizontal);
  REQUIRE(sh.size() == 2);
  CHECK(sh[0].from == Point{0, 0});
  CHECK(sh[0].to == Point{3, 0});
  auto sv = maximal_edge_intervals(strip, Direction::vertical);
  CHECK(sv.size() == 4);
  auto through = edge_interval_through(strip, Point{2, 1}, Direction::horizontal);
  REQUIRE(through);
  CHECK(through->from == Point{0, 1});
}

TEST_CASE("holes") {
  auto s = is_simple(Polyomino::make(support::ring(3, 3)));
  CHECK_FALSE(s.simple);
  REQUIRE(s.holes.size() == 1);
  CHECK(s.holes[0] == std::vector<Cell>{cell(1, 1)});

  CHECK(is_simple(Polyomino::make(support::block(3, 2))).simple);
  CHECK(is_simple(Polyomino::make(support::ring(5, 4))).holes.size() == 1);
  CHECK(is_simple(Polyomino::make(support::ring(5, 4))).holes[0].size() == 6);
}

TEST_CASE("interval corners") {
  auto c = interval_corners(Interval{{0, 0}, {2, 3}});
  CHECK(c.diagonal.first == Point{0, 0});
  CHECK(c.diagonal.second == Point{2, 3});
  CHECK(c.anti_diagonal.first == Point{0, 3});
  CHECK(c.anti_diagonal.second == Point{2, 0});
  CHECK_THROWS_AS(interval_corners(Interval{{0, 0}, {0, 3}}), Error);
  CHECK_THROWS_AS(Interval(Point{1, 0}, Point{0, 3}), Error);
}

TEST_CASE("lattice symmetries") {
  std::set<std::pair<Point, Point>> images;
  for (int s = 0; s < 8; ++s) {
    auto T = Symmetry::of(s);
    Point p{2, 5};
    CHECK(T.invert(T.apply(p)) == p);
    images.emplace(T.apply(Point{1, 0}), T.apply(Point{0, 1}));
    Cell c = cell(3, -1);
    CHECK(T.invert(T.apply(c)) == c);
  }
  CHECK(images.size() == 8);
}
