#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "polyomino/io.hpp"
#include "polyomino/path.hpp"
#include "support.hpp"

using namespace polyomino;

namespace {

std::size_t count_lconf_windows(const ClosedPath& cp) {
  // independent window scan: directions of consecutive steps
  std::size_t count = 0;
  const long n = static_cast<long>(cp.size());
  auto step = [&](long k) { return cp.at(k + 1).lower_left - cp.at(k).lower_left; };
  for (long k = 1; k <= n; ++k) {
    Point d1 = step(k), d2 = step(k + 1), d3 = step(k + 2), d4 = step(k + 3);
    bool turn = d2.i * d3.i + d2.j * d3.j == 0;
    if (d1 == d2 && d3 == d4 && turn) ++count;
  }
  return count;
}

bool all_markers_are_vertices(const Polyomino& P, const Configuration& c) {
  for (const auto& [name, p] : c.markers)
    if (!P.has_vertex(p)) return false;
  return true;
}

std::vector<ClosedPath> corpus(std::size_t count, std::uint64_t seed0, const RandomConstraints& rc = {}) {
  std::vector<ClosedPath> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t n = 8 + 2 * (s % 14);
    out.push_back(as_closed_path(Polyomino::make(random_closed_path(n, seed0 + s, rc))));
  }
  return out;
}

}  // namespace

TEST_CASE("closed path validation") {
  SUBCASE("ring") {
    auto cp = as_closed_path(Polyomino::make(support::ring(3, 3)));
    CHECK(cp.size() == 8);
    CHECK(cp.at(1) == cell(0, 0));
    CHECK(cp.at(2) == cell(0, 1));
    CHECK(cp.at(9) == cp.at(1));
    CHECK(cp.at(0) == cp.at(8));
    for (long k = 1; k <= 8; ++k) CHECK(edge_adjacent(cp.at(k), cp.at(k + 1)));
  }
  SUBCASE("2x2 block is too short") {
    auto v = closed_path_violation(Polyomino::make(support::block(2, 2)));
    REQUIRE(v);
    CHECK(v->condition == 0);
  }
  SUBCASE("strip has endpoints") {
    std::vector<Cell> strip;
    for (coord_t x = 0; x < 7; ++x) strip.push_back(cell(x, 0));
    auto v = closed_path_violation(Polyomino::make(strip));
    REQUIRE(v);
    CHECK(v->condition == 2);
    CHECK_THROWS_AS(as_closed_path(Polyomino::make(strip)), NotClosedPath);
  }
  SUBCASE("branching cell") {
    auto cells = support::ring(3, 3);
    cells.push_back(cell(3, 1));
    auto v = closed_path_violation(Polyomino::make(cells));
    REQUIRE(v);
    CHECK(v->condition == 4);
  }
  SUBCASE("two cycles") {
    auto cells = support::ring(3, 3);
    for (const auto& c : support::ring(3, 3)) cells.push_back(Cell{c.lower_left + Point{10, 0}});
    auto v = closed_path_violation(Polyomino::collection(cells));
    REQUIRE(v);
    CHECK(v->condition == 1);
  }
  SUBCASE("diagonal touch far apart on the cycle") {
    // a cycle around two diagonal holes; (1,1) and (2,2) touch at a corner
    std::vector<Cell> cells{cell(0, 1), cell(0, 2), cell(0, 3), cell(1, 0), cell(1, 1), cell(1, 3),
                            cell(2, 0), cell(2, 2), cell(2, 3), cell(3, 0), cell(3, 1), cell(3, 2)};
    auto P = Polyomino::make(cells);
    auto v = closed_path_violation(P);
    REQUIRE(v);
    CHECK(v->condition == 4);
  }
  SUBCASE("canonical ordering is idempotent") {
    for (const auto& cp : corpus(30, 500)) {
      auto again = as_closed_path(Polyomino::make({cp.sequence().begin(), cp.sequence().end()}));
      CHECK(again.sequence() == cp.sequence());
      CHECK(cp.at(1) == *std::min_element(cp.sequence().begin(), cp.sequence().end()));
      CHECK(cp.at(2) < cp.at(0));
    }
  }
}

TEST_CASE("relabeling") {
  auto cp = as_closed_path(Polyomino::make(support::ring(4, 3)));
  auto r = cp.relabeled(cp.at(4), false);
  CHECK(r.at(1) == cp.at(4));
  CHECK(r.at(2) == cp.at(5));
  auto b = cp.relabeled(cp.at(4), true);
  CHECK(b.at(2) == cp.at(3));
  CHECK(b.index_of(cp.at(4)) == 1);
  CHECK(cp.index_of(cell(1, 1)) == 0);
  CHECK_THROWS_AS(cp.relabeled(cell(1, 1), false), Error);
}

TEST_CASE("L-configurations") {
  auto ring8 = as_closed_path(Polyomino::make(support::ring(3, 3)));
  CHECK(find_l_configurations(ring8).size() == 4);
  for (coord_t w = 3; w <= 7; ++w)
    for (coord_t h = 3; h <= 6; ++h) {
      auto cp = as_closed_path(Polyomino::make(support::ring(w, h)));
      CHECK(find_l_configurations(cp).size() == count_lconf_windows(cp));
    }
  for (const auto& cp : corpus(60, 900)) {
    auto found = find_l_configurations(cp);
    CHECK(found.size() == count_lconf_windows(cp));
    for (const auto& c : found) {
      CHECK(c.cells.size() == 5);
      for (const auto& x : c.cells) CHECK(cp.index_of(x) != 0);
    }
  }
}

TEST_CASE("ladders") {
  auto ring8 = as_closed_path(Polyomino::make(support::ring(3, 3)));
  CHECK(find_ladders(ring8, 3).empty());
  CHECK(find_ladders(as_closed_path(Polyomino::make(support::ring(6, 4))), 2).empty());

  RandomConstraints rc;
  rc.ladder3 = true;
  auto cells = random_closed_path(30, 77, rc);
  auto cp = as_closed_path(Polyomino::make(cells));
  auto ladders = find_ladders(cp, 3);
  REQUIRE_FALSE(ladders.empty());
  for (const auto& l : ladders) {
    CHECK(l.steps >= 3);
    for (const auto& x : l.cells) CHECK(cp.index_of(x) != 0);
  }
}

TEST_CASE("zig-zag walks") {
  auto ring8 = as_closed_path(Polyomino::make(support::ring(3, 3)));
  CHECK(find_zigzag_walks(ring8).empty());
  auto eq = no_zigzag_equivalence(ring8);
  CHECK(eq.no_zigzag);
  CHECK(eq.lconf_or_ladder3);
  CHECK(eq.agree);

  SUBCASE("staircase path without L-configuration or 3-ladder") {
    auto cp = as_closed_path(Polyomino::make(
        {cell(0, 1), cell(0, 2), cell(0, 3), cell(1, 3), cell(1, 4), cell(2, 4), cell(3, 4), cell(3, 3),
         cell(4, 3), cell(4, 2), cell(4, 1), cell(3, 1), cell(3, 0), cell(2, 0), cell(1, 0), cell(1, 1)}));
    CHECK(find_l_configurations(cp).empty());
    CHECK(find_ladders(cp, 3).empty());
    auto walks = find_zigzag_walks(cp, 4);
    REQUIRE_FALSE(walks.empty());
    for (const auto& w : walks) CHECK(is_zigzag_walk(cp.polyomino(), w));
    auto e = no_zigzag_equivalence(cp);
    CHECK_FALSE(e.no_zigzag);
    CHECK_FALSE(e.lconf_or_ladder3);
    CHECK(e.agree);
  }
  SUBCASE("3-ladder without L-configuration") {
    RandomConstraints rc;
    rc.l_configuration = false;
    rc.ladder3 = true;
    auto cp = as_closed_path(Polyomino::make(random_closed_path(28, 11, rc)));
    auto e = no_zigzag_equivalence(cp);
    CHECK(e.no_zigzag);
    CHECK(e.lconf_or_ladder3);
    CHECK(e.agree);
  }
  SUBCASE("equivalence on a corpus") {
    for (const auto& cp : corpus(40, 1300)) CHECK(no_zigzag_equivalence(cp).agree);
  }
}

TEST_CASE("W-pentomino detection") {
  // horizontal block (0,0),(1,0); middle (1,1); vertical block (2,1),(2,2)
  auto P = Polyomino::make({cell(0, 0), cell(1, 0), cell(1, 1), cell(2, 1), cell(2, 2)});
  auto ws = find_configurations(P, ConfigKind::w_pentomino);
  REQUIRE(ws.size() == 1);
  const auto& w = ws[0];
  CHECK(w.middle == cell(1, 1));
  CHECK(w.variant == 1);
  CHECK(w.marker("x_W") == Point{1, 2});
  CHECK(w.marker("y_W") == Point{2, 0});
  CHECK(w.marker("z_W") == Point{3, 1});
  CHECK(w.bottom_up == std::vector<Cell>{cell(0, 0), cell(1, 0), cell(1, 1), cell(2, 1), cell(2, 2)});

  // the mirrored staircase is not in the defining orientation
  auto M = Polyomino::make({cell(2, 0), cell(1, 0), cell(1, 1), cell(0, 1), cell(0, 2)});
  CHECK(find_configurations(M, ConfigKind::w_pentomino).empty());
  DetectionOptions all;
  all.all_symmetries = true;
  CHECK(find_configurations(M, ConfigKind::w_pentomino, all).size() == 1);

  // convex corner: only with corner_shapes
  auto L = Polyomino::make({cell(0, 0), cell(1, 0), cell(2, 0), cell(2, 1), cell(2, 2)});
  CHECK(find_configurations(L, ConfigKind::w_pentomino).empty());
  DetectionOptions corners;
  corners.corner_shapes = true;
  auto lw = find_configurations(L, ConfigKind::w_pentomino, corners);
  for (const auto& c : lw) CHECK(c.variant == 0);
}

TEST_CASE("RW-heptomino detection") {
  auto P = Polyomino::make({cell(0, 0), cell(0, 1), cell(0, 2), cell(1, 2), cell(1, 3),
                            cell(2, 3), cell(3, 3)});
  auto rs = find_configurations(P, ConfigKind::rw_heptomino);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].middle == cell(1, 2));
  CHECK(rs[0].marker("x_T") == Point{2, 2});
  CHECK(rs[0].marker("y_T") == Point{0, 3});
  CHECK(rs[0].marker("z_T") == Point{1, 4});

  auto ring8 = as_closed_path(Polyomino::make(support::ring(3, 3)));
  CHECK(find_configurations(ring8, ConfigKind::rw_heptomino).empty());
}

TEST_CASE("skew tetromino and hexomino markers") {
  SUBCASE("horizontal tetromino") {
    auto P = Polyomino::make({cell(0, 0), cell(1, 0), cell(1, 1), cell(2, 1)});
    auto cs = find_configurations(P, ConfigKind::ld_skew_tetromino_h);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].marker("x_C") == Point{1, 2});
    CHECK(cs[0].marker("y_C") == Point{2, 2});
    CHECK(cs[0].marker("a_C") == Point{1, 0});
    CHECK(cs[0].marker("b_C") == Point{2, 0});
  }
  SUBCASE("vertical tetromino") {
    auto P = Polyomino::make({cell(0, 0), cell(0, 1), cell(1, 1), cell(1, 2)});
    auto cs = find_configurations(P, ConfigKind::ld_skew_tetromino_v);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].marker("x_C") == Point{0, 2});
    CHECK(cs[0].marker("y_C") == Point{0, 1});
    CHECK(cs[0].marker("a_C") == Point{2, 2});
    CHECK(cs[0].marker("b_C") == Point{2, 1});
  }
  SUBCASE("horizontal hexomino") {
    auto P = Polyomino::make({cell(0, 0), cell(1, 0), cell(2, 0), cell(2, 1), cell(3, 1), cell(4, 1)});
    auto cs = find_configurations(P, ConfigKind::ld_skew_hexomino_h);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].marker("a_D") == Point{2, 0});
    CHECK(cs[0].marker("b_D") == Point{3, 0});
    DetectionOptions upper;
    upper.hexomino_upper_markers = true;
    auto cu = find_configurations(P, ConfigKind::ld_skew_hexomino_h, upper);
    REQUIRE(cu.size() == 1);
    CHECK(cu[0].marker("a_D") == Point{2, 1});
    CHECK(cu[0].marker("b_D") == Point{3, 1});
    // blocks need not be maximal: the middle four cells form a tetromino
    auto inner = find_configurations(P, ConfigKind::ld_skew_tetromino_h);
    REQUIRE(inner.size() == 1);
    CHECK(inner[0].cells.front() == cell(1, 0));
  }
}

TEST_CASE("configuration invariants on random paths") {
  const ConfigKind kinds[] = {ConfigKind::w_pentomino,         ConfigKind::rw_heptomino,
                              ConfigKind::ld_skew_tetromino_h, ConfigKind::ld_skew_tetromino_v,
                              ConfigKind::ld_skew_hexomino_h,  ConfigKind::ld_skew_hexomino_v};
  std::map<ConfigKind, std::size_t> seen;
  for (const auto& cp : corpus(60, 2100)) {
    const Point shift{5, -3};
    std::vector<Cell> moved;
    for (const auto& c : cp.sequence()) moved.push_back(Cell{c.lower_left + shift});
    auto cq = as_closed_path(Polyomino::make(moved));
    for (auto kind : kinds) {
      auto found = find_configurations(cp, kind);
      auto shifted = find_configurations(cq, kind);
      seen[kind] += found.size();
      REQUIRE(found.size() == shifted.size());
      for (std::size_t k = 0; k < found.size(); ++k) {
        for (const auto& x : found[k].cells) CHECK(cp.index_of(x) != 0);
        CHECK(all_markers_are_vertices(cp.polyomino(), found[k]));
        for (const auto& [name, p] : found[k].markers) CHECK(shifted[k].marker(name) == p + shift);
      }
      if (kind == ConfigKind::w_pentomino)
        for (const auto& c : found) CHECK(c.marker("x_W") == c.middle->upper_left());
      if (kind == ConfigKind::rw_heptomino)
        for (const auto& c : found) CHECK(c.marker("x_T") == c.middle->lower_right());
    }
  }
  CHECK(seen[ConfigKind::ld_skew_tetromino_h] > 0);
  CHECK(seen[ConfigKind::w_pentomino] > 0);
}
