#include "doctest.h"
#include "polyomino/io.hpp"
#include "polyomino/report.hpp"
#include "support.hpp"

using namespace polyomino;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::empty_collection;
}

}  // namespace

TEST_CASE("plain cell lists") {
  auto in = parse_cells("# ring\n0 0\n1 0\n\n  2 0  \n");
  CHECK(in.format == "cells");
  CHECK(in.cells == std::vector<Cell>{cell(0, 0), cell(1, 0), cell(2, 0)});
  CHECK(in.warnings.empty());

  auto dup = parse_cells("0 0\n1 0\n0 0\n");
  CHECK(dup.cells.size() == 2);
  CHECK(dup.warnings.size() == 1);

  CHECK(parse_cells("-3 7\n").cells == std::vector<Cell>{cell(-3, 7)});
  CHECK(kind_of([] { parse_cells(""); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("# only a comment\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("0 0\n1\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("0 0\n1 x\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("0 0 0\n"); }) == ErrorKind::parse_error);
  try {
    parse_cells("0 0\n1 0\nbad\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { read_cells("/nonexistent/cells.txt"); }) == ErrorKind::parse_error);
}

TEST_CASE("json cell lists") {
  auto in = parse_cells("  {\"cells\": [[0, 0], [0, 1], [1, 1]]}");
  CHECK(in.format == "json");
  CHECK(in.cells == std::vector<Cell>{cell(0, 0), cell(0, 1), cell(1, 1)});
  CHECK(kind_of([] { parse_cells("{\"cells\": [[0]]}"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("{\"rows\": []}"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_cells("{\"cells\": ["); }) == ErrorKind::parse_error);
}

TEST_CASE("format and parse round trip") {
  auto cells = support::ring(4, 3);
  auto text = format_cells(cells, "ring");
  CHECK(text.rfind("# ring", 0) == 0);
  CHECK(parse_cells(text).cells == cells);
}

TEST_CASE("random closed paths") {
  auto a = random_closed_path(20, 7);
  auto b = random_closed_path(20, 7);
  CHECK(a == b);
  CHECK(a != random_closed_path(20, 8));
  auto cp = as_closed_path(Polyomino::make(a));
  CHECK(cp.size() == 20);
  coord_t lo_i = 100, lo_j = 100;
  for (const auto& c : a) {
    lo_i = std::min(lo_i, c.lower_left.i);
    lo_j = std::min(lo_j, c.lower_left.j);
  }
  CHECK(lo_i == 0);
  CHECK(lo_j == 0);

  // eight cells only fit the 3x3 ring
  auto r = random_closed_path(8, 1);
  std::sort(r.begin(), r.end());
  auto ring = support::ring(3, 3);
  std::sort(ring.begin(), ring.end());
  CHECK(r == ring);

  CHECK(kind_of([] { random_closed_path(7, 1); }) == ErrorKind::generation_timeout);
  CHECK(kind_of([] { random_closed_path(6, 1); }) == ErrorKind::generation_timeout);

  RandomConstraints rc;
  rc.w_pentomino = true;
  rc.rw_heptomino = false;
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto cq = as_closed_path(Polyomino::make(random_closed_path(24, s, rc)));
    CHECK(satisfies(cq, rc));
    CHECK_FALSE(find_configurations(cq, ConfigKind::w_pentomino).empty());
    CHECK(find_configurations(cq, ConfigKind::rw_heptomino).empty());
  }
  for (std::size_t n = 8; n <= 60; n += 4)
    CHECK_NOTHROW(as_closed_path(Polyomino::make(random_closed_path(n, n))));
}

TEST_CASE("reports") {
  auto cp = as_closed_path(Polyomino::make(support::ring(3, 3)));
  auto stats = polyomino_stats(cp.polyomino());
  CHECK(stats["cells"] == 8);
  CHECK(stats["vertices"] == 16);
  auto census = configuration_census(cp, {});
  CHECK(census["l_configurations"].size() == 4);
  CHECK(census["RWHeptomino"].empty());
  CHECK(to_json(Point{2, -1}) == json::array({2, -1}));
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("").size() == 16);
}
