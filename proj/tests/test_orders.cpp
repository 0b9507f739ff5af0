#include <algorithm>
#include <set>

#include "doctest.h"
#include "polyomino/groebner.hpp"
#include "polyomino/io.hpp"
#include "polyomino/orders.hpp"
#include "support.hpp"

using namespace polyomino;

namespace {

ClosedPath path(std::size_t n, std::uint64_t seed, const RandomConstraints& rc = {}) {
  return as_closed_path(Polyomino::make(random_closed_path(n, seed, rc)));
}

RandomConstraints with_w_and_rw() {
  RandomConstraints rc;
  rc.w_pentomino = true;
  rc.rw_heptomino = true;
  return rc;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::parse_error;
}

std::set<Point> marker_union(const std::vector<Configuration>& cs, std::initializer_list<const char*> names) {
  std::set<Point> out;
  for (const auto& c : cs)
    for (auto n : names) out.insert(c.marker(n));
  return out;
}

void check_total_order(const Polyomino& P, const VertexOrder& ord) {
  std::vector<Point> v(P.vertices().begin(), P.vertices().end());
  for (const auto& a : v) {
    CHECK_FALSE(ord.less(a, a));
    for (const auto& b : v) {
      if (a == b) continue;
      CHECK(ord.less(a, b) != ord.less(b, a));
      for (const auto& c : v)
        if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
    }
  }
}

}  // namespace

TEST_CASE("base order") {
  CHECK(order_q1({1, 2}, {2, 0}) == std::strong_ordering::less);
  CHECK(order_q1({1, 2}, {1, 3}) == std::strong_ordering::less);
  CHECK(order_q1({1, 2}, {1, 2}) == std::strong_ordering::equal);
  CHECK(order_q1({3, 0}, {2, 9}) == std::strong_ordering::greater);
}

TEST_CASE("orders from Y") {
  auto P = Polyomino::make({cell(0, 0)});
  auto q1 = order_q1(P);
  CHECK(q1.ascending() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(order_from_y(P, {}).ascending() == q1.ascending());
  CHECK(order_from_y(P, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}).ascending() == q1.ascending());
  auto o = order_from_y(P, {{0, 1}});
  CHECK(o.less({1, 1}, {0, 1}));
  CHECK(o.less({0, 0}, {1, 0}));
  CHECK(kind_of([&] { order_from_y(P, {{5, 5}}); }) == ErrorKind::y_not_subset);

  auto R = Polyomino::make(support::ring(4, 3));
  std::vector<Point> y{{0, 1}, {2, 3}, {4, 0}};
  auto oy = order_from_y(R, y);
  for (const auto& a : R.vertices())
    for (const auto& b : R.vertices()) {
      if (a == b) continue;
      bool ya = std::count(y.begin(), y.end(), a) > 0, yb = std::count(y.begin(), y.end(), b) > 0;
      bool expect = ya == yb ? a < b : yb;
      CHECK(oy.less(a, b) == expect);
    }
  check_total_order(R, oy);
}

TEST_CASE("Y without W-pentominoes") {
  auto ring = as_closed_path(Polyomino::make(support::ring(5, 4)));
  auto r = y_without_w(ring);
  CHECK(r.y.empty());
  CHECK(r.provenance.rule == OrderRule::no_w);

  std::size_t tried = 0;
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto cp = path(10 + 2 * (s % 12), 3000 + s);
    if (!find_configurations(cp, ConfigKind::w_pentomino).empty()) {
      CHECK(kind_of([&] { y_without_w(cp); }) == ErrorKind::has_w_pentomino);
      continue;
    }
    ++tried;
    auto th = find_configurations(cp, ConfigKind::ld_skew_tetromino_h);
    auto tv = find_configurations(cp, ConfigKind::ld_skew_tetromino_v);
    auto expect = marker_union(th, {"x_C", "y_C"});
    auto ev = marker_union(tv, {"x_C", "y_C"});
    expect.insert(ev.begin(), ev.end());
    auto got = y_without_w(cp);
    CHECK(std::set<Point>(got.y.begin(), got.y.end()) == expect);
    CHECK(got.y.size() <= 2 * (th.size() + tv.size()));
    CHECK(got.provenance.trace.size() == th.size() + tv.size());

    OrderOptions remark;
    remark.variant = MarkerVariant::remark;
    auto alt = y_without_w(cp, remark);
    auto ea = marker_union(th, {"a_C", "b_C"});
    auto eb = marker_union(tv, {"a_C", "b_C"});
    ea.insert(eb.begin(), eb.end());
    CHECK(std::set<Point>(alt.y.begin(), alt.y.end()) == ea);
  }
  CHECK(tried > 10);
}

TEST_CASE("Y without RW-heptominoes") {
  auto ring = as_closed_path(Polyomino::make(support::ring(5, 4)));
  CHECK(y_without_rw(ring).y.empty());

  std::size_t single_w = 0;
  RandomConstraints rc;
  rc.w_pentomino = true;
  rc.rw_heptomino = false;
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto cp = path(16 + 2 * (s % 10), 4000 + s, rc);
    auto ws = find_configurations(cp, ConfigKind::w_pentomino);
    auto hh = find_configurations(cp, ConfigKind::ld_skew_hexomino_h);
    auto hv = find_configurations(cp, ConfigKind::ld_skew_hexomino_v);
    auto expect = marker_union(ws, {"x_W", "y_W"});
    auto eh = marker_union(hh, {"a_D", "b_D"});
    auto ev = marker_union(hv, {"a_D", "b_D"});
    expect.insert(eh.begin(), eh.end());
    expect.insert(ev.begin(), ev.end());
    auto got = y_without_rw(cp);
    CHECK(std::set<Point>(got.y.begin(), got.y.end()) == expect);
    CHECK(got.provenance.rule == OrderRule::no_rw);
    if (ws.size() == 1 && hh.empty() && hv.empty()) {
      ++single_w;
      CHECK(got.y.size() == 2);
    }
  }
  CHECK(single_w > 0);

  auto both = path(40, 7, with_w_and_rw());
  CHECK(kind_of([&] { y_without_rw(both); }) == ErrorKind::has_rw_heptomino);
}

TEST_CASE("iterative construction") {
  auto cp = path(40, 21, with_w_and_rw());
  const auto n = cp.size();
  auto a = y_algorithm(cp, 2, n + 1);
  auto b = y_algorithm(cp, 2, n + 1);
  CHECK(a.y == b.y);
  REQUIRE(a.provenance.trace.size() == b.provenance.trace.size());
  for (std::size_t k = 0; k < a.provenance.trace.size(); ++k) {
    CHECK(a.provenance.trace[k].label == b.provenance.trace[k].label);
    CHECK(a.provenance.trace[k].index == b.provenance.trace[k].index);
  }
  const std::set<std::string> labels{"I-A", "II-A", "III-A", "IV-A", "I-B", "II-B", "III-B", "IV-B"};
  std::set<Point> from_trace;
  for (const auto& t : a.provenance.trace) {
    CHECK(labels.count(t.label) == 1);
    for (const auto& [name, p] : t.markers) from_trace.insert(p);
  }
  CHECK(std::set<Point>(a.y.begin(), a.y.end()) == from_trace);
  CHECK(std::is_sorted(a.y.begin(), a.y.end()));

  CHECK(kind_of([&] { y_algorithm(cp, 0, n); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([&] { y_algorithm(cp, 5, 5); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([&] { y_algorithm(cp, 2, n + 2); }) == ErrorKind::index_out_of_range);
  auto ring = as_closed_path(Polyomino::make(support::ring(5, 4)));
  CHECK(kind_of([&] { y_algorithm(ring, 2, 9); }) == ErrorKind::missing_configurations);
}

TEST_CASE("no RW middle cell in range stops after the first sweep") {
  // relabel a path so that the window 1..j holds no RW middle cell
  auto cp = path(40, 21, with_w_and_rw());
  auto rws = find_configurations(cp, ConfigKind::rw_heptomino);
  REQUIRE_FALSE(rws.empty());
  std::size_t first_rw = cp.size();
  for (const auto& r : rws) first_rw = std::min(first_rw, r.middle_index);
  if (first_rw > 2) {
    auto res = y_algorithm(cp, 1, first_rw - 1);
    for (const auto& t : res.provenance.trace) {
      CHECK(t.label.back() == 'A');
      CHECK(t.index <= first_rw - 1);
    }
  }
}

TEST_CASE("order dispatch and certification") {
  auto ring = as_closed_path(Polyomino::make(support::ring(3, 3)));
  auto r = choose_order(ring);
  CHECK(r.y.provenance.rule == OrderRule::no_w);
  check_total_order(ring.polyomino(), r.order);
  CHECK(buchberger_check(ring.polyomino(), r.order).is_groebner);

  for (std::uint64_t s = 0; s < 6; ++s) {
    auto cp = path(30 + 2 * s, 60 + s, with_w_and_rw());
    auto c = choose_order(cp);
    CHECK(c.y.provenance.rule == OrderRule::algorithm);
    CHECK(c.path.size() == cp.size());
    // the renumbering starts at a W-pentomino: A_1 and A_2 are its two lowest cells
    auto ws = find_configurations(c.path, ConfigKind::w_pentomino);
    bool anchored = std::any_of(ws.begin(), ws.end(), [&](const Configuration& w) {
      return w.bottom_up[0] == c.path.at(1) && w.bottom_up[1] == c.path.at(2);
    });
    CHECK(anchored);
    CHECK(buchberger_check(cp.polyomino(), c.order).is_groebner);
    auto again = choose_order(cp);
    CHECK(again.y.y == c.y.y);
  }
  auto q = order_for_rule(ring, OrderRule::q1);
  CHECK(q.order.ascending() == order_q1(ring.polyomino()).ascending());
  CHECK(to_string(OrderRule::no_rw) == "without-rw");
}
