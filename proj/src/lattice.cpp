#include "polyomino/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

namespace polyomino {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_collection: return "EmptyCollection";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::not_proper: return "NotProper";
    case ErrorKind::not_closed_path: return "NotClosedPath";
    case ErrorKind::zero_polynomial: return "ZeroPolynomial";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::y_not_subset: return "YNotSubset";
    case ErrorKind::has_w_pentomino: return "HasWPentomino";
    case ErrorKind::has_rw_heptomino: return "HasRWHeptomino";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::missing_configurations: return "MissingConfigurations";
    case ErrorKind::pattern_mismatch: return "PatternMismatch";
    case ErrorKind::not_certified: return "NotCertified";
    case ErrorKind::not_member: return "NotMember";
    case ErrorKind::degree_bound_too_small: return "DegreeBoundTooSmall";
    case ErrorKind::generation_timeout: return "GenerationTimeout";
  }
  return "Unknown";
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string to_string(const Interval& I) {
  return "[" + to_string(I.lo) + "," + to_string(I.hi) + "]";
}

std::string to_string(Direction d) {
  return d == Direction::horizontal ? "H" : "V";
}

Interval::Interval(Point lo_, Point hi_) : lo(lo_), hi(hi_) {
  if (!weakly_below(lo, hi))
    throw Error(ErrorKind::not_proper,
                "interval endpoints not ordered: " + to_string(lo) + " > " + to_string(hi));
}

Corners interval_corners(const Interval& I) {
  if (!I.proper())
    throw Error(ErrorKind::not_proper, "interval " + to_string(I) + " is not proper");
  return {{I.lo, I.hi}, {I.upper_left(), I.lower_right()}};
}

bool edge_adjacent(const Cell& a, const Cell& b) {
  auto d = a.lower_left - b.lower_left;
  return std::abs(d.i) + std::abs(d.j) == 1;
}

bool share_vertex(const Cell& a, const Cell& b) {
  auto d = a.lower_left - b.lower_left;
  return std::abs(d.i) <= 1 && std::abs(d.j) <= 1;
}

std::size_t Block::rank() const {
  auto d = last.lower_left - first.lower_left;
  return static_cast<std::size_t>(d.i + d.j + 1);
}

std::vector<Cell> Block::cells() const {
  std::vector<Cell> out;
  Point step = direction == Direction::horizontal ? Point{1, 0} : Point{0, 1};
  for (Point p = first.lower_left;; p = p + step) {
    out.push_back(Cell{p});
    if (p == last.lower_left) break;
  }
  return out;
}

bool Block::contains(const Cell& c) const {
  return Interval{first.lower_left, last.lower_left}.contains(c.lower_left);
}

std::size_t EdgeInterval::length() const {
  return static_cast<std::size_t>((to.i - from.i) + (to.j - from.j));
}

bool EdgeInterval::contains(Point p) const {
  return Interval{from, to}.contains(p);
}

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const auto& c : cells_) {
    for (auto v : c.vertices()) vertices_.push_back(v);
    auto ll = c.lower_left, lr = c.lower_right(), ul = c.upper_left(), ur = c.upper_right();
    edges_.push_back({ll, ul});
    edges_.push_back({ul, ur});
    edges_.push_back({lr, ur});
    edges_.push_back({ll, lr});
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Polyomino Polyomino::collection(std::vector<Cell> cells) {
  if (cells.empty()) throw Error(ErrorKind::empty_collection, "empty collection of cells");
  return Polyomino(std::move(cells));
}

Polyomino Polyomino::make(std::vector<Cell> cells) {
  Polyomino P = collection(std::move(cells));
  const auto& cs = P.cells_;
  std::vector<bool> seen(cs.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  static constexpr Point steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    for (auto s : steps) {
      Cell n{cs[k].lower_left + s};
      auto it = std::lower_bound(cs.begin(), cs.end(), n);
      if (it == cs.end() || *it != n) continue;
      auto idx = static_cast<std::size_t>(it - cs.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        queue.push_back(idx);
      }
    }
  }
  if (reached != cs.size()) {
    auto other = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw Error(ErrorKind::disconnected,
                "cells " + to_string(cs[0].lower_left) + " and " +
                    to_string(cs[static_cast<std::size_t>(other)].lower_left) +
                    " are not connected");
  }
  return P;
}

Polyomino make_polyomino(std::vector<Cell> cells) { return Polyomino::make(std::move(cells)); }

bool Polyomino::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Polyomino::has_vertex(Point p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

std::optional<std::size_t> Polyomino::vertex_index(Point p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Polyomino::has_edge(Point a, Point b) const {
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Polyomino::is_inner(const Interval& I) const {
  if (!I.proper()) return false;
  for (coord_t x = I.lo.i; x < I.hi.i; ++x)
    for (coord_t y = I.lo.j; y < I.hi.j; ++y)
      if (!contains(Point{x, y})) return false;
  return true;
}

std::pair<Point, Point> Polyomino::bounding_cells() const {
  Point lo{std::numeric_limits<coord_t>::max(), std::numeric_limits<coord_t>::max()};
  Point hi{std::numeric_limits<coord_t>::min(), std::numeric_limits<coord_t>::min()};
  for (const auto& c : cells_) {
    lo = {std::min(lo.i, c.lower_left.i), std::min(lo.j, c.lower_left.j)};
    hi = {std::max(hi.i, c.lower_left.i), std::max(hi.j, c.lower_left.j)};
  }
  return {lo, hi};
}

Polyomino Polyomino::translated(Point offset) const {
  std::vector<Cell> moved;
  moved.reserve(cells_.size());
  for (const auto& c : cells_) moved.push_back(Cell{c.lower_left + offset});
  return Polyomino(std::move(moved));
}

Polyomino Polyomino::normalized() const {
  auto [lo, hi] = bounding_cells();
  return translated(Point{0, 0} - lo);
}

std::vector<Interval> inner_intervals(const Polyomino& P) {
  std::vector<Interval> out;
  for (const auto& c : P.cells()) {
    Point base = c.lower_left;
    // Widest run of cells starting at base in each successive row; the
    // admissible width for a given height is the minimum over its rows.
    coord_t width_cap = std::numeric_limits<coord_t>::max();
    for (coord_t h = 0;; ++h) {
      coord_t w = 0;
      while (w < width_cap && P.contains(Point{base.i + w, base.j + h})) ++w;
      if (w == 0) break;
      width_cap = w;
      for (coord_t k = 1; k <= w; ++k)
        out.emplace_back(base, Point{base.i + k, base.j + h + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> maximal_blocks(const Polyomino& P, Direction dir) {
  std::vector<Block> out;
  Point step = dir == Direction::horizontal ? Point{1, 0} : Point{0, 1};
  for (const auto& c : P.cells()) {
    if (P.contains(c.lower_left - step)) continue;
    Point end = c.lower_left;
    while (P.contains(end + step)) end = end + step;
    out.push_back(Block{c, Cell{end}, dir});
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    return a.first < b.first;
  });
  return out;
}

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& P, Direction dir) {
  Point step = dir == Direction::horizontal ? Point{1, 0} : Point{0, 1};
  std::vector<EdgeInterval> out;
  for (const auto& e : P.edges()) {
    if (e.to - e.from != step) continue;
    if (P.has_edge(e.from - step, e.from)) continue;
    Point end = e.to;
    while (P.has_edge(end, end + step)) end = end + step;
    out.push_back(EdgeInterval{e.from, end, dir, true});
  }
  std::sort(out.begin(), out.end(), [](const EdgeInterval& a, const EdgeInterval& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  return out;
}

std::optional<EdgeInterval> edge_interval_through(const Polyomino& P, Point v, Direction dir) {
  Point step = dir == Direction::horizontal ? Point{1, 0} : Point{0, 1};
  if (!P.has_edge(v, v + step) && !P.has_edge(v - step, v)) return std::nullopt;
  Point from = v, to = v;
  while (P.has_edge(from - step, from)) from = from - step;
  while (P.has_edge(to, to + step)) to = to + step;
  return EdgeInterval{from, to, dir, true};
}

Simplicity is_simple(const Polyomino& P) {
  auto [lo, hi] = P.bounding_cells();
  lo = lo - Point{1, 1};
  hi = hi + Point{1, 1};
  const auto width = static_cast<std::size_t>(hi.i - lo.i + 1);
  const auto height = static_cast<std::size_t>(hi.j - lo.j + 1);
  auto index = [&](Point p) {
    return static_cast<std::size_t>(p.j - lo.j) * width + static_cast<std::size_t>(p.i - lo.i);
  };
  // 0 = unvisited complement, -1 = polyomino cell, k > 0 = component id
  std::vector<int> label(width * height, 0);
  for (const auto& c : P.cells()) label[index(c.lower_left)] = -1;

  static constexpr Point steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  Simplicity result;
  int next = 0;
  for (coord_t x = lo.i; x <= hi.i; ++x) {
    for (coord_t y = lo.j; y <= hi.j; ++y) {
      Point start{x, y};
      if (label[index(start)] != 0) continue;
      ++next;
      bool touches_border = false;
      std::vector<Cell> component;
      std::deque<Point> queue{start};
      label[index(start)] = next;
      while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        component.push_back(Cell{p});
        if (p.i == lo.i || p.i == hi.i || p.j == lo.j || p.j == hi.j) touches_border = true;
        for (auto s : steps) {
          Point q = p + s;
          if (q.i < lo.i || q.i > hi.i || q.j < lo.j || q.j > hi.j) continue;
          if (label[index(q)] != 0) continue;
          label[index(q)] = next;
          queue.push_back(q);
        }
      }
      if (!touches_border) {
        std::sort(component.begin(), component.end());
        result.holes.push_back(std::move(component));
      }
    }
  }
  std::sort(result.holes.begin(), result.holes.end());
  result.simple = result.holes.empty();
  return result;
}

Symmetry Symmetry::of(int index) {
  Symmetry t;
  if (index >= 4) t.m00 = -1;
  for (int k = 0; k < index % 4; ++k) {
    // left-multiply by the quarter turn (x, y) -> (-y, x)
    Symmetry r{-t.m10, -t.m11, t.m00, t.m01};
    t = r;
  }
  return t;
}

namespace {

Interval bounding(Point x, Point y) {
  return Interval{{std::min(x.i, y.i), std::min(x.j, y.j)}, {std::max(x.i, y.i), std::max(x.j, y.j)}};
}

}  // namespace

Interval Symmetry::apply(const Interval& I) const { return bounding(apply(I.lo), apply(I.hi)); }
Interval Symmetry::invert(const Interval& I) const { return bounding(invert(I.lo), invert(I.hi)); }

}  // namespace polyomino
