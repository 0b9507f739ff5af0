#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyomino/error.hpp"

namespace polyomino {

using coord_t = std::int64_t;

// A lattice point (i, j): i is the column, j the row.  The defaulted
// comparison is column-then-row, which is exactly the base order <1.
struct Point {
  coord_t i = 0;
  coord_t j = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.i + b.i, a.j + b.j}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.i - b.i, a.j - b.j}; }
};

// Componentwise partial order on Z^2.
constexpr bool weakly_below(Point a, Point b) { return a.i <= b.i && a.j <= b.j; }

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.i) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.j) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

enum class Direction { horizontal, vertical };

// Interval [lo, hi] of Z^2 with lo <= hi componentwise.
struct Interval {
  Point lo;
  Point hi;

  Interval() = default;
  // Throws NotProper-family error when lo is not weakly below hi.
  Interval(Point lo_, Point hi_);

  bool proper() const { return lo.i < hi.i && lo.j < hi.j; }
  bool contains(Point p) const {
    return lo.i <= p.i && p.i <= hi.i && lo.j <= p.j && p.j <= hi.j;
  }
  // Anti-diagonal corners c = (lo.i, hi.j) and d = (hi.i, lo.j).
  Point upper_left() const { return {lo.i, hi.j}; }
  Point lower_right() const { return {hi.i, lo.j}; }
  coord_t width() const { return hi.i - lo.i; }
  coord_t height() const { return hi.j - lo.j; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Corners {
  std::pair<Point, Point> diagonal;       // (a, b)
  std::pair<Point, Point> anti_diagonal;  // (c, d)
};

// Corners of a proper interval; throws Error{ErrorKind::not_proper} otherwise.
Corners interval_corners(const Interval& I);

// A unit cell identified by its lower-left corner.
struct Cell {
  Point lower_left;

  Point lower_right() const { return lower_left + Point{1, 0}; }
  Point upper_left() const { return lower_left + Point{0, 1}; }
  Point upper_right() const { return lower_left + Point{1, 1}; }
  std::array<Point, 4> vertices() const {
    return {lower_left, lower_right(), upper_left(), upper_right()};
  }
  Interval interval() const { return Interval{lower_left, upper_right()}; }

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell cell(coord_t i, coord_t j) { return Cell{Point{i, j}}; }

// True iff the two cells share an edge.
bool edge_adjacent(const Cell& a, const Cell& b);
// True iff V(a) and V(b) intersect (includes diagonal contact).
bool share_vertex(const Cell& a, const Cell& b);

// Unit edge {from, to} with from < to in the <1 order.
struct Edge {
  Point from;
  Point to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Cell interval [first, last] in horizontal or vertical position.
struct Block {
  Cell first;  // extremal cell with the smaller lower-left corner
  Cell last;
  Direction direction = Direction::horizontal;

  std::size_t rank() const;
  std::vector<Cell> cells() const;
  Interval interval() const { return Interval{first.lower_left, last.upper_right()}; }
  bool contains(const Cell& c) const;
  friend bool operator==(const Block&, const Block&) = default;
};

struct EdgeInterval {
  Point from;
  Point to;
  Direction direction = Direction::horizontal;
  bool maximal = false;

  std::size_t length() const;
  bool contains(Point p) const;
  friend bool operator==(const EdgeInterval&, const EdgeInterval&) = default;
};

// A validated, immutable polyomino.  Cells, vertices and edges are kept in
// sorted order so every derived listing is deterministic.
class Polyomino {
 public:
  // Validates non-emptiness and edge-connectivity; duplicate cells collapse.
  static Polyomino make(std::vector<Cell> cells);
  // Same as make, without the connectivity requirement (used for plain
  // collections of cells such as holes or lemma fixtures).
  static Polyomino collection(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  std::span<const Point> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(const Cell& c) const;
  bool contains(Point lower_left) const { return contains(Cell{lower_left}); }
  bool has_vertex(Point p) const;
  bool has_edge(Point a, Point b) const;
  // Index of a vertex in vertices(), or nullopt.
  std::optional<std::size_t> vertex_index(Point p) const;

  // All cells of the cell interval of I are cells of this polyomino.
  bool is_inner(const Interval& I) const;

  // (min lower-left corner, max lower-left corner) over all cells.
  std::pair<Point, Point> bounding_cells() const;

  Polyomino translated(Point offset) const;
  // Translate so that the minimal cell corner sits at the origin.
  Polyomino normalized() const;

  friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }

 private:
  explicit Polyomino(std::vector<Cell> cells);

  std::vector<Cell> cells_;
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
};

Polyomino make_polyomino(std::vector<Cell> cells);

// Proper intervals whose cell interval lies in P, sorted by (lo, hi).
std::vector<Interval> inner_intervals(const Polyomino& P);

// Maximal blocks in the given direction, including rank-1 singletons.
// Each cell lies in exactly one returned block.
std::vector<Block> maximal_blocks(const Polyomino& P, Direction dir);

std::vector<EdgeInterval> maximal_edge_intervals(const Polyomino& P, Direction dir);

// The maximal edge interval of P in direction dir through vertex v, if any
// edge of that direction touches v.
std::optional<EdgeInterval> edge_interval_through(const Polyomino& P, Point v, Direction dir);

// Symmetry of the square lattice: rotation by index*90 degrees, preceded by
// the reflection (x, y) -> (-x, y) when index >= 4.
struct Symmetry {
  coord_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  static Symmetry of(int index);
  Point apply(Point p) const { return {m00 * p.i + m01 * p.j, m10 * p.i + m11 * p.j}; }
  Point invert(Point p) const { return {m00 * p.i + m10 * p.j, m01 * p.i + m11 * p.j}; }
  Interval apply(const Interval& I) const;
  Interval invert(const Interval& I) const;
  Cell apply(const Cell& c) const { return Cell{apply(c.interval()).lo}; }
  Cell invert(const Cell& c) const { return Cell{invert(c.interval()).lo}; }
};

struct Simplicity {
  bool simple = true;
  std::vector<std::vector<Cell>> holes;  // each hole sorted; holes sorted by first cell
};

Simplicity is_simple(const Polyomino& P);

std::string to_string(Point p);
std::string to_string(const Interval& I);
std::string to_string(Direction d);

}  // namespace polyomino

template <>
struct std::hash<polyomino::Point> : polyomino::PointHash {};
