#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "polyomino/lattice.hpp"

namespace polyomino {

// The base order <1: column first, then row.
std::strong_ordering order_q1(Point a, Point b);

// A total order on a finite vertex universe.  Ranks run from 0 (least) to
// size()-1 (greatest).
class VertexOrder {
 public:
  // <^Y on the universe: vertices outside Y below vertices in Y, ties by <1.
  // Throws y_not_subset when some point of Y is not in the universe.
  VertexOrder(std::span<const Point> universe, std::vector<Point> y);

  // Arbitrary total order given by listing the universe in ascending order.
  static VertexOrder from_ascending(std::vector<Point> ascending);

  std::size_t size() const { return ascending_.size(); }
  const std::vector<Point>& ascending() const { return ascending_; }
  const std::vector<Point>& y_set() const { return y_; }

  bool contains(Point p) const;
  std::size_t rank(Point p) const;  // throws index_out_of_range
  std::strong_ordering compare(Point a, Point b) const { return rank(a) <=> rank(b); }
  bool less(Point a, Point b) const { return rank(a) < rank(b); }

 private:
  VertexOrder() = default;
  void index();

  std::vector<Point> ascending_;
  std::vector<Point> y_;                               // sorted by <1
  std::vector<std::pair<Point, std::size_t>> ranks_;  // sorted by point
};

VertexOrder order_from_y(const Polyomino& P, std::vector<Point> y);
VertexOrder order_q1(const Polyomino& P);

}  // namespace polyomino
