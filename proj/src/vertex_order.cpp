#include "polyomino/vertex_order.hpp"

#include <algorithm>

namespace polyomino {

std::strong_ordering order_q1(Point a, Point b) { return a <=> b; }

VertexOrder::VertexOrder(std::span<const Point> universe, std::vector<Point> y) {
  std::vector<Point> u(universe.begin(), universe.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  for (auto p : y)
    if (!std::binary_search(u.begin(), u.end(), p))
      throw Error(ErrorKind::y_not_subset, "point " + to_string(p) + " of Y is not a vertex");
  y_ = y;
  ascending_.reserve(u.size());
  for (auto p : u)
    if (!std::binary_search(y.begin(), y.end(), p)) ascending_.push_back(p);
  ascending_.insert(ascending_.end(), y.begin(), y.end());
  index();
}

VertexOrder VertexOrder::from_ascending(std::vector<Point> ascending) {
  VertexOrder o;
  o.ascending_ = std::move(ascending);
  o.index();
  if (o.ranks_.size() > 1)
    for (std::size_t k = 1; k < o.ranks_.size(); ++k)
      if (o.ranks_[k].first == o.ranks_[k - 1].first)
        throw Error(ErrorKind::index_out_of_range,
                    "vertex " + to_string(o.ranks_[k].first) + " listed twice");
  return o;
}

void VertexOrder::index() {
  ranks_.clear();
  ranks_.reserve(ascending_.size());
  for (std::size_t k = 0; k < ascending_.size(); ++k) ranks_.emplace_back(ascending_[k], k);
  std::sort(ranks_.begin(), ranks_.end());
}

bool VertexOrder::contains(Point p) const {
  auto it = std::lower_bound(ranks_.begin(), ranks_.end(), std::pair{p, std::size_t{0}});
  return it != ranks_.end() && it->first == p;
}

std::size_t VertexOrder::rank(Point p) const {
  auto it = std::lower_bound(ranks_.begin(), ranks_.end(), std::pair{p, std::size_t{0}});
  if (it == ranks_.end() || it->first != p)
    throw Error(ErrorKind::index_out_of_range, "point " + to_string(p) + " is not ordered");
  return it->second;
}

VertexOrder order_from_y(const Polyomino& P, std::vector<Point> y) {
  return VertexOrder(P.vertices(), std::move(y));
}

VertexOrder order_q1(const Polyomino& P) { return VertexOrder(P.vertices(), {}); }

}  // namespace polyomino
