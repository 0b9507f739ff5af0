#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyomino/path.hpp"
#include "polyomino/vertex_order.hpp"

namespace polyomino {

enum class OrderRule { q1, no_w, no_rw, algorithm };
std::string_view to_string(OrderRule r);

// primary: the default marker pairs; remark: the alternative
// pairs {a_C, b_C} for skew tetrominoes and {x_W, z_W} for W-pentominoes.
enum class MarkerVariant { primary, remark };

// How the algorithm decides between the I- and II-rows at a conflict test.
enum class ConflictStrategy {
  verified,      // try the I-row, keep it when the local S-pairs reduce
  always_first,  // I-row everywhere
  always_second, // II-row everywhere
};

struct OrderOptions {
  MarkerVariant variant = MarkerVariant::primary;
  ConflictStrategy conflict = ConflictStrategy::verified;
  DetectionOptions detection;
};

struct TraceEntry {
  std::string label;  // I-A .. IV-B, or the tetromino labels LD-H / LD-V
  ConfigKind kind = ConfigKind::w_pentomino;
  std::size_t index = 0;  // path index of the middle cell or first cell
  std::vector<std::pair<std::string, Point>> markers;
  std::string reason;
};

struct YProvenance {
  OrderRule rule = OrderRule::q1;
  std::vector<TraceEntry> trace;
  std::vector<std::string> notes;
};

struct YResult {
  std::vector<Point> y;  // sorted by <1, no duplicates
  YProvenance provenance;
};

// Throws HasWPentomino when the path has one.
YResult y_without_w(const ClosedPath& cp, const OrderOptions& opts = {});
// Same construction on an arbitrary polyomino (configurations found by
// geometry alone, trace indices 0).
YResult y_without_w(const Polyomino& P, const OrderOptions& opts = {});
// Throws HasRWHeptomino when the path has one.
YResult y_without_rw(const ClosedPath& cp, const OrderOptions& opts = {});
// The iterative construction of Y_{i,j}; 1 <= i < j <= n + 1.
YResult y_algorithm(const ClosedPath& cp, std::size_t i, std::size_t j, const OrderOptions& opts = {});

struct ChosenOrder {
  VertexOrder order;
  YResult y;
  ClosedPath path;  // the numbering the construction ran on
};

// Dispatch: no W-pentomino, then no RW-heptomino, then L = Y_{2,n+1} after
// renumbering the path from the W-pentomino whose middle cell is least.
ChosenOrder choose_order(const ClosedPath& cp, const OrderOptions& opts = {});

// Order for an explicit rule; `auto` dispatch is choose_order.
ChosenOrder order_for_rule(const ClosedPath& cp, OrderRule rule, const OrderOptions& opts = {});

}  // namespace polyomino
