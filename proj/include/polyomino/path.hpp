#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyomino/lattice.hpp"

namespace polyomino {

// Cyclic cell sequence A_1..A_n of a closed path.  Indices exposed by the
// accessors are 1-based and wrap around, so at(n + 1) == at(1).
class ClosedPath {
 public:
  ClosedPath(Polyomino P, std::vector<Cell> sequence);

  const Polyomino& polyomino() const { return polyomino_; }
  std::size_t size() const { return seq_.size(); }
  const std::vector<Cell>& sequence() const { return seq_; }

  const Cell& at(long k) const;
  // 1-based position of c in the sequence, or 0 when c is not a path cell.
  std::size_t index_of(const Cell& c) const;
  // Wrap an arbitrary integer index into 1..n.
  std::size_t wrap(long k) const;

  // Same cycle renumbered so that `start` becomes A_1; `reverse` flips the
  // traversal direction (A_2 becomes the former predecessor of start).
  ClosedPath relabeled(const Cell& start, bool reverse) const;

 private:
  Polyomino polyomino_;
  std::vector<Cell> seq_;
  std::vector<std::pair<Cell, std::size_t>> position_;  // sorted by cell
};

// Failure report naming the violated condition.  Condition 0 is the length
// requirement n > 5; 1..4 are the four closed-path conditions.
struct ClosedPathViolation {
  int condition = 0;
  std::vector<Cell> witness;
  std::string message;
};

class NotClosedPath : public Error {
 public:
  explicit NotClosedPath(ClosedPathViolation v)
      : Error(ErrorKind::not_closed_path, v.message), violation_(std::move(v)) {}
  const ClosedPathViolation& violation() const { return violation_; }

 private:
  ClosedPathViolation violation_;
};

// Returns the violation, or nullopt when P is a closed path.
std::optional<ClosedPathViolation> closed_path_violation(const Polyomino& P);

// Canonical cyclic ordering: A_1 is the lexicographically least cell and
// A_2 its lexicographically least neighbour.  Throws NotClosedPath.
ClosedPath as_closed_path(const Polyomino& P);

enum class ConfigKind {
  l_configuration,
  ladder,
  zigzag_walk,
  w_pentomino,
  ld_skew_tetromino_h,
  ld_skew_tetromino_v,
  ld_skew_hexomino_h,
  ld_skew_hexomino_v,
  rw_heptomino,
};

std::string_view to_string(ConfigKind kind);

struct Configuration {
  ConfigKind kind = ConfigKind::l_configuration;
  std::vector<Cell> cells;  // path order where the configuration is a path window
  std::vector<std::pair<std::string, Point>> markers;
  std::optional<Cell> middle;  // W-pentomino and RW-heptomino only
  // 1-based path indices; 0 when not attached to a closed path.
  std::size_t first_index = 0;
  std::size_t middle_index = 0;
  std::size_t steps = 0;  // ladders only
  // Shape variant within the kind: for W/RW, 0 when the middle cell turns a
  // corner between the two blocks (an L-shaped window) and 1 for the
  // staircase shape.
  int variant = 0;
  // W-pentomino only: the five cells labelled bottom up in the frame the
  // configuration was detected in (the cell below the middle cell second).
  std::vector<Cell> bottom_up;
  // Index of the lattice symmetry mapping the detection frame back to the
  // input coordinates (0 = found in the input orientation).
  int symmetry = 0;

  Point marker(std::string_view name) const;
  bool has_marker(std::string_view name) const;
};

struct DetectionOptions {
  // Accept the W, RW and skew shapes in every rotation and reflection, with
  // markers carried along; otherwise only the orientation of the definitions.
  bool all_symmetries = false;
  // a_D, b_D of a horizontal skew hexomino are the lower corners of B_1, as
  // for the tetromino; set this to take the upper corners instead.
  bool hexomino_upper_markers = false;
  // Also accept W/RW windows that turn a single convex corner (variant 0);
  // by default only the staircase shape (variant 1) counts.
  bool corner_shapes = false;
};

// Detection by geometry on an arbitrary polyomino.
std::vector<Configuration> find_configurations(const Polyomino& P, ConfigKind kind,
                                               const DetectionOptions& opts = {});
// Same, annotated with path indices.
std::vector<Configuration> find_configurations(const ClosedPath& cp, ConfigKind kind,
                                               const DetectionOptions& opts = {});

std::vector<Configuration> find_l_configurations(const ClosedPath& cp);
std::vector<Configuration> find_ladders(const ClosedPath& cp, std::size_t min_steps);
// Ladders on an arbitrary polyomino (chains of maximal blocks).
std::vector<Configuration> find_ladders(const Polyomino& P, std::size_t min_steps);

struct ZigZagWalk {
  std::vector<Interval> intervals;  // I_1..I_l
  std::vector<Point> pivots;        // v_1..v_l (v_{l+1} = v_1)
  std::vector<Point> z_corners;
  std::vector<Point> u_corners;
};

// Checks conditions (1)-(3) on an explicit walk.
bool is_zigzag_walk(const Polyomino& P, const ZigZagWalk& walk);

// Exhaustive search.  Each cyclic walk is reported once, rotated so that its
// least interval comes first, in both traversal directions.  `limit` caps the
// number of walks returned (0 = unlimited).
std::vector<ZigZagWalk> find_zigzag_walks(const Polyomino& P, std::size_t limit = 0);
std::vector<ZigZagWalk> find_zigzag_walks(const ClosedPath& cp, std::size_t limit = 0);
bool has_zigzag_walk(const Polyomino& P);

struct ZigZagEquivalence {
  bool no_zigzag = false;
  bool lconf_or_ladder3 = false;
  bool agree = false;
};

ZigZagEquivalence no_zigzag_equivalence(const ClosedPath& cp);

}  // namespace polyomino
