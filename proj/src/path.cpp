#include "polyomino/path.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace polyomino {

namespace {

constexpr Point kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::vector<Cell> edge_neighbours(const Polyomino& P, const Cell& c) {
  std::vector<Cell> out;
  for (auto s : kSteps)
    if (P.contains(c.lower_left + s)) out.push_back(Cell{c.lower_left + s});
  std::sort(out.begin(), out.end());
  return out;
}

std::string cell_list(const std::vector<Cell>& cells) {
  std::string s;
  for (const auto& c : cells) {
    if (!s.empty()) s += " ";
    s += to_string(c.lower_left);
  }
  return s;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Point lo{std::max(a.lo.i, b.lo.i), std::max(a.lo.j, b.lo.j)};
  Point hi{std::min(a.hi.i, b.hi.i), std::min(a.hi.j, b.hi.j)};
  if (lo.i > hi.i || lo.j > hi.j) return std::nullopt;
  return Interval{lo, hi};
}

bool meets_in_single_point(const Interval& a, const Interval& b, Point p) {
  auto x = intersect(a, b);
  return x && x->lo == p && x->hi == p;
}

std::size_t shared_point_count(const Interval& a, const Interval& b) {
  auto x = intersect(a, b);
  if (!x) return 0;
  return static_cast<std::size_t>((x->width() + 1) * (x->height() + 1));
}

}  // namespace

ClosedPath::ClosedPath(Polyomino P, std::vector<Cell> sequence)
    : polyomino_(std::move(P)), seq_(std::move(sequence)) {
  position_.reserve(seq_.size());
  for (std::size_t k = 0; k < seq_.size(); ++k) position_.emplace_back(seq_[k], k + 1);
  std::sort(position_.begin(), position_.end());
}

std::size_t ClosedPath::wrap(long k) const {
  const long n = static_cast<long>(seq_.size());
  long r = (k - 1) % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r + 1);
}

const Cell& ClosedPath::at(long k) const { return seq_[wrap(k) - 1]; }

std::size_t ClosedPath::index_of(const Cell& c) const {
  auto it = std::lower_bound(position_.begin(), position_.end(), std::pair{c, std::size_t{0}});
  if (it == position_.end() || it->first != c) return 0;
  return it->second;
}

ClosedPath ClosedPath::relabeled(const Cell& start, bool reverse) const {
  auto s = index_of(start);
  if (s == 0) throw Error(ErrorKind::index_out_of_range, "cell is not on the path");
  std::vector<Cell> seq;
  seq.reserve(seq_.size());
  const long n = static_cast<long>(seq_.size());
  for (long k = 0; k < n; ++k)
    seq.push_back(at(static_cast<long>(s) + (reverse ? -k : k)));
  return ClosedPath(polyomino_, std::move(seq));
}

std::optional<ClosedPathViolation> closed_path_violation(const Polyomino& P) {
  const auto cells = P.cells();
  for (const auto& c : cells) {
    auto nb = edge_neighbours(P, c);
    if (nb.size() < 2) {
      std::vector<Cell> w{c};
      w.insert(w.end(), nb.begin(), nb.end());
      return ClosedPathViolation{2, w,
                                 "cell " + to_string(c.lower_left) + " has " +
                                     std::to_string(nb.size()) +
                                     " edge neighbour(s); no cyclic edge sequence exists"};
    }
    if (nb.size() > 2) {
      std::vector<Cell> w{c};
      w.insert(w.end(), nb.begin(), nb.end());
      return ClosedPathViolation{4, w,
                                 "cell " + to_string(c.lower_left) +
                                     " has more than two edge neighbours: " + cell_list(w)};
    }
  }
  // Every cell has degree two: walk the cycle from the least cell.
  std::vector<Cell> seq{cells.front()};
  Cell prev = cells.front();
  Cell cur = edge_neighbours(P, prev).front();
  while (cur != cells.front()) {
    seq.push_back(cur);
    auto nb = edge_neighbours(P, cur);
    Cell next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (seq.size() != cells.size()) {
    return ClosedPathViolation{1, {seq.front()},
                               "cells form more than one cycle; the cycle through " +
                                   to_string(seq.front().lower_left) + " has length " +
                                   std::to_string(seq.size())};
  }
  const long n = static_cast<long>(seq.size());
  if (n <= 5) {
    return ClosedPathViolation{0, seq,
                               "closed paths need more than five cells, found " +
                                   std::to_string(n)};
  }
  std::map<Cell, long> pos;
  for (long k = 0; k < n; ++k) pos[seq[static_cast<std::size_t>(k)]] = k;
  for (long k = 0; k < n; ++k) {
    const Cell& c = seq[static_cast<std::size_t>(k)];
    for (coord_t dx = -1; dx <= 1; ++dx) {
      for (coord_t dy = -1; dy <= 1; ++dy) {
        Cell o{c.lower_left + Point{dx, dy}};
        auto it = pos.find(o);
        if (it == pos.end() || it->second == k) continue;
        long d = std::labs(it->second - k);
        d = std::min(d, n - d);
        if (d > 2) {
          return ClosedPathViolation{4, {c, o},
                                     "cells " + to_string(c.lower_left) + " and " +
                                         to_string(o.lower_left) +
                                         " share a vertex but are " + std::to_string(d) +
                                         " steps apart on the cycle"};
        }
      }
    }
  }
  return std::nullopt;
}

ClosedPath as_closed_path(const Polyomino& P) {
  if (auto v = closed_path_violation(P)) throw NotClosedPath(std::move(*v));
  const auto cells = P.cells();
  std::vector<Cell> seq{cells.front()};
  Cell prev = cells.front();
  Cell cur = edge_neighbours(P, prev).front();
  while (cur != cells.front()) {
    seq.push_back(cur);
    auto nb = edge_neighbours(P, cur);
    Cell next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return ClosedPath(P, std::move(seq));
}

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::l_configuration: return "LConfig";
    case ConfigKind::ladder: return "Ladder";
    case ConfigKind::zigzag_walk: return "ZigZagWalk";
    case ConfigKind::w_pentomino: return "WPentomino";
    case ConfigKind::ld_skew_tetromino_h: return "LDSkewTetH";
    case ConfigKind::ld_skew_tetromino_v: return "LDSkewTetV";
    case ConfigKind::ld_skew_hexomino_h: return "LDSkewHexH";
    case ConfigKind::ld_skew_hexomino_v: return "LDSkewHexV";
    case ConfigKind::rw_heptomino: return "RWHeptomino";
  }
  return "Unknown";
}

Point Configuration::marker(std::string_view name) const {
  for (const auto& [k, p] : markers)
    if (k == name) return p;
  throw Error(ErrorKind::missing_configurations,
              "configuration has no marker named " + std::string(name));
}

bool Configuration::has_marker(std::string_view name) const {
  return std::any_of(markers.begin(), markers.end(),
                     [&](const auto& m) { return m.first == name; });
}

namespace {

// Blocks of the given rank and direction lying in P that contain `c`.
std::vector<Block> blocks_through(const Polyomino& P, const Cell& c, std::size_t rank,
                                  Direction dir) {
  std::vector<Block> out;
  Point step = dir == Direction::horizontal ? Point{1, 0} : Point{0, 1};
  for (std::size_t off = 0; off < rank; ++off) {
    Point first = c.lower_left;
    for (std::size_t k = 0; k < off; ++k) first = first - step;
    Point last = first;
    for (std::size_t k = 1; k < rank; ++k) last = last + step;
    Block b{Cell{first}, Cell{last}, dir};
    auto cells = b.cells();
    if (std::all_of(cells.begin(), cells.end(), [&](const Cell& x) { return P.contains(x); }))
      out.push_back(b);
  }
  return out;
}

// W-pentomino (rank 2, w = lower right corner of the middle cell) and
// RW-heptomino (rank 3, w = upper left corner of the middle cell).
std::vector<Configuration> find_corner_configurations(const Polyomino& P, ConfigKind kind) {
  const bool is_w = kind == ConfigKind::w_pentomino;
  const std::size_t rank = is_w ? 2 : 3;
  std::vector<Configuration> out;
  for (const auto& A : P.cells()) {
    const Point w = is_w ? A.lower_right() : A.upper_left();
    std::vector<Cell> around;
    for (coord_t dx = -1; dx <= 0; ++dx)
      for (coord_t dy = -1; dy <= 0; ++dy) {
        Cell c{w + Point{dx, dy}};
        if (c != A && P.contains(c)) around.push_back(c);
      }
    std::vector<Block> hs, vs;
    for (const auto& c : around) {
      for (auto& b : blocks_through(P, c, rank, Direction::horizontal))
        if (!b.contains(A) && std::find(hs.begin(), hs.end(), b) == hs.end()) hs.push_back(b);
      for (auto& b : blocks_through(P, c, rank, Direction::vertical))
        if (!b.contains(A) && std::find(vs.begin(), vs.end(), b) == vs.end()) vs.push_back(b);
    }
    for (const auto& b1 : hs) {
      for (const auto& b2 : vs) {
        if (!meets_in_single_point(b1.interval(), b2.interval(), w)) continue;
        Configuration cfg;
        cfg.kind = kind;
        cfg.middle = A;
        for (const auto& c : b1.cells()) cfg.cells.push_back(c);
        cfg.cells.push_back(A);
        for (const auto& c : b2.cells()) cfg.cells.push_back(c);
        if (is_w) {
          const Cell below{A.lower_left + Point{0, -1}};
          const Block& lower = b1.contains(below) ? b1 : b2;
          const Block& upper = b1.contains(below) ? b2 : b1;
          auto lc = lower.cells(), uc = upper.cells();
          if (lc.front() == below) std::reverse(lc.begin(), lc.end());
          auto touches_a = [&](const Cell& c) {
            return std::abs(c.lower_left.i - A.lower_left.i) + std::abs(c.lower_left.j - A.lower_left.j) == 1;
          };
          if (touches_a(uc.back())) std::reverse(uc.begin(), uc.end());
          cfg.bottom_up = lc;
          cfg.bottom_up.push_back(A);
          cfg.bottom_up.insert(cfg.bottom_up.end(), uc.begin(), uc.end());
          cfg.variant = b1.contains(Cell{w - Point{1, 1}}) ? 1 : 0;
          cfg.markers = {{"x_W", A.upper_left()},
                         {"y_W", b1.last.lower_right()},
                         {"z_W", b2.first.lower_right()},
                         {"w", w}};
        } else {
          cfg.variant = b1.contains(Cell{w}) ? 1 : 0;
          cfg.markers = {{"x_T", A.lower_right()},
                         {"y_T", b2.last.upper_left()},
                         {"z_T", b1.first.upper_left()},
                         {"w", w}};
        }
        out.push_back(std::move(cfg));
      }
    }
  }
  return out;
}

std::vector<Configuration> find_skew_configurations(const Polyomino& P, ConfigKind kind,
                                                   const DetectionOptions& opts) {
  const bool hex = kind == ConfigKind::ld_skew_hexomino_h || kind == ConfigKind::ld_skew_hexomino_v;
  const bool horizontal =
      kind == ConfigKind::ld_skew_tetromino_h || kind == ConfigKind::ld_skew_hexomino_h;
  const coord_t r = hex ? 3 : 2;
  const Point along = horizontal ? Point{1, 0} : Point{0, 1};
  const Point across = horizontal ? Point{0, 1} : Point{1, 0};
  const std::string x = hex ? "x_D" : "x_C", y = hex ? "y_D" : "y_C";
  const std::string a = hex ? "a_D" : "a_C", b = hex ? "b_D" : "b_C";
  std::vector<Configuration> out;
  for (const auto& B1 : P.cells()) {
    Point a1 = B1.lower_left;
    for (coord_t k = 1; k < r; ++k) a1 = a1 - along;
    Cell A2{B1.lower_left + across};
    Point b2 = A2.lower_left;
    for (coord_t k = 1; k < r; ++k) b2 = b2 + along;
    Block first{Cell{a1}, B1, horizontal ? Direction::horizontal : Direction::vertical};
    Block second{A2, Cell{b2}, first.direction};
    auto c1 = first.cells(), c2 = second.cells();
    auto in_p = [&](const Cell& c) { return P.contains(c); };
    if (!std::all_of(c1.begin(), c1.end(), in_p) || !std::all_of(c2.begin(), c2.end(), in_p))
      continue;
    Configuration cfg;
    cfg.kind = kind;
    cfg.cells = c1;
    cfg.cells.insert(cfg.cells.end(), c2.begin(), c2.end());
    if (horizontal) {
      cfg.markers = {{x, A2.upper_left()}, {y, A2.upper_right()}};
      if (hex && opts.hexomino_upper_markers)
        cfg.markers.insert(cfg.markers.end(), {{a, B1.upper_left()}, {b, B1.upper_right()}});
      else
        cfg.markers.insert(cfg.markers.end(), {{a, B1.lower_left}, {b, B1.lower_right()}});
    } else {
      cfg.markers = {{x, B1.upper_left()},
                     {y, B1.lower_left},
                     {a, A2.upper_right()},
                     {b, A2.lower_right()}};
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

// Path position of the first cell when `cells` occupy consecutive positions
// of the cycle; 0 otherwise.  Reorders `cells` into path order on success.
std::size_t attach_window(const ClosedPath& cp, std::vector<Cell>& cells) {
  const std::size_t m = cells.size();
  const std::size_t n = cp.size();
  if (m > n) return 0;
  std::vector<std::size_t> idx;
  for (const auto& c : cells) {
    auto k = cp.index_of(c);
    if (k == 0) return 0;
    idx.push_back(k);
  }
  for (auto start : idx) {
    bool ok = true;
    for (std::size_t t = 0; t < m && ok; ++t) {
      const Cell& c = cp.at(static_cast<long>(start + t));
      ok = std::find(cells.begin(), cells.end(), c) != cells.end();
    }
    if (ok) {
      for (std::size_t t = 0; t < m; ++t) cells[t] = cp.at(static_cast<long>(start + t));
      return start;
    }
  }
  return 0;
}

}  // namespace

namespace {

std::vector<Configuration> find_literal(const Polyomino& P, ConfigKind kind, const DetectionOptions& opts) {
  switch (kind) {
    case ConfigKind::w_pentomino:
    case ConfigKind::rw_heptomino: {
      auto found = find_corner_configurations(P, kind);
      if (!opts.corner_shapes)
        std::erase_if(found, [](const Configuration& c) { return c.variant == 0; });
      return found;
    }
    case ConfigKind::ld_skew_tetromino_h:
    case ConfigKind::ld_skew_tetromino_v:
    case ConfigKind::ld_skew_hexomino_h:
    case ConfigKind::ld_skew_hexomino_v:
      return find_skew_configurations(P, kind, opts);
    default:
      return {};
  }
}

ConfigKind flipped_kind(ConfigKind k) {
  switch (k) {
    case ConfigKind::ld_skew_tetromino_h: return ConfigKind::ld_skew_tetromino_v;
    case ConfigKind::ld_skew_tetromino_v: return ConfigKind::ld_skew_tetromino_h;
    case ConfigKind::ld_skew_hexomino_h: return ConfigKind::ld_skew_hexomino_v;
    case ConfigKind::ld_skew_hexomino_v: return ConfigKind::ld_skew_hexomino_h;
    default: return k;
  }
}

bool is_skew(ConfigKind k) { return flipped_kind(k) != k; }

}  // namespace

std::vector<Configuration> find_configurations(const Polyomino& P, ConfigKind kind,
                                               const DetectionOptions& opts) {
  switch (kind) {
    case ConfigKind::ladder:
      return find_ladders(P, 2);
    case ConfigKind::l_configuration:
    case ConfigKind::zigzag_walk:
      throw Error(ErrorKind::missing_configurations,
                  std::string("geometric detection not available for ") +
                      std::string(to_string(kind)));
    default:
      break;
  }
  if (!opts.all_symmetries) return find_literal(P, kind, opts);

  std::vector<Configuration> out;
  std::set<std::vector<Cell>> seen;
  for (int s = 0; s < 8; ++s) {
    const auto T = Symmetry::of(s);
    std::vector<Cell> moved;
    for (const auto& c : P.cells()) moved.push_back(T.apply(c));
    auto TP = Polyomino::collection(moved);
    // a horizontal shape in the input may be vertical in the moved frame
    const bool turns = T.apply(Point{1, 0}).j != 0;
    const ConfigKind frame_kind = is_skew(kind) && turns ? flipped_kind(kind) : kind;
    for (auto cfg : find_literal(TP, frame_kind, opts)) {
      for (auto& c : cfg.cells) c = T.invert(c);
      for (auto& c : cfg.bottom_up) c = T.invert(c);
      for (auto& [name, p] : cfg.markers) p = T.invert(p);
      if (cfg.middle) cfg.middle = T.invert(*cfg.middle);
      cfg.kind = kind;
      cfg.symmetry = s;
      auto key = cfg.cells;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(cfg));
    }
  }
  return out;
}

std::vector<Configuration> find_configurations(const ClosedPath& cp, ConfigKind kind,
                                               const DetectionOptions& opts) {
  if (kind == ConfigKind::l_configuration) return find_l_configurations(cp);
  if (kind == ConfigKind::ladder) return find_ladders(cp, 2);
  auto found = find_configurations(cp.polyomino(), kind, opts);
  for (auto& cfg : found) {
    cfg.first_index = attach_window(cp, cfg.cells);
    if (cfg.middle) cfg.middle_index = cp.index_of(*cfg.middle);
  }
  std::sort(found.begin(), found.end(), [](const Configuration& a, const Configuration& b) {
    return std::tie(a.first_index, a.cells) < std::tie(b.first_index, b.cells);
  });
  return found;
}

std::vector<Configuration> find_l_configurations(const ClosedPath& cp) {
  std::vector<Configuration> out;
  const long n = static_cast<long>(cp.size());
  for (long k = 1; k <= n; ++k) {
    Point d1 = cp.at(k + 1).lower_left - cp.at(k).lower_left;
    Point d2 = cp.at(k + 2).lower_left - cp.at(k + 1).lower_left;
    Point d3 = cp.at(k + 3).lower_left - cp.at(k + 2).lower_left;
    Point d4 = cp.at(k + 4).lower_left - cp.at(k + 3).lower_left;
    if (d1 != d2 || d3 != d4) continue;
    if (d2.i * d3.i + d2.j * d3.j != 0) continue;
    Configuration cfg;
    cfg.kind = ConfigKind::l_configuration;
    for (long t = 0; t < 5; ++t) cfg.cells.push_back(cp.at(k + t));
    cfg.first_index = static_cast<std::size_t>(k);
    cfg.middle = cp.at(k + 2);
    cfg.middle_index = cp.wrap(k + 2);
    out.push_back(std::move(cfg));
  }
  return out;
}

namespace {

struct LadderLink {
  std::size_t to;
  Point a, b;  // the two shared vertices
};

// Shared unit segments [a_i, b_i] on the same edge interval of P.
bool same_edge_interval(const Polyomino& P, Direction dir, const LadderLink& s, const LadderLink& t) {
  auto e = edge_interval_through(P, s.a, dir);
  return e && e->contains(s.b) && e->contains(t.a) && e->contains(t.b);
}

}  // namespace

std::vector<Configuration> find_ladders(const Polyomino& P, std::size_t min_steps) {
  std::vector<Configuration> out;
  for (Direction dir : {Direction::horizontal, Direction::vertical}) {
    std::vector<Block> blocks;
    for (auto& b : maximal_blocks(P, dir))
      if (b.rank() >= 2) blocks.push_back(b);
    const std::size_t m = blocks.size();
    std::vector<std::vector<LadderLink>> links(m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (x == y) continue;
        auto I = intersect(blocks[x].interval(), blocks[y].interval());
        if (!I || shared_point_count(blocks[x].interval(), blocks[y].interval()) != 2) continue;
        links[x].push_back({y, I->lo, I->hi});
      }
    // The edge interval direction of the shared segments: for horizontal
    // blocks the shared segment is horizontal, and vice versa.
    const Direction seg_dir = dir;

    // Enumerate maximal simple chains of blocks, then split them where two
    // consecutive shared segments lie on a common edge interval.
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> ladders;
    std::vector<std::size_t> chain;
    std::vector<LadderLink> segs;
    std::vector<bool> on_chain(m, false);

    auto emit = [&](bool cyclic) {
      const std::size_t len = chain.size();
      if (len < 2) return;
      // bad[t]: segments t and t+1 on the same edge interval
      const std::size_t nseg = segs.size();
      std::vector<bool> bad(nseg, false);
      const std::size_t pairs = cyclic ? nseg : (nseg == 0 ? 0 : nseg - 1);
      for (std::size_t t = 0; t < pairs; ++t)
        bad[t] = same_edge_interval(P, seg_dir, segs[t], segs[(t + 1) % nseg]);
      if (cyclic) {
        auto brk = std::find(bad.begin(), bad.end(), true);
        if (brk == bad.end()) {
          auto key = chain;
          std::sort(key.begin(), key.end());
          if (seen.insert(key).second) ladders.push_back(chain);
          return;
        }
        // Rotate so that the run starts right after a break: blocks
        // chain[t+1] .. are a linear sequence ending at chain[t+1] again.
        std::size_t t0 = static_cast<std::size_t>(brk - bad.begin());
        std::vector<std::size_t> lin;
        std::vector<bool> lin_bad;
        for (std::size_t k = 0; k <= len; ++k) lin.push_back(chain[(t0 + 1 + k) % len]);
        for (std::size_t k = 0; k + 1 < len; ++k) lin_bad.push_back(bad[(t0 + 1 + k) % nseg]);
        std::size_t start = 0;
        for (std::size_t k = 0; k < lin_bad.size(); ++k) {
          if (lin_bad[k]) {
            std::vector<std::size_t> run(lin.begin() + static_cast<long>(start),
                                         lin.begin() + static_cast<long>(k + 2));
            auto key = run;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) ladders.push_back(run);
            start = k + 1;
          }
        }
        std::vector<std::size_t> run(lin.begin() + static_cast<long>(start), lin.end());
        auto key = run;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        if (seen.insert(key).second) ladders.push_back(run);
        return;
      }
      std::size_t start = 0;
      for (std::size_t t = 0; t < pairs; ++t) {
        if (bad[t]) {
          std::vector<std::size_t> run(chain.begin() + static_cast<long>(start),
                                       chain.begin() + static_cast<long>(t + 2));
          auto key = run;
          std::sort(key.begin(), key.end());
          if (seen.insert(key).second) ladders.push_back(run);
          start = t + 1;
        }
      }
      std::vector<std::size_t> run(chain.begin() + static_cast<long>(start), chain.end());
      auto key = run;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) ladders.push_back(run);
    };

    std::function<void(std::size_t)> extend = [&](std::size_t x) {
      bool extended = false;
      for (const auto& l : links[x]) {
        if (l.to == chain.front() && chain.size() >= 3 && !extended) {
          // Closing a cycle; handled once from the least block.
          if (chain.front() == *std::min_element(chain.begin(), chain.end())) {
            segs.push_back(l);
            emit(true);
            segs.pop_back();
          }
          extended = true;
          continue;
        }
        if (on_chain[l.to]) continue;
        extended = true;
        on_chain[l.to] = true;
        chain.push_back(l.to);
        segs.push_back(l);
        extend(l.to);
        segs.pop_back();
        chain.pop_back();
        on_chain[l.to] = false;
      }
      if (!extended) emit(false);
    };

    for (std::size_t x = 0; x < m; ++x) {
      // Start only from chain endpoints (degree <= 1) or, for cycles, anywhere.
      if (links[x].size() >= 2) {
        bool all_cycle = true;
        for (std::size_t y = 0; y < m; ++y)
          if (links[y].size() < 2) all_cycle = false;
        if (!all_cycle) continue;
      }
      chain = {x};
      on_chain.assign(m, false);
      on_chain[x] = true;
      segs.clear();
      extend(x);
    }

    // Drop runs strictly contained in a longer reported run.
    std::vector<std::vector<std::size_t>> maximal;
    for (const auto& r : ladders) {
      std::set<std::size_t> rs(r.begin(), r.end());
      bool contained = false;
      for (const auto& o : ladders) {
        if (o.size() <= r.size()) continue;
        std::set<std::size_t> os(o.begin(), o.end());
        if (std::includes(os.begin(), os.end(), rs.begin(), rs.end())) contained = true;
      }
      if (!contained) maximal.push_back(r);
    }
    for (const auto& r : maximal) {
      std::set<std::size_t> distinct(r.begin(), r.end());
      if (distinct.size() < min_steps) continue;
      Configuration cfg;
      cfg.kind = ConfigKind::ladder;
      cfg.steps = distinct.size();
      std::set<std::size_t> emitted;
      for (auto b : r) {
        if (!emitted.insert(b).second) continue;
        for (const auto& c : blocks[b].cells()) cfg.cells.push_back(c);
      }
      out.push_back(std::move(cfg));
    }
  }
  std::sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
    return a.cells < b.cells;
  });
  return out;
}

std::vector<Configuration> find_ladders(const ClosedPath& cp, std::size_t min_steps) {
  auto out = find_ladders(cp.polyomino(), min_steps);
  for (auto& cfg : out) {
    auto cells = cfg.cells;
    cfg.first_index = attach_window(cp, cells);
  }
  return out;
}

namespace {

// Some inner interval of P contains both points.
bool inner_interval_contains_both(const Polyomino& P, Point p, Point q) {
  Point lo{std::min(p.i, q.i), std::min(p.j, q.j)};
  Point hi{std::max(p.i, q.i), std::max(p.j, q.j)};
  Interval box{lo, hi};
  if (box.proper()) return P.is_inner(box);
  // Degenerate box: extend by one unit on either side across the flat axis.
  std::vector<Interval> options;
  if (lo.j == hi.j && lo.i < hi.i) {
    options.emplace_back(lo, hi + Point{0, 1});
    options.emplace_back(lo - Point{0, 1}, hi);
  } else if (lo.i == hi.i && lo.j < hi.j) {
    options.emplace_back(lo, hi + Point{1, 0});
    options.emplace_back(lo - Point{1, 0}, hi);
  } else {
    for (coord_t dx = -1; dx <= 0; ++dx)
      for (coord_t dy = -1; dy <= 0; ++dy) options.push_back(Cell{lo + Point{dx, dy}}.interval());
  }
  return std::any_of(options.begin(), options.end(), [&](const Interval& I) { return P.is_inner(I); });
}

bool on_common_edge_interval(const Polyomino& P, Point p, Point q) {
  if (p.j == q.j) {
    auto e = edge_interval_through(P, p, Direction::horizontal);
    return e && e->contains(q);
  }
  if (p.i == q.i) {
    auto e = edge_interval_through(P, p, Direction::vertical);
    return e && e->contains(q);
  }
  return false;
}

std::array<Point, 4> corners_of(const Interval& I) {
  return {I.lo, I.hi, I.upper_left(), I.lower_right()};
}

Point opposite_corner(const Interval& I, Point v) {
  if (v == I.lo) return I.hi;
  if (v == I.hi) return I.lo;
  if (v == I.upper_left()) return I.lower_right();
  return I.upper_left();
}

class ZigZagSearch {
 public:
  ZigZagSearch(const Polyomino& P, std::size_t limit, bool stop_at_first)
      : P_(P), intervals_(inner_intervals(P)), limit_(limit), stop_(stop_at_first) {
    for (std::size_t k = 0; k < intervals_.size(); ++k)
      for (auto c : corners_of(intervals_[k])) by_corner_[c].push_back(k);
  }

  std::vector<ZigZagWalk> run() {
    used_.assign(intervals_.size(), false);
    for (std::size_t s = 0; s < intervals_.size() && !done(); ++s) {
      const auto& I = intervals_[s];
      for (auto v1 : corners_of(I)) {
        Point z = opposite_corner(I, v1);
        for (auto v2 : corners_of(I)) {
          if (v2 == v1 || v2 == z) continue;
          if (!on_common_edge_interval(P_, v1, v2)) continue;
          first_ = s;
          used_[s] = true;
          walk_ = {{I}, {v1}, {z}, {opposite_corner(I, v2)}};
          step(s, v2);
          used_[s] = false;
          if (done()) return found_;
        }
      }
    }
    return found_;
  }

 private:
  bool done() const { return (stop_ && !found_.empty()) || (limit_ && found_.size() >= limit_); }

  void step(std::size_t cur, Point pivot) {
    if (done()) return;
    auto it = by_corner_.find(pivot);
    if (it == by_corner_.end()) return;
    for (auto k : it->second) {
      if (k <= first_ || used_[k]) continue;
      const auto& I = intervals_[k];
      if (!meets_in_single_point(intervals_[cur], I, pivot)) continue;
      Point z = opposite_corner(I, pivot);
      bool separated = true;
      for (auto zp : walk_.z_corners)
        if (inner_interval_contains_both(P_, zp, z)) { separated = false; break; }
      if (!separated) continue;
      for (auto next : corners_of(I)) {
        if (next == pivot || next == z) continue;
        if (!on_common_edge_interval(P_, pivot, next)) continue;
        walk_.intervals.push_back(I);
        walk_.pivots.push_back(pivot);
        walk_.z_corners.push_back(z);
        walk_.u_corners.push_back(opposite_corner(I, next));
        used_[k] = true;
        if (next == walk_.pivots.front() && walk_.intervals.size() >= 3 &&
            meets_in_single_point(I, intervals_[first_], next)) {
          found_.push_back(walk_);
        }
        if (!done()) step(k, next);
        used_[k] = false;
        walk_.intervals.pop_back();
        walk_.pivots.pop_back();
        walk_.z_corners.pop_back();
        walk_.u_corners.pop_back();
        if (done()) return;
      }
    }
  }

  const Polyomino& P_;
  std::vector<Interval> intervals_;
  std::map<Point, std::vector<std::size_t>> by_corner_;
  std::size_t limit_;
  bool stop_;
  std::vector<bool> used_;
  std::size_t first_ = 0;
  ZigZagWalk walk_;
  std::vector<ZigZagWalk> found_;
};

}  // namespace

bool is_zigzag_walk(const Polyomino& P, const ZigZagWalk& walk) {
  const std::size_t l = walk.intervals.size();
  if (l < 3 || walk.pivots.size() != l || walk.z_corners.size() != l || walk.u_corners.size() != l)
    return false;
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = a + 1; b < l; ++b)
      if (walk.intervals[a] == walk.intervals[b]) return false;
  for (std::size_t k = 0; k < l; ++k) {
    const auto& I = walk.intervals[k];
    if (!P.is_inner(I)) return false;
    Point v = walk.pivots[k], next = walk.pivots[(k + 1) % l];
    Point z = walk.z_corners[k], u = walk.u_corners[k];
    if (opposite_corner(I, v) != z || opposite_corner(I, next) != u) return false;
    if (v == next || v == u) return false;
    auto cs = corners_of(I);
    for (auto p : {v, next, z, u})
      if (std::find(cs.begin(), cs.end(), p) == cs.end()) return false;
    if (!meets_in_single_point(I, walk.intervals[(k + 1) % l], next)) return false;
    if (!on_common_edge_interval(P, v, next)) return false;
  }
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = a + 1; b < l; ++b)
      if (inner_interval_contains_both(P, walk.z_corners[a], walk.z_corners[b])) return false;
  return true;
}

std::vector<ZigZagWalk> find_zigzag_walks(const Polyomino& P, std::size_t limit) {
  return ZigZagSearch(P, limit, false).run();
}

std::vector<ZigZagWalk> find_zigzag_walks(const ClosedPath& cp, std::size_t limit) {
  return find_zigzag_walks(cp.polyomino(), limit);
}

bool has_zigzag_walk(const Polyomino& P) { return !ZigZagSearch(P, 1, true).run().empty(); }

ZigZagEquivalence no_zigzag_equivalence(const ClosedPath& cp) {
  ZigZagEquivalence r;
  r.no_zigzag = !has_zigzag_walk(cp.polyomino());
  r.lconf_or_ladder3 = !find_l_configurations(cp).empty() || !find_ladders(cp, 3).empty();
  r.agree = r.no_zigzag == r.lconf_or_ladder3;
  return r;
}

}  // namespace polyomino
