#include "polyomino/orders.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "polyomino/groebner.hpp"

namespace polyomino {

std::string_view to_string(OrderRule r) {
  switch (r) {
    case OrderRule::q1: return "q1";
    case OrderRule::no_w: return "without-w";
    case OrderRule::no_rw: return "without-rw";
    case OrderRule::algorithm: return "algorithm";
  }
  return "?";
}

namespace {

struct YBuilder {
  std::set<Point> points;
  YProvenance prov;

  void add(const Configuration& cfg, std::size_t index, std::string label,
           std::initializer_list<const char*> names, std::string reason) {
    TraceEntry e{std::move(label), cfg.kind, index, {}, std::move(reason)};
    for (const char* n : names) {
      Point p = cfg.marker(n);
      e.markers.emplace_back(n, p);
      points.insert(p);
    }
    prov.trace.push_back(std::move(e));
  }

  YResult finish() const {
    std::vector<Point> y(points.begin(), points.end());
    std::sort(y.begin(), y.end(), [](Point a, Point b) { return order_q1(a, b) < 0; });
    return {std::move(y), prov};
  }
};

std::string hex_label(ConfigKind k, char row) {
  return std::string(k == ConfigKind::ld_skew_hexomino_h ? "III-" : "IV-") + row;
}

}  // namespace

namespace {

template <class Find>
YResult without_w(Find&& find, const OrderOptions& opts) {
  if (!find(ConfigKind::w_pentomino).empty())
    throw Error(ErrorKind::has_w_pentomino, "the polyomino contains a W-pentomino");
  YBuilder b;
  b.prov.rule = OrderRule::no_w;
  const bool remark = opts.variant == MarkerVariant::remark;
  for (auto kind : {ConfigKind::ld_skew_tetromino_h, ConfigKind::ld_skew_tetromino_v}) {
    const char* label = kind == ConfigKind::ld_skew_tetromino_h ? "LD-H" : "LD-V";
    for (const auto& cfg : find(kind)) {
      if (remark)
        b.add(cfg, cfg.first_index, label, {"a_C", "b_C"}, "skew tetromino, alternative corners");
      else
        b.add(cfg, cfg.first_index, label, {"x_C", "y_C"}, "skew tetromino");
    }
  }
  return b.finish();
}

}  // namespace

YResult y_without_w(const ClosedPath& cp, const OrderOptions& opts) {
  return without_w([&](ConfigKind k) { return find_configurations(cp, k, opts.detection); }, opts);
}

YResult y_without_w(const Polyomino& P, const OrderOptions& opts) {
  return without_w([&](ConfigKind k) { return find_configurations(P, k, opts.detection); }, opts);
}

YResult y_without_rw(const ClosedPath& cp, const OrderOptions& opts) {
  if (!find_configurations(cp, ConfigKind::rw_heptomino, opts.detection).empty())
    throw Error(ErrorKind::has_rw_heptomino, "the path contains an RW-heptomino");
  YBuilder b;
  b.prov.rule = OrderRule::no_rw;
  for (auto kind : {ConfigKind::ld_skew_hexomino_h, ConfigKind::ld_skew_hexomino_v})
    for (const auto& cfg : find_configurations(cp, kind, opts.detection))
      b.add(cfg, cfg.first_index, hex_label(kind, 'A'), {"a_D", "b_D"}, "skew hexomino");
  for (const auto& cfg : find_configurations(cp, ConfigKind::w_pentomino, opts.detection)) {
    if (opts.variant == MarkerVariant::remark)
      b.add(cfg, cfg.middle_index, "II-A", {"x_W", "z_W"}, "W-pentomino, alternative corners");
    else
      b.add(cfg, cfg.middle_index, "I-A", {"x_W", "y_W"}, "W-pentomino");
  }
  return b.finish();
}

namespace {

class Algorithm {
 public:
  Algorithm(const ClosedPath& cp, std::size_t i, std::size_t j, const OrderOptions& opts)
      : cp_(cp), i_(i), j_(j), opts_(opts) {
    for (auto& c : find_configurations(cp, ConfigKind::w_pentomino, opts.detection))
      w_at_[c.middle_index].push_back(c);
    for (auto& c : find_configurations(cp, ConfigKind::rw_heptomino, opts.detection))
      rw_at_[c.middle_index].push_back(c);
    for (auto kind : {ConfigKind::ld_skew_hexomino_h, ConfigKind::ld_skew_hexomino_v})
      for (auto& c : find_configurations(cp, kind, opts.detection)) hex_at_[c.first_index].push_back(c);
    if (w_at_.empty() || rw_at_.empty())
      throw Error(ErrorKind::missing_configurations,
                  "the construction needs both a W-pentomino and an RW-heptomino");
    b_.prov.rule = OrderRule::algorithm;
  }

  YResult run() {
    auto q = first_middle(rw_at_, i_);
    // FOR k in i..q1: W-pentomino middles take II-A, hexominoes the A-rows
    for (std::size_t k = i_; k <= q.value_or(j_); ++k) {
      for (const auto& cfg : at(w_at_, k)) b_.add(cfg, k, "II-A", {"x_W", "z_W"}, "before the first RW middle cell");
      add_hexominoes(k, 'A');
    }
    if (!q) {
      b_.prov.notes.push_back("no RW-heptomino middle cell in range; stopped after the first sweep");
      return b_.finish();
    }
    std::size_t Q = *q;
    std::size_t R = first_middle(w_at_, Q + 1).value_or(j_);
    while (true) {
      auto M = lookback(Q);
      for (std::size_t k = Q; k <= R; ++k) {
        for (const auto& cfg : at(rw_at_, k)) {
          if (prefer_first(cfg, M, Q, {"x_T", "y_T"}))
            b_.add(cfg, k, "I-B", {"x_T", "y_T"}, reason(M, Q, true));
          else
            b_.add(cfg, k, "II-B", {"x_T", "z_T"}, reason(M, Q, false));
        }
        add_hexominoes(k, 'B');
      }
      if (R == j_) break;
      Q = first_middle(rw_at_, R + 1).value_or(j_);
      M = lookback(R);
      for (std::size_t k = R; k <= Q; ++k) {
        for (const auto& cfg : at(w_at_, k)) {
          if (prefer_first(cfg, M, Q, {"x_W", "y_W"}))
            b_.add(cfg, k, "I-A", {"x_W", "y_W"}, reason(M, Q, true));
          else
            b_.add(cfg, k, "II-A", {"x_W", "z_W"}, reason(M, Q, false));
        }
        add_hexominoes(k, 'A');
      }
      if (Q == j_) break;
      R = first_middle(w_at_, Q + 1).value_or(j_);
    }
    return b_.finish();
  }

 private:
  using Index = std::map<std::size_t, std::vector<Configuration>>;

  const std::vector<Configuration>& at(const Index& idx, std::size_t k) const {
    static const std::vector<Configuration> none;
    auto it = idx.find(cp_.wrap(static_cast<long>(k)));
    return it == idx.end() ? none : it->second;
  }

  std::optional<std::size_t> first_middle(const Index& idx, std::size_t from) const {
    for (std::size_t k = from; k <= j_; ++k)
      if (!at(idx, k).empty()) return k;
    return std::nullopt;
  }

  void add_hexominoes(std::size_t k, char row) {
    for (const auto& cfg : at(hex_at_, k)) {
      if (row == 'A')
        b_.add(cfg, k, hex_label(cfg.kind, 'A'), {"a_D", "b_D"}, "skew hexomino");
      else
        b_.add(cfg, k, hex_label(cfg.kind, 'B'), {"x_D", "y_D"}, "skew hexomino");
    }
  }

  std::optional<std::size_t> lookback(std::size_t upto) const {
    for (std::size_t m = upto; m >= i_; --m) {
      auto corners = cp_.at(static_cast<long>(m)).interval();
      for (auto p : {corners.lo, corners.hi, Point{corners.lo.i, corners.hi.j}, Point{corners.hi.i, corners.lo.j}})
        if (b_.points.count(p)) return m;
    }
    return std::nullopt;
  }

  std::string reason(std::optional<std::size_t> M, std::size_t Q, bool first) const {
    std::string s = "M=" + (M ? std::to_string(*M) : std::string("none")) + " Q=" + std::to_string(Q);
    switch (opts_.conflict) {
      case ConflictStrategy::verified:
        return s + (first ? ", local S-pairs reduce with the I-row" : ", I-row fails a local S-pair");
      case ConflictStrategy::always_first: return s + ", I-row forced";
      case ConflictStrategy::always_second: return s + ", II-row forced";
    }
    return s;
  }

  // The cells whose generators the tentative markers can affect: the
  // configuration itself and the stretch of path from A_M to A_Q.
  std::vector<Cell> affected(const Configuration& cfg, std::optional<std::size_t> M, std::size_t Q) const {
    std::set<Cell> cells(cfg.cells.begin(), cfg.cells.end());
    const std::size_t from = M.value_or(Q);
    for (std::size_t m = std::min(from, Q); m <= std::max(from, Q); ++m) cells.insert(cp_.at(static_cast<long>(m)));
    // neighbours along the path
    std::set<Cell> grown = cells;
    for (const auto& c : cells) {
      auto k = static_cast<long>(cp_.index_of(c));
      for (long d = -2; d <= 2; ++d) grown.insert(cp_.at(k + d));
    }
    return {grown.begin(), grown.end()};
  }

  // Local S-pair failures under Y plus `extra`, restricted to generators
  // touching `cells`.
  std::set<std::pair<Interval, Interval>> local_failures(const std::vector<Cell>& cells,
                                                         const std::set<Point>& extra) const {
    std::set<Point> y = b_.points;
    y.insert(extra.begin(), extra.end());
    auto ord = order_from_y(cp_.polyomino(), {y.begin(), y.end()});
    CheckOptions co;
    co.execution = Execution::serial;
    co.filter = [&](const Interval& I, const Interval& J) {
      auto touches = [&](const Interval& K) {
        return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) {
          return K.lo.i <= c.lower_left.i && K.lo.j <= c.lower_left.j && c.lower_left.i < K.hi.i &&
                 c.lower_left.j < K.hi.j;
        });
      };
      return touches(I) || touches(J);
    };
    std::set<std::pair<Interval, Interval>> out;
    for (const auto& f : buchberger_check(cp_.polyomino(), ord, co).failures) out.emplace(f.first, f.second);
    return out;
  }

  // Verified choice: the I-row is kept unless it makes some local S-pair
  // fail that does not already fail before the markers are added.  Pairs
  // failing at this point may still be repaired by configurations further
  // along the path.
  bool prefer_first(const Configuration& cfg, std::optional<std::size_t> M, std::size_t Q,
                    std::initializer_list<const char*> first_row) {
    if (opts_.conflict == ConflictStrategy::always_first) return true;
    if (opts_.conflict == ConflictStrategy::always_second) return false;
    std::set<Point> row;
    for (const char* n : first_row) row.insert(cfg.marker(n));
    auto cells = affected(cfg, M, Q);
    auto before = local_failures(cells, {});
    auto after = local_failures(cells, row);
    return std::includes(before.begin(), before.end(), after.begin(), after.end());
  }

  const ClosedPath& cp_;
  std::size_t i_, j_;
  OrderOptions opts_;
  Index w_at_, rw_at_, hex_at_;
  YBuilder b_;
};

}  // namespace

YResult y_algorithm(const ClosedPath& cp, std::size_t i, std::size_t j, const OrderOptions& opts) {
  if (i < 1 || j > cp.size() + 1 || i >= j)
    throw Error(ErrorKind::index_out_of_range,
                "need 1 <= i < j <= n + 1, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  return Algorithm(cp, i, j, opts).run();
}

namespace {

ClosedPath w_numbering(const ClosedPath& cp, const OrderOptions& opts, std::string& note) {
  auto ws = find_configurations(cp, ConfigKind::w_pentomino, opts.detection);
  if (ws.empty()) throw Error(ErrorKind::missing_configurations, "no W-pentomino to start from");
  auto best = std::min_element(ws.begin(), ws.end(), [](const Configuration& a, const Configuration& b) {
    return std::tie(*a.middle, a.bottom_up) < std::tie(*b.middle, b.bottom_up);
  });
  const auto& lab = best->bottom_up;
  auto forward = cp.relabeled(lab[0], false);
  ClosedPath out = forward.at(2) == lab[1] ? forward : cp.relabeled(lab[0], true);
  note = "numbering starts at the W-pentomino with middle cell (" + std::to_string(best->middle->lower_left.i) +
         "," + std::to_string(best->middle->lower_left.j) + "), cells labelled bottom up";
  return out;
}

}  // namespace

ChosenOrder order_for_rule(const ClosedPath& cp, OrderRule rule, const OrderOptions& opts) {
  const auto& P = cp.polyomino();
  switch (rule) {
    case OrderRule::q1: {
      YResult r;
      r.provenance.rule = OrderRule::q1;
      return {order_q1(P), r, cp};
    }
    case OrderRule::no_w: {
      auto r = y_without_w(cp, opts);
      return {order_from_y(P, r.y), r, cp};
    }
    case OrderRule::no_rw: {
      auto r = y_without_rw(cp, opts);
      return {order_from_y(P, r.y), r, cp};
    }
    case OrderRule::algorithm: {
      std::string note;
      auto numbered = w_numbering(cp, opts, note);
      auto r = y_algorithm(numbered, 2, numbered.size() + 1, opts);
      r.provenance.notes.insert(r.provenance.notes.begin(), note);
      return {order_from_y(P, r.y), r, numbered};
    }
  }
  throw Error(ErrorKind::index_out_of_range, "unknown order rule");
}

ChosenOrder choose_order(const ClosedPath& cp, const OrderOptions& opts) {
  if (find_configurations(cp, ConfigKind::w_pentomino, opts.detection).empty())
    return order_for_rule(cp, OrderRule::no_w, opts);
  if (find_configurations(cp, ConfigKind::rw_heptomino, opts.detection).empty())
    return order_for_rule(cp, OrderRule::no_rw, opts);
  return order_for_rule(cp, OrderRule::algorithm, opts);
}

}  // namespace polyomino
