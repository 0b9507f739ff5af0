#include "polyomino/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace polyomino {

namespace {

std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
  if (u < v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void sort_desc(RankMonomial& m) { std::sort(m.begin(), m.end(), std::greater<>()); }

// m / lead * trail, where lead divides m.
RankMonomial replace(const RankMonomial& m, const RankMonomial& lead, const RankMonomial& trail) {
  RankMonomial out = m;
  for (auto v : lead) out.erase(std::find(out.begin(), out.end(), v));
  out.insert(out.end(), trail.begin(), trail.end());
  sort_desc(out);
  return out;
}

// Multiset difference a - b for b dividing a.
RankMonomial quotient(const RankMonomial& a, const RankMonomial& b) {
  RankMonomial out = a;
  for (auto v : b) out.erase(std::find(out.begin(), out.end(), v));
  return out;
}

RankMonomial merged(RankMonomial a, const RankMonomial& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_desc(a);
  return a;
}

RankMonomial lcm_of(const RankMonomial& a, const RankMonomial& b) {
  RankMonomial out;
  std::set<std::uint32_t> vars(a.begin(), a.end());
  vars.insert(b.begin(), b.end());
  for (auto v : vars) {
    auto ea = std::count(a.begin(), a.end(), v), eb = std::count(b.begin(), b.end(), v);
    out.insert(out.end(), static_cast<std::size_t>(std::max(ea, eb)), v);
  }
  sort_desc(out);
  return out;
}

}  // namespace

RankedBasis::RankedBasis(const Polyomino& P, const VertexOrder& ord)
    : ord_(ord), intervals_(inner_intervals(P)) {
  build(P);
}

RankedBasis::RankedBasis(const Polyomino& P, std::vector<Interval> intervals, const VertexOrder& ord)
    : ord_(ord), intervals_(std::move(intervals)) {
  build(P);
}

void RankedBasis::build(const Polyomino&) {
  const std::size_t n = intervals_.size();
  lead_.resize(n);
  trail_.resize(n);
  diagonal_leads_.resize(n);
  leads_at_.assign(ord_.size(), {});
  for (std::size_t k = 0; k < n; ++k) {
    auto c = interval_corners(intervals_[k]);
    RankMonomial diag{static_cast<std::uint32_t>(ord_.rank(c.diagonal.first)),
                      static_cast<std::uint32_t>(ord_.rank(c.diagonal.second))};
    RankMonomial anti{static_cast<std::uint32_t>(ord_.rank(c.anti_diagonal.first)),
                      static_cast<std::uint32_t>(ord_.rank(c.anti_diagonal.second))};
    sort_desc(diag);
    sort_desc(anti);
    diagonal_leads_[k] = diag > anti;
    lead_[k] = diagonal_leads_[k] ? diag : anti;
    trail_[k] = diagonal_leads_[k] ? anti : diag;
    by_lead_.emplace(pair_key(lead_[k][0], lead_[k][1]), k);
    leads_at_[lead_[k][0]].push_back(k);
    leads_at_[lead_[k][1]].push_back(k);
  }
}

bool RankedBasis::coprime(std::size_t x, std::size_t y) const {
  for (auto u : lead_[x])
    for (auto v : lead_[y])
      if (u == v) return false;
  return true;
}

std::optional<std::size_t> RankedBasis::first_divisor(const RankMonomial& m) const {
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (s > 0 && m[s] == m[s - 1]) continue;
    for (std::size_t t = s + 1; t < m.size(); ++t) {
      if (m[t] == m[s] || (t > s + 1 && m[t] == m[t - 1])) continue;
      auto it = by_lead_.find(pair_key(m[s], m[t]));
      if (it != by_lead_.end() && (!best || it->second < *best)) best = it->second;
    }
  }
  return best;
}

std::vector<std::size_t> RankedBasis::divisors(const RankMonomial& m) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (s > 0 && m[s] == m[s - 1]) continue;
    for (std::size_t t = s + 1; t < m.size(); ++t) {
      if (m[t] == m[s] || (t > s + 1 && m[t] == m[t - 1])) continue;
      auto it = by_lead_.find(pair_key(m[s], m[t]));
      if (it != by_lead_.end()) out.push_back(it->second);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RankMonomial RankedBasis::normal_form(RankMonomial m) const {
  while (auto d = first_divisor(m)) m = replace(m, lead_[*d], trail_[*d]);
  return m;
}

RankedBasis::Outcome RankedBasis::reduce_s_pair(std::size_t x, std::size_t y) const {
  const RankMonomial l = lcm_of(lead_[x], lead_[y]);
  // S = (l / lead_y) trail_y - (l / lead_x) trail_x
  RankMonomial plus = merged(quotient(l, lead_[y]), trail_[y]);
  RankMonomial minus = merged(quotient(l, lead_[x]), trail_[x]);
  while (true) {
    if (plus == minus) return {true, {}, {}};
    RankMonomial& hi = plus > minus ? plus : minus;
    RankMonomial& lo = plus > minus ? minus : plus;
    if (auto d = first_divisor(hi)) {
      hi = replace(hi, lead_[*d], trail_[*d]);
    } else if (auto e = first_divisor(lo)) {
      lo = replace(lo, lead_[*e], trail_[*e]);
    } else {
      return {false, plus, minus};
    }
  }
}

bool RankedBasis::s_pair_reduces_to_zero(std::size_t x, std::size_t y) const {
  const RankMonomial l = lcm_of(lead_[x], lead_[y]);
  RankMonomial p = merged(quotient(l, lead_[y]), trail_[y]);
  RankMonomial q = merged(quotient(l, lead_[x]), trail_[x]);
  std::set<std::pair<RankMonomial, RankMonomial>> seen;
  std::function<bool(RankMonomial, RankMonomial)> go = [&](RankMonomial a, RankMonomial b) {
    if (a == b) return true;
    if (a < b) std::swap(a, b);
    if (!seen.emplace(a, b).second) return false;
    for (auto k : divisors(a))
      if (go(replace(a, lead_[k], trail_[k]), b)) return true;
    return false;
  };
  return go(std::move(p), std::move(q));
}

RankMonomial RankedBasis::to_rank(const Monomial& m) const {
  RankMonomial out;
  for (const auto& [v, e] : m.powers())
    out.insert(out.end(), e, static_cast<std::uint32_t>(ord_.rank(v)));
  sort_desc(out);
  return out;
}

Monomial RankedBasis::to_monomial(const RankMonomial& m) const {
  std::vector<std::pair<Point, unsigned>> p;
  for (auto r : m) p.emplace_back(ord_.ascending()[r], 1u);
  return Monomial(std::move(p));
}

Polynomial RankedBasis::to_polynomial(const RankMonomial& plus, const RankMonomial& minus) const {
  Polynomial f(to_monomial(plus), 1);
  f.add_term(to_monomial(minus), -1);
  return f;
}

std::vector<std::pair<std::size_t, std::size_t>> RankedBasis::overlapping_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& gens : leads_at_)
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t t = s + 1; t < gens.size(); ++t)
        out.emplace_back(std::min(gens[s], gens[t]), std::max(gens[s], gens[t]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool basis_is_reduced(const RankedBasis& B) {
  for (std::size_t k = 0; k < B.size(); ++k) {
    if (B.first_divisor(B.trail(k))) return false;
    auto d = B.divisors(B.lead(k));
    if (d.size() != 1 || d[0] != k) return false;
  }
  return true;
}

}  // namespace

GBReport buchberger_check(const Polyomino& P, const VertexOrder& ord, const CheckOptions& opts) {
  RankedBasis B(P, ord);
  GBReport rep;
  const std::size_t n = B.size();
  rep.generators = n;
  auto keep = [&](std::size_t x, std::size_t y) {
    return !opts.filter || opts.filter(B.interval(x), B.interval(y));
  };
  auto record = [&](std::size_t x, std::size_t y, const RankedBasis::Outcome& o) {
    rep.failures.push_back({x, y, B.interval(x), B.interval(y), B.to_polynomial(o.plus, o.minus)});
  };

  if (opts.execution == Execution::serial) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!keep(x, y)) continue;
        ++rep.total_pairs;
        if (B.coprime(x, y)) {
          ++rep.coprime_skips;
          continue;
        }
        if (opts.max_failures && rep.failures.size() >= opts.max_failures) continue;
        ++rep.reduced_pairs;
        auto o = B.reduce_s_pair(x, y);
        if (!o.zero) record(x, y, o);
      }
    }
  } else {
    auto pairs = B.overlapping_pairs();
    if (opts.filter) {
      std::erase_if(pairs, [&](const auto& p) { return !keep(p.first, p.second); });
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (keep(x, y)) ++rep.total_pairs;
    } else {
      rep.total_pairs = n * (n - 1) / 2;
    }
    rep.coprime_skips = rep.total_pairs - pairs.size();
    std::vector<RankedBasis::Outcome> outcomes(pairs.size());
    std::vector<char> done(pairs.size(), 0);
    std::atomic<std::size_t> failed{0};
    const long m = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < m; ++k) {
      if (opts.max_failures && failed.load(std::memory_order_relaxed) >= opts.max_failures) continue;
      auto idx = static_cast<std::size_t>(k);
      outcomes[idx] = B.reduce_s_pair(pairs[idx].first, pairs[idx].second);
      done[idx] = 1;
      if (!outcomes[idx].zero) failed.fetch_add(1, std::memory_order_relaxed);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!done[k]) continue;
      ++rep.reduced_pairs;
      if (!outcomes[k].zero) record(pairs[k].first, pairs[k].second, outcomes[k]);
    }
    if (opts.max_failures && rep.failures.size() > opts.max_failures)
      rep.failures.resize(opts.max_failures);
  }
  rep.is_groebner = rep.failures.empty();
  rep.is_reduced = rep.is_groebner && basis_is_reduced(B);
  return rep;
}

bool coprime_criterion(const Polynomial& f, const Polynomial& g, const VertexOrder& ord) {
  return leading_term(f, ord).monomial.coprime(leading_term(g, ord).monomial);
}

GBReport buchberger_check(const std::vector<Polynomial>& G, const VertexOrder& ord) {
  GBReport rep;
  rep.generators = G.size();
  for (std::size_t x = 0; x < G.size(); ++x) {
    for (std::size_t y = x + 1; y < G.size(); ++y) {
      ++rep.total_pairs;
      if (coprime_criterion(G[x], G[y], ord)) {
        ++rep.coprime_skips;
        continue;
      }
      ++rep.reduced_pairs;
      auto r = reduce(s_polynomial(G[x], G[y], ord), G, ord);
      if (!r.is_zero()) rep.failures.push_back({x, y, {}, {}, r});
    }
  }
  rep.is_groebner = rep.failures.empty();
  rep.is_reduced = rep.is_groebner;
  if (rep.is_reduced) {
    for (std::size_t x = 0; x < G.size() && rep.is_reduced; ++x) {
      auto lx = leading_term(G[x], ord);
      if (lx.coefficient != 1 && lx.coefficient != -1) rep.is_reduced = false;
      for (std::size_t y = 0; y < G.size() && rep.is_reduced; ++y) {
        if (x == y) continue;
        auto ly = leading_term(G[y], ord).monomial;
        for (const auto& t : G[x].terms())
          if (ly.divides(t.first)) rep.is_reduced = false;
      }
    }
  }
  return rep;
}

InitialIdeal initial_ideal(const Polyomino& P, const VertexOrder& ord) {
  InitialIdeal out;
  RankedBasis B(P, ord);
  std::vector<Monomial> leads;
  for (std::size_t k = 0; k < B.size(); ++k) leads.push_back(B.to_monomial(B.lead(k)));
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  for (std::size_t k = 0; k < leads.size(); ++k) {
    bool redundant = false;
    for (std::size_t t = 0; t < leads.size() && !redundant; ++t)
      if (t != k && leads[t].divides(leads[k])) redundant = true;
    if (!redundant) out.generators.push_back(leads[k]);
  }
  CheckOptions opts;
  opts.max_failures = 1;
  out.certified = buchberger_check(P, ord, opts).is_groebner;
  return out;
}

bool is_squarefree(const std::vector<Monomial>& monomials) {
  return std::all_of(monomials.begin(), monomials.end(),
                     [](const Monomial& m) { return m.squarefree(); });
}

std::string_view to_string(OverlapPattern p) {
  switch (p) {
    case OverlapPattern::containment: return "containment";
    case OverlapPattern::disjoint_corners: return "disjoint-corners";
    case OverlapPattern::two_shared: return "two-shared";
    case OverlapPattern::crossing: return "crossing";
    case OverlapPattern::side_offset: return "side-offset";
    case OverlapPattern::stacked_offset: return "stacked-offset";
    case OverlapPattern::nested: return "nested";
    case OverlapPattern::diagonal_touch: return "diagonal-touch";
    case OverlapPattern::other: return "other";
  }
  return "other";
}

bool is_single_corner_pattern(OverlapPattern p) {
  switch (p) {
    case OverlapPattern::crossing:
    case OverlapPattern::side_offset:
    case OverlapPattern::stacked_offset:
    case OverlapPattern::nested:
    case OverlapPattern::diagonal_touch:
      return true;
    default:
      return false;
  }
}

namespace {

std::array<Point, 4> corner_array(const Interval& I) { return {I.lo, I.hi, I.upper_left(), I.lower_right()}; }

std::size_t shared_corners(const Interval& I, const Interval& J) {
  std::size_t n = 0;
  for (auto p : corner_array(I))
    for (auto q : corner_array(J))
      if (p == q) ++n;
  return n;
}

struct Canonical {
  OverlapPattern pattern;
  Point h, r;
  bool has_aux;
};

std::optional<Canonical> match_canonical(const Interval& I, const Interval& J) {
  const Point a = I.lo, b = I.hi, c = I.upper_left();
  const Point al = J.lo, be = J.hi, ga = J.upper_left(), de = J.lower_right();
  if (be == b && a.i < al.i && al.j < a.j)
    return Canonical{OverlapPattern::crossing, {al.i, a.j}, {a.i, al.j}, true};
  if (ga == b && a.j < al.j)
    return Canonical{OverlapPattern::side_offset, {a.i, al.j}, {be.i, a.j}, true};
  if (al == c && b.i < be.i)
    return Canonical{OverlapPattern::stacked_offset, {b.i, be.j}, {de.i, a.j}, true};
  if (ga == c && a.i < de.i && de.i < b.i && a.j < de.j && de.j < b.j)
    return Canonical{OverlapPattern::nested, {de.i, a.j}, {b.i, de.j}, true};
  if (al == b)
    return Canonical{OverlapPattern::diagonal_touch, {be.i, a.j}, {a.i, be.j}, true};
  return std::nullopt;
}

}  // namespace

OverlapConfiguration classify_overlap(const Interval& I1, const Interval& I2) {
  OverlapConfiguration cfg;
  cfg.first = I1;
  cfg.second = I2;
  auto fill_plain = [&](const Interval& I, const Interval& J) {
    cfg.a = I.lo, cfg.b = I.hi, cfg.c = I.upper_left(), cfg.d = I.lower_right();
    cfg.alpha = J.lo, cfg.beta = J.hi, cfg.gamma = J.upper_left(), cfg.delta = J.lower_right();
  };
  fill_plain(I1, I2);
  if (I1 == I2) {
    cfg.pattern = OverlapPattern::containment;
    return cfg;
  }
  const auto shared = shared_corners(I1, I2);
  if (shared == 0) {
    cfg.pattern = OverlapPattern::disjoint_corners;
    return cfg;
  }
  if (shared == 2) {
    cfg.pattern = OverlapPattern::two_shared;
    return cfg;
  }
  if (shared != 1) return cfg;
  for (int sw = 0; sw < 2; ++sw) {
    const Interval& X = sw ? I2 : I1;
    const Interval& Y = sw ? I1 : I2;
    for (int s = 0; s < 8; ++s) {
      auto T = Symmetry::of(s);
      Interval I = T.apply(X), J = T.apply(Y);
      auto m = match_canonical(I, J);
      if (!m) continue;
      cfg.pattern = m->pattern;
      cfg.symmetry = s;
      cfg.swapped = sw == 1;
      cfg.a = T.invert(I.lo);
      cfg.b = T.invert(I.hi);
      cfg.c = T.invert(I.upper_left());
      cfg.d = T.invert(I.lower_right());
      cfg.alpha = T.invert(J.lo);
      cfg.beta = T.invert(J.hi);
      cfg.gamma = T.invert(J.upper_left());
      cfg.delta = T.invert(J.lower_right());
      cfg.h = T.invert(m->h);
      cfg.r = T.invert(m->r);
      return cfg;
    }
  }
  return cfg;
}

namespace {

// The four points are exactly the corners of an inner interval of P.
bool corners_of_inner(const Polyomino& P, std::array<Point, 4> pts) {
  coord_t i0 = pts[0].i, i1 = pts[0].i, j0 = pts[0].j, j1 = pts[0].j;
  for (auto p : pts) {
    i0 = std::min(i0, p.i), i1 = std::max(i1, p.i);
    j0 = std::min(j0, p.j), j1 = std::max(j1, p.j);
  }
  if (i0 == i1 || j0 == j1) return false;
  Interval box{{i0, j0}, {i1, j1}};
  auto cs = corner_array(box);
  std::sort(cs.begin(), cs.end());
  std::sort(pts.begin(), pts.end());
  return cs == pts && P.is_inner(box);
}

}  // namespace

unsigned lemma_conditions(const Polyomino& P, const OverlapConfiguration& cfg, const VertexOrder& ord) {
  if (!is_single_corner_pattern(cfg.pattern))
    throw Error(ErrorKind::pattern_mismatch,
                "no order conditions for pattern " + std::string(to_string(cfg.pattern)));
  const Point a = cfg.a, b = cfg.b, c = cfg.c, d = cfg.d;
  const Point al = cfg.alpha, be = cfg.beta, ga = cfg.gamma, de = cfg.delta;
  const Point h = *cfg.h, r = *cfg.r;
  auto lt = [&](Point u, Point v) { return ord.less(u, v); };
  // "u, v < w": both below w
  auto both = [&](Point u, Point v, Point w) { return lt(u, w) && lt(v, w); };
  auto mono_lt = [&](std::initializer_list<Point> x, std::initializer_list<Point> y) {
    return compare(Monomial::product(x), Monomial::product(y), ord) < 0;
  };
  bool c1 = false, c2 = false, c3 = false, c4 = false;
  switch (cfg.pattern) {
    case OverlapPattern::crossing: {
      bool first = mono_lt({a, ga, de}, {al, c, d});
      bool second = mono_lt({al, c, d}, {a, ga, de});
      bool aux = corners_of_inner(P, {r, h, a, al});
      c1 = first && (both(h, de, al) || both(h, de, d));
      c2 = first && aux && (both(r, ga, al) || both(r, ga, c));
      c3 = second && (both(h, c, a) || both(h, c, ga));
      c4 = second && aux && (both(r, d, a) || both(r, d, de));
      break;
    }
    case OverlapPattern::side_offset: {
      bool first = mono_lt({a, al, be}, {de, c, d});
      bool second = mono_lt({de, c, d}, {a, al, be});
      bool aux = corners_of_inner(P, {d, de, al, r});
      c1 = first && (both(h, be, c) || both(h, be, de));
      c2 = first && aux && (both(r, al, de) || both(r, al, d));
      c3 = second && (both(h, d, a) || both(h, d, al));
      c4 = second && aux && (both(r, c, a) || both(r, c, be));
      break;
    }
    case OverlapPattern::stacked_offset: {
      bool first = mono_lt({d, de, ga}, {be, a, b});
      bool second = mono_lt({be, a, b}, {d, de, ga});
      bool aux = corners_of_inner(P, {d, de, b, r});
      c1 = first && (both(h, de, b) || both(h, de, be));
      c2 = first && aux && (both(r, ga, a) || both(r, ga, be));
      c3 = second && (both(h, a, d) || both(h, a, ga));
      c4 = second && aux && (both(r, b, d) || both(r, b, de));
      break;
    }
    case OverlapPattern::nested: {
      bool first = mono_lt({d, al, be}, {de, a, b});
      bool second = mono_lt({de, a, b}, {d, al, be});
      c1 = first && (both(h, al, a) || both(h, al, de));
      c2 = first && (both(r, be, de) || both(r, be, b));
      c3 = second && (both(r, a, al) || both(r, a, d));
      c4 = second && (both(h, b, d) || both(h, b, be));
      break;
    }
    case OverlapPattern::diagonal_touch: {
      bool first = mono_lt({a, ga, de}, {be, d, c});
      bool second = mono_lt({be, d, c}, {a, ga, de});
      bool aux_h = corners_of_inner(P, {d, de, b, h});
      bool aux_r = corners_of_inner(P, {c, ga, b, r});
      c1 = first && aux_h && (both(h, ga, be) || both(h, ga, d));
      c2 = first && aux_r && (both(r, de, be) || both(r, de, c));
      c3 = second && aux_r && (both(r, d, a) || both(r, d, ga));
      c4 = second && aux_h && (both(c, h, a) || both(c, h, de));
      break;
    }
    default:
      break;
  }
  return (c1 ? 1u : 0u) | (c2 ? 2u : 0u) | (c3 ? 4u : 0u) | (c4 ? 8u : 0u);
}

bool lemma_predicate(const Polyomino& P, const OverlapConfiguration& cfg, const VertexOrder& ord) {
  return lemma_conditions(P, cfg, ord) != 0;
}

}  // namespace polyomino
