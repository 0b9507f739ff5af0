#include "polyomino/primitive.hpp"

#include <algorithm>
#include <map>

namespace polyomino {

Polynomial PrimitiveCandidate::binomial() const {
  Polynomial f(plus, 1);
  f.add_term(minus, -1);
  return f;
}

MembershipOracle::MembershipOracle(const ClosedPath& cp, const OrderOptions& opts)
    : cp_(cp), generators_(generators(cp.polyomino())) {
  auto chosen = choose_order(cp, opts);
  auto rep = buchberger_check(cp.polyomino(), chosen.order);
  if (!rep.is_groebner)
    throw Error(ErrorKind::not_certified, "the inner minors are not a Gröbner basis for the chosen order");
  basis_ = std::make_unique<RankedBasis>(cp.polyomino(), chosen.order);
}

RankMonomial MembershipOracle::normal_form(const Monomial& m) const {
  return basis_->normal_form(basis_->to_rank(m));
}

bool MembershipOracle::member(const Monomial& plus, const Monomial& minus) const {
  for (const auto& [v, e] : plus.powers())
    if (!order().contains(v)) return false;
  for (const auto& [v, e] : minus.powers())
    if (!order().contains(v)) return false;
  return normal_form(plus) == normal_form(minus);
}

bool MembershipOracle::member(const Polynomial& f) const {
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.powers())
      if (!order().contains(v)) return false;
  return reduce(f, generators_, order()).is_zero();
}

bool membership(const Polynomial& f, const ClosedPath& cp) { return MembershipOracle(cp).member(f); }

namespace {

// Every divisor of m, including 1 and m.
std::vector<Monomial> divisors_of(const Monomial& m) {
  std::vector<Monomial> out{Monomial{}};
  for (const auto& [v, e] : m.powers()) {
    std::vector<Monomial> next;
    for (const auto& d : out)
      for (unsigned k = 0; k <= e; ++k) next.push_back(k == 0 ? d : d * Monomial({{v, k}}));
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool is_primitive(const PrimitiveCandidate& f, const MembershipOracle& oracle) {
  if (!oracle.member(f.plus, f.minus)) throw Error(ErrorKind::not_member, "binomial is not in the ideal");
  auto dp = divisors_of(f.plus), dm = divisors_of(f.minus);
  for (const auto& a : dp)
    for (const auto& b : dm) {
      if (a == b || (a == f.plus && b == f.minus)) continue;
      if (a.degree() != b.degree()) continue;  // the ideal is homogeneous
      if (oracle.member(a, b)) return false;
    }
  return true;
}

bool is_primitive(const PrimitiveCandidate& f, const ClosedPath& cp) {
  return is_primitive(f, MembershipOracle(cp));
}

namespace {

// Degree-d monomials over variables 0..n-1 as nondecreasing index lists.
std::vector<std::vector<std::uint32_t>> combinations(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(d, 0);
  if (n == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t k = d;
    while (k > 0 && cur[k - 1] == n - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t t = k; t < d; ++t) cur[t] = cur[k - 1];
  }
  return out;
}

Monomial to_monomial(const std::vector<std::uint32_t>& idx, const std::vector<Point>& vars) {
  std::vector<std::pair<Point, unsigned>> p;
  for (auto k : idx) {
    if (!p.empty() && p.back().first == vars[k])
      ++p.back().second;
    else
      p.emplace_back(vars[k], 1u);
  }
  return Monomial(std::move(p));
}

bool disjoint(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t s = 0, t = 0;
  while (s < a.size() && t < b.size()) {
    if (a[s] == b[t]) return false;
    a[s] < b[t] ? ++s : ++t;
  }
  return true;
}

// Per-vertex index of its maximal horizontal and vertical edge interval.
std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_interval_ids(const Polyomino& P,
                                                                       const std::vector<Point>& vars) {
  auto hs = maximal_edge_intervals(P, Direction::horizontal);
  auto vs = maximal_edge_intervals(P, Direction::vertical);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto v : vars) {
    std::uint32_t h = 0, w = 0;
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (hs[k].contains(v)) h = static_cast<std::uint32_t>(k);
    for (std::size_t k = 0; k < vs.size(); ++k)
      if (vs[k].contains(v)) w = static_cast<std::uint32_t>(k);
    out.emplace_back(h, w);
  }
  return out;
}

using Key = std::vector<std::uint32_t>;

// Multisets of horizontal and of vertical edge-interval ids of a monomial;
// every inner minor preserves both.
Key signature(const std::vector<std::uint32_t>& mono,
              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& ids) {
  Key h, v;
  for (auto k : mono) {
    h.push_back(ids[k].first);
    v.push_back(ids[k].second);
  }
  std::sort(h.begin(), h.end());
  std::sort(v.begin(), v.end());
  h.push_back(~0u);
  h.insert(h.end(), v.begin(), v.end());
  return h;
}

}  // namespace

std::vector<std::pair<Monomial, Monomial>> member_binomials(const MembershipOracle& oracle, std::size_t d,
                                                            bool prune) {
  const auto& vars = oracle.order().ascending();
  auto monos = combinations(vars.size(), d);
  std::vector<std::pair<Monomial, Monomial>> out;
  if (!prune) {
    // generic reduction of every monomial, then all coprime pairs
    std::vector<Polynomial> G = generators(oracle.path().polyomino());
    std::vector<Polynomial> nf(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k)
      nf[k] = reduce(Polynomial(to_monomial(monos[k], vars)), G, oracle.order());
    for (std::size_t a = 0; a < monos.size(); ++a)
      for (std::size_t b = a + 1; b < monos.size(); ++b)
        if (disjoint(monos[a], monos[b]) && nf[a] == nf[b]) {
          auto x = to_monomial(monos[a], vars), y = to_monomial(monos[b], vars);
          out.emplace_back(std::max(x, y), std::min(x, y));
        }
  } else {
    auto ids = edge_interval_ids(oracle.path().polyomino(), vars);
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      groups[signature(monos[k], ids)].push_back(k);
    }
    for (const auto& [sig, members] : groups) {
      std::map<RankMonomial, std::vector<std::size_t>> fibres;
      for (auto k : members) fibres[oracle.normal_form(to_monomial(monos[k], vars))].push_back(k);
      for (const auto& [nf, ks] : fibres)
        for (std::size_t s = 0; s < ks.size(); ++s)
          for (std::size_t t = s + 1; t < ks.size(); ++t)
            if (disjoint(monos[ks[s]], monos[ks[t]])) {
              auto x = to_monomial(monos[ks[s]], vars), y = to_monomial(monos[ks[t]], vars);
              out.emplace_back(std::max(x, y), std::min(x, y));
            }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanResult graver_scan(const ClosedPath& cp, std::size_t max_degree, const ScanOptions& opts) {
  if (max_degree < 2) throw Error(ErrorKind::degree_bound_too_small, "max_degree must be at least 2");
  return graver_scan(MembershipOracle(cp), max_degree, opts);
}

ScanResult graver_scan(const MembershipOracle& oracle, std::size_t max_degree, const ScanOptions& opts) {
  if (max_degree < 2) throw Error(ErrorKind::degree_bound_too_small, "max_degree must be at least 2");
  ScanResult res;
  res.max_degree = max_degree;
  res.toric_hypothesis = !has_zigzag_walk(oracle.path().polyomino());
  const auto& vars = oracle.order().ascending();
  auto ids = edge_interval_ids(oracle.path().polyomino(), vars);

  for (std::size_t d = 2; d <= max_degree; ++d) {
    auto monos = combinations(vars.size(), d);
    res.monomials += monos.size();
    // normal forms, computed in parallel over the enumeration (which is
    // ordered by least variable)
    std::vector<RankMonomial> nf(monos.size());
    const long count = static_cast<long>(monos.size());
    if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
      for (long k = 0; k < count; ++k) nf[k] = oracle.normal_form(to_monomial(monos[k], vars));
    } else {
      for (long k = 0; k < count; ++k) nf[k] = oracle.normal_form(to_monomial(monos[k], vars));
    }
    // fibres of equal normal form; with pruning, keyed also by the
    // edge-interval signature (which a normal form cannot change)
    std::map<std::pair<Key, RankMonomial>, std::vector<std::size_t>> fibres;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      fibres[{opts.prune ? signature(monos[k], ids) : Key{}, nf[k]}].push_back(k);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, ks] : fibres)
      for (std::size_t s = 0; s < ks.size(); ++s)
        for (std::size_t t = s + 1; t < ks.size(); ++t)
          if (disjoint(monos[ks[s]], monos[ks[t]])) pairs.emplace_back(ks[s], ks[t]);
    res.member_pairs += pairs.size();

    std::vector<char> keep(pairs.size(), 0);
    std::vector<PrimitiveCandidate> cands(pairs.size());
    const long np = static_cast<long>(pairs.size());
    auto examine = [&](long p) {
      auto x = to_monomial(monos[pairs[p].first], vars), y = to_monomial(monos[pairs[p].second], vars);
      PrimitiveCandidate c{std::max(x, y), std::min(x, y), static_cast<unsigned>(d), true, false};
      c.certified_primitive = is_primitive(c, oracle);
      keep[p] = c.certified_primitive;
      cands[p] = std::move(c);
    };
    if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (long p = 0; p < np; ++p) examine(p);
    } else {
      for (long p = 0; p < np; ++p) examine(p);
    }
    for (long p = 0; p < np; ++p)
      if (keep[p]) res.primitives.push_back(std::move(cands[p]));
  }
  std::sort(res.primitives.begin(), res.primitives.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.plus, a.minus) < std::tie(b.degree, b.plus, b.minus);
  });
  for (const auto& c : res.primitives) res.non_squarefree_found |= !c.squarefree();
  return res;
}

}  // namespace polyomino
