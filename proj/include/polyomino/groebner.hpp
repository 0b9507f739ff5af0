#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyomino/binomial.hpp"
#include "polyomino/lattice.hpp"
#include "polyomino/vertex_order.hpp"

namespace polyomino {

// Monomial over vertex ranks, as a multiset sorted in decreasing order.
// Comparing two of these with std::lexicographical_compare is exactly the
// induced lex order.
using RankMonomial = std::vector<std::uint32_t>;

// Inner minors of a fixed vertex order, with leading monomials precomputed
// and indexed by their variable pair.  Shared read-only between threads.
class RankedBasis {
 public:
  RankedBasis(const Polyomino& P, const VertexOrder& ord);
  RankedBasis(const Polyomino& P, std::vector<Interval> intervals, const VertexOrder& ord);

  std::size_t size() const { return intervals_.size(); }
  const Interval& interval(std::size_t k) const { return intervals_[k]; }
  const RankMonomial& lead(std::size_t k) const { return lead_[k]; }
  const RankMonomial& trail(std::size_t k) const { return trail_[k]; }
  // True when the diagonal product x_a x_b leads.
  bool diagonal_leads(std::size_t k) const { return diagonal_leads_[k]; }
  const VertexOrder& order() const { return ord_; }

  bool coprime(std::size_t x, std::size_t y) const;

  // Least generator index whose leading monomial divides m.
  std::optional<std::size_t> first_divisor(const RankMonomial& m) const;
  // Every generator whose leading monomial divides m.
  std::vector<std::size_t> divisors(const RankMonomial& m) const;

  // Normal form of a single monomial; stays a monomial since every
  // generator is a binomial.
  RankMonomial normal_form(RankMonomial m) const;

  struct Outcome {
    bool zero = false;
    RankMonomial plus, minus;  // remainder plus - minus when nonzero
  };
  // Deterministic reduction of the S-polynomial of generators x and y.
  Outcome reduce_s_pair(std::size_t x, std::size_t y) const;
  // Exhaustive search over divisor choices for leading-term reductions.
  bool s_pair_reduces_to_zero(std::size_t x, std::size_t y) const;

  RankMonomial to_rank(const Monomial& m) const;
  Monomial to_monomial(const RankMonomial& m) const;
  Polynomial to_polynomial(const RankMonomial& plus, const RankMonomial& minus) const;
  // Pairs of generators whose leading monomials share a variable, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs() const;

 private:
  void build(const Polyomino& P);

  VertexOrder ord_;
  std::vector<Interval> intervals_;
  std::vector<RankMonomial> lead_, trail_;
  std::vector<bool> diagonal_leads_;
  std::unordered_map<std::uint64_t, std::size_t> by_lead_;
  std::vector<std::vector<std::size_t>> leads_at_;  // generators whose lead uses a rank
};

struct PairFailure {
  std::size_t first_index = 0;  // generator indices
  std::size_t second_index = 0;
  Interval first;
  Interval second;
  Polynomial normal_form;
};

struct GBReport {
  std::size_t generators = 0;
  std::size_t total_pairs = 0;
  std::size_t coprime_skips = 0;
  std::size_t reduced_pairs = 0;
  std::vector<PairFailure> failures;  // sorted by generator indices
  bool is_groebner = false;
  bool is_reduced = false;
};

enum class Execution { serial, parallel };

// Restricts the sweep to pairs for which the filter returns true; pairs
// outside it count neither as reduced nor as skipped.
using PairFilter = std::function<bool(const Interval&, const Interval&)>;

struct CheckOptions {
  Execution execution = Execution::parallel;
  PairFilter filter;
  // Stop after this many failures (0 = full census).
  std::size_t max_failures = 0;
};

GBReport buchberger_check(const Polyomino& P, const VertexOrder& ord, const CheckOptions& opts = {});

// Straightforward implementation on general polynomials: every unordered
// pair, product criterion, then reduce().  Used as a reference.
GBReport buchberger_check(const std::vector<Polynomial>& G, const VertexOrder& ord);

bool coprime_criterion(const Polynomial& f, const Polynomial& g, const VertexOrder& ord);

struct InitialIdeal {
  std::vector<Monomial> generators;  // minimal, sorted
  bool certified = false;
};

InitialIdeal initial_ideal(const Polyomino& P, const VertexOrder& ord);
bool is_squarefree(const std::vector<Monomial>& monomials);

// Relative position of two inner intervals, following the corner casework
// for S-pairs of inner minors.
enum class OverlapPattern {
  containment,       // identical intervals
  disjoint_corners,  // no common corner: leading terms are coprime
  two_shared,        // two common corners: reduces for every order
  crossing,          // common corner b = beta, gamma strictly inside the top side
  side_offset,       // gamma = b, alpha strictly inside the right side
  stacked_offset,    // alpha = c, b strictly between alpha and delta
  nested,            // gamma = c, delta in the open interior of [a, b]
  diagonal_touch,    // alpha = b
  other,
};

std::string_view to_string(OverlapPattern p);

// Named vertices of an overlap in the coordinates of the input.  The first
// interval is [a, b] with anti-diagonal corners c, d; the second is
// [alpha, beta] with gamma, delta.  Which input interval plays [a, b] is
// recorded in `swapped`.
struct OverlapConfiguration {
  Interval first, second;  // as given
  OverlapPattern pattern = OverlapPattern::other;
  int symmetry = 0;  // 0..3 rotations, 4..7 rotations after a reflection
  bool swapped = false;
  Point a, b, c, d, alpha, beta, gamma, delta;
  std::optional<Point> h, r;
};

OverlapConfiguration classify_overlap(const Interval& I1, const Interval& I2);

bool is_single_corner_pattern(OverlapPattern p);

// Evaluates the four alternative conditions for the single-corner patterns.
// Throws pattern_mismatch for other patterns.
bool lemma_predicate(const Polyomino& P, const OverlapConfiguration& cfg, const VertexOrder& ord);

// Which of the four conditions hold (bit k set for condition k+1).
unsigned lemma_conditions(const Polyomino& P, const OverlapConfiguration& cfg,
                          const VertexOrder& ord);

}  // namespace polyomino
