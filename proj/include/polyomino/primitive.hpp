#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "polyomino/binomial.hpp"
#include "polyomino/groebner.hpp"
#include "polyomino/orders.hpp"
#include "polyomino/path.hpp"

namespace polyomino {

struct PrimitiveCandidate {
  Monomial plus, minus;  // coprime parts, plus > minus structurally
  unsigned degree = 0;
  bool certified_member = false;
  bool certified_primitive = false;

  bool squarefree() const { return plus.squarefree() && minus.squarefree(); }
  Polynomial binomial() const;
};

// Membership in I_P by normal forms modulo the inner minors, under an order
// for which they have been certified as a Gröbner basis.
class MembershipOracle {
 public:
  // Certifies choose_order(cp); throws Error(not_certified) on failure.
  explicit MembershipOracle(const ClosedPath& cp, const OrderOptions& opts = {});

  const VertexOrder& order() const { return basis_->order(); }
  const RankedBasis& basis() const { return *basis_; }
  const ClosedPath& path() const { return cp_; }

  bool member(const Polynomial& f) const;
  bool member(const Monomial& plus, const Monomial& minus) const;
  RankMonomial normal_form(const Monomial& m) const;

 private:
  ClosedPath cp_;
  std::vector<Polynomial> generators_;
  std::unique_ptr<RankedBasis> basis_;
};

bool membership(const Polynomial& f, const ClosedPath& cp);

// No member m+ - m- with m+ | f+, m- | f-, (m+, m-) != (f+, f-) and m+ != m-.
// Throws Error(not_member) when f itself is not in the ideal.
bool is_primitive(const PrimitiveCandidate& f, const MembershipOracle& oracle);
bool is_primitive(const PrimitiveCandidate& f, const ClosedPath& cp);

struct ScanOptions {
  Execution execution = Execution::parallel;
  // Group monomials by their vertex counts on maximal edge intervals before
  // comparing normal forms; without it every coprime pair is tested.
  bool prune = true;
};

struct ScanResult {
  std::size_t max_degree = 0;
  std::vector<PrimitiveCandidate> primitives;  // sorted by degree, then parts
  std::size_t monomials = 0;                   // enumerated over all degrees
  std::size_t member_pairs = 0;
  bool non_squarefree_found = false;
  // Graver basis = universal Gröbner basis needs a toric ideal, which holds
  // when the path has no zig-zag walk.
  bool toric_hypothesis = false;
};

ScanResult graver_scan(const ClosedPath& cp, std::size_t max_degree, const ScanOptions& opts = {});
ScanResult graver_scan(const MembershipOracle& oracle, std::size_t max_degree, const ScanOptions& opts = {});

// All member binomials of exactly degree d with coprime parts, as pairs
// (plus, minus) with plus > minus.  The unpruned variant decides membership
// by generic polynomial reduction; used as the oracle for the pruning.
std::vector<std::pair<Monomial, Monomial>> member_binomials(const MembershipOracle& oracle, std::size_t d,
                                                            bool prune);

}  // namespace polyomino
