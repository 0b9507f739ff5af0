#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyomino/lattice.hpp"
#include "polyomino/vertex_order.hpp"

namespace polyomino {

using Coefficient = boost::multiprecision::cpp_int;

// Monomial in the variables x_v, stored as (vertex, exponent) pairs sorted by
// vertex with no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Point, unsigned>> powers);
  static Monomial variable(Point v) { return Monomial({{v, 1u}}); }
  static Monomial product(std::initializer_list<Point> vars);

  const std::vector<std::pair<Point, unsigned>>& powers() const { return powers_; }
  unsigned degree() const;
  unsigned exponent(Point v) const;
  bool is_one() const { return powers_.empty(); }
  bool squarefree() const;
  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient a / b; throws when b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Point, unsigned>> powers_;
};

// Lexicographic comparison induced by a vertex order.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const VertexOrder& ord);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Monomial& m, Coefficient c = 1);

  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Exactly two terms with coefficients +1 and -1.
  bool is_binomial() const;
  bool is_homogeneous() const;
  Coefficient coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Coefficient& c);

  // Terms ordered from greatest to least under ord.
  std::vector<std::pair<Monomial, Coefficient>> descending(const VertexOrder& ord) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Coefficient> terms_;
};

struct LeadingTerm {
  Monomial monomial;
  Coefficient coefficient;
};

// Throws zero_polynomial for the zero polynomial.
LeadingTerm leading_term(const Polynomial& f, const VertexOrder& ord);

// x_a x_b - x_c x_d for the diagonal corners a, b and anti-diagonal corners c, d.
Polynomial inner_minor(const Interval& I);

// One inner minor per inner interval, in the order of inner_intervals(P).
std::vector<Polynomial> generators(const Polyomino& P);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VertexOrder& ord);

struct ReductionStep {
  std::size_t generator;
  Monomial multiplier;
  Coefficient coefficient;  // p <- scale * p - coefficient * multiplier * G[generator]
  Coefficient scale;
};

struct Reduction {
  Polynomial remainder;
  std::vector<ReductionStep> steps;
};

// Normal form: the greatest reducible term is always reduced first, by the
// first generator in G whose leading monomial divides it.  The remainder is
// a normal form of p up to a nonzero integer factor (the factor is 1 when
// every leading coefficient is a unit).
Reduction reduce_with_trace(const Polynomial& p, const std::vector<Polynomial>& G,
                            const VertexOrder& ord);
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& G, const VertexOrder& ord);

// True when some sequence of leading-term reductions, with any choice of
// divisor at each step, ends in 0.  Exhaustive; intended for small inputs.
bool reduces_to_zero(const Polynomial& p, const std::vector<Polynomial>& G, const VertexOrder& ord);

// "x_(0,0)*x_(1,1) - x_(0,1)*x_(1,0)" with terms in descending order.
std::string render(const Polynomial& p, const VertexOrder& ord);
// Same grammar, terms in descending <1 order.
std::string render(const Polynomial& p);
std::string render(const Monomial& m);
// Throws parse_error.
Polynomial parse_polynomial(std::string_view text);

}  // namespace polyomino
