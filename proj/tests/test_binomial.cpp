#include <random>

#include "doctest.h"
#include "polyomino/binomial.hpp"
#include "support.hpp"

using namespace polyomino;

namespace {

Monomial xs(std::initializer_list<Point> v) { return Monomial::product(v); }

Polynomial binom(std::initializer_list<Point> plus, std::initializer_list<Point> minus) {
  Polynomial p(xs(plus));
  p.add_term(xs(minus), -1);
  return p;
}

VertexOrder random_order(const Polyomino& P, std::mt19937_64& rng) {
  std::vector<Point> v(P.vertices().begin(), P.vertices().end());
  std::shuffle(v.begin(), v.end(), rng);
  return VertexOrder::from_ascending(v);
}

// Rebuild p - remainder from the trace: sum of coefficient * multiplier * G[k],
// with the scale factors folded in step by step.
Polynomial replay(const Polynomial& p, const Reduction& r, const std::vector<Polynomial>& G) {
  Polynomial cur = p;
  for (const auto& s : r.steps) cur = s.scale * cur - s.coefficient * (G[s.generator] * s.multiplier);
  return cur;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  auto a = xs({{0, 0}, {1, 1}});
  auto b = xs({{1, 1}, {2, 0}});
  CHECK(a.degree() == 2);
  CHECK(a.squarefree());
  CHECK((a * b).exponent({1, 1}) == 2);
  CHECK_FALSE((a * b).squarefree());
  CHECK(lcm(a, b) == xs({{0, 0}, {1, 1}, {2, 0}}));
  CHECK((a * b) / b == a);
  CHECK(a.divides(a * b));
  CHECK_FALSE(a.coprime(b));
  CHECK(a.coprime(xs({{3, 3}})));
  CHECK_THROWS(a / b);
  CHECK(Monomial().is_one());
}

TEST_CASE("inner minors and generators") {
  auto f = inner_minor(Interval{{0, 0}, {1, 1}});
  CHECK(f == binom({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
  auto g = inner_minor(Interval{{0, 0}, {2, 1}});
  CHECK(g == binom({{0, 0}, {2, 1}}, {{0, 1}, {2, 0}}));
  CHECK_THROWS(Interval({1, 1}, {0, 0}));

  CHECK(generators(Polyomino::make({cell(0, 0)})).size() == 1);
  CHECK(generators(Polyomino::make(support::block(2, 2))).size() == 9);
  auto ring = support::ring(3, 3);
  auto G = generators(Polyomino::make(ring));
  CHECK(G.size() == support::inner_intervals_oracle(ring).size());
  for (const auto& h : G) {
    CHECK(h.is_binomial());
    CHECK(h.is_homogeneous());
    for (const auto& [m, c] : h.terms()) {
      CHECK(m.degree() == 2);
      CHECK(m.squarefree());
    }
  }
}

TEST_CASE("leading terms") {
  auto P = Polyomino::make({cell(0, 0)});
  auto ord = order_q1(P);
  auto lt = leading_term(inner_minor(Interval{{0, 0}, {1, 1}}), ord);
  CHECK(lt.monomial == xs({{0, 0}, {1, 1}}));
  CHECK(lt.coefficient == 1);
  auto single = leading_term(Polynomial(Monomial::variable({0, 1})), ord);
  CHECK(single.monomial == Monomial::variable({0, 1}));
  CHECK_THROWS(leading_term(Polynomial(), ord));

  // direct lex oracle on random monomials of a random order
  std::mt19937_64 rng(5);
  auto Q = Polyomino::make(support::ring(3, 3));
  std::vector<Point> v(Q.vertices().begin(), Q.vertices().end());
  for (int t = 0; t < 200; ++t) {
    auto o = random_order(Q, rng);
    Monomial m1, m2;
    for (int k = 0; k < 3; ++k) {
      m1 = m1 * Monomial::variable(v[rng() % v.size()]);
      m2 = m2 * Monomial::variable(v[rng() % v.size()]);
    }
    if (m1 == m2) continue;
    auto ranks = [&](const Monomial& m) {
      std::vector<std::size_t> r;
      for (const auto& [p, e] : m.powers())
        for (unsigned k = 0; k < e; ++k) r.push_back(o.rank(p));
      std::sort(r.rbegin(), r.rend());
      return r;
    };
    CHECK((compare(m1, m2, o) == std::strong_ordering::greater) == (ranks(m1) > ranks(m2)));
  }
}

TEST_CASE("S-polynomial of two intervals sharing two corners") {
  // [a,b] = [(0,0),(1,1)] and [alpha,beta] = [(1,0),(2,1)] with alpha = d, gamma = b
  auto P = Polyomino::make({cell(0, 0), cell(1, 0)});
  // an order with b = (1,1) greatest, so in(f_ab) = x_a x_b and in(f_alpha_beta) = -x_b x_delta
  auto ord = VertexOrder::from_ascending({{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 1}});
  auto f = inner_minor(Interval{{0, 0}, {1, 1}});
  auto g = inner_minor(Interval{{1, 0}, {2, 1}});
  CHECK(leading_term(f, ord).monomial == xs({{0, 0}, {1, 1}}));
  CHECK(leading_term(g, ord).monomial == xs({{1, 1}, {2, 0}}));
  CHECK(leading_term(g, ord).coefficient == -1);
  auto S = s_polynomial(f, g, ord);
  // -x_delta x_d x_c + x_a x_beta x_d
  Polynomial expected(xs({{0, 0}, {2, 1}, {1, 0}}));
  expected.add_term(xs({{2, 0}, {1, 0}, {0, 1}}), -1);
  CHECK(S == expected);
  CHECK(reduce(S, generators(P), ord).is_zero());
  CHECK(s_polynomial(f, f, ord).is_zero());
  CHECK(s_polynomial(g, f, ord) == -S);
}

TEST_CASE("reduction") {
  auto P = Polyomino::make(support::ring(3, 3));
  auto G = generators(P);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto ord = random_order(P, rng);
    for (const auto& g : G) CHECK(reduce(g, G, ord).is_zero());
    CHECK(reduce(Polynomial(Monomial::variable({0, 0})), G, ord) ==
          Polynomial(Monomial::variable({0, 0})));
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); j += 3) {
        auto S = s_polynomial(G[i], G[j], ord);
        CHECK(S.is_homogeneous());
        bool shared = !leading_term(G[i], ord).monomial.coprime(leading_term(G[j], ord).monomial);
        if (!S.is_zero()) CHECK(S.terms().begin()->first.degree() == (shared ? 3u : 4u));
        auto r = reduce_with_trace(S, G, ord);
        CHECK(replay(S, r, G) == r.remainder);
        CHECK(reduce(r.remainder, G, ord) == r.remainder);
        if (!r.remainder.is_zero()) {
          // no leading monomial divides a remainder term
          for (const auto& [m, c] : r.remainder.terms())
            for (const auto& g : G) CHECK_FALSE(leading_term(g, ord).monomial.divides(m));
        }
      }
  }
}

TEST_CASE("render and parse") {
  auto f = inner_minor(Interval{{0, 0}, {1, 1}});
  auto text = render(f);
  CHECK(text == "x_(0,0)*x_(1,1) - x_(0,1)*x_(1,0)");
  CHECK(parse_polynomial(text) == f);
  auto P = Polyomino::make(support::ring(3, 3));
  auto ord = order_q1(P);
  for (const auto& g : generators(P)) CHECK(parse_polynomial(render(g, ord)) == g);
  CHECK(parse_polynomial("x_(2,0)^2*x_(1,1) - 3*x_(0,0)^3") ==
        [] {
          Polynomial p(Monomial({{{1, 1}, 1u}, {{2, 0}, 2u}}));
          p.add_term(Monomial({{{0, 0}, 3u}}), -3);
          return p;
        }());
  CHECK_THROWS_AS(parse_polynomial("x_(1,"), Error);
  CHECK_THROWS_AS(parse_polynomial("y_(1,1)"), Error);
}
