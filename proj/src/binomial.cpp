#include "polyomino/binomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace polyomino {

Monomial::Monomial(std::vector<std::pair<Point, unsigned>> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [v, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v)
      powers_.back().second += e;
    else
      powers_.emplace_back(v, e);
  }
}

Monomial Monomial::product(std::initializer_list<Point> vars) {
  std::vector<std::pair<Point, unsigned>> p;
  for (auto v : vars) p.emplace_back(v, 1u);
  return Monomial(std::move(p));
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& pe : powers_) d += pe.second;
  return d;
}

unsigned Monomial::exponent(Point v) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), std::pair{v, 0u});
  return it != powers_.end() && it->first == v ? it->second : 0u;
}

bool Monomial::squarefree() const {
  return std::all_of(powers_.begin(), powers_.end(), [](const auto& pe) { return pe.second == 1; });
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [v, e] : powers_)
    if (m.exponent(v) < e) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (const auto& pe : powers_)
    if (m.exponent(pe.first) > 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  auto p = a.powers_;
  p.insert(p.end(), b.powers_.begin(), b.powers_.end());
  return Monomial(std::move(p));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a))
    throw Error(ErrorKind::zero_polynomial, render(b) + " does not divide " + render(a));
  std::vector<std::pair<Point, unsigned>> p;
  for (const auto& [v, e] : a.powers_) p.emplace_back(v, e - b.exponent(v));
  return Monomial(std::move(p));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Point, unsigned>> p;
  for (const auto& [v, e] : a.powers_) p.emplace_back(v, std::max(e, b.exponent(v)));
  for (const auto& [v, e] : b.powers_)
    if (a.exponent(v) == 0) p.emplace_back(v, e);
  return Monomial(std::move(p));
}

namespace {

std::vector<std::size_t> descending_ranks(const Monomial& m, const VertexOrder& ord) {
  std::vector<std::size_t> r;
  for (const auto& [v, e] : m.powers()) r.insert(r.end(), e, ord.rank(v));
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, const VertexOrder& ord) {
  auto ra = descending_ranks(a, ord), rb = descending_ranks(b, ord);
  return std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
}

Polynomial::Polynomial(const Monomial& m, Coefficient c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

bool Polynomial::is_binomial() const {
  if (terms_.size() != 2) return false;
  auto it = terms_.begin();
  const auto& c1 = it->second;
  const auto& c2 = std::next(it)->second;
  return (c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Monomial, Coefficient>> Polynomial::descending(const VertexOrder& ord) const {
  std::vector<std::pair<std::vector<std::size_t>, const std::pair<const Monomial, Coefficient>*>> keyed;
  for (const auto& t : terms_) keyed.emplace_back(descending_ranks(t.first, ord), &t);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<std::pair<Monomial, Coefficient>> out;
  for (const auto& k : keyed) out.emplace_back(k.second->first, k.second->second);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  Polynomial r;
  for (const auto& [t, c] : a.terms_) r.terms_.emplace(t * m, c);
  return r;
}

Polynomial operator*(const Coefficient& k, const Polynomial& a) {
  Polynomial r;
  if (k == 0) return r;
  for (const auto& [t, c] : a.terms_) r.terms_.emplace(t, k * c);
  return r;
}

LeadingTerm leading_term(const Polynomial& f, const VertexOrder& ord) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "leading term of the zero polynomial");
  const std::pair<const Monomial, Coefficient>* best = nullptr;
  std::vector<std::size_t> best_key;
  for (const auto& t : f.terms()) {
    auto key = descending_ranks(t.first, ord);
    if (!best || key > best_key) {
      best = &t;
      best_key = std::move(key);
    }
  }
  return {best->first, best->second};
}

Polynomial inner_minor(const Interval& I) {
  auto c = interval_corners(I);
  Polynomial f(Monomial::product({c.diagonal.first, c.diagonal.second}), 1);
  f.add_term(Monomial::product({c.anti_diagonal.first, c.anti_diagonal.second}), -1);
  return f;
}

std::vector<Polynomial> generators(const Polyomino& P) {
  std::vector<Polynomial> G;
  for (const auto& I : inner_intervals(P)) G.push_back(inner_minor(I));
  return G;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VertexOrder& ord) {
  auto lf = leading_term(f, ord);
  auto lg = leading_term(g, ord);
  Monomial l = lcm(lf.monomial, lg.monomial);
  Coefficient k = boost::multiprecision::lcm(lf.coefficient, lg.coefficient);
  if (k < 0) k = -k;
  return (Coefficient(k / lf.coefficient) * (f * (l / lf.monomial))) -
         (Coefficient(k / lg.coefficient) * (g * (l / lg.monomial)));
}

namespace {

// Greatest term of p divisible by some leading monomial, with the first such
// generator index.
std::optional<std::pair<std::pair<Monomial, Coefficient>, std::size_t>> reducible_term(
    const Polynomial& p, const std::vector<LeadingTerm>& leads, const VertexOrder& ord) {
  for (const auto& t : p.descending(ord))
    for (std::size_t k = 0; k < leads.size(); ++k)
      if (leads[k].monomial.divides(t.first)) return std::pair{t, k};
  return std::nullopt;
}

Polynomial reduction_step(const Polynomial& p, const Monomial& m, const Coefficient& c,
                          const Polynomial& g, const LeadingTerm& lg, ReductionStep* step) {
  Coefficient scale = 1;
  Coefficient q;
  if (c % lg.coefficient == 0) {
    q = c / lg.coefficient;
  } else {
    Coefficient d = boost::multiprecision::gcd(c, lg.coefficient);
    scale = lg.coefficient / d;
    q = c / d;
  }
  Monomial mult = m / lg.monomial;
  if (step) {
    step->multiplier = mult;
    step->coefficient = q;
    step->scale = scale;
  }
  return (scale * p) - (q * (g * mult));
}

}  // namespace

Reduction reduce_with_trace(const Polynomial& p, const std::vector<Polynomial>& G,
                            const VertexOrder& ord) {
  std::vector<LeadingTerm> leads;
  leads.reserve(G.size());
  for (const auto& g : G) leads.push_back(leading_term(g, ord));
  Reduction r{p, {}};
  while (auto hit = reducible_term(r.remainder, leads, ord)) {
    const auto& [term, k] = *hit;
    ReductionStep step;
    step.generator = k;
    r.remainder = reduction_step(r.remainder, term.first, term.second, G[k], leads[k], &step);
    r.steps.push_back(std::move(step));
  }
  return r;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& G, const VertexOrder& ord) {
  return reduce_with_trace(p, G, ord).remainder;
}

namespace {

Polynomial sign_normalized(const Polynomial& p, const VertexOrder& ord) {
  if (p.is_zero()) return p;
  return leading_term(p, ord).coefficient < 0 ? -p : p;
}

struct StructuralLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return a.terms() < b.terms(); }
};

bool search_zero(const Polynomial& p, const std::vector<Polynomial>& G,
                 const std::vector<LeadingTerm>& leads, const VertexOrder& ord,
                 std::set<Polynomial, StructuralLess>& seen) {
  if (p.is_zero()) return true;
  auto key = sign_normalized(p, ord);
  if (!seen.insert(key).second) return false;
  auto lt = leading_term(p, ord);
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (!leads[k].monomial.divides(lt.monomial)) continue;
    auto next = reduction_step(p, lt.monomial, lt.coefficient, G[k], leads[k], nullptr);
    if (search_zero(next, G, leads, ord, seen)) return true;
  }
  return false;
}

}  // namespace

bool reduces_to_zero(const Polynomial& p, const std::vector<Polynomial>& G, const VertexOrder& ord) {
  std::vector<LeadingTerm> leads;
  for (const auto& g : G) leads.push_back(leading_term(g, ord));
  std::set<Polynomial, StructuralLess> seen;
  return search_zero(p, G, leads, ord, seen);
}

namespace {

std::string render_terms(const std::vector<std::pair<Monomial, Coefficient>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Coefficient a = c < 0 ? Coefficient(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      s += a.str();
      continue;
    }
    if (a != 1) s += a.str() + "*";
    s += render(m);
  }
  return s;
}

}  // namespace

std::string render(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.powers()) {
    if (!s.empty()) s += "*";
    s += "x_(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string render(const Polynomial& p, const VertexOrder& ord) {
  return render_terms(p.descending(ord));
}

std::string render(const Polynomial& p) {
  // variables listed from the greatest under <1, exponents expanded
  auto key = [](const Monomial& m) {
    std::vector<Point> v;
    for (const auto& [x, e] : m.powers()) v.insert(v.end(), e, x);
    std::reverse(v.begin(), v.end());
    return v;
  };
  std::vector<std::pair<Monomial, Coefficient>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return key(a.first) > key(b.first); });
  return render_terms(terms);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [m, c] = term();
      p.add_term(m, sign * c);
      skip();
      if (pos_ == s_.size()) break;
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        fail("expected '+' or '-'");
      ++pos_;
    }
    return p;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse_error,
                "polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string digits() {
    std::string d;
    while (digit()) d += s_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }
  coord_t integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    auto d = digits();
    coord_t v = std::stoll(d);
    return neg ? -v : v;
  }

  std::pair<Monomial, Coefficient> term() {
    skip();
    Coefficient c = 1;
    std::vector<std::pair<Point, unsigned>> powers;
    bool any = false;
    while (true) {
      skip();
      if (digit()) {
        c *= Coefficient(digits());
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        expect('_');
        expect('(');
        coord_t i = integer();
        expect(',');
        coord_t j = integer();
        expect(')');
        unsigned e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = static_cast<unsigned>(std::stoul(digits()));
        }
        powers.emplace_back(Point{i, j}, e);
      } else {
        fail("expected a coefficient or a variable");
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {Monomial(std::move(powers)), c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace polyomino
