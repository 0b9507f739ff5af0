#include "polyomino/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace polyomino {

namespace {

CellInput collect(const std::vector<std::pair<Cell, std::size_t>>& raw, std::string format) {
  CellInput in;
  in.format = std::move(format);
  std::set<Cell> seen;
  for (const auto& [c, line] : raw) {
    if (seen.insert(c).second) {
      in.cells.push_back(c);
    } else {
      std::ostringstream w;
      w << "duplicate cell " << c.lower_left.i << " " << c.lower_left.j << " on line " << line
        << " ignored";
      in.warnings.push_back(w.str());
    }
  }
  if (in.cells.empty()) throw Error(ErrorKind::parse_error, "no cells in input");
  return in;
}

coord_t to_coord(const nlohmann::json& v, std::size_t entry) {
  if (!v.is_number_integer())
    throw Error(ErrorKind::parse_error, "cell " + std::to_string(entry) + ": coordinates must be integers");
  return v.get<coord_t>();
}

CellInput parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw Error(ErrorKind::parse_error, "JSON input needs a \"cells\" array");
  std::vector<std::pair<Cell, std::size_t>> raw;
  std::size_t k = 0;
  for (const auto& e : doc["cells"]) {
    ++k;
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::parse_error, "cell " + std::to_string(k) + ": expected [i, j]");
    raw.emplace_back(cell(to_coord(e[0], k), to_coord(e[1], k)), k);
  }
  return collect(raw, "json");
}

}  // namespace

CellInput parse_cells(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<Cell, std::size_t>> raw;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (first && line[pos] == '{') return parse_json(text);
    first = false;
    std::istringstream ls(line);
    long long i = 0, j = 0;
    std::string rest;
    if (!(ls >> i >> j) || (ls >> rest))
      throw Error(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": expected \"i j\"");
    raw.emplace_back(cell(static_cast<coord_t>(i), static_cast<coord_t>(j)), lineno);
  }
  return collect(raw, "cells");
}

CellInput read_cells(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_cells(buf.str());
}

std::string format_cells(const std::vector<Cell>& cells, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const auto& c : cells) out << c.lower_left.i << " " << c.lower_left.j << "\n";
  return out.str();
}

bool satisfies(const ClosedPath& cp, const RandomConstraints& c) {
  auto check = [](const std::optional<bool>& want, auto&& has) { return !want || *want == has(); };
  return check(c.w_pentomino,
               [&] { return !find_configurations(cp, ConfigKind::w_pentomino, c.detection).empty(); }) &&
         check(c.rw_heptomino,
               [&] { return !find_configurations(cp, ConfigKind::rw_heptomino, c.detection).empty(); }) &&
         check(c.l_configuration, [&] { return !find_l_configurations(cp).empty(); }) &&
         check(c.ladder3, [&] { return !find_ladders(cp, 3).empty(); });
}

namespace {

class PathChain {
 public:
  PathChain(std::size_t target, std::mt19937_64& rng) : target_(target), rng_(rng) {
    // start from a rectangle ring of perimeter at most the target
    std::vector<std::pair<coord_t, coord_t>> sizes;
    for (coord_t w = 3; 2 * w + 2 <= static_cast<coord_t>(target); ++w)
      for (coord_t h = 3; 2 * (w + h) - 4 <= static_cast<coord_t>(target); ++h) sizes.emplace_back(w, h);
    auto [w, h] = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng_)];
    std::vector<Cell> ring;
    for (coord_t x = 0; x < w; ++x)
      for (coord_t y = 0; y < h; ++y)
        if (x == 0 || y == 0 || x == w - 1 || y == h - 1) ring.push_back(cell(x, y));
    seq_ = as_closed_path(Polyomino::make(ring)).sequence();
  }

  std::size_t size() const { return seq_.size(); }
  const std::vector<Cell>& sequence() const { return seq_; }

  void step() {
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0: flip(); break;
      case 1: bump_out(); break;
      default: bump_in(); break;
    }
  }

 private:
  const Cell& at(long k) const {
    const long n = static_cast<long>(seq_.size());
    return seq_[static_cast<std::size_t>(((k % n) + n) % n)];
  }
  long pick() { return std::uniform_int_distribution<long>(0, static_cast<long>(seq_.size()) - 1)(rng_); }
  static Point delta(const Cell& a, const Cell& b) { return b.lower_left - a.lower_left; }

  void flip() {
    long k = pick();
    Point u = delta(at(k), at(k - 1)), v = delta(at(k), at(k + 1));
    if (u.i * v.i + u.j * v.j != 0) return;
    std::set<Cell> s(seq_.begin(), seq_.end());
    s.erase(at(k));
    if (!s.insert(Cell{at(k).lower_left + u + v}).second) return;
    accept(s);
  }

  void bump_out() {
    long k = pick();
    long m = std::uniform_int_distribution<long>(3, 6)(rng_);
    Point d = delta(at(k), at(k + 1));
    for (long t = 1; t + 1 < m; ++t)
      if (delta(at(k + t), at(k + t + 1)) != d) return;
    Point v = std::uniform_int_distribution<int>(0, 1)(rng_) ? Point{-d.j, d.i} : Point{d.j, -d.i};
    std::set<Cell> s(seq_.begin(), seq_.end());
    for (long t = 1; t + 1 < m; ++t) s.erase(at(k + t));
    for (long t = 0; t < m; ++t)
      if (!s.insert(Cell{at(k + t).lower_left + v}).second) return;
    accept(s);
  }

  void bump_in() {
    if (seq_.size() <= 8) return;
    long k = pick();
    long m = std::uniform_int_distribution<long>(3, 6)(rng_);
    Point v = delta(at(k), at(k + 1));
    Point d = delta(at(k + 1), at(k + 2));
    if (v.i * d.i + v.j * d.j != 0) return;
    for (long t = 2; t < m; ++t)
      if (delta(at(k + t), at(k + t + 1)) != d) return;
    if (delta(at(k + m), at(k + m + 1)) != Point{-v.i, -v.j}) return;
    std::set<Cell> s(seq_.begin(), seq_.end());
    for (long t = 1; t <= m; ++t) s.erase(at(k + t));
    Point p = at(k).lower_left;
    for (long t = 1; t + 1 < m; ++t) {
      p = p + d;
      if (!s.insert(Cell{p}).second) return;
    }
    accept(s);
  }

  void accept(const std::set<Cell>& s) {
    if (s.size() > target_) return;
    std::vector<Cell> cells(s.begin(), s.end());
    auto P = Polyomino::collection(cells);
    if (closed_path_violation(P)) return;
    try {
      seq_ = as_closed_path(Polyomino::make(cells)).sequence();
    } catch (const Error&) {
    }
  }

  std::size_t target_;
  std::mt19937_64& rng_;
  std::vector<Cell> seq_;
};

std::vector<Cell> normalized(std::vector<Cell> cells) {
  coord_t mi = cells[0].lower_left.i, mj = cells[0].lower_left.j;
  for (const auto& c : cells) {
    mi = std::min(mi, c.lower_left.i);
    mj = std::min(mj, c.lower_left.j);
  }
  for (auto& c : cells) c = Cell{c.lower_left - Point{mi, mj}};
  return cells;
}

}  // namespace

std::vector<Cell> random_closed_path(std::size_t n, std::uint64_t seed,
                                     const RandomConstraints& constraints, std::size_t max_checks) {
  if (n < 8 || n % 2 != 0)
    throw Error(ErrorKind::generation_timeout,
                "no closed path has " + std::to_string(n) + " cells (the count is even and at least 8)");
  std::mt19937_64 rng(seed);
  PathChain chain(n, rng);
  const std::size_t mix = 20 * n;
  for (std::size_t s = 0; s < mix; ++s) chain.step();
  for (std::size_t checks = 0; checks < max_checks; ++checks) {
    std::size_t guard = 0;
    while (chain.size() != n && guard++ < 50 * n) chain.step();
    if (chain.size() == n) {
      auto cells = normalized(chain.sequence());
      auto cp = as_closed_path(Polyomino::make(cells));
      if (satisfies(cp, constraints)) return cells;
    }
    for (std::size_t s = 0; s < n; ++s) chain.step();
  }
  throw Error(ErrorKind::generation_timeout,
              "no closed path with the requested constraints after " + std::to_string(max_checks) + " draws");
}

}  // namespace polyomino
