#pragma once

#include <random>
#include <set>
#include <vector>

#include "polyomino/lattice.hpp"

namespace support {

using namespace polyomino;

// Boundary ring of a w x h rectangle of cells.
inline std::vector<Cell> ring(coord_t w, coord_t h) {
  std::vector<Cell> out;
  for (coord_t x = 0; x < w; ++x)
    for (coord_t y = 0; y < h; ++y)
      if (x == 0 || y == 0 || x == w - 1 || y == h - 1) out.push_back(cell(x, y));
  return out;
}

inline std::vector<Cell> block(coord_t w, coord_t h) {
  std::vector<Cell> out;
  for (coord_t x = 0; x < w; ++x)
    for (coord_t y = 0; y < h; ++y) out.push_back(cell(x, y));
  return out;
}

// Random edge-connected polyomino grown cell by cell.
inline std::vector<Cell> grown(std::size_t n, std::mt19937_64& rng) {
  std::set<Cell> s{cell(0, 0)};
  const Point steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (s.size() < n) {
    auto c = *std::next(s.begin(), static_cast<long>(rng() % s.size()));
    s.insert(Cell{c.lower_left + steps[rng() % 4]});
  }
  return {s.begin(), s.end()};
}

// Brute force over all pairs of vertices of the bounding box.
inline std::vector<Interval> inner_intervals_oracle(const std::vector<Cell>& cells) {
  std::set<Cell> s(cells.begin(), cells.end());
  coord_t x0 = cells[0].lower_left.i, x1 = x0, y0 = cells[0].lower_left.j, y1 = y0;
  for (const auto& c : cells) {
    x0 = std::min(x0, c.lower_left.i);
    x1 = std::max(x1, c.lower_left.i + 1);
    y0 = std::min(y0, c.lower_left.j);
    y1 = std::max(y1, c.lower_left.j + 1);
  }
  std::vector<Interval> out;
  for (coord_t a = x0; a <= x1; ++a)
    for (coord_t b = y0; b <= y1; ++b)
      for (coord_t c = a + 1; c <= x1; ++c)
        for (coord_t d = b + 1; d <= y1; ++d) {
          bool inner = true;
          for (coord_t x = a; x < c && inner; ++x)
            for (coord_t y = b; y < d && inner; ++y) inner = s.count(cell(x, y)) > 0;
          if (inner) out.push_back(Interval{{a, b}, {c, d}});
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace support
