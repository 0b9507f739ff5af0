#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyomino/lattice.hpp"
#include "polyomino/path.hpp"

namespace polyomino {

struct CellInput {
  std::vector<Cell> cells;  // distinct, in order of first appearance
  std::vector<std::string> warnings;
  std::string format;  // "cells" or "json"
};

// Plain format: one "i j" per line, '#' starts a comment line.  A document
// whose first meaningful byte is '{' is read as {"cells": [[i, j], ...]}.
// Throws Error(parse_error) naming the line.
CellInput parse_cells(std::string_view text);
CellInput read_cells(const std::string& path);

std::string format_cells(const std::vector<Cell>& cells, std::string_view comment = {});

struct RandomConstraints {
  std::optional<bool> l_configuration;
  std::optional<bool> ladder3;
  std::optional<bool> w_pentomino;
  std::optional<bool> rw_heptomino;
  DetectionOptions detection;
};

bool satisfies(const ClosedPath& cp, const RandomConstraints& c);

// Random closed path with exactly n cells, translated so that the least
// coordinates are 0.  Deterministic in (n, seed, constraints).  Throws
// Error(generation_timeout) when n admits no closed path or the retry
// budget runs out.
std::vector<Cell> random_closed_path(std::size_t n, std::uint64_t seed,
                                     const RandomConstraints& constraints = {},
                                     std::size_t max_checks = 4000);

}  // namespace polyomino
