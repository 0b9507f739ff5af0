#pragma once

#include <stdexcept>
#include <string>

namespace polyomino {

enum class ErrorKind {
  empty_collection,
  disconnected,
  not_proper,
  not_closed_path,
  zero_polynomial,
  parse_error,
  y_not_subset,
  has_w_pentomino,
  has_rw_heptomino,
  index_out_of_range,
  missing_configurations,
  pattern_mismatch,
  not_certified,
  not_member,
  degree_bound_too_small,
  generation_timeout,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyomino
