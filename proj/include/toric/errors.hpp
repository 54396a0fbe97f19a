#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Bad or inconsistent input: wrong dimensions, degenerate data, violated
// preconditions. CLI maps these to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_error : input_error {
  explicit dimension_error(const std::string& msg) : input_error(msg) {}
};

struct degenerate_input_error : input_error {
  explicit degenerate_input_error(const std::string& msg) : input_error(msg) {}
};

struct rank_error : input_error {
  explicit rank_error(const std::string& msg) : input_error(msg) {}
};

struct saturation_error : input_error {
  explicit saturation_error(const std::string& msg) : input_error(msg) {}
};

struct geometry_error : input_error {
  explicit geometry_error(const std::string& msg) : input_error(msg) {}
};

struct partition_error : input_error {
  explicit partition_error(const std::string& msg) : input_error(msg) {}
};

struct coefficient_error : input_error {
  explicit coefficient_error(const std::string& msg) : input_error(msg) {}
};

struct substitution_error : input_error {
  explicit substitution_error(const std::string& msg) : input_error(msg) {}
};

struct chart_error : input_error {
  explicit chart_error(const std::string& msg) : input_error(msg) {}
};

// A structural theorem or internal invariant failed. This signals a bug or a
// hypothesis violation, not bad user input. CLI maps these to exit code 3.
struct invariant_violation : std::runtime_error {
  explicit invariant_violation(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace toric
