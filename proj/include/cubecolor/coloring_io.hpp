#pragma once

#include "cubecolor/coloring.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubecolor {

class ColoringParseError : public std::runtime_error {
 public:
  ColoringParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Plain-text coloring file:
///
///   # optional comment lines
///   n 8
///   k 2
///   classes 13
///   class 9 18 37 ...
///   ...            (exactly `classes` class lines; a bare "class" is empty)
Coloring load_coloring(std::string_view text);

/// Canonical form: header in fixed order, words ascending per class, classes
/// in their given order.
std::string save_coloring(const Coloring& col);

}  // namespace cubecolor
