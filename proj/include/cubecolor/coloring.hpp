#pragma once

#include "cubecolor/hamming.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubecolor {

/// A coloring whose shape is broken (word out of range, class count not
/// matching K, repeated word inside one class). Distinct from a coloring that
/// is well-formed but not a proper coloring.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One color class: a binary code of length n, kept sorted ascending.
struct CodeClass {
  unsigned n = 1;
  std::vector<Word> words;

  std::size_t size() const noexcept { return words.size(); }
  bool operator==(const CodeClass&) const = default;
};

/// K color classes for Q_n^k. Class i holds the words of color i + 1.
struct Coloring {
  Params params;
  std::vector<CodeClass> classes;

  /// Sorts each class and checks structure (see check_structure).
  static Coloring from_classes(const Params& params,
                               std::vector<std::vector<Word>> classes);

  std::uint32_t num_classes() const noexcept {
    return static_cast<std::uint32_t>(classes.size());
  }
  bool operator==(const Coloring&) const = default;
};

/// Throws StructuralError if params.colors is missing or differs from the
/// class count, a word is >= 2^n, or a class lists a word twice.
void check_structure(const Coloring& col);

/// Search-time representation: color_of[v] in {1..K}, 0 = unassigned.
struct Assignment {
  static constexpr std::uint32_t kUnassigned = 0;

  Params params;
  std::vector<std::uint32_t> color_of;

  static Assignment unassigned(const Params& params);

  bool fully_assigned() const noexcept;
  bool operator==(const Assignment&) const = default;
};

/// Requires every vertex assigned and colors within 1..K.
Coloring to_coloring(const Assignment& a);

/// Requires the classes to be pairwise disjoint; uncovered words stay
/// unassigned.
Assignment to_assignment(const Coloring& col);

/// Image of every class under the automorphism.
Coloring transform(const Coloring& col, const Automorphism& a);

}  // namespace cubecolor
