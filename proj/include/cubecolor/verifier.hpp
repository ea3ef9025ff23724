#pragma once

#include "cubecolor/coloring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubecolor {

/// Minimum distance of a code; std::nullopt stands for "infinite" (a code
/// with fewer than two words).
using MinDistance = std::optional<unsigned>;

std::string to_string(const MinDistance& d);

MinDistance min_distance(const CodeClass& c);

struct ClassStats {
  std::uint64_t size = 0;
  MinDistance min_distance;
  /// weight_distribution[w] = number of words of weight w, w in 0..n.
  std::vector<std::uint64_t> weight_distribution;
  /// distance_distribution[d] = number of unordered pairs at distance d,
  /// d in 0..n (entry 0 is always zero).
  std::vector<std::uint64_t> distance_distribution;

  bool operator==(const ClassStats&) const = default;
};

ClassStats class_stats(const CodeClass& c);

enum class ViolationKind { missing_word, duplicate_word, distance_violation };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Word> words;            // witness words
  std::vector<std::uint32_t> classes;  // 1-based class indices involved

  bool operator==(const Violation&) const = default;
};

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;
  std::vector<ClassStats> per_class;
};

/// Checks that the classes partition {0,1}^n and that every class has
/// minimum distance >= k + 1. Throws StructuralError (see check_structure)
/// for malformed input instead of reporting violations.
VerifyReport verify_coloring(const Coloring& col);

/// Invariant of a coloring under coordinate permutations, XOR translations
/// and color relabeling: the sorted multiset of (class size, distance
/// distribution), serialized. Equal colorings up to those maps give equal
/// fingerprints; the converse is not guaranteed.
std::string fingerprint(const Coloring& col);

}  // namespace cubecolor
