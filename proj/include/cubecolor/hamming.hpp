#pragma once

// Binary Hamming space {0,1}^n: words, distances, balls and the
// distance-preserving maps generated by coordinate permutations and
// XOR translations.
//
// Bit i of a Word (value 2^i) is coordinate i.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace cubecolor {

using Word = std::uint32_t;

inline constexpr unsigned kMaxDimension = 24;

inline constexpr unsigned hamming_distance(Word u, Word v) noexcept {
  return static_cast<unsigned>(std::popcount(u ^ v));
}

inline constexpr unsigned weight(Word v) noexcept {
  return static_cast<unsigned>(std::popcount(v));
}

/// Number of words in {0,1}^n, i.e. 2^n.
inline constexpr std::uint64_t space_size(unsigned n) noexcept {
  return std::uint64_t{1} << n;
}

/// Graph parameters of Q_n^k plus an optional color budget.
struct Params {
  unsigned n = 1;
  unsigned k = 0;
  std::optional<std::uint32_t> colors;

  /// Throws std::invalid_argument unless 1 <= n <= 24, k <= n and
  /// 1 <= colors <= 2^n.
  static Params make(unsigned n, unsigned k,
                     std::optional<std::uint32_t> colors = std::nullopt);

  std::uint32_t num_words() const noexcept {
    return static_cast<std::uint32_t>(space_size(n));
  }
  bool contains(Word v) const noexcept { return v < space_size(n); }

  /// The color budget; throws std::invalid_argument when absent.
  std::uint32_t color_count() const;

  bool operator==(const Params&) const = default;
};

/// sum_{i=0..r} C(n, i). Throws std::invalid_argument if r > n.
std::uint64_t ball_size(unsigned n, unsigned r);

/// All nonzero masks of weight <= k over n coordinates, in ascending order.
/// v ^ mask enumerates the neighbors of v in Q_n^k.
std::vector<Word> neighbor_masks(unsigned n, unsigned k);

/// Words u != v with d(u, v) <= k, ascending. Requires 1 <= k <= n.
std::vector<Word> neighbors_within(Word v, const Params& params);

class Automorphism {
 public:
  /// Identity on {0,1}^n.
  explicit Automorphism(unsigned n);

  /// Throws std::invalid_argument if perm is not a bijection on {0..n-1}
  /// or translation does not fit in n bits.
  Automorphism(std::vector<unsigned> perm, Word translation);

  /// Uniformly random coordinate permutation and translation.
  template <class Rng>
  static Automorphism random(unsigned n, Rng& rng) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<Word> pick(
        0, static_cast<Word>(space_size(n) - 1));
    return Automorphism(std::move(perm), pick(rng));
  }

  unsigned dimension() const noexcept {
    return static_cast<unsigned>(perm_.size());
  }
  const std::vector<unsigned>& permutation() const noexcept { return perm_; }
  Word translation() const noexcept { return translation_; }

  /// Bit i of v moves to bit perm[i]; the result is then XORed with the
  /// translation.
  Word apply(Word v) const noexcept;

 private:
  std::vector<unsigned> perm_;
  Word translation_ = 0;
};

inline Word apply_automorphism(Word v, const Automorphism& a) noexcept {
  return a.apply(v);
}

}  // namespace cubecolor
