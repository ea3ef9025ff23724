#include "cubecolor/hamming.hpp"

#include <stdexcept>
#include <string>

namespace cubecolor {

Params Params::make(unsigned n, unsigned k,
                    std::optional<std::uint32_t> colors) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("dimension n must be in [1, 24], got " +
                                std::to_string(n));
  if (k > n)
    throw std::invalid_argument("power k must be in [0, n], got " +
                                std::to_string(k));
  if (colors && (*colors < 1 || *colors > space_size(n)))
    throw std::invalid_argument("color count must be in [1, 2^n], got " +
                                std::to_string(*colors));
  return Params{n, k, colors};
}

std::uint32_t Params::color_count() const {
  if (!colors) throw std::invalid_argument("color count K is required");
  return *colors;
}

std::uint64_t ball_size(unsigned n, unsigned r) {
  if (r > n)
    throw std::invalid_argument("radius " + std::to_string(r) +
                                " exceeds dimension " + std::to_string(n));
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, i)
  for (unsigned i = 0; i <= r; ++i) {
    total += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

std::vector<Word> neighbor_masks(unsigned n, unsigned k) {
  std::vector<Word> masks;
  const auto size = space_size(n);
  for (std::uint64_t m = 1; m < size; ++m)
    if (weight(static_cast<Word>(m)) <= k) masks.push_back(static_cast<Word>(m));
  return masks;
}

std::vector<Word> neighbors_within(Word v, const Params& params) {
  if (params.k < 1 || params.k > params.n)
    throw std::invalid_argument("neighbors_within requires 1 <= k <= n");
  if (!params.contains(v))
    throw std::invalid_argument("word out of range");
  std::vector<Word> out;
  for (Word m : neighbor_masks(params.n, params.k)) out.push_back(v ^ m);
  std::sort(out.begin(), out.end());
  return out;
}

Automorphism::Automorphism(unsigned n) : perm_(n) {
  if (n > kMaxDimension) throw std::invalid_argument("dimension too large");
  for (unsigned i = 0; i < n; ++i) perm_[i] = i;
}

Automorphism::Automorphism(std::vector<unsigned> perm, Word translation)
    : perm_(std::move(perm)), translation_(translation) {
  const auto n = perm_.size();
  if (n > kMaxDimension) throw std::invalid_argument("dimension too large");
  std::vector<bool> seen(n, false);
  for (unsigned p : perm_) {
    if (p >= n || seen[p])
      throw std::invalid_argument("malformed permutation");
    seen[p] = true;
  }
  if (translation_ >= space_size(static_cast<unsigned>(n)))
    throw std::invalid_argument("translation out of range");
}

Word Automorphism::apply(Word v) const noexcept {
  Word out = 0;
  for (unsigned i = 0; i < perm_.size(); ++i)
    out |= ((v >> i) & 1u) << perm_[i];
  return out ^ translation_;
}

}  // namespace cubecolor
