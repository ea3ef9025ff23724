#include "cubecolor/search.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cubecolor {

std::uint64_t conflict_count(const Assignment& a) {
  const auto masks = neighbor_masks(a.params.n, a.params.k);
  std::uint64_t conflicts = 0;
  for (Word v = 0; v < a.color_of.size(); ++v) {
    if (a.color_of[v] == Assignment::kUnassigned)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is unassigned");
    for (Word m : masks) {
      const Word u = v ^ m;
      if (u > v && a.color_of[u] == a.color_of[v]) ++conflicts;
    }
  }
  return conflicts;
}

namespace {

Coloring finish(const Params& params, const std::vector<std::uint32_t>& color,
                std::uint32_t used) {
  Assignment a{params, color};
  a.params.colors = used;
  return to_coloring(a);
}

}  // namespace

Coloring greedy_color(const Params& params, std::span<const Word> order) {
  const auto size = params.num_words();
  if (order.size() != size)
    throw std::invalid_argument("order must list every vertex once");
  std::vector<bool> seen(size, false);
  for (Word v : order) {
    if (v >= size || seen[v])
      throw std::invalid_argument("order is not a permutation");
    seen[v] = true;
  }

  const auto masks = neighbor_masks(params.n, params.k);
  std::vector<std::uint32_t> color(size, Assignment::kUnassigned);
  std::vector<bool> taken(masks.size() + 2);
  std::uint32_t used = 0;
  for (Word v : order) {
    std::fill(taken.begin(), taken.end(), false);
    for (Word m : masks) taken[color[v ^ m]] = true;
    std::uint32_t c = 1;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c);
  }
  return finish(params, color, used);
}

Coloring greedy_color(const Params& params) {
  std::vector<Word> order(params.num_words());
  std::iota(order.begin(), order.end(), Word{0});
  return greedy_color(params, order);
}

Coloring dsatur_color(const Params& params) {
  const auto size = params.num_words();
  const auto masks = neighbor_masks(params.n, params.k);
  const auto degree = static_cast<std::uint32_t>(masks.size());

  std::vector<std::uint32_t> color(size, Assignment::kUnassigned);
  std::vector<std::vector<bool>> neighbor_colors(size);
  std::vector<std::uint32_t> saturation(size, 0);
  std::vector<std::uint32_t> uncolored_degree(size, degree);

  // Smallest key = highest saturation, then highest uncolored degree, then
  // smallest vertex.
  using Key = std::tuple<std::int64_t, std::int64_t, Word>;
  const auto key = [&](Word v) {
    return Key{-std::int64_t{saturation[v]}, -std::int64_t{uncolored_degree[v]},
               v};
  };
  std::set<Key> queue;
  for (Word v = 0; v < size; ++v) queue.insert(key(v));

  std::uint32_t used = 0;
  while (!queue.empty()) {
    const Word v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());

    const auto& blocked = neighbor_colors[v];
    std::uint32_t c = 1;
    while (c < blocked.size() && blocked[c]) ++c;
    color[v] = c;
    used = std::max(used, c);

    for (Word m : masks) {
      const Word u = v ^ m;
      if (color[u] != Assignment::kUnassigned) continue;
      queue.erase(key(u));
      --uncolored_degree[u];
      auto& seen = neighbor_colors[u];
      if (seen.size() <= c) seen.resize(c + 1, false);
      if (!seen[c]) {
        seen[c] = true;
        ++saturation[u];
      }
      queue.insert(key(u));
    }
  }
  return finish(params, color, used);
}

}  // namespace cubecolor
