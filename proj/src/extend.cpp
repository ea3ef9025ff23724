#include "cubecolor/search.hpp"
#include "cubecolor/verifier.hpp"

#include <stdexcept>

namespace cubecolor {

SearchOutcome extend_to_higher_dim(const Coloring& base, ExtendStrategy strategy,
                                   std::optional<std::uint32_t> colors,
                                   const SearchConfig& config) {
  if (!verify_coloring(base).valid)
    throw std::invalid_argument("base coloring is not valid");
  const auto& bp = base.params;
  if (bp.n + 1 > kMaxDimension)
    throw std::invalid_argument("extended dimension exceeds 24");
  const auto base_colors = base.num_classes();
  const auto half = bp.num_words();
  const auto lower = to_assignment(base);

  if (strategy == ExtendStrategy::double_copy) {
    const auto target = 2 * base_colors;
    if (colors && *colors != target)
      throw std::invalid_argument("double strategy needs exactly " +
                                  std::to_string(target) + " colors");
    auto a = Assignment::unassigned(Params::make(bp.n + 1, bp.k, target));
    for (Word x = 0; x < half; ++x) {
      a.color_of[x] = lower.color_of[x];
      a.color_of[half + x] = lower.color_of[x] + base_colors;
    }
    SearchOutcome out;
    out.conflicts = conflict_count(a);
    out.best = std::move(a);
    out.seed_used = config.rng_seed;
    return out;
  }

  if (!colors)
    throw std::invalid_argument("freeze-subcube strategy needs a color count");
  std::uint32_t highest_used = 0;
  for (std::uint32_t i = 0; i < base_colors; ++i)
    if (!base.classes[i].words.empty()) highest_used = i + 1;
  if (*colors < highest_used)
    throw std::invalid_argument("color count " + std::to_string(*colors) +
                                " is below the " + std::to_string(highest_used) +
                                " colors used by the base coloring");

  auto init = Assignment::unassigned(Params::make(bp.n + 1, bp.k, *colors));
  SearchConfig cfg = config;
  cfg.frozen.clear();
  for (Word x = 0; x < half; ++x) {
    init.color_of[x] = lower.color_of[x];
    cfg.frozen.push_back(x);
  }
  return tabu_search(init.params, cfg, init);
}

}  // namespace cubecolor
