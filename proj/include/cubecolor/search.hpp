#pragma once

#include "cubecolor/coloring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cubecolor {

/// Unordered pairs {u, v} with the same color and 1 <= d(u, v) <= k.
/// Throws std::invalid_argument if some vertex is unassigned.
std::uint64_t conflict_count(const Assignment& a);

/// First-fit coloring in the given vertex order. The result uses as many
/// classes as colors were needed (params.colors is ignored and overwritten).
Coloring greedy_color(const Params& params, std::span<const Word> order);

/// First-fit in natural order 0, 1, ..., 2^n - 1.
Coloring greedy_color(const Params& params);

/// DSATUR: repeatedly colors the uncolored vertex with the most distinct
/// neighbor colors, breaking ties by most uncolored neighbors and then by
/// smallest vertex, using the smallest feasible color.
Coloring dsatur_color(const Params& params);

/// How tabu search chooses among equally good moves.
enum class TieBreak {
  random,         // uniform among ties, from the run's seeded RNG
  lexicographic,  // smallest (vertex, color)
};

struct SearchConfig {
  std::uint64_t rng_seed = 1;
  std::uint64_t max_iterations = 1'000'000;
  /// Additional runs after the first; run r uses seed rng_seed + r.
  std::uint32_t restarts = 0;
  std::uint32_t tabu_tenure_base = 7;
  double tabu_tenure_slope = 0.6;
  TieBreak tie_break = TieBreak::random;
  /// Vertices whose colors never change; they must be colored by the init.
  std::vector<Word> frozen;
  /// Worker threads for restarts; the outcome does not depend on it.
  unsigned threads = 1;
  /// Recount conflicts from scratch every self_check_interval iterations and
  /// throw std::logic_error on disagreement with the incremental count.
  bool self_check = false;
  std::uint64_t self_check_interval = 10'000;
};

struct SearchOutcome {
  Assignment best;
  std::uint64_t conflicts = 0;
  /// Iterations run by the winning restart.
  std::uint64_t iterations_used = 0;
  /// Index of the winning restart (0 = first run).
  std::uint32_t restarts_used = 0;
  std::uint64_t seed_used = 0;
  std::uint64_t self_checks = 0;
};

/// Fixed-K tabu search minimizing conflict_count. Each iteration moves one
/// conflicting, non-frozen vertex to the color giving the fewest conflicts;
/// returning a vertex to a color it just left is tabu for
/// base + slope * conflicts iterations unless it yields a new best. Ties are
/// settled per config.tie_break. Stops at zero conflicts or after
/// max_iterations; the best assignment over all restarts wins, earliest
/// restart on ties.
///
/// init may leave non-frozen vertices unassigned; those are drawn uniformly
/// from the run's RNG, as is every vertex when init is absent.
SearchOutcome tabu_search(const Params& params, const SearchConfig& config,
                          const std::optional<Assignment>& init = std::nullopt);

enum class ExtendStrategy { double_copy, freeze_subcube };

/// Colorings of Q_{n+1}^k from a valid coloring of Q_n^k. Vertex (a, x) of
/// Q_{n+1} is the word a * 2^n + x.
///
/// double_copy: (a, x) gets base color of x plus a * K_base; needs
/// colors == 2 * K_base when given.
/// freeze_subcube: (0, x) keeps its base color and is frozen; tabu search
/// colors the other half with `colors` colors.
SearchOutcome extend_to_higher_dim(const Coloring& base, ExtendStrategy strategy,
                                   std::optional<std::uint32_t> colors,
                                   const SearchConfig& config = {});

}  // namespace cubecolor
