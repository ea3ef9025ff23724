#include "cubecolor/search.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace cubecolor {

namespace {

constexpr std::uint32_t kNotListed = std::numeric_limits<std::uint32_t>::max();

struct RunResult {
  std::vector<std::uint32_t> best;  // 1-based colors
  std::uint64_t conflicts = 0;
  std::uint64_t iterations = 0;
  std::uint64_t self_checks = 0;
  bool aborted = false;
};

// One tabu run. Colors are 0-based internally.
class TabuRun {
 public:
  TabuRun(const Params& params, const SearchConfig& config,
          const std::vector<Word>& masks, const std::vector<bool>& frozen)
      : config_(config),
        masks_(masks),
        frozen_(frozen),
        size_(params.num_words()),
        colors_(params.color_count()) {}

  RunResult run(const std::vector<std::uint32_t>& start, std::uint64_t seed,
                const std::atomic<std::uint32_t>* solved_by,
                std::uint32_t run_index) {
    rng_.seed(seed);
    init(start);
    RunResult result;
    best_ = color_;
    best_conflicts_ = conflicts_;

    std::uint64_t iter = 0;
    while (best_conflicts_ > 0 && iter < config_.max_iterations) {
      if (solved_by && (iter & 1023) == 0 &&
          solved_by->load(std::memory_order_relaxed) < run_index) {
        result.aborted = true;
        break;
      }
      step(iter);
      ++iter;
      if (config_.self_check && iter % config_.self_check_interval == 0) {
        self_check();
        ++result.self_checks;
      }
    }

    result.best.resize(size_);
    for (std::size_t v = 0; v < size_; ++v) result.best[v] = best_[v] + 1;
    result.conflicts = best_conflicts_;
    result.iterations = iter;
    return result;
  }

 private:
  std::int64_t& gamma(Word v, std::uint32_t c) { return gamma_[std::size_t{v} * colors_ + c]; }
  std::uint64_t& tabu(Word v, std::uint32_t c) { return tabu_until_[std::size_t{v} * colors_ + c]; }

  void init(const std::vector<std::uint32_t>& start) {
    color_.resize(size_);
    for (std::size_t v = 0; v < size_; ++v) color_[v] = start[v] - 1;
    gamma_.assign(std::size_t{size_} * colors_, 0);
    tabu_until_.assign(std::size_t{size_} * colors_, 0);
    conflicts_ = 0;
    for (Word v = 0; v < size_; ++v)
      for (Word m : masks_) {
        const Word u = v ^ m;
        ++gamma(v, color_[u]);
        if (u > v && color_[u] == color_[v]) ++conflicts_;
      }
    position_.assign(size_, kNotListed);
    listed_.clear();
    for (Word v = 0; v < size_; ++v) refresh(v);
  }

  // Keeps v in the candidate list iff it is movable and in conflict.
  void refresh(Word v) {
    const bool want = !frozen_[v] && gamma(v, color_[v]) > 0;
    const bool have = position_[v] != kNotListed;
    if (want && !have) {
      position_[v] = static_cast<std::uint32_t>(listed_.size());
      listed_.push_back(v);
    } else if (!want && have) {
      const Word last = listed_.back();
      listed_[position_[v]] = last;
      position_[last] = position_[v];
      listed_.pop_back();
      position_[v] = kNotListed;
    }
  }

  void step(std::uint64_t iter) {
    std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
    Word best_v = 0;
    std::uint32_t best_c = 0;
    bool found = false;
    std::uint64_t ties = 0;  // moves seen at the current best delta
    const bool lexicographic = config_.tie_break == TieBreak::lexicographic;
    const auto current = static_cast<std::int64_t>(conflicts_);
    const auto record = static_cast<std::int64_t>(best_conflicts_);

    for (Word v : listed_) {
      const std::uint32_t cur = color_[v];
      const std::int64_t here = gamma(v, cur);
      for (std::uint32_t c = 0; c < colors_; ++c) {
        if (c == cur) continue;
        const std::int64_t delta = gamma(v, c) - here;
        if (tabu(v, c) > iter && current + delta >= record) continue;
        bool take = !found || delta < best_delta;
        if (take) {
          ties = 1;
        } else if (delta == best_delta) {
          take = lexicographic
                     ? (v < best_v || (v == best_v && c < best_c))
                     : std::uniform_int_distribution<std::uint64_t>(0, ties++)(
                           rng_) == 0;
        }
        if (take) {
          found = true;
          best_delta = delta;
          best_v = v;
          best_c = c;
        }
      }
    }
    if (!found) return;  // every move is tabu; wait for tenures to expire

    const std::uint32_t old = color_[best_v];
    color_[best_v] = best_c;
    for (Word m : masks_) {
      const Word u = best_v ^ m;
      --gamma(u, old);
      ++gamma(u, best_c);
      if (color_[u] == old || color_[u] == best_c) refresh(u);
    }
    refresh(best_v);
    conflicts_ = static_cast<std::uint64_t>(current + best_delta);

    const auto tenure =
        config_.tabu_tenure_base +
        static_cast<std::uint64_t>(config_.tabu_tenure_slope *
                                   static_cast<double>(conflicts_));
    tabu(best_v, old) = iter + 1 + tenure;

    if (conflicts_ < best_conflicts_) {
      best_conflicts_ = conflicts_;
      best_ = color_;
    }
  }

  void self_check() const {
    std::uint64_t recount = 0;
    for (Word v = 0; v < size_; ++v)
      for (Word m : masks_) {
        const Word u = v ^ m;
        if (u > v && color_[u] == color_[v]) ++recount;
      }
    if (recount != conflicts_)
      throw std::logic_error("tabu self-check: incremental conflicts " +
                             std::to_string(conflicts_) + " != recount " +
                             std::to_string(recount));
  }

  const SearchConfig& config_;
  const std::vector<Word>& masks_;
  const std::vector<bool>& frozen_;
  const std::uint32_t size_;
  const std::uint32_t colors_;

  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> best_;
  std::vector<std::int64_t> gamma_;  // neighbors of v with color c
  std::vector<std::uint64_t> tabu_until_;
  std::vector<Word> listed_;
  std::vector<std::uint32_t> position_;
  std::uint64_t conflicts_ = 0;
  std::uint64_t best_conflicts_ = 0;
  std::mt19937_64 rng_;
};

std::vector<std::uint32_t> starting_colors(const Params& params,
                                           const std::optional<Assignment>& init,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, params.color_count());
  std::vector<std::uint32_t> start(params.num_words());
  for (std::size_t v = 0; v < start.size(); ++v) {
    const auto given = init ? init->color_of[v] : Assignment::kUnassigned;
    start[v] = given != Assignment::kUnassigned ? given : pick(rng);
  }
  return start;
}

}  // namespace

SearchOutcome tabu_search(const Params& params, const SearchConfig& config,
                          const std::optional<Assignment>& init) {
  const auto colors = params.color_count();
  if (config.tabu_tenure_slope < 0 || !std::isfinite(config.tabu_tenure_slope))
    throw std::invalid_argument("tabu tenure slope must be nonnegative");
  if (config.self_check && config.self_check_interval == 0)
    throw std::invalid_argument("self-check interval must be positive");
  if (init) {
    if (init->params.n != params.n || init->color_of.size() != params.num_words())
      throw std::invalid_argument("initial assignment has wrong dimension");
    for (auto c : init->color_of)
      if (c > colors)
        throw std::invalid_argument("initial assignment uses color " +
                                    std::to_string(c) + " > K");
  }
  std::vector<bool> frozen(params.num_words(), false);
  for (Word v : config.frozen) {
    if (!params.contains(v))
      throw std::invalid_argument("frozen vertex out of range");
    if (!init || init->color_of[v] == Assignment::kUnassigned)
      throw std::invalid_argument("frozen vertex " + std::to_string(v) +
                                  " has no assigned color");
    frozen[v] = true;
  }

  const auto masks = neighbor_masks(params.n, params.k);
  const std::uint32_t runs = config.restarts + 1;
  std::vector<RunResult> results(runs);
  std::atomic<std::uint32_t> solved_by{runs};

  const auto do_run = [&](std::uint32_t r) {
    TabuRun run(params, config, masks, frozen);
    const auto seed = config.rng_seed + r;
    // Initial colors and tie-breaking draw from separate streams.
    results[r] = run.run(starting_colors(params, init, seed),
                         seed ^ 0x9e3779b97f4a7c15ULL, &solved_by, r);
    if (results[r].conflicts == 0 && !results[r].aborted) {
      auto prev = solved_by.load();
      while (r < prev && !solved_by.compare_exchange_weak(prev, r)) {
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, runs));
  if (threads == 1) {
    for (std::uint32_t r = 0; r < runs && solved_by.load() == runs; ++r) do_run(r);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::uint32_t r; (r = next.fetch_add(1)) < runs;) {
          if (solved_by.load() < r) break;
          do_run(r);
        }
      });
  }

  // Min conflicts, then min restart index. Runs that never started or were
  // aborted lost to an earlier zero-conflict run.
  std::uint32_t winner = runs;
  for (std::uint32_t r = 0; r < runs; ++r) {
    if (results[r].best.empty() || results[r].aborted) continue;
    if (winner == runs || results[r].conflicts < results[winner].conflicts)
      winner = r;
    if (results[winner].conflicts == 0) break;
  }

  SearchOutcome out;
  out.best = Assignment{params, std::move(results[winner].best)};
  out.conflicts = results[winner].conflicts;
  out.iterations_used = results[winner].iterations;
  out.restarts_used = winner;
  out.seed_used = config.rng_seed + winner;
  for (const auto& r : results) out.self_checks += r.self_checks;
  return out;
}

}  // namespace cubecolor
