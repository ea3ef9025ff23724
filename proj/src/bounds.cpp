#include "cubecolor/bounds.hpp"

#include <algorithm>
#include <bit>

namespace cubecolor {

std::uint64_t packing_lower_bound(unsigned n, unsigned /*k*/, std::uint64_t A) {
  if (A < 1) throw std::invalid_argument("code size must be positive");
  if (n > 63) throw std::invalid_argument("dimension too large");
  const std::uint64_t words = std::uint64_t{1} << n;
  return (words + A - 1) / A;
}

std::string to_string(CodeSizeStatus s) {
  return s == CodeSizeStatus::exact ? "exact" : "timeout-lower-bound";
}

std::string to_string(BoundSource s) {
  return s == BoundSource::known_table ? "known-table" : "exact-computation";
}

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : blocks_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) {
    blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool any() const {
    return std::any_of(blocks_.begin(), blocks_.end(),
                       [](std::uint64_t b) { return b != 0; });
  }
  /// Lowest set bit; only valid when any().
  std::size_t first() const {
    for (std::size_t b = 0;; ++b)
      if (blocks_[b]) return b * 64 + std::countr_zero(blocks_[b]);
  }
  void and_with(const Bitset& o) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= o.blocks_[b];
  }
  void and_not(const Bitset& o) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= ~o.blocks_[b];
  }

 private:
  std::vector<std::uint64_t> blocks_;
};

// Maximum clique with greedy-colouring bounds (MCQ style). Vertices are the
// words at distance >= d from 0, ascending; adjacency means distance >= d.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Word> vertices, unsigned d, std::uint64_t budget)
      : vertices_(std::move(vertices)), budget_(budget) {
    const auto m = vertices_.size();
    adj_.assign(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (hamming_distance(vertices_[i], vertices_[j]) >= d) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
  }

  void run() {
    Bitset all(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) all.set(i);
    if (vertices_.empty()) return;
    expand(all);
  }

  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<Word> best() const {
    std::vector<Word> out;
    for (auto i : best_) out.push_back(vertices_[i]);
    return out;
  }

 private:
  void expand(Bitset candidates) {
    if (++nodes_ > budget_) {
      timed_out_ = true;
      return;
    }
    // Greedy colouring in ascending order: colour classes are independent
    // sets of the clique graph, so the colour number bounds the clique.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    {
      Bitset uncoloured = candidates;
      std::size_t colour = 0;
      while (uncoloured.any()) {
        ++colour;
        Bitset q = uncoloured;
        while (q.any()) {
          const auto v = q.first();
          q.reset(v);
          q.and_not(adj_[v]);
          uncoloured.reset(v);
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size() || timed_out_) return;
      const auto v = order[i];
      current_.push_back(v);
      Bitset next = candidates;
      next.and_with(adj_[v]);
      if (next.any()) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Word> vertices_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

CodeSizeResult exact_max_code_size(unsigned n, unsigned d,
                                   const CodeSearchOptions& opts) {
  if (n < 1 || n > kMaxExactDimension)
    throw std::invalid_argument("exact code size needs 1 <= n <= 12, got n=" +
                                std::to_string(n));
  if (d < 1) throw std::invalid_argument("minimum distance must be >= 1");

  CodeSizeResult result;
  if (opts.closed_forms) {
    if (d == 1) {
      result.value = space_size(n);
      return result;
    }
    if (d == 2) {
      result.value = space_size(n) / 2;
      return result;
    }
    if (d > n) {
      result.value = 1;
      result.witness = {0};
      return result;
    }
  }

  std::vector<Word> vertices;
  for (Word v = 1; v < space_size(n); ++v)
    if (weight(v) >= d) vertices.push_back(v);
  CliqueSearch search(std::move(vertices), d, opts.node_budget);
  search.run();

  result.witness = {0};
  for (Word v : search.best()) result.witness.push_back(v);
  result.value = result.witness.size();
  result.nodes = search.nodes();
  result.status = search.timed_out() ? CodeSizeStatus::timeout_lower_bound
                                     : CodeSizeStatus::exact;
  return result;
}

ChromaticBound chromatic_lower_bound(unsigned n, unsigned k,
                                     const KnownValueTable& table,
                                     std::uint64_t node_budget) {
  const unsigned d = k + 1;
  const auto from_code_size = [&](std::uint64_t a, BoundSource src,
                                  std::string citation = {}) {
    return ChromaticBound{packing_lower_bound(n, k, a), src, a,
                          std::move(citation)};
  };

  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("dimension n must be in [1, 24]");
  if (d == 1) return from_code_size(space_size(n), BoundSource::exact_computation);
  if (d == 2)
    return from_code_size(space_size(n) / 2, BoundSource::exact_computation);
  if (d > n) return from_code_size(1, BoundSource::exact_computation);

  if (n <= kAlwaysComputeUpTo) {
    const auto r = exact_max_code_size(n, d, {kDefaultNodeBudget, true});
    if (r.status == CodeSizeStatus::exact)
      return from_code_size(r.value, BoundSource::exact_computation);
  }
  if (auto e = table.lookup(n, d))
    return from_code_size(e->value, BoundSource::known_table, e->citation);
  if (n <= kMaxExactDimension) {
    const auto r = exact_max_code_size(n, d, {node_budget, true});
    if (r.status == CodeSizeStatus::exact)
      return from_code_size(r.value, BoundSource::exact_computation);
  }
  throw UnknownCodeSize("A(" + std::to_string(n) + "," + std::to_string(d) +
                        ") is neither in the known-value table nor computable "
                        "within budget");
}

}  // namespace cubecolor
