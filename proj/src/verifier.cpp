#include "cubecolor/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cubecolor {

std::string to_string(const MinDistance& d) {
  return d ? std::to_string(*d) : std::string("inf");
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::missing_word: return "missing-word";
    case ViolationKind::duplicate_word: return "duplicate-word";
    case ViolationKind::distance_violation: return "distance-violation";
  }
  return "unknown";
}

MinDistance min_distance(const CodeClass& c) {
  MinDistance best;
  const auto& w = c.words;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const unsigned d = hamming_distance(w[i], w[j]);
      if (!best || d < *best) best = d;
    }
  return best;
}

ClassStats class_stats(const CodeClass& c) {
  ClassStats s;
  s.size = c.words.size();
  s.weight_distribution.assign(c.n + 1, 0);
  s.distance_distribution.assign(c.n + 1, 0);
  const auto& w = c.words;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++s.weight_distribution[weight(w[i])];
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const unsigned d = hamming_distance(w[i], w[j]);
      ++s.distance_distribution[d];
      if (!s.min_distance || d < *s.min_distance) s.min_distance = d;
    }
  }
  return s;
}

VerifyReport verify_coloring(const Coloring& col) {
  check_structure(col);
  const auto& params = col.params;
  VerifyReport report;

  // first_class[v] = 1-based index of the first class containing v.
  std::vector<std::uint32_t> first_class(params.num_words(), 0);
  for (std::size_t i = 0; i < col.classes.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i + 1);
    for (Word v : col.classes[i].words) {
      if (first_class[v] != 0)
        report.violations.push_back(
            {ViolationKind::duplicate_word, {v}, {first_class[v], idx}});
      else
        first_class[v] = idx;
    }
  }
  for (Word v = 0; v < first_class.size(); ++v)
    if (first_class[v] == 0)
      report.violations.push_back({ViolationKind::missing_word, {v}, {}});

  for (std::size_t i = 0; i < col.classes.size(); ++i) {
    const auto& w = col.classes[i].words;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b)
        if (hamming_distance(w[a], w[b]) <= params.k)
          report.violations.push_back({ViolationKind::distance_violation,
                                       {w[a], w[b]},
                                       {static_cast<std::uint32_t>(i + 1)}});
    report.per_class.push_back(class_stats(col.classes[i]));
  }

  report.valid = report.violations.empty();
  return report;
}

std::string fingerprint(const Coloring& col) {
  check_structure(col);
  using Key = std::tuple<std::uint64_t, std::vector<std::uint64_t>>;
  std::vector<Key> keys;
  keys.reserve(col.classes.size());
  for (const auto& cls : col.classes) {
    auto s = class_stats(cls);
    keys.emplace_back(s.size, std::move(s.distance_distribution));
  }
  std::sort(keys.begin(), keys.end());

  std::ostringstream out;
  out << "fp1 n=" << col.params.n << " k=" << col.params.k;
  for (const auto& [size, dist] : keys) {
    out << ';' << size << ':';
    for (std::size_t d = 1; d < dist.size(); ++d)
      out << (d > 1 ? "," : "") << dist[d];
  }
  return out.str();
}

}  // namespace cubecolor
