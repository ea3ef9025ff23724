#pragma once

#include "cubecolor/hamming.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubecolor {

/// ceil(2^n / A): colors needed when every class is a code of size <= A.
/// The k argument only documents which graph the bound is for.
std::uint64_t packing_lower_bound(unsigned n, unsigned k, std::uint64_t A);

enum class CodeSizeStatus { exact, timeout_lower_bound };

std::string to_string(CodeSizeStatus s);

struct CodeSizeResult {
  std::uint64_t value = 0;
  CodeSizeStatus status = CodeSizeStatus::exact;
  std::uint64_t nodes = 0;
  /// A code attaining value, when one was constructed by search.
  std::vector<Word> witness;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr unsigned kMaxExactDimension = 12;

struct CodeSearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// d = 1, d = 2 and d > n are answered in closed form unless disabled.
  bool closed_forms = true;
};

/// A(n, d): largest binary code of length n with minimum distance >= d, by
/// branch-and-bound maximum clique search on the "distance >= d" graph with
/// word 0 fixed in the code. Throws std::invalid_argument for n > 12, n = 0
/// or d = 0.
CodeSizeResult exact_max_code_size(unsigned n, unsigned d,
                                   const CodeSearchOptions& opts = {});

class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::size_t line, const std::string& what)
      : std::runtime_error("known-value table line " + std::to_string(line) +
                           ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Known values of A(n, d) with citations. Text form: one entry per line,
/// "n d value citation...", '#' starts a comment line.
class KnownValueTable {
 public:
  struct Entry {
    std::uint64_t value = 0;
    std::string citation;
  };

  static KnownValueTable parse(std::string_view text);
  /// The table compiled into the library from data/known_values.txt.
  static const KnownValueTable& builtin();

  std::optional<Entry> lookup(unsigned n, unsigned d) const;
  const std::map<std::pair<unsigned, unsigned>, Entry>& entries() const {
    return entries_;
  }
  std::string version() const { return version_; }

 private:
  std::map<std::pair<unsigned, unsigned>, Entry> entries_;
  std::string version_;
};

std::string_view embedded_known_values_text();

enum class BoundSource { known_table, exact_computation };

std::string to_string(BoundSource s);

struct ChromaticBound {
  std::uint64_t bound = 0;
  BoundSource source = BoundSource::exact_computation;
  std::uint64_t code_size = 0;  // A(n, k+1) used
  std::string citation;         // set for known_table
};

class UnknownCodeSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions up to this are always computed exactly rather than looked up.
inline constexpr unsigned kAlwaysComputeUpTo = 6;

/// Packing bound with A = A(n, k+1). Resolution order: closed forms and
/// n <= 6 by exact computation, then the table, then a budgeted exact
/// search. Throws UnknownCodeSize if none of them settles A(n, k+1).
ChromaticBound chromatic_lower_bound(
    unsigned n, unsigned k,
    const KnownValueTable& table = KnownValueTable::builtin(),
    std::uint64_t node_budget = 10'000'000);

}  // namespace cubecolor
