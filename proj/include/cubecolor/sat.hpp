#pragma once

#include "cubecolor/coloring.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubecolor {

using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws std::invalid_argument on empty clauses, zero or out-of-range
  /// literals, or a clause holding x and -x.
  void validate() const;
  bool operator==(const CnfFormula&) const = default;
};

enum class Symmetry { none, fix_vertex_0, fix_clique };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view name);

struct EncodeOptions {
  bool at_most_one = false;
  Symmetry symmetry = Symmetry::none;
};

inline constexpr unsigned kMaxEncodeDimension = 16;

/// Variable meaning "vertex v has color c", c in 1..K.
inline constexpr Literal color_var(Word v, std::uint32_t c, std::uint32_t K) {
  return static_cast<Literal>(v * K + c);
}

/// Words of the radius floor(k/2) ball around 0, ascending. They are
/// pairwise within distance k, hence a clique of Q_n^k.
std::vector<Word> symmetry_clique(const Params& params);

/// CNF for "Q_n^k has a proper K-coloring". Clause order: at-least-one per
/// vertex; for each pair u < v with d(u,v) <= k and each color c,
/// (-var(u,c) -var(v,c)); optional pairwise at-most-one per vertex; then
/// symmetry unit clauses.
CnfFormula encode_coloring_cnf(const Params& params, const EncodeOptions& opts = {});

/// "c n=.. k=.. K=.. ..." lines describing how a formula was built.
std::vector<std::string> encoding_comments(const Params& params,
                                           const EncodeOptions& opts);

std::string write_dimacs(const CnfFormula& f,
                         const std::vector<std::string>& comments = {});

class DimacsParseError : public std::runtime_error {
 public:
  DimacsParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

CnfFormula parse_dimacs(std::string_view text);

/// Truth values indexed by variable; entry 0 is unused.
using TruthAssignment = std::vector<bool>;

/// Reads solver output: signed integers terminated by 0, with optional "v "
/// prefixes; "c" and "s" lines are skipped. Variables never mentioned are
/// false.
TruthAssignment parse_model(std::string_view text, std::uint32_t num_vars);

/// color(v) = smallest c with var(v, c) true. Throws std::invalid_argument
/// when some vertex has no true color variable.
Coloring decode_model(const TruthAssignment& model, const Params& params);

/// The model setting exactly var(v, color(v)).
TruthAssignment canonical_model(const Assignment& a);

bool evaluate(const CnfFormula& f, const TruthAssignment& assignment);

}  // namespace cubecolor
