#include "cubecolor/sat.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace cubecolor {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::fix_vertex_0: return "fix-vertex-0";
    case Symmetry::fix_clique: return "fix-clique";
  }
  return "none";
}

Symmetry parse_symmetry(std::string_view name) {
  if (name == "none") return Symmetry::none;
  if (name == "fix-vertex-0") return Symmetry::fix_vertex_0;
  if (name == "fix-clique") return Symmetry::fix_clique;
  throw std::invalid_argument("unknown symmetry option: " + std::string(name));
}

void CnfFormula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& cl = clauses[i];
    if (cl.empty())
      throw std::invalid_argument("clause " + std::to_string(i) + " is empty");
    for (Literal lit : cl) {
      if (lit == 0 || static_cast<std::uint32_t>(std::abs(lit)) > num_vars)
        throw std::invalid_argument("clause " + std::to_string(i) +
                                    " has literal out of range");
      if (std::find(cl.begin(), cl.end(), -lit) != cl.end())
        throw std::invalid_argument("clause " + std::to_string(i) +
                                    " is tautological");
    }
  }
}

std::vector<Word> symmetry_clique(const Params& params) {
  std::vector<Word> ball;
  for (Word v = 0; v < params.num_words(); ++v)
    if (weight(v) <= params.k / 2) ball.push_back(v);
  return ball;
}

CnfFormula encode_coloring_cnf(const Params& params, const EncodeOptions& opts) {
  const auto K = params.color_count();
  if (params.n > kMaxEncodeDimension)
    throw std::invalid_argument("encoding supports n <= 16");
  const std::uint64_t vars = std::uint64_t{params.num_words()} * K;
  if (vars > static_cast<std::uint64_t>(std::numeric_limits<Literal>::max()))
    throw std::invalid_argument("too many variables");

  std::vector<Word> clique;
  if (opts.symmetry == Symmetry::fix_clique) {
    clique = symmetry_clique(params);
    if (K < clique.size())
      throw std::invalid_argument("K=" + std::to_string(K) +
                                  " is smaller than the symmetry clique of size " +
                                  std::to_string(clique.size()));
  }

  CnfFormula f;
  f.num_vars = static_cast<std::uint32_t>(vars);
  const auto size = params.num_words();

  for (Word v = 0; v < size; ++v) {
    Clause cl;
    for (std::uint32_t c = 1; c <= K; ++c) cl.push_back(color_var(v, c, K));
    f.clauses.push_back(std::move(cl));
  }
  if (params.k >= 1) {
    for (Word u = 0; u < size; ++u)
      for (Word v : neighbors_within(u, params)) {
        if (v < u) continue;
        for (std::uint32_t c = 1; c <= K; ++c)
          f.clauses.push_back({-color_var(u, c, K), -color_var(v, c, K)});
      }
  }
  if (opts.at_most_one) {
    for (Word v = 0; v < size; ++v)
      for (std::uint32_t a = 1; a <= K; ++a)
        for (std::uint32_t b = a + 1; b <= K; ++b)
          f.clauses.push_back({-color_var(v, a, K), -color_var(v, b, K)});
  }
  if (opts.symmetry == Symmetry::fix_vertex_0) {
    f.clauses.push_back({color_var(0, 1, K)});
  } else if (opts.symmetry == Symmetry::fix_clique) {
    for (std::uint32_t i = 0; i < clique.size(); ++i)
      f.clauses.push_back({color_var(clique[i], i + 1, K)});
  }
  return f;
}

std::vector<std::string> encoding_comments(const Params& params,
                                           const EncodeOptions& opts) {
  return {
      "proper coloring of Q_n^k: n=" + std::to_string(params.n) +
          " k=" + std::to_string(params.k) +
          " K=" + std::to_string(params.color_count()),
      "var(v,c) = v*K + c, v in [0,2^n), c in [1,K]",
      std::string("at-most-one=") + (opts.at_most_one ? "on" : "off") +
          " symmetry=" + to_string(opts.symmetry),
  };
}

std::string write_dimacs(const CnfFormula& f,
                         const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "c " + c + "\n";
  out += "p cnf " + std::to_string(f.num_vars) + " " +
         std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) {
    for (Literal lit : cl) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::uint64_t expected_clauses = 0;
  Clause current;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok) || tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = 0, count = 0;
      std::string v_tok, c_tok;
      if (header || !(fields >> fmt >> v_tok >> c_tok) || fmt != "cnf" ||
          !parse_int(v_tok, vars) || !parse_int(c_tok, count) || vars < 0 ||
          count < 0 || vars > std::numeric_limits<Literal>::max())
        throw DimacsParseError(lineno, "malformed header");
      f.num_vars = static_cast<std::uint32_t>(vars);
      expected_clauses = static_cast<std::uint64_t>(count);
      header = true;
      continue;
    }
    if (!header) throw DimacsParseError(lineno, "clause before header");
    do {
      long long lit = 0;
      if (!parse_int(tok, lit)) throw DimacsParseError(lineno, "bad literal");
      if (lit == 0) {
        if (current.empty()) throw DimacsParseError(lineno, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<unsigned long long>(std::llabs(lit)) > f.num_vars)
        throw DimacsParseError(lineno, "literal exceeds variable count");
      current.push_back(static_cast<Literal>(lit));
    } while (fields >> tok);
  }
  if (!header) throw DimacsParseError(lineno, "missing header");
  if (!current.empty()) throw DimacsParseError(lineno, "unterminated clause");
  if (f.clauses.size() != expected_clauses)
    throw DimacsParseError(lineno, "header announces " +
                                       std::to_string(expected_clauses) +
                                       " clauses, found " +
                                       std::to_string(f.clauses.size()));
  return f;
}

TruthAssignment parse_model(std::string_view text, std::uint32_t num_vars) {
  TruthAssignment model(std::size_t{num_vars} + 1, false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    if (tok == "c" || tok == "s") continue;
    if (tok == "v" && !(fields >> tok)) continue;
    do {
      long long lit = 0;
      if (!parse_int(tok, lit))
        throw DimacsParseError(lineno, "bad model literal '" + tok + "'");
      if (lit == 0) continue;
      const auto var = static_cast<unsigned long long>(std::llabs(lit));
      if (var > num_vars)
        throw DimacsParseError(lineno, "model variable exceeds " +
                                           std::to_string(num_vars));
      model[var] = lit > 0;
    } while (fields >> tok);
  }
  return model;
}

Coloring decode_model(const TruthAssignment& model, const Params& params) {
  const auto K = params.color_count();
  const std::uint64_t vars = std::uint64_t{params.num_words()} * K;
  if (model.size() < vars + 1)
    throw std::invalid_argument("model covers fewer than " +
                                std::to_string(vars) + " variables");
  auto a = Assignment::unassigned(params);
  for (Word v = 0; v < params.num_words(); ++v) {
    for (std::uint32_t c = 1; c <= K; ++c)
      if (model[static_cast<std::size_t>(color_var(v, c, K))]) {
        a.color_of[v] = c;
        break;
      }
    if (a.color_of[v] == Assignment::kUnassigned)
      throw std::invalid_argument("model gives vertex " + std::to_string(v) +
                                  " no color");
  }
  return to_coloring(a);
}

TruthAssignment canonical_model(const Assignment& a) {
  const auto K = a.params.color_count();
  TruthAssignment model(std::size_t{a.params.num_words()} * K + 1, false);
  for (Word v = 0; v < a.color_of.size(); ++v)
    if (a.color_of[v] != Assignment::kUnassigned)
      model[static_cast<std::size_t>(color_var(v, a.color_of[v], K))] = true;
  return model;
}

bool evaluate(const CnfFormula& f, const TruthAssignment& assignment) {
  if (assignment.size() < std::size_t{f.num_vars} + 1)
    throw std::invalid_argument("assignment does not cover every variable");
  for (const auto& cl : f.clauses) {
    const bool sat = std::any_of(cl.begin(), cl.end(), [&](Literal lit) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit))];
      return lit > 0 ? value : !value;
    });
    if (!sat) return false;
  }
  return true;
}

}  // namespace cubecolor
