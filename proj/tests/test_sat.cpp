#include "cubecolor/fixture.hpp"
#include "cubecolor/sat.hpp"
#include "cubecolor/search.hpp"
#include "cubecolor/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace cubecolor;

namespace {

TruthAssignment from_bits(std::uint64_t bits, std::uint32_t num_vars) {
  TruthAssignment t(num_vars + 1, false);
  for (std::uint32_t v = 1; v <= num_vars; ++v) t[v] = (bits >> (v - 1)) & 1;
  return t;
}

bool satisfiable(const CnfFormula& f) {
  REQUIRE(f.num_vars <= 20);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits)
    if (evaluate(f, from_bits(bits, f.num_vars))) return true;
  return false;
}

// Valid iff no two vertices within distance k share a color.
bool proper(const std::vector<std::uint32_t>& color, unsigned k) {
  for (Word u = 0; u < color.size(); ++u)
    for (Word v = u + 1; v < color.size(); ++v)
      if (color[u] == color[v] && hamming_distance(u, v) <= k) return false;
  return true;
}

}  // namespace

TEST_CASE("encode examples") {
  const auto p = Params::make(1, 1, 2);
  const auto plain = encode_coloring_cnf(p);
  CHECK(plain.num_vars == 4);
  CHECK(plain.clauses.size() == 4);
  CHECK(encode_coloring_cnf(p, {false, Symmetry::fix_vertex_0}).clauses.size() == 5);

  // Independent count of adjacent pairs in Q_8^2.
  std::uint64_t pairs = 0;
  for (Word u = 0; u < 256; ++u)
    for (Word v = u + 1; v < 256; ++v) pairs += hamming_distance(u, v) <= 2;
  CHECK(pairs == 256 * 36 / 2);
  const auto big = encode_coloring_cnf(Params::make(8, 2, 13));
  CHECK(big.num_vars == 3328);
  CHECK(big.clauses.size() == 256 + 13 * pairs);
  CHECK(256 + 13 * pairs == 60160);
  CHECK_NOTHROW(big.validate());
}

TEST_CASE("encode options") {
  const auto p = Params::make(3, 2, 4);
  const auto amo = encode_coloring_cnf(p, {true, Symmetry::none});
  CHECK(amo.clauses.size() == encode_coloring_cnf(p).clauses.size() + 8 * 6);

  CHECK(symmetry_clique(Params::make(8, 2)) ==
        std::vector<Word>{0, 1, 2, 4, 8, 16, 32, 64, 128});
  const auto clique = encode_coloring_cnf(Params::make(8, 2, 13), {false, Symmetry::fix_clique});
  CHECK(clique.clauses.size() == 60160 + 9);
  CHECK(clique.clauses.back() == Clause{color_var(128, 9, 13)});
  CHECK_THROWS_AS(encode_coloring_cnf(Params::make(8, 2, 8), {false, Symmetry::fix_clique}),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode_coloring_cnf(Params::make(17, 2, 4)), std::invalid_argument);
  CHECK(parse_symmetry("fix-clique") == Symmetry::fix_clique);
  CHECK_THROWS_AS(parse_symmetry("bogus"), std::invalid_argument);
}

TEST_CASE("write_dimacs") {
  CHECK(write_dimacs(CnfFormula{}) == "p cnf 0 0\n");
  CHECK(write_dimacs(CnfFormula{2, {{1, -2}}}) == "p cnf 2 1\n1 -2 0\n");
  const auto f = encode_coloring_cnf(Params::make(1, 1, 2));
  CHECK(write_dimacs(f) == "p cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n");
  CHECK(write_dimacs(f, {"n=1"}) == "c n=1\np cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n");
  const auto p = Params::make(4, 2, 6);
  const EncodeOptions opts{true, Symmetry::fix_clique};
  CHECK(write_dimacs(encode_coloring_cnf(p, opts), encoding_comments(p, opts)) ==
        write_dimacs(encode_coloring_cnf(p, opts), encoding_comments(p, opts)));
}

TEST_CASE("parse_dimacs inverts write_dimacs") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    CnfFormula f;
    f.num_vars = 1 + rng() % 30;
    const auto clauses = rng() % 20;
    for (std::uint64_t c = 0; c < clauses; ++c) {
      Clause cl;
      const auto len = 1 + rng() % 5;
      for (std::uint64_t i = 0; i < len; ++i) {
        const auto var = static_cast<Literal>(1 + rng() % f.num_vars);
        if (std::find(cl.begin(), cl.end(), -var) != cl.end() ||
            std::find(cl.begin(), cl.end(), var) != cl.end())
          continue;
        cl.push_back(rng() % 2 ? var : -var);
      }
      f.clauses.push_back(cl);
    }
    CHECK(parse_dimacs(write_dimacs(f, {"random"})) == f);
  }
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), DimacsParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), DimacsParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), DimacsParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), DimacsParseError);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(CnfFormula{}, TruthAssignment(1, false)));
  const auto f = encode_coloring_cnf(Params::make(3, 2, 4));
  CHECK_FALSE(evaluate(f, TruthAssignment(f.num_vars + 1, false)));
  CHECK_THROWS_AS(evaluate(f, TruthAssignment(3, false)), std::invalid_argument);

  const auto& table = q8_square_13_coloring();
  const auto model = canonical_model(to_assignment(table));
  CHECK(evaluate(encode_coloring_cnf(Params::make(8, 2, 13)), model));
}

TEST_CASE("decode_model") {
  const auto& table = q8_square_13_coloring();
  const auto params = Params::make(8, 2, 13);
  CHECK(decode_model(canonical_model(to_assignment(table)), params) == table);

  const auto p = Params::make(2, 1, 3);
  TruthAssignment m(13, false);
  m[color_var(0, 3, 3)] = true;
  m[color_var(0, 2, 3)] = true;
  for (Word v = 1; v < 4; ++v) m[color_var(v, 1, 3)] = true;
  const auto col = decode_model(m, p);
  CHECK(col.classes[1].words == std::vector<Word>{0});
  CHECK(col.classes[0].words == std::vector<Word>{1, 2, 3});

  m[color_var(2, 1, 3)] = false;
  CHECK_THROWS_AS(decode_model(m, p), std::invalid_argument);
  CHECK_THROWS_AS(decode_model(TruthAssignment(3, true), p), std::invalid_argument);
}

TEST_CASE("parse_model accepts solver output") {
  const auto m = parse_model("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n", 4);
  CHECK(m == TruthAssignment{false, true, false, true, false});
  CHECK(parse_model("-1 2 0", 2) == TruthAssignment{false, false, true});
  CHECK_THROWS_AS(parse_model("v 5 0", 4), DimacsParseError);
  CHECK_THROWS_AS(parse_model("v x 0", 4), DimacsParseError);
}

TEST_CASE("exhaustive round trip at n=2, k=2, K=4") {
  const auto params = Params::make(2, 2, 4);
  const auto f = encode_coloring_cnf(params);
  REQUIRE(f.num_vars == 16);

  std::uint64_t satisfying = 0;
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    const auto t = from_bits(bits, 16);
    if (!evaluate(f, t)) continue;
    ++satisfying;
    const auto col = decode_model(t, params);
    CHECK(verify_coloring(col).valid);
    CHECK(conflict_count(to_assignment(col)) == 0);
  }
  CHECK(satisfying > 0);

  std::uint64_t valid = 0;
  for (std::uint32_t code = 0; code < 256; ++code) {
    Assignment a{params, {1 + (code & 3), 1 + ((code >> 2) & 3), 1 + ((code >> 4) & 3),
                          1 + ((code >> 6) & 3)}};
    const bool ok = proper(a.color_of, 2);
    valid += ok;
    CHECK(evaluate(f, canonical_model(a)) == ok);
    CHECK(verify_coloring(to_coloring(a)).valid == ok);
  }
  CHECK(valid == 24);  // 4! bijections onto the complete graph K_4
}

TEST_CASE("symmetry breaking preserves satisfiability for n <= 2") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (std::uint32_t K = 1; K <= 4; ++K) {
        if (K > (1u << n)) continue;
        const auto params = Params::make(n, k, K);
        const bool base = satisfiable(encode_coloring_cnf(params));
        CHECK(satisfiable(encode_coloring_cnf(params, {false, Symmetry::fix_vertex_0})) == base);
        CHECK(satisfiable(encode_coloring_cnf(params, {true, Symmetry::fix_vertex_0})) == base);
        if (K >= symmetry_clique(params).size())
          CHECK(satisfiable(encode_coloring_cnf(params, {false, Symmetry::fix_clique})) == base);
      }
}

TEST_CASE("completeness: colorings found by search satisfy their formula") {
  const auto params = Params::make(4, 2, 8);
  const auto out = tabu_search(params, SearchConfig{});
  REQUIRE(out.conflicts == 0);
  CHECK(evaluate(encode_coloring_cnf(params), canonical_model(out.best)));
  CHECK(evaluate(encode_coloring_cnf(params, {true, Symmetry::none}), canonical_model(out.best)));
}

TEST_CASE("CnfFormula::validate") {
  CHECK_THROWS_AS((CnfFormula{2, {{}}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CnfFormula{2, {{3}}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CnfFormula{2, {{1, -1}}}.validate()), std::invalid_argument);
  CHECK_NOTHROW((CnfFormula{2, {{1, -2}}}.validate()));
}
