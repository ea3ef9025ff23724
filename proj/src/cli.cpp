#include "cubecolor/cli.hpp"

#include "cubecolor/bounds.hpp"
#include "cubecolor/coloring_io.hpp"
#include "cubecolor/fixture.hpp"
#include "cubecolor/sat.hpp"
#include "cubecolor/search.hpp"
#include "cubecolor/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cubecolor {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

class OperationalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OperationalError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OperationalError("cannot write " + path);
  out << text;
  if (!out) throw OperationalError("write failed for " + path);
}

Coloring load_file(const std::string& path) {
  const auto text = read_file(path);
  try {
    return load_coloring(text);
  } catch (const ColoringParseError& e) {
    throw ColoringParseError(e.line(), path + ": " + e.what());
  }
}

void print_class_line(std::ostream& out, std::size_t index, const ClassStats& s) {
  out << "class " << index << ": M=" << s.size
      << " d=" << to_string(s.min_distance) << '\n';
}

constexpr std::size_t kMaxViolationsShown = 20;

int cmd_verify(const std::string& path, std::ostream& out) {
  const auto col = load_file(path);
  const auto report = verify_coloring(col);
  out << col.num_classes() << " classes, " << (report.valid ? "valid" : "invalid")
      << ", k=" << col.params.k << '\n';
  out << "n=" << col.params.n << '\n';
  for (std::size_t i = 0; i < report.per_class.size(); ++i)
    print_class_line(out, i + 1, report.per_class[i]);
  for (std::size_t i = 0;
       i < report.violations.size() && i < kMaxViolationsShown; ++i) {
    const auto& v = report.violations[i];
    out << "violation " << to_string(v.kind) << " words";
    for (Word w : v.words) out << ' ' << w;
    if (!v.classes.empty()) {
      out << " classes";
      for (auto c : v.classes) out << ' ' << c;
    }
    out << '\n';
  }
  if (report.violations.size() > kMaxViolationsShown)
    out << "... " << report.violations.size() - kMaxViolationsShown
        << " more violations\n";
  return report.valid ? kOk : kFailed;
}

int cmd_stats(const std::string& path, std::ostream& out) {
  const auto col = load_file(path);
  out << "n=" << col.params.n << " k=" << col.params.k
      << " classes=" << col.num_classes() << '\n';
  for (std::size_t i = 0; i < col.classes.size(); ++i) {
    const auto s = class_stats(col.classes[i]);
    out << "class " << i + 1 << ": M=" << s.size
        << " d=" << to_string(s.min_distance) << " weights=";
    for (std::size_t w = 0; w < s.weight_distribution.size(); ++w)
      out << (w ? "," : "") << s.weight_distribution[w];
    out << " distances=";
    for (std::size_t d = 1; d < s.distance_distribution.size(); ++d)
      out << (d > 1 ? "," : "") << s.distance_distribution[d];
    out << '\n';
  }
  out << "fingerprint " << fingerprint(col) << '\n';
  return kOk;
}

int cmd_bound(unsigned n, unsigned k, const std::string& table_path,
              std::ostream& out) {
  const auto params = Params::make(n, k);
  const auto table = table_path.empty()
                         ? KnownValueTable::builtin()
                         : KnownValueTable::parse(read_file(table_path));
  const auto b = chromatic_lower_bound(params.n, params.k, table);
  out << b.bound << '\n';
  out << "source: " << to_string(b.source) << " A(" << n << "," << k + 1
      << ")=" << b.code_size;
  if (!b.citation.empty()) out << " [" << b.citation << "]";
  out << '\n';
  return kOk;
}

struct SearchArgs {
  unsigned n = 0;
  unsigned k = 0;
  std::optional<std::uint32_t> colors;
  std::string algo = "tabu";
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 1'000'000;
  std::uint32_t restarts = 0;
  unsigned threads = 1;
  std::uint32_t tenure_base = 7;
  double tenure_slope = 0.6;
  std::string init;
  std::string out;
};

SearchConfig to_config(const SearchArgs& a) {
  SearchConfig cfg;
  cfg.rng_seed = a.seed;
  cfg.max_iterations = a.max_iters;
  cfg.restarts = a.restarts;
  cfg.threads = a.threads;
  cfg.tabu_tenure_base = a.tenure_base;
  cfg.tabu_tenure_slope = a.tenure_slope;
  return cfg;
}

void report_outcome(const SearchOutcome& o, double seconds, std::ostream& out) {
  out << "conflicts " << o.conflicts << '\n'
      << "iterations " << o.iterations_used << '\n'
      << "restart " << o.restarts_used << '\n'
      << "seed " << o.seed_used << '\n'
      << "seconds " << seconds << '\n';
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto params = Params::make(a.n, a.k, a.colors);
  const auto start = std::chrono::steady_clock::now();
  err << "search: n=" << a.n << " k=" << a.k << " algo=" << a.algo << '\n';

  if (a.algo == "greedy" || a.algo == "dsatur") {
    auto col = a.algo == "greedy" ? greedy_color(params) : dsatur_color(params);
    const auto used = col.num_classes();
    const bool fits = !a.colors || used <= *a.colors;
    if (a.colors && fits) {
      col.classes.resize(*a.colors, CodeClass{params.n, {}});
      col.params.colors = *a.colors;
    }
    write_file(a.out, save_coloring(col));
    out << "colors used " << used << '\n'
        << "conflicts 0\n"
        << "seconds " << elapsed(start) << '\n';
    if (!fits) out << "does not fit in " << *a.colors << " colors\n";
    return fits ? kOk : kFailed;
  }

  if (!a.colors) throw OperationalError("tabu search needs --colors");
  std::optional<Assignment> init;
  if (!a.init.empty()) {
    const auto col = load_file(a.init);
    if (col.params.n != params.n || col.params.k != params.k)
      throw OperationalError("init coloring has different n or k");
    if (col.num_classes() > *a.colors)
      throw OperationalError("init coloring has more classes than --colors");
    auto assignment = to_assignment(col);
    assignment.params = params;
    init = std::move(assignment);
  }
  const auto outcome = tabu_search(params, to_config(a), init);
  write_file(a.out, save_coloring(to_coloring(outcome.best)));
  report_outcome(outcome, elapsed(start), out);
  return outcome.conflicts == 0 ? kOk : kFailed;
}

int cmd_extend(const std::string& in, const std::string& strategy,
               const SearchArgs& a, std::ostream& out) {
  const auto base = load_file(in);
  const auto start = std::chrono::steady_clock::now();
  const auto s = strategy == "double" ? ExtendStrategy::double_copy
                                      : ExtendStrategy::freeze_subcube;
  const auto outcome = extend_to_higher_dim(base, s, a.colors, to_config(a));
  const auto col = to_coloring(outcome.best);
  write_file(a.out, save_coloring(col));
  out << "n=" << col.params.n << " k=" << col.params.k
      << " colors=" << col.num_classes() << '\n';
  report_outcome(outcome, elapsed(start), out);
  return outcome.conflicts == 0 ? kOk : kFailed;
}

int cmd_encode(unsigned n, unsigned k, std::uint32_t colors,
               const std::string& symmetry, bool amo, const std::string& path,
               std::ostream& out) {
  const auto params = Params::make(n, k, colors);
  const EncodeOptions opts{amo, parse_symmetry(symmetry)};
  const auto f = encode_coloring_cnf(params, opts);
  write_file(path, write_dimacs(f, encoding_comments(params, opts)));
  out << "variables " << f.num_vars << "\nclauses " << f.clauses.size() << '\n';
  return kOk;
}

int cmd_decode(unsigned n, unsigned k, std::uint32_t colors,
               const std::string& model_path, const std::string& path,
               std::ostream& out) {
  const auto params = Params::make(n, k, colors);
  const auto vars = static_cast<std::uint32_t>(params.num_words() * colors);
  const auto col = decode_model(parse_model(read_file(model_path), vars), params);
  write_file(path, save_coloring(col));
  const bool valid = verify_coloring(col).valid;
  out << col.num_classes() << " classes, " << (valid ? "valid" : "invalid")
      << ", k=" << k << '\n';
  return valid ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Colorings of powers of the hypercube Q_n^k", "cubecolor"};
  app.require_subcommand(1);

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check a coloring file");
  verify->add_option("file", file, "Coloring file")->required();

  auto* stats = app.add_subcommand("stats", "Per-class statistics and fingerprint");
  stats->add_option("file", file, "Coloring file")->required();

  auto* fixture = app.add_subcommand(
      "fixture", "Write the built-in 13-coloring of Q_8^2 to standard output");

  unsigned n = 0, k = 0;
  std::string table_path;
  auto* bound = app.add_subcommand("bound", "Lower bound on the chromatic number");
  bound->add_option("--n", n, "Dimension")->required();
  bound->add_option("--k", k, "Power")->required();
  bound->add_option("--table", table_path, "Known-value table file");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Heuristic coloring search");
  search->add_option("--n", sa.n, "Dimension")->required();
  search->add_option("--k", sa.k, "Power")->required();
  search->add_option("--colors", sa.colors, "Color count K");
  search->add_option("--algo", sa.algo, "greedy, dsatur or tabu")
      ->check(CLI::IsMember({"greedy", "dsatur", "tabu"}));
  search->add_option("--seed", sa.seed, "RNG seed");
  search->add_option("--max-iters", sa.max_iters, "Iterations per run");
  search->add_option("--restarts", sa.restarts, "Additional runs");
  search->add_option("--threads", sa.threads, "Worker threads for restarts");
  search->add_option("--tenure-base", sa.tenure_base, "Tabu tenure constant");
  search->add_option("--tenure-slope", sa.tenure_slope,
                     "Tabu tenure per current conflict");
  search->add_option("--init", sa.init, "Initial coloring file");
  search->add_option("--out", sa.out, "Output coloring file")->required();

  std::string in_path, strategy;
  auto* extend = app.add_subcommand("extend", "Extend a coloring to dimension n+1");
  extend->add_option("--in", in_path, "Base coloring file")->required();
  extend->add_option("--strategy", strategy, "double or freeze-subcube")
      ->required()
      ->check(CLI::IsMember({"double", "freeze-subcube"}));
  extend->add_option("--colors", sa.colors, "Color count K");
  extend->add_option("--seed", sa.seed, "RNG seed");
  extend->add_option("--max-iters", sa.max_iters, "Iterations per run");
  extend->add_option("--restarts", sa.restarts, "Additional runs");
  extend->add_option("--threads", sa.threads, "Worker threads for restarts");
  extend->add_option("--out", sa.out, "Output coloring file")->required();

  std::uint32_t colors = 0;
  std::string symmetry = "none", out_path, model_path;
  bool amo = false;
  auto* encode = app.add_subcommand("encode", "Write a DIMACS CNF for K-colorability");
  encode->add_option("--n", n, "Dimension")->required();
  encode->add_option("--k", k, "Power")->required();
  encode->add_option("--colors", colors, "Color count K")->required();
  encode->add_option("--symmetry", symmetry, "none, fix-vertex-0 or fix-clique")
      ->check(CLI::IsMember({"none", "fix-vertex-0", "fix-clique"}));
  encode->add_flag("--amo", amo, "Add pairwise at-most-one clauses");
  encode->add_option("--out", out_path, "Output .cnf file")->required();

  auto* decode = app.add_subcommand("decode-model", "Turn a SAT model into a coloring");
  decode->add_option("--n", n, "Dimension")->required();
  decode->add_option("--k", k, "Power")->required();
  decode->add_option("--colors", colors, "Color count K")->required();
  decode->add_option("--model", model_path, "Solver model file")->required();
  decode->add_option("--out", out_path, "Output coloring file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kError;
  }

  try {
    if (*verify) return cmd_verify(file, out);
    if (*stats) return cmd_stats(file, out);
    if (*fixture) {
      out << save_coloring(q8_square_13_coloring());
      return kOk;
    }
    if (*bound) return cmd_bound(n, k, table_path, out);
    if (*search) return cmd_search(sa, out, err);
    if (*extend) return cmd_extend(in_path, strategy, sa, out);
    if (*encode) return cmd_encode(n, k, colors, symmetry, amo, out_path, out);
    if (*decode) return cmd_decode(n, k, colors, model_path, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv{"cubecolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cubecolor
