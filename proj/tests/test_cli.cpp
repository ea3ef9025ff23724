#include "cubecolor/cli.hpp"
#include "cubecolor/coloring_io.hpp"
#include "cubecolor/fixture.hpp"
#include "cubecolor/sat.hpp"
#include "cubecolor/verifier.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace cubecolor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("cubecolor-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    load_coloring(text);
  } catch (const ColoringParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("coloring file round trip") {
  const auto text = save_coloring(q8_square_13_coloring());
  const auto col = load_coloring(text);
  CHECK(col == q8_square_13_coloring());
  CHECK(save_coloring(col) == text);
  CHECK(text.rfind("n 8\nk 2\nclasses 13\nclass 9 18 37 ", 0) == 0);
  for (std::size_t i = 0; i < 12; ++i) CHECK(col.classes[i].size() == 20);
  CHECK(col.classes[12].size() == 16);
}

TEST_CASE("coloring file parsing") {
  const auto col = load_coloring("# comment\nn 2\n# more\nk 1\nclasses 3\nclass 3 0\nclass\nclass 1 2\n");
  CHECK(col.classes[0].words == std::vector<Word>{0, 3});
  CHECK(col.classes[1].words.empty());
  CHECK(save_coloring(col) == "n 2\nk 1\nclasses 3\nclass 0 3\nclass\nclass 1 2\n");

  CHECK(error_line("n 8\nk 2\nclasses 1\nclass 1 256\n") == 4);
  CHECK(error_line("k 2\nn 8\n") == 1);
  CHECK(error_line("n 8\nk 9\nclasses 1\n") == 3);
  CHECK(error_line("n 2\nk 1\nclasses 1\nclass 1 1\n") == 4);
  CHECK(error_line("n 2\nk 1\nclasses 1\nclass 0\nclass 1\n") == 5);
  CHECK(error_line("n 2\nk 1\nclasses 2\nclass 0\n") == 4);
  CHECK(error_line("n 2\nk 1\nclasses 1\nclas 0\n") == 4);
  CHECK(error_line("n 2\nk 1\nclasses 1\nclass -1\n") == 4);
  CHECK(error_line("n 2\n") == 1);
}

TEST_CASE("save_coloring is canonical for random partitions") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 50; ++t) {
    const unsigned n = 1 + t % 6;
    const std::uint32_t K = 1 + rng() % (1u << n);
    std::vector<std::vector<Word>> classes(K);
    for (Word w = 0; w < (1u << n); ++w) classes[rng() % K].push_back(w);
    const auto col = Coloring::from_classes(Params::make(n, t % (n + 1), K), classes);
    const auto text = save_coloring(col);
    CHECK(load_coloring(text) == col);
    CHECK(save_coloring(load_coloring(text)) == text);
  }
}

TEST_CASE("verify, stats and fixture commands") {
  TempDir dir;
  const auto fixture = cli({"fixture"});
  CHECK(fixture.code == 0);
  const auto path = dir.write("table.txt", fixture.out);

  const auto ok = cli({"verify", path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("13 classes, valid, k=2") != std::string::npos);
  CHECK(ok.out.find("class 13: M=16 d=4") != std::string::npos);

  auto text = fixture.out;
  text.replace(text.find("class 9 "), 8, "class ");
  text.replace(text.find("class 8 "), 8, "class 8 9 ");
  const auto bad = cli({"verify", dir.write("bad.txt", text)});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("invalid") != std::string::npos);
  CHECK(bad.out.find("violation distance-violation words 8 9 classes 4") != std::string::npos);

  CHECK(cli({"verify", dir.write("broken.txt", "n 8\nk 2\nclasses 1\nclass 256\n")}).code == 2);
  CHECK(cli({"verify", dir.file("missing.txt")}).code == 2);

  const auto stats = cli({"stats", path});
  CHECK(stats.code == 0);
  CHECK(stats.out.find("class 13: M=16 d=4 weights=1,0,0,0,14,0,0,0,1") != std::string::npos);
  CHECK(stats.out.find("fingerprint " + fingerprint(q8_square_13_coloring())) !=
        std::string::npos);
}

TEST_CASE("bound command") {
  const auto r = cli({"bound", "--n", "8", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("13\n", 0) == 0);
  CHECK(r.out.find("known-table") != std::string::npos);
  CHECK(cli({"bound", "--n", "3", "--k", "2"}).out.rfind("4\nsource: exact-computation", 0) == 0);

  TempDir dir;
  const auto empty = dir.write("empty.txt", "# version 0\n");
  const auto unknown = cli({"bound", "--n", "13", "--k", "2", "--table", empty});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("A(13,3)") != std::string::npos);
  CHECK(cli({"bound", "--n", "3", "--k", "5"}).code == 2);
}

TEST_CASE("search command") {
  TempDir dir;
  const auto out = dir.file("q3.txt");
  const auto r = cli({"search", "--n", "3", "--k", "2", "--colors", "4", "--algo", "tabu",
                      "--seed", "1", "--out", out});
  CHECK(r.code == 0);
  CHECK(verify_coloring(load_coloring(slurp(out))).valid);

  const auto hard = cli({"search", "--n", "3", "--k", "2", "--colors", "3", "--max-iters",
                         "200", "--out", out});
  CHECK(hard.code == 1);
  CHECK(hard.out.find("conflicts ") != std::string::npos);
  CHECK(load_coloring(slurp(out)).num_classes() == 3);

  CHECK(cli({"search", "--n", "3", "--k", "2", "--out", out}).code == 2);
  CHECK(cli({"search", "--n", "3", "--k", "2", "--algo", "annealing", "--out", out}).code == 2);

  const auto greedy = cli({"search", "--n", "4", "--k", "1", "--algo", "greedy", "--colors",
                           "3", "--out", out});
  CHECK(greedy.code == 0);
  CHECK(load_coloring(slurp(out)).num_classes() == 3);
  CHECK(cli({"search", "--n", "8", "--k", "2", "--algo", "dsatur", "--colors", "13", "--out",
             out}).code == 1);
  CHECK(cli({"search", "--n", "8", "--k", "2", "--algo", "dsatur", "--out", out}).code == 0);
  CHECK(load_coloring(slurp(out)).num_classes() == 17);

  // Start from the fixture: already conflict-free.
  const auto init = dir.write("init.txt", save_coloring(q8_square_13_coloring()));
  const auto warm = cli({"search", "--n", "8", "--k", "2", "--colors", "13", "--init", init,
                         "--out", out});
  CHECK(warm.code == 0);
  CHECK(warm.out.find("iterations 0") != std::string::npos);
  CHECK(cli({"search", "--n", "8", "--k", "2", "--colors", "12", "--init", init, "--out", out})
            .code == 2);
}

TEST_CASE("extend command") {
  TempDir dir;
  const auto base = dir.write("table.txt", save_coloring(q8_square_13_coloring()));
  const auto out = dir.file("q9.txt");
  const auto dbl = cli({"extend", "--in", base, "--strategy", "double", "--out", out});
  CHECK(dbl.code == 0);
  const auto col = load_coloring(slurp(out));
  CHECK(col.params == Params::make(9, 2, 26));
  CHECK(verify_coloring(col).valid);

  const auto frz = cli({"extend", "--in", base, "--strategy", "freeze-subcube", "--colors", "13",
                        "--max-iters", "5000", "--out", out});
  CHECK((frz.code == 0 || frz.code == 1));
  CHECK(frz.out.find("conflicts ") != std::string::npos);
  CHECK(load_coloring(slurp(out)).num_classes() == 13);

  CHECK(cli({"extend", "--in", base, "--strategy", "double", "--colors", "13", "--out", out})
            .code == 2);
  CHECK(cli({"extend", "--in", base, "--strategy", "triple", "--out", out}).code == 2);
}

TEST_CASE("encode and decode-model commands") {
  TempDir dir;
  const auto cnf = dir.file("q3.cnf");
  const auto enc = cli({"encode", "--n", "3", "--k", "2", "--colors", "4", "--symmetry",
                        "fix-clique", "--amo", "--out", cnf});
  CHECK(enc.code == 0);
  const auto f = parse_dimacs(slurp(cnf));
  CHECK(f == encode_coloring_cnf(Params::make(3, 2, 4), {true, Symmetry::fix_clique}));
  CHECK(slurp(cnf).rfind("c ", 0) == 0);

  // Model for complement pairs {0,7} {1,6} {2,5} {3,4} in solver syntax.
  std::string model = "s SATISFIABLE\nv";
  const std::uint32_t color[8] = {1, 2, 3, 4, 4, 3, 2, 1};
  for (Word v = 0; v < 8; ++v)
    for (std::uint32_t c = 1; c <= 4; ++c)
      model += " " + std::to_string((c == color[v] ? 1 : -1) * color_var(v, c, 4));
  model += " 0\n";
  const auto out = dir.file("decoded.txt");
  const auto dec = cli({"decode-model", "--n", "3", "--k", "2", "--colors", "4", "--model",
                        dir.write("model.txt", model), "--out", out});
  CHECK(dec.code == 0);
  CHECK(load_coloring(slurp(out)) ==
        Coloring::from_classes(Params::make(3, 2, 4), {{0, 7}, {1, 6}, {2, 5}, {3, 4}}));

  CHECK(cli({"decode-model", "--n", "3", "--k", "2", "--colors", "4", "--model",
             dir.write("empty.txt", "v 0\n"), "--out", out}).code == 2);
  CHECK(cli({"encode", "--n", "3", "--k", "2", "--colors", "2", "--symmetry", "fix-clique",
             "--out", cnf}).code == 2);
}

TEST_CASE("usage errors exit 2 with usage text") {
  const auto r = cli({"verify", "--bogus", "x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
