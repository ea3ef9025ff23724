#include "cubecolor/coloring_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace cubecolor {

namespace {

std::uint64_t number(std::string_view tok, std::size_t lineno) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ColoringParseError(lineno, "expected a nonnegative integer, got '" +
                                         std::string(tok) + "'");
  return out;
}

}  // namespace

Coloring load_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  std::optional<std::uint64_t> header[3];  // n, k, classes
  static constexpr const char* kHeaderKeys[3] = {"n", "k", "classes"};
  std::vector<std::vector<Word>> classes;
  std::optional<Params> params;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key[0] == '#') continue;

    if (!params) {
      const auto slot = std::find(std::begin(kHeaderKeys), std::end(kHeaderKeys), key);
      const auto idx = static_cast<std::size_t>(slot - std::begin(kHeaderKeys));
      if (slot == std::end(kHeaderKeys) || header[idx] || (idx > 0 && !header[idx - 1]))
        throw ColoringParseError(lineno, "expected header lines 'n', 'k', 'classes' in order");
      std::string value, extra;
      if (!(fields >> value) || (fields >> extra))
        throw ColoringParseError(lineno, "header '" + key + "' needs one value");
      header[idx] = number(value, lineno);
      if (idx == 2) {
        if (*header[0] < 1 || *header[0] > kMaxDimension)
          throw ColoringParseError(lineno, "n out of range");
        if (*header[1] > *header[0])
          throw ColoringParseError(lineno, "k out of range");
        const auto n = static_cast<unsigned>(*header[0]);
        if (*header[2] < 1 || *header[2] > space_size(n))
          throw ColoringParseError(lineno, "class count out of range");
        params = Params::make(n, static_cast<unsigned>(*header[1]),
                              static_cast<std::uint32_t>(*header[2]));
      }
      continue;
    }

    if (key != "class")
      throw ColoringParseError(lineno, "expected 'class', got '" + key + "'");
    if (classes.size() == params->color_count())
      throw ColoringParseError(lineno, "more class lines than declared");
    std::vector<Word> words;
    for (std::string tok; fields >> tok;) {
      const auto w = number(tok, lineno);
      if (w >= space_size(params->n))
        throw ColoringParseError(lineno, "word " + tok + " out of range for n=" +
                                             std::to_string(params->n));
      words.push_back(static_cast<Word>(w));
    }
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ColoringParseError(lineno, "word repeated within class");
    classes.push_back(std::move(sorted));
  }
  if (!params) throw ColoringParseError(lineno, "incomplete header");
  if (classes.size() != params->color_count())
    throw ColoringParseError(lineno, "expected " +
                                         std::to_string(params->color_count()) +
                                         " class lines, found " +
                                         std::to_string(classes.size()));
  return Coloring::from_classes(*params, std::move(classes));
}

std::string save_coloring(const Coloring& col) {
  check_structure(col);
  std::string out = "n " + std::to_string(col.params.n) + "\nk " +
                    std::to_string(col.params.k) + "\nclasses " +
                    std::to_string(col.classes.size()) + "\n";
  for (const auto& cls : col.classes) {
    out += "class";
    for (Word w : cls.words) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

}  // namespace cubecolor
