#include "cubecolor/bounds.hpp"

#include <charconv>
#include <sstream>

namespace cubecolor {

namespace {

template <class T>
bool parse_number(std::string_view token, T& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

KnownValueTable KnownValueTable::parse(std::string_view text) {
  KnownValueTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream comment(line.substr(start + 1));
      std::string key, value;
      if (comment >> key >> value && key == "version") table.version_ = value;
      continue;
    }
    std::istringstream fields(line);
    std::string n_tok, d_tok, v_tok;
    if (!(fields >> n_tok >> d_tok >> v_tok))
      throw TableParseError(lineno, "expected \"n d value citation\"");
    unsigned n = 0, d = 0;
    std::uint64_t value = 0;
    if (!parse_number(n_tok, n) || !parse_number(d_tok, d) ||
        !parse_number(v_tok, value))
      throw TableParseError(lineno, "non-numeric field");
    if (n < 1 || n > kMaxDimension) throw TableParseError(lineno, "n out of range");
    if (d < 1) throw TableParseError(lineno, "d must be positive");
    if (value < 1 || value > space_size(n))
      throw TableParseError(lineno, "value out of range");
    std::string citation;
    std::getline(fields >> std::ws, citation);
    while (!citation.empty() &&
           (citation.back() == '\r' || citation.back() == ' '))
      citation.pop_back();
    if (citation.empty()) throw TableParseError(lineno, "missing citation");
    if (!table.entries_.emplace(std::pair{n, d}, Entry{value, citation}).second)
      throw TableParseError(lineno, "duplicate entry");
  }
  return table;
}

const KnownValueTable& KnownValueTable::builtin() {
  static const KnownValueTable table = parse(embedded_known_values_text());
  return table;
}

std::optional<KnownValueTable::Entry> KnownValueTable::lookup(unsigned n,
                                                              unsigned d) const {
  auto it = entries_.find({n, d});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace cubecolor
