#include "cubecolor/coloring.hpp"

#include <algorithm>

namespace cubecolor {

Coloring Coloring::from_classes(const Params& params,
                                std::vector<std::vector<Word>> classes) {
  Coloring col;
  col.params = params;
  col.classes.reserve(classes.size());
  for (auto& words : classes) {
    std::sort(words.begin(), words.end());
    col.classes.push_back(CodeClass{params.n, std::move(words)});
  }
  check_structure(col);
  return col;
}

void check_structure(const Coloring& col) {
  if (!col.params.colors)
    throw StructuralError("coloring has no color count");
  if (*col.params.colors != col.classes.size())
    throw StructuralError("color count " + std::to_string(*col.params.colors) +
                          " does not match " +
                          std::to_string(col.classes.size()) + " classes");
  for (std::size_t i = 0; i < col.classes.size(); ++i) {
    const auto& words = col.classes[i].words;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (!col.params.contains(words[j]))
        throw StructuralError("class " + std::to_string(i + 1) + ": word " +
                              std::to_string(words[j]) + " out of range for n=" +
                              std::to_string(col.params.n));
      if (j > 0 && words[j] <= words[j - 1])
        throw StructuralError("class " + std::to_string(i + 1) +
                              " is not strictly ascending at word " +
                              std::to_string(words[j]));
    }
  }
}

Assignment Assignment::unassigned(const Params& params) {
  return Assignment{params,
                    std::vector<std::uint32_t>(params.num_words(), kUnassigned)};
}

bool Assignment::fully_assigned() const noexcept {
  return std::find(color_of.begin(), color_of.end(), kUnassigned) ==
         color_of.end();
}

Coloring to_coloring(const Assignment& a) {
  const auto colors = a.params.color_count();
  std::vector<std::vector<Word>> classes(colors);
  for (Word v = 0; v < a.color_of.size(); ++v) {
    const auto c = a.color_of[v];
    if (c == Assignment::kUnassigned)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is unassigned");
    if (c > colors)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has color out of range");
    classes[c - 1].push_back(v);
  }
  return Coloring::from_classes(a.params, std::move(classes));
}

Assignment to_assignment(const Coloring& col) {
  auto a = Assignment::unassigned(col.params);
  for (std::size_t i = 0; i < col.classes.size(); ++i)
    for (Word v : col.classes[i].words) {
      if (a.color_of[v] != Assignment::kUnassigned)
        throw std::invalid_argument("word " + std::to_string(v) +
                                    " appears in two classes");
      a.color_of[v] = static_cast<std::uint32_t>(i + 1);
    }
  return a;
}

Coloring transform(const Coloring& col, const Automorphism& a) {
  if (a.dimension() != col.params.n)
    throw std::invalid_argument("automorphism dimension mismatch");
  std::vector<std::vector<Word>> classes;
  classes.reserve(col.classes.size());
  for (const auto& cls : col.classes) {
    std::vector<Word> image;
    image.reserve(cls.words.size());
    for (Word v : cls.words) image.push_back(a.apply(v));
    classes.push_back(std::move(image));
  }
  return Coloring::from_classes(col.params, std::move(classes));
}

}  // namespace cubecolor
