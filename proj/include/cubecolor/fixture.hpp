#pragma once

#include "cubecolor/coloring.hpp"

namespace cubecolor {

/// The 13-coloring of Q_8^2 (a partition of {0,1}^8 into twelve (8,20,3)
/// codes and one (8,16,4) code), shipped with the library.
const Coloring& q8_square_13_coloring();

}  // namespace cubecolor
