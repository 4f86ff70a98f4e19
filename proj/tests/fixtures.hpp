#pragma once

#include <vector>

#include "core/square.hpp"

// A reference pair of order-7 Latin squares at Hamming distance 18. The
// difference of the two is the canonical worked trade used across the tests.
inline latin::LatinSquare ref7_a() {
  return latin::validate_square({
      {1, 2, 0, 6, 3, 4, 5},
      {6, 1, 5, 4, 0, 2, 3},
      {0, 5, 4, 2, 1, 3, 6},
      {3, 4, 2, 1, 5, 6, 0},
      {4, 3, 1, 5, 6, 0, 2},
      {2, 6, 3, 0, 4, 5, 1},
      {5, 0, 6, 3, 2, 1, 4},
  });
}

inline latin::LatinSquare ref7_b() {
  return latin::validate_square({
      {2, 1, 0, 6, 3, 4, 5},
      {6, 5, 4, 1, 0, 2, 3},
      {0, 2, 5, 4, 1, 3, 6},
      {3, 4, 2, 5, 6, 0, 1},
      {4, 3, 1, 2, 5, 6, 0},
      {1, 6, 3, 0, 4, 5, 2},
      {5, 0, 6, 3, 2, 1, 4},
  });
}
