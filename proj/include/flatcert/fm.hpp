#pragma once

#include <array>
#include <vector>

#include "flatcert/rational.hpp"

namespace flatcert {

// c[0] + c[1] x0 + c[2] x1 + c[3] x2 >= 0, or > 0 when strict.
struct Row3 {
  std::array<Rational, 4> c;
  bool strict = false;
};

struct Box3 {
  std::array<Rational, 3> lo, hi;
};

// Exact Fourier–Motzkin feasibility of the rows inside the closed box.
bool fm_feasible(const std::vector<Row3>& rows, const Box3& box);

}  // namespace flatcert
