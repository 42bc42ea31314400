#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flatcert/lattice.hpp"

namespace flatcert {

// Lattice triangle with unimodular edge matrix; vertices sorted, so v[0] is
// the lexicographically smallest (the class anchor).
struct UnimodularTriangle {
  std::array<Point, 3> v;

  const Point& anchor() const { return v[0]; }
  Polygon polygon() const { return convex_hull({v[0], v[1], v[2]}); }
  // Translate so the anchor sits at the origin.
  UnimodularTriangle normalized() const;

  friend bool operator==(const UnimodularTriangle& a, const UnimodularTriangle& b) {
    return a.v == b.v;
  }
  friend bool operator<(const UnimodularTriangle& a, const UnimodularTriangle& b) {
    return a.v < b.v;
  }
};

struct FreenessVerdict {
  bool free = true;
  std::optional<Polygon> violation;
  Ring ring = Ring::Z;
};

std::vector<UnimodularTriangle> enum_unimodular_triangles(const Polygon& p);
// Unimodular triangles with vertices among the given lattice points.
std::vector<UnimodularTriangle> unimodular_triangles_on(const std::vector<Point>& lattice);

// Anchored representatives of every translation class of unimodular
// triangles that has a real translate inside p. Requires dimension(p) == 2.
std::vector<UnimodularTriangle> translation_classes(const Polygon& p);

FreenessVerdict is_z_delta2_free(const Polygon& p);
FreenessVerdict is_r_delta2_free(const Polygon& p);

// The two independent routes behind is_z_delta2_free.
bool interior_points_collinear(const Polygon& p);
std::optional<UnimodularTriangle> interior_unimodular_triangle(const Polygon& p);

bool interior_translate_exists(const Polygon& p, const Polygon& s);
bool contains_copy(const Polygon& p, Ring ring);

}  // namespace flatcert
