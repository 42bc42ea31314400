#include "flatcert/freeness.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatcert {

namespace {

long to_long(const Rational& q) { return q.get_num().get_si(); }

bool unimodular(const Point& a, const Point& b, const Point& c) {
  // lattice coordinates at desk scale fit comfortably in 64 bits
  long ex = to_long(b.x) - to_long(a.x), ey = to_long(b.y) - to_long(a.y);
  long fx = to_long(c.x) - to_long(a.x), fy = to_long(c.y) - to_long(a.y);
  long d = ex * fy - ey * fx;
  return d == 1 || d == -1;
}

template <class F>
bool scan_triangles(const std::vector<Point>& pts, F&& visit) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (unimodular(pts[i], pts[j], pts[k]) && visit(UnimodularTriangle{{pts[i], pts[j], pts[k]}}))
          return true;
  return false;
}

Polygon unit_box_shift() { return convex_hull({{-1, -1}, {0, -1}, {0, 0}, {-1, 0}}); }

}  // namespace

UnimodularTriangle UnimodularTriangle::normalized() const {
  Point a = v[0];
  return {{v[0] - a, v[1] - a, v[2] - a}};
}

std::vector<UnimodularTriangle> unimodular_triangles_on(const std::vector<Point>& lattice) {
  std::vector<Point> pts = lattice;
  std::sort(pts.begin(), pts.end());
  std::vector<UnimodularTriangle> out;
  scan_triangles(pts, [&](const UnimodularTriangle& t) {
    out.push_back(t);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnimodularTriangle> enum_unimodular_triangles(const Polygon& p) {
  return unimodular_triangles_on(lattice_points(p));
}

std::vector<UnimodularTriangle> translation_classes(const Polygon& p) {
  if (dimension(p) != 2) throw std::invalid_argument("translation_classes: polygon must be 2-dimensional");
  // Any real translate S+x inside p has S+floor(x) inside p+[-1,0]^2.
  std::vector<UnimodularTriangle> cls;
  for (const auto& t : enum_unimodular_triangles(minkowski_sum(p, unit_box_shift())))
    cls.push_back(t.normalized());
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  std::vector<UnimodularTriangle> out;
  for (const auto& s : cls)
    if (minkowski_difference(p, s.polygon())) out.push_back(s);
  return out;
}

bool interior_points_collinear(const Polygon& p) {
  auto pts = lattice_points(p, Region::Interior);
  for (std::size_t k = 2; k < pts.size(); ++k)
    if (orient(pts[0], pts[1], pts[k]) != 0) return false;
  return true;
}

std::optional<UnimodularTriangle> interior_unimodular_triangle(const Polygon& p) {
  std::optional<UnimodularTriangle> hit;
  scan_triangles(lattice_points(p, Region::Interior), [&](const UnimodularTriangle& t) {
    hit = t;
    return true;
  });
  return hit;
}

FreenessVerdict is_z_delta2_free(const Polygon& p) {
  FreenessVerdict out;
  out.ring = Ring::Z;
  if (dimension(p) < 2) return out;
  bool collinear = interior_points_collinear(p);
  auto tri = interior_unimodular_triangle(p);
  if (collinear == tri.has_value())
    throw std::logic_error("is_z_delta2_free: collinearity and triangle routes disagree on " + to_string(p));
  if (tri) {
    out.free = false;
    out.violation = tri->polygon();
  }
  return out;
}

FreenessVerdict is_r_delta2_free(const Polygon& p) {
  FreenessVerdict out;
  out.ring = Ring::R;
  if (dimension(p) < 2) return out;
  for (const auto& s : translation_classes(p)) {
    Polygon sp = s.polygon();
    auto diff = minkowski_difference(p, sp);
    if (dimension(diff) == 2) {
      out.free = false;
      out.violation = translate(sp, vertex_centroid(*diff));
      return out;
    }
  }
  return out;
}

bool interior_translate_exists(const Polygon& p, const Polygon& s) {
  return dimension(minkowski_difference(p, s)) == 2;
}

bool contains_copy(const Polygon& p, Ring ring) {
  if (dimension(p) < 2) return false;
  if (ring == Ring::Z) {
    auto pts = lattice_points(p);
    std::sort(pts.begin(), pts.end());
    return scan_triangles(pts, [](const UnimodularTriangle&) { return true; });
  }
  return !translation_classes(p).empty();
}

}  // namespace flatcert
