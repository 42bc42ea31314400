#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatcert/rational.hpp"

namespace flatcert {

struct Point {
  Rational x, y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(const Point& a) { return {-a.x, -a.y}; }
  friend Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
// Orientation of c relative to the directed line a->b: >0 left, <0 right.
inline Rational orient(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}
inline bool is_lattice_point(const Point& p) { return is_integer(p.x) && is_integer(p.y); }

std::string to_string(const Point& p);

// {(x,y) : a*x + b*y <= c}
struct HalfPlane {
  Rational a, b, c;
  bool contains(const Point& p) const { return a * p.x + b * p.y <= c; }
  Rational slack(const Point& p) const { return c - a * p.x - b * p.y; }
};

// Convex polygon in canonical form: counter-clockwise, starting at the
// lexicographically smallest vertex, no collinear triples. One vertex is a
// point, two vertices a segment.
class Polygon {
 public:
  const std::vector<Point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point& operator[](std::size_t i) const { return v_[i]; }
  // Edge i runs from vertex i to vertex i+1 (mod n).
  std::pair<Point, Point> edge(std::size_t i) const { return {v_[i], v_[(i + 1) % v_.size()]}; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Polygon& a, const Polygon& b) { return !(a == b); }
  friend bool operator<(const Polygon& a, const Polygon& b) { return a.v_ < b.v_; }

 private:
  friend Polygon convex_hull(std::vector<Point> points);
  std::vector<Point> v_;
};

using MaybePolygon = std::optional<Polygon>;

std::string to_string(const Polygon& p);

// Throws std::invalid_argument on an empty list.
Polygon convex_hull(std::vector<Point> points);

MaybePolygon clip(const Polygon& p, const HalfPlane& h);
// Half-plane description of p; a point or segment yields the degenerate
// set of inequalities pinning it down.
std::vector<HalfPlane> halfplanes(const Polygon& p);
MaybePolygon intersect(const Polygon& p, const Polygon& q);
MaybePolygon intersect(const MaybePolygon& p, const MaybePolygon& q);

Polygon minkowski_sum(const Polygon& p, const Polygon& q);
// {x : s + x ⊆ p} computed as the intersection of p - v over vertices v of s.
MaybePolygon minkowski_difference(const Polygon& p, const Polygon& s);

int dimension(const Polygon& p);
int dimension(const MaybePolygon& p);

enum class Region { All, Interior, Boundary };
std::vector<Point> lattice_points(const Polygon& p, Region region = Region::All);

// strict = relative interior.
bool contains_point(const Polygon& p, const Point& q, bool strict = false);
bool contains(const Polygon& outer, const Polygon& inner);

Polygon translate(const Polygon& p, const Point& d);
Polygon scale(const Polygon& p, const Rational& s);
Rational area2(const Polygon& p);
Point vertex_centroid(const Polygon& p);

// q lies on the line through edge i strictly between its endpoints.
bool in_edge_relint(const Polygon& p, std::size_t i, const Point& q);
bool on_edge_line(const Polygon& p, std::size_t i, const Point& q);

}  // namespace flatcert
