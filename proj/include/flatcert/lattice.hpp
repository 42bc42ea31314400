#pragma once

#include <optional>

#include "flatcert/geometry.hpp"

namespace flatcert {

enum class Ring { Z, R };

inline const char* to_string(Ring r) { return r == Ring::Z ? "Z" : "R"; }

// Integer linear functional u(x,y) = a*x + b*y.
struct DualVector {
  Integer a, b;
  friend bool operator==(const DualVector& u, const DualVector& v) { return u.a == v.a && u.b == v.b; }
  Rational operator()(const Point& p) const { return Rational(a) * p.x + Rational(b) * p.y; }
};

// Sign-normalized primitive form: a > 0, or a == 0 and b > 0.
DualVector primitive(const DualVector& u);
bool is_primitive(const DualVector& u);
// Ordering used to break ties between equally good functionals.
bool tie_break_less(const DualVector& u, const DualVector& v);

struct UnimodularMap {
  Integer m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  Point t{0, 0};
  Ring ring = Ring::Z;

  Integer det() const { return m11 * m22 - m12 * m21; }
  Point operator()(const Point& p) const {
    return {Rational(m11) * p.x + Rational(m12) * p.y + t.x,
            Rational(m21) * p.x + Rational(m22) * p.y + t.y};
  }
};

// Throws std::invalid_argument for |det| != 1 or a fractional Z translation.
void validate(const UnimodularMap& u);

struct ChordResult {
  Rational length;
  DualVector direction;  // primitive lattice vector (stored as (a,b))
  Point anchor;          // chord is [anchor, anchor + length * direction]
};

// Throws std::invalid_argument for u == 0.
Rational width_along(const Polygon& p, const DualVector& u);

struct WidthResult {
  Rational width;
  DualVector u;
};
WidthResult lattice_width(const Polygon& p);

ChordResult rational_diameter(const Polygon& p);

Polygon apply_map(const UnimodularMap& u, const Polygon& p);

bool is_unimodular_delta2_copy(const Polygon& tri, Ring ring);

std::optional<UnimodularMap> unimodular_equivalent(const Polygon& p, const Polygon& q, Ring ring,
                                                   int radius = 8);

}  // namespace flatcert
