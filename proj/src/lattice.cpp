#include "flatcert/lattice.hpp"

#include <stdexcept>

namespace flatcert {

namespace {

Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Primitive integer vector along a nonzero rational vector.
DualVector integer_direction(const Point& d) {
  Integer l = lcm(d.x.get_den(), d.y.get_den());
  Rational sx = d.x * l, sy = d.y * l;
  Integer a = sx.get_num(), b = sy.get_num();
  Integer g = gcd(a, b);
  return {a / g, b / g};
}

// Visits every normalized primitive vector with max(|a|,|b|) == r.
template <class F>
void for_each_on_ring(long r, F&& f) {
  for (long a = 0; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) {
      if (std::max(a, b < 0 ? -b : b) != r) continue;
      if (a == 0 && b <= 0) continue;
      if (Integer g = gcd(Integer(a), Integer(b)); g != 1) continue;
      f(DualVector{Integer(a), Integer(b)});
    }
  }
}

}  // namespace

DualVector primitive(const DualVector& u) {
  if (u.a == 0 && u.b == 0) throw std::invalid_argument("primitive: zero vector");
  Integer g = gcd(u.a, u.b);
  DualVector v{u.a / g, u.b / g};
  if (v.a < 0 || (v.a == 0 && v.b < 0)) v = {-v.a, -v.b};
  return v;
}

bool is_primitive(const DualVector& u) { return gcd(u.a, u.b) == 1; }

bool tie_break_less(const DualVector& u, const DualVector& v) {
  Integer su = iabs(u.a) + iabs(u.b), sv = iabs(v.a) + iabs(v.b);
  if (su != sv) return su < sv;
  if (iabs(u.b) != iabs(v.b)) return iabs(u.b) < iabs(v.b);
  return u.b < v.b;
}

void validate(const UnimodularMap& u) {
  Integer d = u.det();
  if (d != 1 && d != -1) throw std::invalid_argument("unimodular map: determinant must be +-1");
  if (u.ring == Ring::Z && !is_lattice_point(u.t))
    throw std::invalid_argument("unimodular map: Z translation must be integral");
}

Rational width_along(const Polygon& p, const DualVector& u) {
  if (u.a == 0 && u.b == 0) throw std::invalid_argument("width_along: zero functional");
  Rational lo = u(p[0]), hi = lo;
  for (const auto& v : p.vertices()) {
    Rational x = u(v);
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return hi - lo;
}

WidthResult lattice_width(const Polygon& p) {
  if (p.size() == 1) return {0, {1, 0}};
  if (p.size() == 2) {
    DualVector d = integer_direction(p[1] - p[0]);
    return {0, primitive({-d.b, d.a})};
  }
  // Largest-area vertex triple gives the tightest enumeration bound.
  const auto& v = p.vertices();
  Rational best_det = -1;
  Point e, f;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        Rational d = abs_q(orient(v[i], v[j], v[k]));
        if (d > best_det) {
          best_det = d;
          e = v[j] - v[i];
          f = v[k] - v[i];
        }
      }
  Rational factor = (abs_q(e.x) + abs_q(e.y) + abs_q(f.x) + abs_q(f.y)) / best_det;

  WidthResult best{width_along(p, {1, 0}), {1, 0}};
  auto consider = [&](const DualVector& u) {
    Rational w = width_along(p, u);
    if (w < best.width || (w == best.width && tie_break_less(u, best.u))) best = {w, u};
  };
  consider({0, 1});
  for (long r = 1; Rational(r) <= best.width * factor; ++r) for_each_on_ring(r, consider);
  return best;
}

namespace {

// Lattice length of the longest chord of a 2-D polygon parallel to v,
// together with its start point.
std::pair<Rational, Point> longest_chord(const Polygon& p, const std::vector<HalfPlane>& hs,
                                         const DualVector& dir) {
  Point v{Rational(dir.a), Rational(dir.b)};
  Rational best = -1;
  Point anchor;
  for (const auto& w : p.vertices()) {
    std::optional<Rational> lo, hi;
    for (const auto& h : hs) {
      Rational nv = h.a * v.x + h.b * v.y;
      if (nv == 0) continue;
      Rational s = h.slack(w) / nv;
      if (nv > 0) {
        if (!hi || s < *hi) hi = s;
      } else {
        if (!lo || s > *lo) lo = s;
      }
    }
    Rational len = *hi - *lo;
    if (len > best) {
      best = len;
      anchor = w + *lo * v;
    }
  }
  return {best, anchor};
}

}  // namespace

ChordResult rational_diameter(const Polygon& p) {
  if (p.size() == 1) return {0, {1, 0}, p[0]};
  if (p.size() == 2) {
    Point d = p[1] - p[0];
    DualVector dir = integer_direction(d);
    Rational len = dir.a != 0 ? Rational(d.x / Rational(dir.a)) : Rational(d.y / Rational(dir.b));
    return {len, dir, p[0]};
  }
  auto hs = halfplanes(p);
  Rational diam2 = 0;
  for (const auto& a : p.vertices())
    for (const auto& b : p.vertices()) {
      Rational d2 = dot(a - b, a - b);
      if (d2 > diam2) diam2 = d2;
    }
  ChordResult best{-1, {1, 0}, p[0]};
  auto consider = [&](const DualVector& u) {
    auto [len, anchor] = longest_chord(p, hs, u);
    if (len > best.length || (len == best.length && tie_break_less(u, best.direction)))
      best = {len, u, anchor};
  };
  consider({1, 0});
  consider({0, 1});
  // |v|^2 * t^2 <= diam^2 for any chord of lattice length t along v.
  for (long r = 1; Rational(r * r) * best.length * best.length <= diam2; ++r) {
    for_each_on_ring(r, [&](const DualVector& u) {
      Rational n2 = Rational(u.a * u.a + u.b * u.b);
      if (n2 * best.length * best.length <= diam2) consider(u);
    });
  }
  return best;
}

Polygon apply_map(const UnimodularMap& u, const Polygon& p) {
  validate(u);
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(u(v));
  return convex_hull(std::move(pts));
}

bool is_unimodular_delta2_copy(const Polygon& tri, Ring ring) {
  if (tri.size() != 3) return false;
  Point e = tri[1] - tri[0], f = tri[2] - tri[0];
  if (!is_lattice_point(e) || !is_lattice_point(f)) return false;
  Rational d = cross(e, f);
  if (d != 1 && d != -1) return false;
  return ring == Ring::R || is_lattice_point(tri[0]);
}

namespace {

std::optional<UnimodularMap> fit(const Point& p0, const Point& p1, const Point& p2, const Point& q0,
                                 const Point& q1, const Point& q2, Ring ring) {
  Point a = p1 - p0, b = p2 - p0, c = q1 - q0, d = q2 - q0;
  Rational det = cross(a, b);
  if (det == 0) return std::nullopt;
  // M [a b] = [c d]  =>  M = [c d] [a b]^{-1}
  Rational m11 = (c.x * b.y - d.x * a.y) / det;
  Rational m12 = (d.x * a.x - c.x * b.x) / det;
  Rational m21 = (c.y * b.y - d.y * a.y) / det;
  Rational m22 = (d.y * a.x - c.y * b.x) / det;
  if (!is_integer(m11) || !is_integer(m12) || !is_integer(m21) || !is_integer(m22))
    return std::nullopt;
  UnimodularMap u;
  u.m11 = m11.get_num();
  u.m12 = m12.get_num();
  u.m21 = m21.get_num();
  u.m22 = m22.get_num();
  if (u.det() != 1 && u.det() != -1) return std::nullopt;
  u.ring = ring;
  u.t = {0, 0};
  u.t = q0 - u(p0);
  if (ring == Ring::Z && !is_lattice_point(u.t)) return std::nullopt;
  return u;
}

}  // namespace

std::optional<UnimodularMap> unimodular_equivalent(const Polygon& p, const Polygon& q, Ring ring,
                                                   int radius) {
  if (p.size() != q.size() || area2(p) != area2(q)) return std::nullopt;
  if (lattice_width(p).width != lattice_width(q).width) return std::nullopt;
  const std::size_t n = p.size();

  if (n >= 3) {
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t k = 0; k < n; ++k) {
        auto qi = [&](std::size_t i) -> const Point& {
          return flip ? q[(k + n - i) % n] : q[(k + i) % n];
        };
        auto u = fit(p[0], p[1], p[2], qi(0), qi(1), qi(2), ring);
        if (u && apply_map(*u, p) == q) return u;
      }
    }
    return std::nullopt;
  }

  for (long a = -radius; a <= radius; ++a)
    for (long b = -radius; b <= radius; ++b)
      for (long c = -radius; c <= radius; ++c)
        for (long d = -radius; d <= radius; ++d) {
          long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          UnimodularMap u{a, b, c, d, {0, 0}, ring};
          for (std::size_t s = 0; s < n; ++s) {
            u.t = {0, 0};
            u.t = q[s] - u(p[0]);
            if (ring == Ring::Z && !is_lattice_point(u.t)) continue;
            if (apply_map(u, p) == q) return u;
          }
        }
  return std::nullopt;
}

}  // namespace flatcert
