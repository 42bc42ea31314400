#include <doctest.h>

#include <numeric>

#include "oracles.hpp"

using namespace flatcert;
using oracle::poly;

namespace {

const Polygon kDelta = convex_hull({Point(0, 0), Point(1, 0), Point(0, 1)});
const Polygon kCross = convex_hull({Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)});
const Polygon kSquare = convex_hull({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});

Polygon maximizer() { return poly({{"1/3", "5/3"}, {"-4/3", "-5/3"}, {"2", "0"}}); }

UnimodularMap random_map(oracle::Gen& g, Ring ring) {
  UnimodularMap m;
  for (int k = 0; k < 4; ++k) {
    long s = g.integer(-2, 2);
    UnimodularMap e;
    if (g.integer(0, 1)) e.m12 = s;
    else e.m21 = s;
    UnimodularMap r;
    r.m11 = e.m11 * m.m11 + e.m12 * m.m21;
    r.m12 = e.m11 * m.m12 + e.m12 * m.m22;
    r.m21 = e.m21 * m.m11 + e.m22 * m.m21;
    r.m22 = e.m21 * m.m12 + e.m22 * m.m22;
    m = r;
  }
  if (g.integer(0, 1)) {
    m.m11 = -m.m11;
    m.m12 = -m.m12;
  }
  m.ring = ring;
  m.t = ring == Ring::Z ? Point(g.integer(-3, 3), g.integer(-3, 3)) : g.point(-3, 3, 5);
  return m;
}

// Longest chord along v via the difference body p - p.
Rational chord_oracle(const Polygon& p, long vx, long vy) {
  std::vector<Point> diffs;
  for (const auto& a : p.vertices())
    for (const auto& b : p.vertices()) diffs.push_back(a - b);
  auto d = oracle::hull(diffs);
  if (d.size() < 3) {
    // segment through the origin
    Rational best = 0;
    for (const auto& q : d) {
      if (q.x * vy - q.y * vx != 0) continue;
      Rational s = vx != 0 ? q.x / vx : q.y / vy;
      if (s > best) best = s;
    }
    return best;
  }
  Rational best = -1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point &u = d[i], &w = d[(i + 1) % d.size()];
    Rational a = w.y - u.y, b = -(w.x - u.x), c = a * u.x + b * u.y;
    Rational av = a * vx + b * vy;
    if (av > 0 && (best < 0 || c / av < best)) best = c / av;
  }
  return best;
}

Rational diameter_oracle(const Polygon& p, long bound) {
  Rational best = 0;
  for (long a = -bound; a <= bound; ++a)
    for (long b = 0; b <= bound; ++b) {
      if ((b == 0 && a <= 0) || std::gcd(a, b) != 1) continue;
      best = std::max(best, chord_oracle(p, a, b));
    }
  return best;
}

}  // namespace

TEST_CASE("width_along examples") {
  CHECK(width_along(kCross, {1, 1}) == 2);
  CHECK(width_along(kDelta, {1, 0}) == 1);
  CHECK(width_along(maximizer(), {1, 0}) == Rational(10, 3));
  CHECK(width_along(convex_hull({Point(5, 5)}), {2, 3}) == 0);
  CHECK_THROWS_AS(width_along(kDelta, {0, 0}), std::invalid_argument);
}

TEST_CASE("lattice_width examples") {
  auto w = lattice_width(kSquare);
  CHECK(w.width == 1);
  CHECK(w.u == DualVector{1, 0});
  CHECK(lattice_width(kCross).width == 2);
  CHECK(lattice_width(maximizer()).width == Rational(10, 3));
  auto pt = lattice_width(convex_hull({Point(1, 2)}));
  CHECK(pt.width == 0);
  CHECK(pt.u == DualVector{1, 0});
}

TEST_CASE("tie-break order") {
  CHECK(tie_break_less({1, 0}, {0, 1}));
  CHECK(tie_break_less({0, 1}, {1, 1}));
  CHECK(tie_break_less({1, -1}, {1, 1}));
  CHECK(primitive({-2, 4}) == DualVector{1, -2});
  CHECK(primitive({0, -3}) == DualVector{0, 1});
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
}

TEST_CASE("lattice_width matches exhaustive search") {
  oracle::Gen g(21);
  for (int it = 0; it < 200; ++it) {
    auto p = g.polygon(-4, 4, 7);
    auto w = lattice_width(p);
    CHECK(w.width == oracle::lattice_width(p.vertices()));
    CHECK(width_along(p, w.u) == w.width);
    CHECK(is_primitive(w.u));
    for (int k = 0; k < 5; ++k) {
      DualVector u{g.integer(-9, 9), g.integer(-9, 9)};
      if (u.a == 0 && u.b == 0) continue;
      CHECK(w.width <= width_along(p, u));
    }
  }
}

TEST_CASE("lattice_width is invariant under unimodular maps") {
  oracle::Gen g(22);
  for (int it = 0; it < 100; ++it) {
    auto p = g.polygon(-3, 3, 4);
    auto m = random_map(g, it % 2 ? Ring::Z : Ring::R);
    validate(m);
    auto q = apply_map(m, p);
    auto wp = lattice_width(p), wq = lattice_width(q);
    CHECK(wp.width == wq.width);
    // u transported through M^-1: u'(Mx) = u(x)  =>  u' = u M^-1
    Integer d = m.det();
    DualVector ut{d * (wp.u.a * m.m22 - wp.u.b * m.m21), d * (-wp.u.a * m.m12 + wp.u.b * m.m11)};
    CHECK(width_along(q, ut) == wp.width);
  }
}

TEST_CASE("rational_diameter examples") {
  CHECK(rational_diameter(kSquare).length == 1);
  auto c = rational_diameter(kCross);
  CHECK(c.length == 2);
  CHECK(c.direction == DualVector{1, 0});
  auto s = rational_diameter(convex_hull({Point(0, 0), Point(3, 0)}));
  CHECK(s.length == 3);
  CHECK(s.direction == DualVector{1, 0});
}

TEST_CASE("rational_diameter matches the difference-body oracle") {
  oracle::Gen g(23);
  for (int it = 0; it < 150; ++it) {
    auto p = g.polygon(-3, 3, 5);
    auto c = rational_diameter(p);
    CHECK(c.length == diameter_oracle(p, 12));
    // the reported chord lies in p
    Point end = c.anchor + c.length * Point(Rational(c.direction.a), Rational(c.direction.b));
    CHECK(contains_point(p, c.anchor));
    CHECK(contains_point(p, end));
    if (lattice_points(p).size() >= 2) CHECK(c.length >= 1);
    CHECK(lattice_width(p).width <= 2 * c.length);
  }
}

TEST_CASE("apply_map examples") {
  UnimodularMap id;
  CHECK(apply_map(id, kDelta) == kDelta);
  UnimodularMap shear;
  shear.m12 = 1;
  CHECK(apply_map(shear, kSquare) == convex_hull({Point(0, 0), Point(1, 0), Point(2, 1), Point(1, 1)}));
  UnimodularMap neg;
  neg.m11 = -1;
  neg.m22 = -1;
  neg.t = Point(1, 1);
  CHECK(apply_map(neg, kDelta) == convex_hull({Point(1, 1), Point(0, 1), Point(1, 0)}));
  UnimodularMap bad;
  bad.m11 = 2;
  CHECK_THROWS_AS(apply_map(bad, kDelta), std::invalid_argument);
  UnimodularMap frac;
  frac.t = {Rational(1, 2), Rational(0)};
  CHECK_THROWS_AS(validate(frac), std::invalid_argument);
  frac.ring = Ring::R;
  CHECK_NOTHROW(validate(frac));
}

TEST_CASE("is_unimodular_delta2_copy") {
  CHECK(is_unimodular_delta2_copy(kDelta, Ring::Z));
  auto shifted = translate(kDelta, {Rational(1, 3), Rational(1, 3)});
  CHECK_FALSE(is_unimodular_delta2_copy(shifted, Ring::Z));
  CHECK(is_unimodular_delta2_copy(shifted, Ring::R));
  CHECK(is_unimodular_delta2_copy(convex_hull({Point(0, 0), Point(2, 1), Point(1, 1)}), Ring::Z));
  CHECK_FALSE(is_unimodular_delta2_copy(scale(kDelta, 2), Ring::R));
  CHECK_FALSE(is_unimodular_delta2_copy(kSquare, Ring::R));
}

TEST_CASE("unimodular_equivalent") {
  auto m = unimodular_equivalent(kDelta, kDelta, Ring::Z);
  REQUIRE(m);
  CHECK(apply_map(*m, kDelta) == kDelta);
  CHECK_FALSE(unimodular_equivalent(kDelta, scale(kDelta, 2), Ring::R));
  auto a = poly({{"-2", "2"}, {"4/3", "1/3"}, {"-1/3", "-4/3"}});
  auto b = maximizer();
  auto ab = unimodular_equivalent(a, b, Ring::Z);
  REQUIRE(ab);
  CHECK(apply_map(*ab, a) == b);
  validate(*ab);

  oracle::Gen g(24);
  for (int it = 0; it < 50; ++it) {
    auto p = g.polygon(-2, 2, 3);
    Ring ring = it % 2 ? Ring::Z : Ring::R;
    auto q = apply_map(random_map(g, ring), p);
    auto f = unimodular_equivalent(p, q, ring);
    REQUIRE(f);
    CHECK(f->ring == ring);
    CHECK(apply_map(*f, p) == q);
  }
  // Z maps cannot absorb a fractional shift
  CHECK_FALSE(unimodular_equivalent(kDelta, translate(kDelta, {Rational(1, 2), Rational(0)}), Ring::Z));
  CHECK(unimodular_equivalent(kDelta, translate(kDelta, {Rational(1, 2), Rational(0)}), Ring::R));
}
