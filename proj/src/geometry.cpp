#include "flatcert/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatcert {

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

std::string to_string(const Polygon& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + "]";
}

Polygon convex_hull(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: empty point list");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon out;
  if (pts.size() <= 2) {
    out.v_ = pts;
    return out;
  }
  // Andrew's monotone chain; collinear points are dropped (<= 0).
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= t && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  // all collinear: the chain collapses to the two extremes
  out.v_ = std::move(h);
  return out;
}

MaybePolygon clip(const Polygon& p, const HalfPlane& h) {
  const auto& v = p.vertices();
  std::vector<Point> out;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    Rational sa = h.slack(a), sb = h.slack(b);
    if (sa >= 0) out.push_back(a);
    if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
      Rational t = sa / (sa - sb);
      out.push_back(a + t * (b - a));
    }
  }
  if (out.empty()) return std::nullopt;
  return convex_hull(std::move(out));
}

std::vector<HalfPlane> halfplanes(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<HalfPlane> hs;
  if (v.size() == 1) {
    hs.push_back({1, 0, v[0].x});
    hs.push_back({-1, 0, -v[0].x});
    hs.push_back({0, 1, v[0].y});
    hs.push_back({0, -1, -v[0].y});
    return hs;
  }
  if (v.size() == 2) {
    Point d = v[1] - v[0];
    // the supporting line, as two opposite inequalities
    Rational c = d.y * v[0].x - d.x * v[0].y;
    hs.push_back({d.y, -d.x, c});
    hs.push_back({-d.y, d.x, -c});
    hs.push_back({d.x, d.y, dot(d, v[1])});
    hs.push_back({-d.x, -d.y, -dot(d, v[0])});
    return hs;
  }
  // left of each CCW edge a->b: cross(b-a, x-a) >= 0
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    Point d = b - a;
    hs.push_back({d.y, -d.x, d.y * a.x - d.x * a.y});
  }
  return hs;
}

MaybePolygon intersect(const Polygon& p, const Polygon& q) {
  MaybePolygon cur = p;
  for (const auto& h : halfplanes(q)) {
    cur = clip(*cur, h);
    if (!cur) return std::nullopt;
  }
  return cur;
}

MaybePolygon intersect(const MaybePolygon& p, const MaybePolygon& q) {
  if (!p || !q) return std::nullopt;
  return intersect(*p, *q);
}

namespace {

// Angular order of edge vectors, starting just after the downward direction.
bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& d) { return (d.x > 0 || (d.x == 0 && d.y > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::vector<Point> edge_vectors(const Polygon& p) {
  std::vector<Point> e;
  const auto& v = p.vertices();
  if (v.size() < 2) return e;
  for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
  return e;
}

}  // namespace

Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
  std::vector<Point> edges = edge_vectors(p);
  auto eq = edge_vectors(q);
  edges.insert(edges.end(), eq.begin(), eq.end());
  std::stable_sort(edges.begin(), edges.end(), angle_less);
  std::vector<Point> pts{p[0] + q[0]};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) pts.push_back(pts.back() + edges[i]);
  return convex_hull(std::move(pts));
}

MaybePolygon minkowski_difference(const Polygon& p, const Polygon& s) {
  MaybePolygon cur = translate(p, -s[0]);
  for (std::size_t i = 1; i < s.size() && cur; ++i) cur = intersect(*cur, translate(p, -s[i]));
  return cur;
}

int dimension(const Polygon& p) {
  if (p.size() == 1) return 0;
  if (p.size() == 2) return 1;
  return 2;
}

int dimension(const MaybePolygon& p) { return p ? dimension(*p) : -1; }

bool on_edge_line(const Polygon& p, std::size_t i, const Point& q) {
  auto [a, b] = p.edge(i);
  return orient(a, b, q) == 0;
}

bool in_edge_relint(const Polygon& p, std::size_t i, const Point& q) {
  auto [a, b] = p.edge(i);
  if (orient(a, b, q) != 0) return false;
  Rational t = dot(q - a, b - a);
  return t > 0 && t < dot(b - a, b - a);
}

bool contains_point(const Polygon& p, const Point& q, bool strict) {
  const auto& v = p.vertices();
  if (v.size() == 1) return v[0] == q;
  if (v.size() == 2) {
    if (orient(v[0], v[1], q) != 0) return false;
    Rational t = dot(q - v[0], v[1] - v[0]);
    Rational len = dot(v[1] - v[0], v[1] - v[0]);
    return strict ? (t > 0 && t < len) : (t >= 0 && t <= len);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational o = orient(v[i], v[(i + 1) % v.size()], q);
    if (o < 0 || (strict && o == 0)) return false;
  }
  return true;
}

bool contains(const Polygon& outer, const Polygon& inner) {
  for (const auto& v : inner.vertices())
    if (!contains_point(outer, v)) return false;
  return true;
}

std::vector<Point> lattice_points(const Polygon& p, Region region) {
  Rational xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  std::vector<Point> out;
  for (Integer x = ceil_q(xmin); x <= floor_q(xmax); ++x) {
    for (Integer y = ceil_q(ymin); y <= floor_q(ymax); ++y) {
      Point q{Rational(x), Rational(y)};
      if (!contains_point(p, q)) continue;
      bool inner = contains_point(p, q, true);
      if (region == Region::All || (region == Region::Interior) == inner) out.push_back(q);
    }
  }
  return out;
}

Polygon translate(const Polygon& p, const Point& d) {
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + d);
  return convex_hull(std::move(pts));
}

Polygon scale(const Polygon& p, const Rational& s) {
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(s * v);
  return convex_hull(std::move(pts));
}

Rational area2(const Polygon& p) {
  Rational a = 0;
  const auto& v = p.vertices();
  if (v.size() < 3) return a;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return a;
}

Point vertex_centroid(const Polygon& p) {
  Point c{0, 0};
  for (const auto& v : p.vertices()) c = c + v;
  return Rational(Integer(1), Integer(static_cast<unsigned long>(p.size()))) * c;
}

}  // namespace flatcert
