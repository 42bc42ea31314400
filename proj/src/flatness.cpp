#include "flatcert/flatness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace flatcert {

// ---- one dimension ------------------------------------------------------

Rational flt1_z(const Interval1D& i) {
  if (i.x > i.y) throw std::invalid_argument("flt1_z: x > y");
  Rational fx = i.x - Rational(floor_q(i.x));
  Rational gy = Rational(ceil_q(i.y)) - i.y;
  Rational d = Rational(floor_q(i.x) + ceil_q(i.y));
  if (fx <= gy) return std::max(Rational(d - 2 * i.x), Rational(1 + 2 * i.y - d));
  return std::max(Rational(2 * i.y - d), Rational(1 + d - 2 * i.x));
}

Rational flt1_oracle(const Interval1D& i, int range) {
  if (i.x > i.y) throw std::invalid_argument("flt1_oracle: x > y");
  if (range < 2) throw std::invalid_argument("flt1_oracle: range must be >= 2");
  // integer translates do not change the value; put the midpoint in [0, 1)
  // so both families have left endpoints in [x, x+1) for small k
  Rational shift(floor_q((i.x + i.y) / 2));
  Rational x = i.x - shift, y = i.y - shift;
  std::vector<std::pair<Rational, Rational>> js;
  for (long k = -range; k <= range; ++k) {
    js.emplace_back(x + k, y + k);
    js.emplace_back(k - y, k - x);
  }
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  Rational best = 0;
  for (std::size_t k = 0; k + 1 < js.size(); ++k) {
    // one period: left endpoints in [x, x+1)
    if (js[k].first < x || js[k].first >= x + 1) continue;
    Rational w = std::max(js[k].second, js[k + 1].second) - js[k].first;
    if (w > best) best = w;
  }
  return best;
}

// ---- parametric triangles -----------------------------------------------

std::string to_string(const ParamPoint& p) {
  return "(" + to_string(p.lambda) + "," + to_string(p.mu) + "," + to_string(p.nu) + ")";
}

Rational delta(const ParamPoint& p) {
  return p.lambda * p.mu * p.nu + (1 - p.lambda) * (1 - p.mu) * (1 - p.nu);
}

namespace {

using Coeffs = std::array<LinearForm3, 3>;  // coefficients of A, B, C

LinearForm3 lf(long c0, long c1, long c2, long c3) {
  return {Rational(c0), Rational(c1), Rational(c2), Rational(c3)};
}

// delta * (X - Y), delta * (Y - Z), delta * (Z - X) in terms of A, B, C.
Coeffs diff_xy() { return {lf(0, 0, -1, 0), lf(1, -1, 0, 0), lf(-1, 1, 1, 0)}; }
Coeffs diff_yz() { return {lf(-1, 0, 1, 1), lf(0, 0, 0, -1), lf(1, 0, -1, 0)}; }
Coeffs diff_zx() { return {lf(1, 0, 0, -1), lf(-1, 1, 0, 1), lf(0, -1, 0, 0)}; }

Coeffs diff(Vertex i, Vertex j) {
  auto neg = [](Coeffs c) {
    for (auto& f : c) f = -f;
    return c;
  };
  if (i == VX && j == VY) return diff_xy();
  if (i == VY && j == VX) return neg(diff_xy());
  if (i == VY && j == VZ) return diff_yz();
  if (i == VZ && j == VY) return neg(diff_yz());
  if (i == VZ && j == VX) return diff_zx();
  if (i == VX && j == VZ) return neg(diff_zx());
  throw std::invalid_argument("scaled_difference: vertices must differ");
}

LinearForm3 apply_functional(const Coeffs& c, const CaseSpec& s, const Point& u) {
  return dot(u, s.A) * c[0] + dot(u, s.B) * c[1] + dot(u, s.C) * c[2];
}

// Inner-side form of the facet through vertices i, j, which passes through L.
LinearForm3 inner_side(const CaseSpec& s, Vertex i, Vertex j, const Point& L, const Point& q) {
  auto n = scaled_difference(s, i, j);
  Point d = q - L;
  // -cross(N, d) = d.x * N.y - d.y * N.x
  return d.x * n[1] - d.y * n[0];
}

}  // namespace

std::array<LinearForm3, 2> scaled_difference(const CaseSpec& s, Vertex i, Vertex j) {
  Coeffs c = diff(i, j);
  return {apply_functional(c, s, {1, 0}), apply_functional(c, s, {0, 1})};
}

CaseSpec make_case(std::string name, Point A, Point B, Point C, std::vector<DualVector> dirs,
                   std::vector<std::array<Vertex, 2>> pairs, std::vector<LinearForm3> constraints) {
  if (dirs.size() != pairs.size()) throw std::invalid_argument("make_case: one vertex pair per direction");
  CaseSpec s{std::move(name), std::move(A), std::move(B), std::move(C), std::move(dirs),
             std::move(pairs), std::move(constraints), {}};
  for (std::size_t k = 0; k < s.width_directions.size(); ++k) {
    const auto& u = s.width_directions[k];
    Coeffs c = diff(s.width_pairs[k][0], s.width_pairs[k][1]);
    s.numerators.push_back(apply_functional(c, s, {Rational(u.a), Rational(u.b)}));
  }
  return s;
}

CaseSpec case1() {
  return make_case("case1", {1, 1}, {0, -1}, {0, 1}, {{1, 0}, {0, 1}, {1, -1}},
                   {{VZ, VX}, {VY, VX}, {VZ, VY}},
                   {lf(1, -1, -1, 0), lf(1, 0, -1, -1), lf(1, -1, 0, -1), lf(-1, 2, 0, 1)});
}

CaseSpec case2() {
  CaseSpec s = make_case("case2", {1, 1}, {0, 1}, {-1, -1}, {{1, 0}, {0, 1}, {1, -1}},
                         {{VY, VX}, {VZ, VX}, {VY, VZ}}, {});
  struct Facet {
    Vertex i, j;
    Point through;
    std::vector<Point> beyond;
  };
  const std::vector<Facet> facets = {
      {VX, VY, s.C, {{0, -1}, {1, -1}, {2, -1}}},
      {VY, VZ, s.A, {{2, 1}, {1, 2}}},
      {VZ, VX, s.B, {{-1, 1}, {0, 2}, {-2, -1}}},
  };
  for (const auto& f : facets) {
    for (const Point& q : {Point{0, 0}, Point{1, 0}}) s.q_constraints.push_back(inner_side(s, f.i, f.j, f.through, q));
    for (const auto& q : f.beyond) s.q_constraints.push_back(-inner_side(s, f.i, f.j, f.through, q));
  }
  return s;
}

std::optional<CaseSpec> builtin_case(const std::string& name) {
  if (name == "case1" || name == "1") return case1();
  if (name == "case2" || name == "2") return case2();
  return std::nullopt;
}

std::array<Point, 3> param_vertices(const CaseSpec& s, const ParamPoint& p) {
  Rational d = delta(p);
  if (d == 0) throw std::invalid_argument("param_triangle: delta vanishes at " + to_string(p));
  const Rational &l = p.lambda, &m = p.mu, &n = p.nu;
  Rational lb = 1 - l, mb = 1 - m, nb = 1 - n;
  auto comb = [&](const Rational& a, const Rational& b, const Rational& c) {
    return Rational(1 / d) * (a * s.A + b * s.B + c * s.C);
  };
  Point X = comb(-m * nb, lb * nb, l * m);
  Point Y = comb(m * n, -lb * n, lb * mb);
  Point Z = comb(mb * nb, l * n, -l * mb);
  return {X, Y, Z};
}

Polygon param_triangle(const CaseSpec& s, const ParamPoint& p) {
  auto v = param_vertices(s, p);
  return convex_hull({v[0], v[1], v[2]});
}

HRep case_polytope(const CaseSpec& s) {
  HRep h = {lf(0, 1, 0, 0), lf(1, -1, 0, 0), lf(0, 0, 1, 0), lf(1, 0, -1, 0), lf(0, 0, 0, 1), lf(1, 0, 0, -1)};
  h.insert(h.end(), s.q_constraints.begin(), s.q_constraints.end());
  return h;
}

namespace {

Row3 row(const LinearForm3& f, bool strict = false) { return {{f.c0, f.c1, f.c2, f.c3}, strict}; }

std::vector<Row3> rows_of(const HRep& q) {
  std::vector<Row3> r;
  for (const auto& f : q) r.push_back(row(f));
  return r;
}

Box3 unit_box() { return {{0, 0, 0}, {1, 1, 1}}; }

// Solves the 3x3 system f_a = f_b = f_c = 0.
std::optional<ParamPoint> solve3(const LinearForm3& a, const LinearForm3& b, const LinearForm3& c) {
  std::array<std::array<Rational, 4>, 3> m = {{{a.c1, a.c2, a.c3, -a.c0},
                                                {b.c1, b.c2, b.c3, -b.c0},
                                                {c.c1, c.c2, c.c3, -c.c0}}};
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return ParamPoint{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

bool feasible_box(const HRep& q, const Box3& box) { return fm_feasible(rows_of(q), box); }

bool in_hrep(const HRep& q, const ParamPoint& p) {
  for (const auto& f : q)
    if (f(p) < 0) return false;
  return true;
}

std::vector<ParamPoint> hrep_vertices(const HRep& q) {
  std::set<ParamPoint> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      for (std::size_t k = j + 1; k < q.size(); ++k) {
        auto p = solve3(q[i], q[j], q[k]);
        if (p && in_hrep(q, *p)) out.insert(*p);
      }
  return {out.begin(), out.end()};
}

std::vector<LinearityRegion> linearity_regions(const HRep& q, const std::vector<LinearForm3>& numerators) {
  if (numerators.empty()) throw std::invalid_argument("linearity_regions: no numerators");
  std::vector<LinearityRegion> out;
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    HRep h = q;
    for (std::size_t j = 0; j < numerators.size(); ++j)
      if (j != i) h.push_back(numerators[j] - numerators[i]);
    auto verts = hrep_vertices(h);
    if (verts.empty()) continue;
    out.push_back({i, std::move(h), std::move(verts)});
  }
  return out;
}

Rational ratio(const std::vector<LinearForm3>& numerators, const ParamPoint& p) {
  Rational d = delta(p);
  if (d <= 0) throw std::invalid_argument("ratio: delta must be positive at " + to_string(p));
  Rational m = numerators.at(0)(p);
  for (const auto& f : numerators) m = std::min(m, f(p));
  return m / d;
}

// ---- branch and bound ---------------------------------------------------

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::Counterexample: return "Counterexample";
    case CertStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Split: return "split";
    case NodeKind::Infeasible: return "infeasible";
    case NodeKind::CornerBound: return "corner";
    case NodeKind::Linearized: return "linear";
    case NodeKind::Open: return "open";
  }
  return "?";
}

namespace {

struct Problem {
  const HRep& q;
  std::vector<Row3> qrows;
  const std::vector<LinearForm3>& nums;
  Rational t;
};

ParamPoint corner(const Box3& b, int mask) {
  return {(mask & 1) ? b.hi[0] : b.lo[0], (mask & 2) ? b.hi[1] : b.lo[1], (mask & 4) ? b.hi[2] : b.lo[2]};
}

bool infeasible_test(const Problem& pr, const Box3& b) { return !fm_feasible(pr.qrows, b); }

// min over the box of delta is positive and some numerator stays below t * that.
bool corner_test(const Problem& pr, const Box3& b) {
  std::array<ParamPoint, 8> cs;
  for (int m = 0; m < 8; ++m) cs[m] = corner(b, m);
  Rational dmin = delta(cs[0]);
  for (const auto& c : cs) dmin = std::min(dmin, delta(c));
  if (dmin <= 0) return false;
  for (const auto& f : pr.nums) {
    Rational fmax = f(cs[0]);
    for (const auto& c : cs) fmax = std::max(fmax, f(c));
    if (fmax <= pr.t * dmin) return true;
  }
  return false;
}

// Linear minorant of delta on the box, expanded at the given corner. With
// d = p - c and s the sign of d on the box,
//   delta(c + d) = delta(c) + grad . d + sum_{j<k} d_j d_k,
// products of equal sign are dropped and mixed ones bounded by the widths.
LinearForm3 delta_minorant(const Box3& b, int mask) {
  ParamPoint c = corner(b, mask);
  std::array<Rational, 3> grad = {-1 + c.mu + c.nu, -1 + c.lambda + c.nu, -1 + c.lambda + c.mu};
  std::array<int, 3> s;
  std::array<Rational, 3> w;
  for (int k = 0; k < 3; ++k) {
    s[k] = (mask >> k & 1) ? -1 : 1;
    w[k] = b.hi[k] - b.lo[k];
  }
  // coefficient on d_k
  std::array<Rational, 3> coef = grad;
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) {
      if (s[j] == s[k]) continue;
      // |d_j d_k| <= (w_j |d_k| + w_k |d_j|) / 2, |d_k| = s_k d_k
      coef[k] -= w[j] * s[k] / Rational(2);
      coef[j] -= w[k] * s[j] / Rational(2);
    }
  LinearForm3 m{delta(c), coef[0], coef[1], coef[2]};
  m.c0 -= coef[0] * c.lambda + coef[1] * c.mu + coef[2] * c.nu;
  return m;
}

bool linear_test(const Problem& pr, const Box3& b, int mask) {
  if (pr.t < 0) return false;
  LinearForm3 m = delta_minorant(b, mask);
  std::vector<Row3> rows = pr.qrows;
  for (const auto& f : pr.nums) rows.push_back(row(f - pr.t * m, true));
  return !fm_feasible(rows, b);
}

bool in_box(const Box3& b, const ParamPoint& p) {
  for (int k = 0; k < 3; ++k)
    if (p[k] < b.lo[k] || p[k] > b.hi[k]) return false;
  return true;
}

struct BoxOutcome {
  NodeKind kind = NodeKind::Open;
  int anchor = -1;
  int axis = -1;
  Rational at;
  std::optional<ParamPoint> hit;  // center above target
  Rational hit_value;
};

BoxOutcome process(const Problem& pr, const std::vector<ParamPoint>& crit, const Box3& b, bool may_split) {
  BoxOutcome out;
  if (infeasible_test(pr, b)) {
    out.kind = NodeKind::Infeasible;
    return out;
  }
  if (corner_test(pr, b)) {
    out.kind = NodeKind::CornerBound;
    return out;
  }
  std::vector<int> anchors;
  for (int m = 0; m < 8; ++m)
    if (std::find(crit.begin(), crit.end(), corner(b, m)) != crit.end()) anchors.push_back(m);
  for (int m : {0, 7})
    if (std::find(anchors.begin(), anchors.end(), m) == anchors.end()) anchors.push_back(m);
  for (int m : anchors)
    if (linear_test(pr, b, m)) {
      out.kind = NodeKind::Linearized;
      out.anchor = m;
      return out;
    }

  ParamPoint center{(b.lo[0] + b.hi[0]) / 2, (b.lo[1] + b.hi[1]) / 2, (b.lo[2] + b.hi[2]) / 2};
  if (delta(center) > 0 && in_hrep(pr.q, center)) {
    Rational r = ratio(pr.nums, center);
    if (r > pr.t) {
      out.hit = center;
      out.hit_value = r;
    }
  }
  if (!may_split) return out;

  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (b.hi[k] - b.lo[k] > b.hi[axis] - b.lo[axis]) axis = k;
  Rational mid = (b.lo[axis] + b.hi[axis]) / 2;
  std::optional<Rational> at;
  for (const auto& p : crit) {
    if (!in_box(b, p) || p[axis] <= b.lo[axis] || p[axis] >= b.hi[axis]) continue;
    if (!at || abs_q(p[axis] - mid) < abs_q(*at - mid) ||
        (abs_q(p[axis] - mid) == abs_q(*at - mid) && p[axis] < *at))
      at = p[axis];
  }
  out.kind = NodeKind::Split;
  out.axis = axis;
  out.at = at ? *at : mid;
  return out;
}

std::pair<Box3, Box3> split(const Box3& b, int axis, const Rational& at) {
  Box3 l = b, r = b;
  l.hi[axis] = at;
  r.lo[axis] = at;
  return {l, r};
}

std::vector<ParamPoint> critical_points(const HRep& q, const std::vector<LinearForm3>& nums) {
  std::set<ParamPoint> s;
  for (const auto& v : hrep_vertices(q)) s.insert(v);
  for (const auto& r : linearity_regions(q, nums))
    for (const auto& v : r.vertices) s.insert(v);
  return {s.begin(), s.end()};
}

}  // namespace

RatioCertificate bb_certify_max(const HRep& q, const std::vector<LinearForm3>& numerators,
                                const Rational& target, const BBLimits& limits) {
  RatioCertificate cert;
  cert.target = target;
  Problem pr{q, rows_of(q), numerators, target};
  auto crit = critical_points(q, numerators);

  // exact candidates first: the largest ratio wins, ties by smallest point
  for (const auto& p : crit) {
    if (delta(p) <= 0) continue;
    Rational r = ratio(numerators, p);
    if (r > target && (!cert.value || r > *cert.value)) {
      cert.point = p;
      cert.value = r;
    }
  }
  if (cert.point) {
    cert.status = CertStatus::Counterexample;
    return cert;
  }

  struct Item {
    std::size_t node;
    Box3 box;
  };
  std::vector<Item> level{{0, unit_box()}};
  cert.nodes.emplace_back();
  bool open = false;
  for (int depth = 0; !level.empty(); ++depth) {
    cert.max_depth_reached = depth;
    std::vector<BoxOutcome> res(level.size());
    const bool may_split = depth < limits.max_depth;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < level.size();) res[i] = process(pr, crit, level[i].box, may_split);
    };
    int nt = std::max(1, std::min<int>(limits.threads, static_cast<int>(level.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < nt; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::optional<ParamPoint> hit;
    Rational hit_value;
    for (const auto& r : res)
      if (r.hit && (!hit || *r.hit < *hit)) {
        hit = r.hit;
        hit_value = r.hit_value;
      }
    if (hit) {
      cert.status = CertStatus::Counterexample;
      cert.point = hit;
      cert.value = hit_value;
      return cert;
    }

    std::vector<Item> next_level;
    for (std::size_t i = 0; i < level.size(); ++i) {
      CertNode& n = cert.nodes[level[i].node];
      n.kind = res[i].kind;
      n.anchor = res[i].anchor;
      if (n.kind == NodeKind::Open) open = true;
      if (n.kind != NodeKind::Split) continue;
      n.axis = res[i].axis;
      n.at = res[i].at;
      auto [l, r] = split(level[i].box, n.axis, n.at);
      std::size_t li = cert.nodes.size();
      cert.nodes[level[i].node].left = li;
      cert.nodes[level[i].node].right = li + 1;
      cert.nodes.emplace_back();
      cert.nodes.emplace_back();
      next_level.push_back({li, l});
      next_level.push_back({li + 1, r});
    }
    cert.box_count = cert.nodes.size();
    if (cert.box_count > limits.max_boxes) {
      cert.status = CertStatus::Inconclusive;
      return cert;
    }
    level = std::move(next_level);
  }
  cert.status = open ? CertStatus::Inconclusive : CertStatus::Certified;
  return cert;
}

bool replay_certificate(const HRep& q, const std::vector<LinearForm3>& numerators,
                        const RatioCertificate& cert, const Rational& target) {
  if (cert.status == CertStatus::Counterexample) {
    if (!cert.point || !cert.value) return false;
    const ParamPoint& p = *cert.point;
    return in_hrep(q, p) && delta(p) > 0 && ratio(numerators, p) == *cert.value && *cert.value > target;
  }
  if (cert.status != CertStatus::Certified || cert.nodes.empty()) return false;
  Problem pr{q, rows_of(q), numerators, target};
  std::vector<std::pair<std::size_t, Box3>> stack{{0, unit_box()}};
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto [i, b] = stack.back();
    stack.pop_back();
    if (i >= cert.nodes.size() || ++visited > cert.nodes.size()) return false;
    const CertNode& n = cert.nodes[i];
    switch (n.kind) {
      case NodeKind::Split: {
        if (n.axis < 0 || n.axis > 2 || n.at <= b.lo[n.axis] || n.at >= b.hi[n.axis]) return false;
        auto [l, r] = split(b, n.axis, n.at);
        stack.push_back({n.right, r});
        stack.push_back({n.left, l});
        break;
      }
      case NodeKind::Infeasible:
        if (!infeasible_test(pr, b)) return false;
        break;
      case NodeKind::CornerBound:
        if (!corner_test(pr, b)) return false;
        break;
      case NodeKind::Linearized:
        if (n.anchor < 0 || n.anchor > 7 || !linear_test(pr, b, n.anchor)) return false;
        break;
      case NodeKind::Open:
        return false;
    }
  }
  return true;
}

// ---- quadrilateral families ---------------------------------------------

RectQuad quad_rect(const QuadParams& p) {
  const Rational &k = p.kappa, &l = p.lambda, &m = p.mu, &n = p.nu;
  if (!(k > 0 && m > 0 && l > -1 && l < 1 && n > -1 && n < 1))
    throw std::invalid_argument("quad_rect: need kappa, mu > 0 and -1 < lambda, nu < 1");
  Rational d1 = (1 - n) * k + (1 - l) * m;
  Rational d2 = (1 + n) * k + (1 + l) * m;
  RectQuad r;
  r.top = {(1 - n) * k / d1, (1 - n) * (1 - l) / d1 + 1};
  r.bottom = {(1 + n) * k / d2, -(1 + n) * (1 + l) / d2 - 1};
  r.polygon = convex_hull({{-k, l}, {1 + m, n}, r.top, r.bottom});
  r.width_h = k + m + 1;
  r.width_v = 2 + (1 + l) * (1 + n) / ((1 + l) * m + (1 + n) * k) +
              (1 - l) * (1 - n) / ((1 - l) * m + (1 - n) * k);
  return r;
}

Point cross_to_standard(const Point& p) { return {(p.x + p.y) / 2, (p.x - p.y) / 2}; }

CrossQuad quad_cross(const QuadParams& p) {
  const Rational &k = p.kappa, &l = p.lambda, &m = p.mu, &n = p.nu;
  if (!(k > -1 && k < 1 && m > -1 && m < 1 && l > 1 && n < -1))
    throw std::invalid_argument("quad_cross: need -1 < kappa, mu < 1, lambda > 1, nu < -1");
  Rational sz = (l - 1) / (k - 1), sw = (n + 1) / (m - 1);     // slopes through f1, f2
  Rational sz2 = (l - 1) / (k + 1), sw2 = (n + 1) / (m + 1);  // slopes through -f2, -f1
  Rational d1 = sw - sz, d2 = sz2 - sw2;
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("quad_cross: degenerate denominators");
  CrossQuad c;
  c.Z = {k, l};
  c.W = {m, n};
  c.Y = Point{1, -1} + Rational(2 / d1) * Point{1, sw};
  c.X = Point{-1, 1} - Rational(2 / d2) * Point{1, sz2};
  c.w0 = 2 + 2 / d1 + 2 / d2;
  c.w1 = (k - m) / 2 + (l - n) / 2;
  c.w2 = (m - k) / 2 + (l - n) / 2;
  c.polygon = convex_hull({cross_to_standard(c.X), cross_to_standard(c.Y), cross_to_standard(c.Z),
                           cross_to_standard(c.W)});
  return c;
}

}  // namespace flatcert
