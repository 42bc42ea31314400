#include "flatcert/maximality.hpp"

#include <set>
#include <stdexcept>

namespace flatcert {

const char* to_string(LockKind k) {
  switch (k) {
    case LockKind::ZLock: return "Z-lock";
    case LockKind::RSkew: return "R-skew";
    case LockKind::RParallel: return "R-parallel";
    case LockKind::RGeneral: return "R-general";
  }
  return "?";
}

const char* to_string(FacetState s) {
  switch (s) {
    case FacetState::Locked: return "Locked";
    case FacetState::NotLocked: return "NotLocked";
    case FacetState::NoWitnessFound: return "NoWitnessFound";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Maximal: return "Maximal";
    case Verdict::NotMaximal: return "NotMaximal";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::NotACopy: return "not-a-copy";
    case RejectReason::NotContained: return "not-contained";
    case RejectReason::FaceNotInRelint: return "face-not-in-relint";
    case RejectReason::OppositeFaceTestFailed: return "opposite-face-test-failed";
  }
  return "?";
}

namespace {

void require_facet(const Polygon& p, std::size_t facet) {
  if (dimension(p) != 2) throw std::invalid_argument("maximality: polygon must be 2-dimensional");
  if (facet >= p.size()) throw std::invalid_argument("maximality: facet index out of range");
}

void require_z_free(const Polygon& p) {
  if (dimension(p) != 2) throw std::invalid_argument("maximality: polygon must be 2-dimensional");
  if (!is_z_delta2_free(p).free) throw std::invalid_argument("maximality: polygon is not Z-free");
}

bool z_locks(const Polygon& p, std::size_t facet, const Polygon& tri) {
  bool touches = false;
  for (const auto& v : tri.vertices()) {
    if (in_edge_relint(p, facet, v))
      touches = true;
    else if (!contains_point(p, v, true))
      return false;
  }
  return touches;
}

FacetResult z_lock_from(const Polygon& p, std::size_t facet,
                        const std::vector<UnimodularTriangle>& tris) {
  for (const auto& t : tris) {
    Polygon tri = t.polygon();
    if (z_locks(p, facet, tri)) return {FacetState::Locked, LockWitness{facet, tri, LockKind::ZLock}};
  }
  return {FacetState::NotLocked, std::nullopt};
}

bool parallel(const Polygon& p, std::size_t i, std::size_t j) {
  auto [a, b] = p.edge(i);
  auto [c, d] = p.edge(j);
  return cross(b - a, d - c) == 0;
}

std::optional<std::size_t> relint_facet(const Polygon& p, const Point& q) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (in_edge_relint(p, j, q)) return j;
  return std::nullopt;
}

}  // namespace

bool verify_z_lock(const Polygon& p, const LockWitness& w) {
  return w.facet_index < p.size() && is_unimodular_delta2_copy(w.triangle, Ring::Z) &&
         z_locks(p, w.facet_index, w.triangle);
}

FacetResult z_facet_locked(const Polygon& p, std::size_t facet) {
  require_facet(p, facet);
  require_z_free(p);
  return z_lock_from(p, facet, enum_unimodular_triangles(p));
}

MaximalityReport z_inclusion_maximal(const Polygon& p) {
  require_z_free(p);
  MaximalityReport rep;
  rep.ring = Ring::Z;
  auto tris = enum_unimodular_triangles(p);
  rep.overall = Verdict::Maximal;
  for (std::size_t i = 0; i < p.size(); ++i) {
    rep.facets.push_back(z_lock_from(p, i, tris));
    if (rep.facets.back().state != FacetState::Locked) rep.overall = Verdict::NotMaximal;
  }
  return rep;
}

RCheckResult r_locked_check(const Polygon& p, std::size_t facet, const Polygon& tri) {
  require_facet(p, facet);
  RCheckResult res;
  if (!is_unimodular_delta2_copy(tri, Ring::R)) {
    res.reason = RejectReason::NotACopy;
    return res;
  }
  if (!contains(p, tri)) {
    res.reason = RejectReason::NotContained;
    return res;
  }
  std::vector<Point> face, rest;
  for (const auto& v : tri.vertices()) (on_edge_line(p, facet, v) ? face : rest).push_back(v);
  bool relint = !face.empty();
  for (const auto& v : face) relint = relint && in_edge_relint(p, facet, v);
  if (!relint) {
    res.reason = RejectReason::FaceNotInRelint;
    return res;
  }
  if (face.size() == 2) {
    // the opposite face is a vertex, and p minus a point is p itself
    res.witness = LockWitness{facet, tri, LockKind::RGeneral};
    return res;
  }
  auto f1 = relint_facet(p, rest[0]);
  auto f2 = relint_facet(p, rest[1]);
  if (f1 && f2 && *f1 != *f2 && !parallel(p, *f1, *f2)) {
    res.witness = LockWitness{facet, tri, LockKind::RSkew};
    return res;
  }
  for (int k = 0; k < 2; ++k) {
    auto fj = k == 0 ? f1 : f2;
    const Point& other = rest[1 - k];
    if (fj && *fj != facet && parallel(p, facet, *fj) && contains_point(p, other, true)) {
      res.witness = LockWitness{facet, tri, LockKind::RParallel};
      return res;
    }
  }
  if (dimension(minkowski_difference(p, convex_hull(rest))) == 2) {
    res.witness = LockWitness{facet, tri, LockKind::RGeneral};
    return res;
  }
  res.reason = RejectReason::OppositeFaceTestFailed;
  return res;
}

std::vector<Polygon> unimodular_shapes(int bound) {
  std::set<Polygon> seen;
  for (long ex = -bound; ex <= bound; ++ex)
    for (long ey = -bound; ey <= bound; ++ey)
      for (long fx = -bound; fx <= bound; ++fx)
        for (long fy = -bound; fy <= bound; ++fy) {
          long d = ex * fy - ey * fx;
          if (d != 1 && d != -1) continue;
          Polygon t = convex_hull({{0, 0}, {ex, ey}, {fx, fy}});
          seen.insert(translate(t, -t[0]));
        }
  return {seen.begin(), seen.end()};
}

FacetResult r_locked_search(const Polygon& p, std::size_t facet, int shape_bound) {
  require_facet(p, facet);
  auto [a, b] = p.edge(facet);
  for (const auto& s : unimodular_shapes(shape_bound)) {
    auto room = minkowski_difference(p, s);
    if (!room) continue;
    for (const auto& v : s.vertices()) {
      // translations t with v + t on the facet and s + t inside p
      auto slot = intersect(*room, convex_hull({a - v, b - v}));
      if (!slot) continue;
      auto chk = r_locked_check(p, facet, translate(s, vertex_centroid(*slot)));
      if (chk.locked()) return {FacetState::Locked, chk.witness};
    }
  }
  return {FacetState::NoWitnessFound, std::nullopt};
}

MaximalityReport r_maximal_certified(const Polygon& p, int shape_bound) {
  if (dimension(p) != 2) throw std::invalid_argument("maximality: polygon must be 2-dimensional");
  if (!is_r_delta2_free(p).free) throw std::invalid_argument("maximality: polygon is not R-free");
  MaximalityReport rep;
  rep.ring = Ring::R;
  rep.overall = Verdict::Maximal;
  for (std::size_t i = 0; i < p.size(); ++i) {
    rep.facets.push_back(r_locked_search(p, i, shape_bound));
    if (rep.facets.back().state != FacetState::Locked) rep.overall = Verdict::Undetermined;
  }
  return rep;
}

std::optional<Polygon> push_facet(const Polygon& p, std::size_t facet, const Rational& eps) {
  require_facet(p, facet);
  auto hs = halfplanes(p);
  HalfPlane moved = hs[facet];
  // scale so that (a, b) is a primitive integer normal
  Integer l;
  mpz_lcm(l.get_mpz_t(), moved.a.get_den_mpz_t(), moved.b.get_den_mpz_t());
  Rational a = moved.a * l, b = moved.b * l;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  Rational k = Rational(l) / Rational(g);
  moved = {moved.a * k, moved.b * k, moved.c * k + eps};

  std::vector<HalfPlane> rest;
  for (std::size_t j = 0; j < hs.size(); ++j)
    if (j != facet) rest.push_back(hs[j]);
  // every vertex of the result is an intersection of two of these lines
  std::vector<HalfPlane> all = rest;
  all.push_back(moved);
  std::vector<Point> cand;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      Rational det = all[i].a * all[j].b - all[i].b * all[j].a;
      if (det == 0) continue;
      cand.push_back({(all[i].c * all[j].b - all[i].b * all[j].c) / det,
                      (all[i].a * all[j].c - all[i].c * all[j].a) / det});
    }
  std::vector<Point> inside;
  for (const auto& q : cand) {
    bool ok = true;
    for (const auto& h : all) ok = ok && h.contains(q);
    if (ok) inside.push_back(q);
  }
  if (inside.empty()) return std::nullopt;
  return convex_hull(std::move(inside));
}

}  // namespace flatcert
