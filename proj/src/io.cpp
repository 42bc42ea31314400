#include "flatcert/io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace flatcert {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

Ring ring_from(const std::string& s) {
  if (s == "Z") return Ring::Z;
  if (s == "R") return Ring::R;
  bad("unknown ring '" + s + "'");
}

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E v : values)
    if (s == to_string(v)) return v;
  bad("unknown tag '" + s + "'");
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  bad("coordinate must be a string or an integer, got " + j.dump());
}

json to_json(const Rational& q) { return to_string(q); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("point must be a pair, got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Polygon polygon_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("vertex list must be a non-empty array");
  std::vector<Point> pts;
  for (const auto& v : j) pts.push_back(point_from_json(v));
  return convex_hull(std::move(pts));
}

json to_json(const Polygon& p) {
  json a = json::array();
  for (const auto& v : p.vertices()) a.push_back(to_json(v));
  return a;
}

json to_json(const DualVector& u) { return json::array({u.a.get_str(), u.b.get_str()}); }

DualVector dual_from_json(const json& j) {
  Point p = point_from_json(j);
  if (!is_lattice_point(p)) bad("functional must be integral");
  return {p.x.get_num(), p.y.get_num()};
}

PolygonDocument parse_polygon_document(const json& j) {
  if (!j.is_object()) bad("polygon document must be an object");
  PolygonDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name must be a string");
    d.name = j["name"].get<std::string>();
  }
  if (!j.contains("vertices")) bad("missing 'vertices'");
  const auto& vs = j["vertices"];
  if (!vs.is_array() || vs.empty()) bad("'vertices' must be a non-empty array");
  for (const auto& v : vs) d.vertices.push_back(point_from_json(v));
  return d;
}

json to_json(const PolygonDocument& d) {
  json j;
  if (d.name) j["name"] = *d.name;
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) j["vertices"].push_back(to_json(v));
  return j;
}

Polygon to_polygon(const PolygonDocument& d) { return convex_hull(d.vertices); }

json to_json(const FreenessVerdict& v) {
  json j{{"ring", to_string(v.ring)}, {"free", v.free}};
  j["violation"] = v.violation ? to_json(*v.violation) : json(nullptr);
  return j;
}

json to_json(const MaximalityReport& r) {
  json facets = json::array();
  for (std::size_t i = 0; i < r.facets.size(); ++i) {
    const auto& f = r.facets[i];
    json e{{"index", i}, {"state", to_string(f.state)}};
    if (f.witness) {
      e["kind"] = to_string(f.witness->kind);
      e["triangle"] = to_json(f.witness->triangle);
    }
    facets.push_back(e);
  }
  return {{"ring", to_string(r.ring)}, {"overall", to_string(r.overall)}, {"facets", facets}};
}

MaximalityReport maximality_report_from_json(const json& j) {
  MaximalityReport r;
  r.ring = ring_from(j.at("ring").get<std::string>());
  r.overall = enum_from(j.at("overall").get<std::string>(),
                        {Verdict::Maximal, Verdict::NotMaximal, Verdict::Undetermined});
  for (const auto& e : j.at("facets")) {
    FacetResult f;
    f.state = enum_from(e.at("state").get<std::string>(),
                        {FacetState::Locked, FacetState::NotLocked, FacetState::NoWitnessFound});
    if (e.contains("triangle")) {
      LockWitness w;
      w.facet_index = e.at("index").get<std::size_t>();
      w.triangle = polygon_from_json(e["triangle"]);
      w.kind = enum_from(e.at("kind").get<std::string>(),
                         {LockKind::ZLock, LockKind::RSkew, LockKind::RParallel, LockKind::RGeneral});
      f.witness = w;
    }
    r.facets.push_back(std::move(f));
  }
  return r;
}

json to_json(const ParamPoint& p) { return json::array({to_json(p.lambda), to_json(p.mu), to_json(p.nu)}); }

ParamPoint param_point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) bad("parameter point must have three entries");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

json to_json(const RatioCertificate& c) {
  json nodes = json::array();
  for (const auto& n : c.nodes) {
    if (n.kind == NodeKind::Split)
      nodes.push_back(json::array({"split", n.axis, to_string(n.at), n.left, n.right}));
    else if (n.kind == NodeKind::Linearized)
      nodes.push_back(json::array({"linear", n.anchor}));
    else
      nodes.push_back(json::array({to_string(n.kind)}));
  }
  json j{{"target", to_json(c.target)},
         {"status", to_string(c.status)},
         {"box_count", c.box_count},
         {"max_depth_reached", c.max_depth_reached},
         {"nodes", nodes}};
  j["point"] = c.point ? to_json(*c.point) : json(nullptr);
  j["value"] = c.value ? to_json(*c.value) : json(nullptr);
  return j;
}

RatioCertificate certificate_from_json(const json& j) {
  RatioCertificate c;
  c.target = rational_from_json(j.at("target"));
  c.status = enum_from(j.at("status").get<std::string>(),
                       {CertStatus::Certified, CertStatus::Counterexample, CertStatus::Inconclusive});
  c.box_count = j.at("box_count").get<std::size_t>();
  c.max_depth_reached = j.at("max_depth_reached").get<int>();
  if (!j.at("point").is_null()) c.point = param_point_from_json(j["point"]);
  if (!j.at("value").is_null()) c.value = rational_from_json(j["value"]);
  for (const auto& e : j.at("nodes")) {
    CertNode n;
    n.kind = enum_from(e.at(0).get<std::string>(), {NodeKind::Split, NodeKind::Infeasible, NodeKind::CornerBound,
                                                     NodeKind::Linearized, NodeKind::Open});
    if (n.kind == NodeKind::Split) {
      n.axis = e.at(1).get<int>();
      n.at = parse_rational(e.at(2).get<std::string>());
      n.left = e.at(3).get<std::size_t>();
      n.right = e.at(4).get<std::size_t>();
    } else if (n.kind == NodeKind::Linearized) {
      n.anchor = e.at(1).get<int>();
    }
    c.nodes.push_back(std::move(n));
  }
  return c;
}

namespace {

json form_json(const LinearForm3& f) {
  return json::array({to_json(f.c0), to_json(f.c1), to_json(f.c2), to_json(f.c3)});
}

LinearForm3 form_from(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("linear form must have four coefficients");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

const char* vertex_name(Vertex v) { return v == VX ? "X" : v == VY ? "Y" : "Z"; }

Vertex vertex_from(const std::string& s) {
  if (s == "X") return VX;
  if (s == "Y") return VY;
  if (s == "Z") return VZ;
  bad("unknown vertex '" + s + "'");
}

}  // namespace

json to_json(const CaseSpec& s) {
  json dirs = json::array(), cons = json::array(), nums = json::array();
  for (std::size_t k = 0; k < s.width_directions.size(); ++k)
    dirs.push_back({{"u", to_json(s.width_directions[k])},
                    {"pair", json::array({vertex_name(s.width_pairs[k][0]), vertex_name(s.width_pairs[k][1])})}});
  for (const auto& f : s.q_constraints) cons.push_back(form_json(f));
  for (const auto& f : s.numerators) nums.push_back(form_json(f));
  return {{"name", s.name}, {"A", to_json(s.A)}, {"B", to_json(s.B)}, {"C", to_json(s.C)},
          {"widths", dirs}, {"constraints", cons}, {"numerators", nums}};
}

CaseSpec case_spec_from_json(const json& j) {
  std::vector<DualVector> dirs;
  std::vector<std::array<Vertex, 2>> pairs;
  for (const auto& w : j.at("widths")) {
    dirs.push_back(dual_from_json(w.at("u")));
    pairs.push_back({vertex_from(w.at("pair").at(0).get<std::string>()),
                     vertex_from(w.at("pair").at(1).get<std::string>())});
  }
  std::vector<LinearForm3> cons;
  for (const auto& f : j.at("constraints")) cons.push_back(form_from(f));
  return make_case(j.value("name", std::string("custom")), point_from_json(j.at("A")), point_from_json(j.at("B")),
                   point_from_json(j.at("C")), std::move(dirs), std::move(pairs), std::move(cons));
}

bool verify_freeness(const Polygon& p, const json& verdict) {
  Ring ring = ring_from(verdict.at("ring").get<std::string>());
  if (verdict.at("free").get<bool>()) {
    return (ring == Ring::Z ? is_z_delta2_free(p) : is_r_delta2_free(p)).free;
  }
  Polygon tri = polygon_from_json(verdict.at("violation"));
  if (!is_unimodular_delta2_copy(tri, ring)) return false;
  for (const auto& v : tri.vertices())
    if (!contains_point(p, v, true)) return false;
  return true;
}

bool verify_maximality(const Polygon& p, const json& report) {
  MaximalityReport r = maximality_report_from_json(report);
  if (r.facets.size() != p.size()) return false;
  bool all_locked = true;
  for (std::size_t i = 0; i < r.facets.size(); ++i) {
    const auto& f = r.facets[i];
    if (f.state == FacetState::Locked) {
      if (!f.witness || f.witness->facet_index != i) return false;
      bool ok = r.ring == Ring::Z ? verify_z_lock(p, *f.witness)
                                  : r_locked_check(p, i, f.witness->triangle).locked();
      if (!ok) return false;
    } else {
      all_locked = false;
      if (f.state == FacetState::NotLocked &&
          (r.ring == Ring::R || z_facet_locked(p, i).state != FacetState::NotLocked))
        return false;
    }
  }
  if (r.ring == Ring::Z) {
    if (!is_z_delta2_free(p).free) return false;
    return (r.overall == Verdict::Maximal) == all_locked &&
           (r.overall == Verdict::NotMaximal) == !all_locked;
  }
  if (!is_r_delta2_free(p).free) return false;
  return (r.overall == Verdict::Maximal) == all_locked && r.overall != Verdict::NotMaximal;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a 64
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flatcert
