// Python bindings. Polygons come in as lists of coordinate pairs (ints or
// "p/q" strings); results go back as JSON text and are decoded in __init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatcert/io.hpp"

namespace py = pybind11;
using namespace flatcert;

namespace {

Polygon to_poly(const std::string& vertices_json) {
  return to_polygon(parse_polygon_document(json{{"vertices", json::parse(vertices_json)}}));
}

std::string width(const std::string& v) {
  auto w = lattice_width(to_poly(v));
  return json{{"width", to_json(w.width)}, {"functional", to_json(w.u)}}.dump();
}

std::string ratdiam(const std::string& v) {
  auto c = rational_diameter(to_poly(v));
  return json{{"length", to_json(c.length)}, {"direction", to_json(c.direction)}, {"anchor", to_json(c.anchor)}}.dump();
}

std::string freeness(const std::string& v, const std::string& ring) {
  auto p = to_poly(v);
  if (ring == "z") return to_json(is_z_delta2_free(p)).dump();
  if (ring == "r") return to_json(is_r_delta2_free(p)).dump();
  throw std::invalid_argument("ring must be 'z' or 'r'");
}

std::string maximal(const std::string& v, const std::string& ring, int shape_bound) {
  auto p = to_poly(v);
  if (ring == "z") return to_json(z_inclusion_maximal(p)).dump();
  if (ring == "r") return to_json(r_maximal_certified(p, shape_bound)).dump();
  throw std::invalid_argument("ring must be 'z' or 'r'");
}

bool verify(const std::string& v, const std::string& report, const std::string& kind) {
  auto p = to_poly(v);
  auto j = json::parse(report);
  return kind == "maximal" ? verify_maximality(p, j) : verify_freeness(p, j);
}

std::string flt1(const std::string& x, const std::string& y) {
  return to_string(flt1_z({parse_rational(x), parse_rational(y)}));
}

std::string certify(const std::string& name, const std::string& target, int threads) {
  auto spec = builtin_case(name);
  if (!spec) throw std::invalid_argument("unknown case '" + name + "'");
  BBLimits lim;
  lim.threads = threads;
  Rational t = parse_rational(target);
  auto hq = case_polytope(*spec);
  auto cert = bb_certify_max(hq, spec->numerators, t, lim);
  json j = to_json(cert);
  j["replayed"] = replay_certificate(hq, spec->numerators, cert, t);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_flatcert, m) {
  m.doc() = "Exact rational lattice geometry in the plane";
  m.def("width", &width);
  m.def("ratdiam", &ratdiam);
  m.def("free", &freeness);
  m.def("maximal", &maximal);
  m.def("verify", &verify);
  m.def("flt1", &flt1);
  m.def("certify", &certify);
  py::register_exception<json::exception>(m, "JsonError", PyExc_ValueError);
}
