// flatcert command-line front end.
//
// Exit codes:
//   0   success / free / Maximal / Certified / report verified
//   2   input error (bad JSON, bad rational, unknown flag, ...)
//   10  not free
//   11  NotMaximal
//   12  Undetermined
//   13  Counterexample
//   14  Inconclusive
//   15  report failed verification

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "flatcert/io.hpp"

using namespace flatcert;

namespace {

enum Exit { kOk = 0, kInput = 2, kNotFree = 10, kNotMaximal = 11, kUndetermined = 12,
            kCounterexample = 13, kInconclusive = 14, kVerifyFailed = 15 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

struct Input {
  PolygonDocument doc;
  Polygon polygon;
  std::string digest;
};

Input read_polygon(const std::string& path) {
  json j = read_json(path);
  try {
    Input in{parse_polygon_document(j), {}, {}};
    in.polygon = to_polygon(in.doc);
    in.digest = digest(to_json(in.doc).dump());
    return in;
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

Ring ring_from_flag(const std::string& s) {
  if (s == "z" || s == "Z") return Ring::Z;
  if (s == "r" || s == "R") return Ring::R;
  throw InputError("--ring must be z or r");
}

Rational rational_arg(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(what) + ": '" + s + "' is not a rational");
  }
}

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit(bool as_json, json report, const std::string& text, const Clock& clock) {
  if (as_json) {
    report["timing"] = {{"seconds", clock.seconds()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json header(const std::string& command, const Input& in) {
  json j{{"command", command}, {"input", {{"digest", in.digest}, {"polygon", to_json(in.polygon)}}}};
  if (in.doc.name) j["input"]["name"] = *in.doc.name;
  return j;
}

// ---- subcommands ----------------------------------------------------------

struct Options {
  bool json = false;
  std::string file, report_file, ring;
  std::vector<std::string> interval, params;
  std::string family;
  std::string case_name = "case1";
  std::string target = "10/3";
  int shape_bound = 4;
  int max_depth = 48;
  int threads = 1;
};

int cmd_width(const Options& o) {
  Clock clock;
  Input in = read_polygon(o.file);
  WidthResult w = lattice_width(in.polygon);
  json r = header("width", in);
  r["width"] = to_json(w.width);
  r["functional"] = to_json(w.u);
  emit(o.json, r, to_string(w.width) + "\n", clock);
  return kOk;
}

int cmd_ratdiam(const Options& o) {
  Clock clock;
  Input in = read_polygon(o.file);
  ChordResult c = rational_diameter(in.polygon);
  json r = header("ratdiam", in);
  r["length"] = to_json(c.length);
  r["direction"] = to_json(c.direction);
  r["anchor"] = to_json(c.anchor);
  emit(o.json, r, to_string(c.length) + "\n", clock);
  return kOk;
}

int cmd_free(const Options& o, Ring ring) {
  Clock clock;
  Input in = read_polygon(o.file);
  FreenessVerdict v = ring == Ring::Z ? is_z_delta2_free(in.polygon) : is_r_delta2_free(in.polygon);
  json r = header(ring == Ring::Z ? "zfree" : "rfree", in);
  r["verdict"] = to_json(v);
  std::ostringstream text;
  text << (v.free ? "free" : "not free") << " (" << to_string(ring) << ")\n";
  if (v.violation) text << "violation: " << to_string(*v.violation) << "\n";
  if (ring == Ring::R && dimension(in.polygon) == 2) {
    json classes = json::array();
    for (const auto& t : translation_classes(in.polygon)) classes.push_back(to_json(t.polygon()));
    text << "translation classes checked: " << classes.size() << "\n";
    r["classes_checked"] = std::move(classes);
  }
  emit(o.json, r, text.str(), clock);
  return v.free ? kOk : kNotFree;
}

int verdict_exit(Verdict v) {
  return v == Verdict::Maximal ? kOk : v == Verdict::NotMaximal ? kNotMaximal : kUndetermined;
}

int cmd_maximal(const Options& o, Ring ring) {
  Clock clock;
  Input in = read_polygon(o.file);
  MaximalityReport rep;
  try {
    rep = ring == Ring::Z ? z_inclusion_maximal(in.polygon) : r_maximal_certified(in.polygon, o.shape_bound);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  json r = header(ring == Ring::Z ? "zmaximal" : "rmaximal", in);
  r["report"] = to_json(rep);
  if (ring == Ring::R) r["shape_bound"] = o.shape_bound;
  std::ostringstream text;
  text << to_string(rep.overall) << " (" << to_string(ring) << ")\n";
  for (std::size_t i = 0; i < rep.facets.size(); ++i) {
    auto [a, b] = in.polygon.edge(i);
    text << "  facet " << i << " " << to_string(a) << "-" << to_string(b) << ": " << to_string(rep.facets[i].state);
    if (const auto& w = rep.facets[i].witness)
      text << " by " << to_string(w->triangle) << " [" << to_string(w->kind) << "]";
    text << "\n";
  }
  emit(o.json, r, text.str(), clock);
  return verdict_exit(rep.overall);
}

int cmd_flt1(const Options& o) {
  Clock clock;
  Interval1D i{rational_arg(o.interval.at(0), "--interval"), rational_arg(o.interval.at(1), "--interval")};
  if (i.x > i.y) throw InputError("--interval: need X <= Y");
  Rational v = flt1_z(i);
  json r{{"command", "flt1"}, {"interval", json::array({to_json(i.x), to_json(i.y)})}, {"value", to_json(v)}};
  emit(o.json, r, to_string(v) + "\n", clock);
  return kOk;
}

CaseSpec load_case(const std::string& name) {
  if (auto c = builtin_case(name)) return *c;
  json j = read_json(name);
  try {
    return case_spec_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(name + ": " + e.what());
  }
}

int cert_exit(CertStatus s) {
  return s == CertStatus::Certified ? kOk : s == CertStatus::Counterexample ? kCounterexample : kInconclusive;
}

int cmd_certify(const Options& o) {
  Clock clock;
  CaseSpec spec = load_case(o.case_name);
  Rational target = rational_arg(o.target, "--target");
  BBLimits limits;
  limits.max_depth = o.max_depth;
  limits.threads = o.threads;
  RatioCertificate c = bb_certify_max(case_polytope(spec), spec.numerators, target, limits);
  json r{{"command", "certify-case"}, {"case", to_json(spec)}, {"certificate", to_json(c)}};
  std::ostringstream text;
  text << spec.name << " target " << to_string(target) << ": " << to_string(c.status) << " (" << c.box_count
       << " boxes, depth " << c.max_depth_reached << ")\n";
  if (c.point) text << "point " << to_string(*c.point) << " value " << to_string(*c.value) << "\n";
  emit(o.json, r, text.str(), clock);
  return cert_exit(c.status);
}

int cmd_quad(const Options& o) {
  Clock clock;
  if (o.params.size() != 4) throw InputError("quad: need four parameters KAPPA LAMBDA MU NU");
  QuadParams p{rational_arg(o.params[0], "kappa"), rational_arg(o.params[1], "lambda"),
               rational_arg(o.params[2], "mu"), rational_arg(o.params[3], "nu")};
  json r{{"command", "quad"}, {"family", o.family}};
  std::ostringstream text;
  try {
    if (o.family == "rect") {
      RectQuad q = quad_rect(p);
      r["polygon"] = to_json(q.polygon);
      r["width_h"] = to_json(q.width_h);
      r["width_v"] = to_json(q.width_v);
      text << to_string(q.polygon) << "\nwidth_h " << to_string(q.width_h) << "\nwidth_v " << to_string(q.width_v) << "\n";
    } else {
      CrossQuad q = quad_cross(p);
      r["polygon"] = to_json(q.polygon);
      r["w0"] = to_json(q.w0);
      r["w1"] = to_json(q.w1);
      r["w2"] = to_json(q.w2);
      text << to_string(q.polygon) << "\nw0 " << to_string(q.w0) << "\nw1 " << to_string(q.w1) << "\nw2 "
           << to_string(q.w2) << "\n";
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Rational w = lattice_width(r.contains("w0") ? quad_cross(p).polygon : quad_rect(p).polygon).width;
  r["lattice_width"] = to_json(w);
  text << "lattice width " << to_string(w) << "\n";
  emit(o.json, r, text.str(), clock);
  return kOk;
}

// Re-checks a JSON report produced by one of the commands above.
bool verify_report(const json& rep, const Options& o) {
  const std::string cmd = rep.at("command").get<std::string>();
  if (cmd == "certify-case") {
    CaseSpec spec = case_spec_from_json(rep.at("case"));
    RatioCertificate c = certificate_from_json(rep.at("certificate"));
    if (c.status == CertStatus::Inconclusive) return false;
    return replay_certificate(case_polytope(spec), spec.numerators, c, c.target);
  }
  if (cmd == "flt1") {
    Interval1D i{rational_from_json(rep.at("interval")[0]), rational_from_json(rep.at("interval")[1])};
    return flt1_z(i) == rational_from_json(rep.at("value")) && flt1_oracle(i, 3) == flt1_z(i);
  }
  if (o.file.empty()) throw InputError("verify: this report needs the polygon file");
  Input in = read_polygon(o.file);
  if (rep.at("input").at("digest").get<std::string>() != in.digest) return false;
  if (cmd == "width") {
    Rational w = rational_from_json(rep.at("width"));
    DualVector u = dual_from_json(rep.at("functional"));
    return width_along(in.polygon, u) == w && lattice_width(in.polygon).width == w;
  }
  if (cmd == "ratdiam") {
    return rational_diameter(in.polygon).length == rational_from_json(rep.at("length"));
  }
  if (cmd == "zfree" || cmd == "rfree") return verify_freeness(in.polygon, rep.at("verdict"));
  if (cmd == "zmaximal" || cmd == "rmaximal") return verify_maximality(in.polygon, rep.at("report"));
  throw InputError("verify: unknown report command '" + cmd + "'");
}

int cmd_verify(const Options& o) {
  json rep = read_json(o.report_file);
  bool ok;
  try {
    ok = verify_report(rep, o);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(o.report_file + ": " + e.what());
  }
  std::cout << (ok ? "verified" : "FAILED") << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-width, freeness and maximality tools for planar polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print a JSON report");

  auto polygon_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "Polygon JSON file ('-' for stdin)")->required();
    return c;
  };
  auto* width = polygon_cmd("width", "Lattice width");
  auto* ratdiam = polygon_cmd("ratdiam", "Rational diameter");
  auto* zfree = polygon_cmd("zfree", "Z-freeness (exit 0 free, 10 not free)");
  auto* rfree = polygon_cmd("rfree", "R-freeness (exit 0 free, 10 not free)");
  auto* zmax = polygon_cmd("zmaximal", "Z inclusion-maximality (exit 0/11/12)");
  auto* rmax = polygon_cmd("rmaximal", "R inclusion-maximality (exit 0/11/12)");
  auto* freec = polygon_cmd("free", "Freeness for the ring given by --ring");
  auto* maxc = polygon_cmd("maximal", "Maximality for the ring given by --ring");
  for (auto* c : {freec, maxc}) c->add_option("--ring", o.ring, "z or r")->required();
  for (auto* c : {rmax, maxc}) c->add_option("--shape-bound", o.shape_bound, "Witness shape bound")->check(CLI::Range(1, 50));

  auto* flt1 = app.add_subcommand("flt1", "One-dimensional flatness constant of an interval");
  flt1->add_option("--interval", o.interval, "X Y")->expected(2)->required();

  auto* certify = app.add_subcommand("certify-case", "Certify a width bound for a parametric case (exit 0/13/14)");
  certify->add_option("--case", o.case_name, "Built-in case (case1, case2) or a case JSON file");
  certify->add_option("--target", o.target, "Target bound p/q");
  certify->add_option("--max-depth", o.max_depth, "Subdivision depth limit")->check(CLI::Range(1, 200));
  certify->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* quad = app.add_subcommand("quad", "Quadrilateral families");
  quad->add_option("family", o.family, "rect or cross")->required()->check(CLI::IsMember({"rect", "cross"}));
  quad->add_option("params", o.params, "KAPPA LAMBDA MU NU")->expected(4)->required();

  auto* verify = app.add_subcommand("verify", "Re-check a JSON report (exit 0 verified, 15 failed)");
  verify->add_option("report", o.report_file, "Report JSON file")->required();
  verify->add_option("file", o.file, "Polygon JSON file the report was made for");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "flatcert: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (*width) return cmd_width(o);
    if (*ratdiam) return cmd_ratdiam(o);
    if (*zfree) return cmd_free(o, Ring::Z);
    if (*rfree) return cmd_free(o, Ring::R);
    if (*zmax) return cmd_maximal(o, Ring::Z);
    if (*rmax) return cmd_maximal(o, Ring::R);
    if (*freec) return cmd_free(o, ring_from_flag(o.ring));
    if (*maxc) return cmd_maximal(o, ring_from_flag(o.ring));
    if (*flt1) return cmd_flt1(o);
    if (*certify) return cmd_certify(o);
    if (*quad) return cmd_quad(o);
    if (*verify) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "flatcert: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "flatcert: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
