// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"

using namespace flatcert;
using oracle::poly;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(const std::string& id, bool ok, const std::string& what, double secs) {
  std::printf("criterion %-4s %s  %s (%.2f s)\n", id.c_str(), ok ? "PASS" : "FAIL", what.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs body, reporting a thrown exception as a failure.
void run(const std::string& id, const std::string& what, double limit, const std::function<bool(std::string&)>& body) {
  auto t0 = Clock::now();
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double s = since(t0);
  if (ok && s > limit) {
    ok = false;
    note += " over time limit";
  }
  report(id, ok, note.empty() ? what : what + " [" + note + "]", s);
}

Rational q(long a, long b = 1) { return ratio_q(a, b); }

const Polygon kCross = convex_hull({Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)});
const Polygon kTri2 = convex_hull({Point(1, 0), Point(0, 1), Point(-1, -1)});

Polygon maximizer() { return poly({{"1/3", "5/3"}, {"-4/3", "-5/3"}, {"2", "0"}}); }
Polygon one_point() { return poly({{"-1", "2"}, {"-1", "-1"}, {"2", "-1"}}); }
Polygon skew() { return poly({{"-0.21", "0.11"}, {"0.46", "0.98"}, {"1.42", "1.02"}, {"0.82", "-0.42"}}); }
Polygon hexagon() {
  return poly({{"0", "0.7"}, {"0", "1.25"}, {"0.4", "1.45"}, {"1.37", "0.72"}, {"1.2", "-0.05"}, {"0.6", "0.1"}});
}
Polygon lock_figure() { return poly({{"-1", "5/4"}, {"2", "1/2"}, {"2", "-3/4"}, {"-1", "-9/8"}}); }

// Every report that claims Maximal or Certified, kept in serialized form.
struct Stored {
  std::string label;
  Polygon polygon;
  std::string report;  // JSON text
};
std::vector<Stored> maximal_reports;
std::vector<std::pair<CaseSpec, std::string>> certificates;

void keep(const std::string& label, const Polygon& p, const MaximalityReport& r) {
  if (r.overall == Verdict::Maximal) maximal_reports.push_back({label, p, to_json(r).dump()});
}

}  // namespace

int main() {
  run("1", "width-10/3 triangle: width 10/3, Z-free, Maximal", 1.0, [](std::string& note) {
    auto t = maximizer();
    auto w = lattice_width(t).width;
    bool free = is_z_delta2_free(t).free;
    auto rep = z_inclusion_maximal(t);
    keep("width-10/3 triangle", t, rep);
    note = "width " + to_string(w) + ", " + (free ? "free" : "not free") + ", " + to_string(rep.overall);
    return w == q(10, 3) && free && rep.overall == Verdict::Maximal;
  });

  for (const auto& [name, p] : {std::pair{"cross-polygon", kCross}, std::pair{"conv(e1,e2,-e1-e2)", kTri2}}) {
    run("2", std::string(name) + ": width 2, R-free, Maximal", 1.0, [&, name = name, p = p](std::string& note) {
      auto w = lattice_width(p).width;
      bool free = is_r_delta2_free(p).free;
      auto rep = r_maximal_certified(p, 4);
      keep(name, p, rep);
      note = "width " + to_string(w) + ", " + (free ? "free" : "not free") + ", " + to_string(rep.overall);
      return w == 2 && free && rep.overall == Verdict::Maximal;
    });
  }

  run("3", "case 1 certified at 10/3 within 10^6 boxes", 60.0, [](std::string& note) {
    auto c1 = case1();
    auto cert = bb_certify_max(case_polytope(c1), c1.numerators, q(10, 3));
    if (cert.status == CertStatus::Certified) certificates.push_back({c1, to_json(cert).dump()});
    note = std::string(to_string(cert.status)) + ", " + std::to_string(cert.box_count) + " boxes, depth " +
           std::to_string(cert.max_depth_reached);
    return cert.status == CertStatus::Certified && cert.box_count <= 1000000;
  });
  run("3", "case 1 at 33/10: counterexample 10/3 at (3/5,2/5,1/5)", 60.0, [](std::string& note) {
    auto c1 = case1();
    auto cert = bb_certify_max(case_polytope(c1), c1.numerators, q(33, 10));
    if (cert.point) note = to_string(*cert.point) + " value " + to_string(*cert.value);
    return cert.status == CertStatus::Counterexample && cert.point &&
           *cert.point == ParamPoint{q(3, 5), q(2, 5), q(1, 5)} && *cert.value == q(10, 3);
  });

  run("4", "1-D formula equals the oracle on 500 random intervals and point cases", 10.0, [](std::string& note) {
    oracle::Gen g(4);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
      Rational a = g.rational(-5, 5, 30), b = g.rational(-5, 5, 30);
      if (a > b) std::swap(a, b);
      if (flt1_z({a, b}) != flt1_oracle({a, b}, 3)) ++bad;
      if (flt1_z({a, a}) != flt1_oracle({a, a}, 3)) ++bad;
    }
    note = std::to_string(bad) + " mismatches";
    return bad == 0;
  });
  run("4", "1-D non-linearity: value([0,4/3]) != 2 * value([0,2/3])", 1.0, [](std::string& note) {
    Rational a = flt1_z({0, q(4, 3)}), b = flt1_z({0, q(2, 3)});
    note = to_string(a) + " vs 2*" + to_string(b) + " = " + to_string(2 * b);
    return a != 2 * b;
  });
  run("4", "1-D printed values: {0} -> 1, [0,4/3] -> 3, [0,2/3] -> 2", 1.0, [](std::string& note) {
    Rational a = flt1_z({0, 0}), b = flt1_z({0, q(4, 3)}), c = flt1_z({0, q(2, 3)});
    note = "computed " + to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
           "; oracle " + to_string(flt1_oracle({0, q(4, 3)}, 3)) + ", " + to_string(flt1_oracle({0, q(2, 3)}, 3));
    return a == 1 && b == 3 && c == 2;
  });

  run("5", "width-3 triangle: Z-free, width 3, Maximal", 1.0, [](std::string& note) {
    auto t = one_point();
    auto w = lattice_width(t).width;
    bool free = is_z_delta2_free(t).free;
    auto rep = z_inclusion_maximal(t);
    keep("width-3 triangle", t, rep);
    note = "width " + to_string(w) + ", " + to_string(rep.overall);
    return free && w == 3 && rep.overall == Verdict::Maximal;
  });

  for (const auto& [name, p] : {std::pair{"skew quadrilateral", skew()}, std::pair{"hexagon", hexagon()}}) {
    run("6", std::string(name) + ": R-free", 10.0, [p = p](std::string& note) {
      auto v = is_r_delta2_free(p);
      note = std::to_string(translation_classes(p).size()) + " translation classes fit";
      return v.free;
    });
    run("6", std::string(name) + ": Maximal (shape bound 4)", 10.0, [name = name, p = p](std::string& note) {
      auto rep = r_maximal_certified(p, 4);
      keep(name, p, rep);
      int locked = 0;
      for (const auto& f : rep.facets) locked += f.state == FacetState::Locked;
      note = std::string(to_string(rep.overall)) + ", " + std::to_string(locked) + "/" +
             std::to_string(rep.facets.size()) + " facets locked";
      return rep.overall == Verdict::Maximal;
    });
  }

  auto t7 = Clock::now();
  run("7a", "200 random R-free polygons have width <= 2", 300.0, [](std::string& note) {
    oracle::Gen g(71);
    int n = 0, tried = 0;
    Rational worst = 0;
    while (n < 200) {
      ++tried;
      auto p = g.polygon(-1, 2, 6, 8);
      if (!is_r_delta2_free(p).free) continue;
      ++n;
      worst = std::max(worst, lattice_width(p).width);
    }
    note = "max width " + to_string(worst) + " over " + std::to_string(tried) + " draws";
    return worst <= 2;
  });
  run("7b", "200 random Z-free polygons have width <= 10/3", 300.0, [](std::string& note) {
    oracle::Gen g(72);
    int n = 0, tried = 0;
    Rational worst = 0;
    while (n < 200) {
      ++tried;
      auto p = g.polygon(-2, 3, 6, 8);
      if (!is_z_delta2_free(p).free) continue;
      ++n;
      worst = std::max(worst, lattice_width(p).width);
    }
    note = "max width " + to_string(worst) + " over " + std::to_string(tried) + " draws";
    return worst <= q(10, 3);
  });
  run("7c", "(A+B)-B = A on 200 random pairs", 300.0, [](std::string& note) {
    oracle::Gen g(73);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
      auto a = g.polygon(-4, 4, 7), b = g.polygon(-4, 4, 7);
      if (minkowski_difference(minkowski_sum(a, b), b) != a) ++bad;
    }
    note = std::to_string(bad) + " mismatches";
    return bad == 0;
  });
  run("7d", "strips [-1,1]x[-N,N] Z-free and [0,1]x[-N,N] R-free, N <= 20", 300.0, [](std::string& note) {
    int bad = 0;
    for (long n = 1; n <= 20; ++n) {
      auto z = convex_hull({Point(-1, -n), Point(1, -n), Point(1, n), Point(-1, n)});
      auto r = convex_hull({Point(0, -n), Point(1, -n), Point(1, n), Point(0, n)});
      bad += !is_z_delta2_free(z).free;
      bad += !is_r_delta2_free(r).free;
    }
    note = std::to_string(bad) + " failures";
    return bad == 0;
  });
  run("7e", "rectangle family: (kappa+mu)(zeta+xi) = 2 and width <= 3 on 10^4 points", 300.0, [](std::string& note) {
    int n = 0, bad_id = 0, bad_w = 0;
    for (int a = 1; a <= 10; ++a)
      for (int b = 1; b <= 10; ++b)
        for (int c = -50; c < 50; ++c) {
          Rational k = q(a, 4), m = q(b, 3), l = q(c, 51);
          auto r = quad_rect({k, l, m, l});
          Rational zeta = r.top.y - 1, xi = -r.bottom.y - 1;
          ++n;
          bad_id += (k + m) * (zeta + xi) != 2;
          bad_w += lattice_width(r.polygon).width > 3;
          bad_w += width_along(r.polygon, {1, 0}) != r.width_h || width_along(r.polygon, {0, 1}) != r.width_v;
        }
    note = std::to_string(n) + " points, " + std::to_string(bad_id) + " identity and " + std::to_string(bad_w) +
           " width failures";
    return n == 10000 && bad_id == 0 && bad_w == 0;
  });
  run("7f", "cross family: w0, w1, w2 match direct widths on 10^4 points", 300.0, [](std::string& note) {
    int n = 0, skipped = 0, bad = 0, n1 = 0, n2 = 0;
    for (int a = 0; a < 10; ++a)
      for (int b = 0; b < 10; ++b)
        for (int c = 0; c < 10; ++c)
          for (int d = 0; d < 10; ++d) {
            Rational k = q(2 * a - 9, 10), m = q(2 * c - 9, 10), l = 1 + q(b + 1, 4), nu = -1 - q(d + 1, 4);
            CrossQuad x;
            try {
              x = quad_cross({k, l, m, nu});
            } catch (const std::invalid_argument&) {
              ++skipped;
              continue;
            }
            ++n;
            bad += width_along(x.polygon, {1, 1}) != x.w0;
            // w1, w2 are read off Z and W; compare where those are the extremes
            auto f1 = [](const Point& p) -> Rational { return (p.x + p.y) / 2; };
            auto f2 = [](const Point& p) -> Rational { return (p.x - p.y) / 2; };
            std::array<Point, 4> v{x.X, x.Y, x.Z, x.W};
            bool z_top = true, w_top = true;
            for (const auto& p : v) {
              z_top = z_top && f1(x.Z) >= f1(p) && f1(x.W) <= f1(p);
              w_top = w_top && f2(x.W) >= f2(p) && f2(x.Z) <= f2(p);
            }
            if (z_top) ++n1, bad += width_along(x.polygon, {1, 0}) != x.w1;
            if (w_top) ++n2, bad += width_along(x.polygon, {0, 1}) != x.w2;
          }
    note = std::to_string(n) + " points (" + std::to_string(skipped) + " degenerate), w1 on " + std::to_string(n1) +
           ", w2 on " + std::to_string(n2) + ", " + std::to_string(bad) + " mismatches";
    return n + skipped == 10000 && n > 0 && n1 > 0 && n2 > 0 && bad == 0;
  });
  report("7", since(t7) < 300.0, "property suites total under 5 min", since(t7));

  run("8", "lock figure: F1, F2, F4 Locked, F3 NotLocked", 1.0, [](std::string& note) {
    auto p = lock_figure();
    auto rep = z_inclusion_maximal(p);
    bool ok = rep.facets.size() == 4;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      auto [a, b] = p.edge(i);
      bool f3 = a.x == 2 && b.x == 2;
      ok = rep.facets[i].state == (f3 ? FacetState::NotLocked : FacetState::Locked);
      note += (note.empty() ? "" : ", ") + std::string(to_string(rep.facets[i].state));
    }
    return ok;
  });

  run("9", "every Maximal/Certified report re-verifies from its serialized form", 120.0, [](std::string& note) {
    // a few more Certified reports for the corpus
    auto c2 = case2();
    auto cert2 = bb_certify_max(case_polytope(c2), c2.numerators, q(10, 3));
    if (cert2.status == CertStatus::Certified) certificates.push_back({c2, to_json(cert2).dump()});
    int bad = 0;
    for (const auto& s : maximal_reports) bad += !verify_maximality(s.polygon, json::parse(s.report));
    for (const auto& [spec, text] : certificates) {
      auto c = certificate_from_json(json::parse(text));
      auto back = case_spec_from_json(to_json(spec));
      bad += !replay_certificate(case_polytope(back), back.numerators, c, c.target);
    }
    note = std::to_string(maximal_reports.size()) + " maximality reports, " + std::to_string(certificates.size()) +
           " certificates, " + std::to_string(bad) + " failures";
    return bad == 0 && !maximal_reports.empty() && !certificates.empty();
  });

  std::printf("%d failing line(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
