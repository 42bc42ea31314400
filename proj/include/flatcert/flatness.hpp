#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flatcert/fm.hpp"
#include "flatcert/lattice.hpp"

namespace flatcert {

// ---- one dimension ------------------------------------------------------

struct Interval1D {
  Rational x, y;
};

Rational flt1_z(const Interval1D& i);
// Max width of the hull of two successive members of {±I + k : |k| <= range}.
Rational flt1_oracle(const Interval1D& i, int range);

// ---- parametric triangles -----------------------------------------------

struct ParamPoint {
  Rational lambda, mu, nu;
  const Rational& operator[](int k) const { return k == 0 ? lambda : k == 1 ? mu : nu; }
  Rational& operator[](int k) { return k == 0 ? lambda : k == 1 ? mu : nu; }
  friend bool operator==(const ParamPoint& a, const ParamPoint& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
  }
  friend bool operator<(const ParamPoint& a, const ParamPoint& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.nu < b.nu;
  }
};

std::string to_string(const ParamPoint& p);

// c0 + c1*lambda + c2*mu + c3*nu
struct LinearForm3 {
  Rational c0, c1, c2, c3;
  Rational operator()(const ParamPoint& p) const {
    return c0 + c1 * p.lambda + c2 * p.mu + c3 * p.nu;
  }
  friend LinearForm3 operator+(const LinearForm3& a, const LinearForm3& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
  }
  friend LinearForm3 operator*(const Rational& s, const LinearForm3& a) {
    return {s * a.c0, s * a.c1, s * a.c2, s * a.c3};
  }
  friend LinearForm3 operator-(const LinearForm3& a) { return Rational(-1) * a; }
  friend LinearForm3 operator-(const LinearForm3& a, const LinearForm3& b) { return a + (-b); }
};

// lambda*mu*nu + (1-lambda)(1-mu)(1-nu)
Rational delta(const ParamPoint& p);

enum Vertex { VX = 0, VY = 1, VZ = 2 };

struct CaseSpec {
  std::string name;
  Point A, B, C;
  std::vector<DualVector> width_directions;
  // numerator i is width_directions[i] applied to delta * (V_first - V_second)
  std::vector<std::array<Vertex, 2>> width_pairs;
  std::vector<LinearForm3> q_constraints;  // each >= 0
  std::vector<LinearForm3> numerators;
};

// Fills in numerators from the locking triple, directions and pairs.
CaseSpec make_case(std::string name, Point A, Point B, Point C, std::vector<DualVector> dirs,
                   std::vector<std::array<Vertex, 2>> pairs, std::vector<LinearForm3> constraints);
CaseSpec case1();
CaseSpec case2();
std::optional<CaseSpec> builtin_case(const std::string& name);

// delta * (V_i - V_j) as two linear forms (x and y components).
std::array<LinearForm3, 2> scaled_difference(const CaseSpec& s, Vertex i, Vertex j);

// X, Y, Z with A = lambda Y + (1-lambda) Z, B = (1-mu) X + mu Z, C = nu X + (1-nu) Y.
// Throws std::invalid_argument when delta(p) == 0.
std::array<Point, 3> param_vertices(const CaseSpec& s, const ParamPoint& p);
Polygon param_triangle(const CaseSpec& s, const ParamPoint& p);

using HRep = std::vector<LinearForm3>;  // all rows >= 0

HRep case_polytope(const CaseSpec& s);
bool feasible_box(const HRep& q, const Box3& box);
bool in_hrep(const HRep& q, const ParamPoint& p);
// Vertices of a bounded H-representation, sorted.
std::vector<ParamPoint> hrep_vertices(const HRep& q);

struct LinearityRegion {
  std::size_t active;
  HRep h;
  std::vector<ParamPoint> vertices;
};
std::vector<LinearityRegion> linearity_regions(const HRep& q, const std::vector<LinearForm3>& numerators);

// min_i numerators_i(p) / delta(p); requires delta(p) > 0.
Rational ratio(const std::vector<LinearForm3>& numerators, const ParamPoint& p);

// ---- branch and bound ---------------------------------------------------

enum class CertStatus { Certified, Counterexample, Inconclusive };
const char* to_string(CertStatus s);

enum class NodeKind { Split, Infeasible, CornerBound, Linearized, Open };
const char* to_string(NodeKind k);

struct CertNode {
  NodeKind kind = NodeKind::Open;
  int axis = -1;          // Split
  Rational at;            // Split coordinate
  int anchor = -1;        // Linearized: corner bitmask (bit k set = upper end on axis k)
  std::size_t left = 0, right = 0;  // Split children (indices into the node list)
};

struct BBLimits {
  int max_depth = 48;
  std::size_t max_boxes = 1000000;
  int threads = 1;
};

struct RatioCertificate {
  Rational target;
  CertStatus status = CertStatus::Inconclusive;
  std::optional<ParamPoint> point;
  std::optional<Rational> value;
  std::size_t box_count = 0;
  int max_depth_reached = 0;
  std::vector<CertNode> nodes;  // node 0 is [0,1]^3
};

RatioCertificate bb_certify_max(const HRep& q, const std::vector<LinearForm3>& numerators,
                                const Rational& target, const BBLimits& limits = {});

// Re-checks a certificate against the given target (which may exceed the
// recorded one). Certified: every leaf passes its recorded test; Counterexample:
// the point lies in Q and evaluates above the target.
bool replay_certificate(const HRep& q, const std::vector<LinearForm3>& numerators,
                        const RatioCertificate& cert, const Rational& target);

// ---- quadrilateral families ---------------------------------------------

struct QuadParams {
  Rational kappa, lambda, mu, nu;
};

struct RectQuad {
  Polygon polygon;
  Point top, bottom;
  Rational width_h, width_v;
};
// Circumscribed around conv(±e2, e1±e2): left (-kappa, lambda), right (1+mu, nu).
RectQuad quad_rect(const QuadParams& p);

// Built in a frame where the lattice is generated by f1 = (1,1) and
// f2 = (1,-1) and the cross-polygon is the square with vertices ±f1, ±f2.
struct CrossQuad {
  Polygon polygon;   // mapped back to Z^2 coordinates
  Point X, Y, Z, W;  // frame coordinates
  Rational w0, w1, w2;
};
// Z = (kappa, lambda) on top, W = (mu, nu) at the bottom.
CrossQuad quad_cross(const QuadParams& p);
// Frame coordinates to Z^2 coordinates: (x, y) -> ((x+y)/2, (x-y)/2).
// Under this map f1*+f2*, f1*, f2* become (1,1), (1,0), (0,1).
Point cross_to_standard(const Point& p);

}  // namespace flatcert
