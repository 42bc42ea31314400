#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatcert/freeness.hpp"

namespace flatcert {

enum class LockKind { ZLock, RSkew, RParallel, RGeneral };
const char* to_string(LockKind k);

struct LockWitness {
  std::size_t facet_index = 0;
  Polygon triangle;
  LockKind kind = LockKind::ZLock;
};

enum class FacetState { Locked, NotLocked, NoWitnessFound };
const char* to_string(FacetState s);

struct FacetResult {
  FacetState state = FacetState::NoWitnessFound;
  std::optional<LockWitness> witness;
};

enum class Verdict { Maximal, NotMaximal, Undetermined };
const char* to_string(Verdict v);

struct MaximalityReport {
  Ring ring = Ring::Z;
  std::vector<FacetResult> facets;
  Verdict overall = Verdict::Undetermined;
};

enum class RejectReason { None, NotACopy, NotContained, FaceNotInRelint, OppositeFaceTestFailed };
const char* to_string(RejectReason r);

struct RCheckResult {
  std::optional<LockWitness> witness;  // set when Locked
  RejectReason reason = RejectReason::None;
  bool locked() const { return witness.has_value(); }
};

// Z ring. Both throw std::invalid_argument unless p is 2-D and Z-free.
FacetResult z_facet_locked(const Polygon& p, std::size_t facet);
MaximalityReport z_inclusion_maximal(const Polygon& p);
// Re-checks a Z witness against the lock definition.
bool verify_z_lock(const Polygon& p, const LockWitness& w);

// R ring.
RCheckResult r_locked_check(const Polygon& p, std::size_t facet, const Polygon& tri);
FacetResult r_locked_search(const Polygon& p, std::size_t facet, int shape_bound = 4);
MaximalityReport r_maximal_certified(const Polygon& p, int shape_bound = 4);

// Anchored unimodular triangles conv(0, e, f) with coordinates in
// [-bound, bound], one per translation class, in canonical order.
std::vector<Polygon> unimodular_shapes(int bound);

// p with facet i moved outward by eps along its inner normal scaled to the
// facet's primitive normal; neighbouring facets keep their lines.
// Returns nullopt when the neighbouring lines do not bound the result.
std::optional<Polygon> push_facet(const Polygon& p, std::size_t facet, const Rational& eps);

}  // namespace flatcert
