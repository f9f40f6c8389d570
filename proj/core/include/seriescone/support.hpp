#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seriescone/cone.hpp"
#include "seriescone/support_spec.hpp"

namespace seriescone {

// One linear condition on weight directions: normal . w >= 0, or > 0 when
// strict.
struct TauCondition {
  IntVec normal;
  bool strict;
  friend bool operator==(const TauCondition& a, const TauCondition& b) {
    return a.normal == b.normal && a.strict == b.strict;
  }
};

struct TauResult {
  Cone tau;
  Cone tau_dual;
  Cone tau_tilde;
  // Conjunction cutting the closed orthant (with 0 always excluded).
  std::vector<TauCondition> tau0;
  bool tau0_empty = false;  // accumulating families empty the region outright
  // Union of open half-spaces normal . w < 0, inside the orthant.
  std::vector<TauCondition> tau1;
};

Cone tau(const SupportSpec& s);
Cone tau_tilde(const SupportSpec& s);
TauResult tau_result(const SupportSpec& s);
std::pair<std::vector<TauCondition>, std::vector<TauCondition>> tau_prime(const SupportSpec& s);

// Membership of a weight vector in the tau'_0 region described by a result.
bool tau0_region_contains(const TauResult& r, const RatVec& w);

struct ThresholdInfo {
  Rat t;
  bool attained;
  bool level_infinite;
};

// Threshold of the support in a tau direction: the lowest level carrying
// infinitely many points (or an accumulation), and otherwise the smallest
// achieved value. Requires normal in tau(s).
ThresholdInfo t_sigma(const SupportSpec& s, const IntVec& normal);

// Kind and count of support points strictly below / exactly on a level, for
// any direction (no orthant restriction). Counts are exact when finite.
struct HalfspaceCensus {
  bool below_infinite = false;
  Int below_count = 0;
  bool on_infinite = false;
  Int on_count = 0;
};
HalfspaceCensus halfspace_census(const SupportSpec& s, const IntVec& normal, const Rat& level);

// ---- truncation diagnostics for supports outside the symbolic class ----

enum class StabilizationVerdict { Stabilized, NonStabilizing, Inconclusive };

struct DiagnosticLevel {
  size_t point_count = 0;
  std::vector<IntVec> rays;  // extremal hull rays at this truncation, canonical
};

struct DiagnosticReport {
  std::vector<DiagnosticLevel> levels;
  StabilizationVerdict verdict = StabilizationVerdict::Inconclusive;
  int stabilized_at = -1;  // 1-based level at which the hull stopped moving
};

// Outer hull approximations across increasing finite truncations (n = 2).
DiagnosticReport non_polyhedral_diagnostic(const std::vector<std::vector<RatVec>>& truncations);

// ---- constructive normalization ----

struct FacetWitness {
  IntVec u;   // face functional (integer relative-interior vector of the dual face)
  Rat level;  // threshold in scaled support coordinates
  enum class Kind { InfiniteLevel, Accumulation, Adjustment, None } kind = Kind::None;
};

struct RayFaceWitness {
  IntVec ray;  // primitive generator of the 1-dim face of tau_dual
  std::optional<RatVec> gamma;
  enum class Kind { Family, Adjustment, None } kind = Kind::None;
};

struct NormalizationResult {
  Cone tau;
  Cone tau_dual;
  std::vector<RatVec> C;
  std::vector<RatVec> removed_points;
  SupportSpec orthant_adjust;  // correction families supported in the orthant
  SupportSpec residual;
  std::vector<FacetWitness> facet_witnesses;
  std::vector<RayFaceWitness> ray_witnesses;
  bool residual_contained = false;  // residual inside C + tau_dual, verified
  bool dickson_certified = false;
};

NormalizationResult normalize(const SupportSpec& s);

// Unbounded one-dimensional faces of Conv(C) + recession.
struct PolyhedronEdge {
  RatVec apex;
  IntVec ray;
};
std::vector<PolyhedronEdge> unbounded_edges(const std::vector<RatVec>& C, const Cone& recession);

}  // namespace seriescone
