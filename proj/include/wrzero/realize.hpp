#pragma once

// Search for the weakly reversible deficiency-zero (WR0) realization of a
// polynomial dynamical system.  The outcome is decisive: either the unique
// WR0 weighted graph generating the system, or a structured reason why none
// exists.

#include <optional>
#include <variant>
#include <vector>

#include "wrzero/cone.hpp"
#include "wrzero/model.hpp"

namespace wrzero {

struct Realization {
  WeightedEGraph graph;
  ComponentPartition components;  // blocks ordered by smallest source index
  int deficiency = 0;             // always 0 on success
  ConeRays generators;            // one cone generator per component, same order
};

enum class FailureKind {
  Inconsistent,            // no strictly positive vector in ker(W)
  NotPartition,            // extreme-ray supports overlap
  NotAffinelyIndependent,  // candidate component fails affine independence
  NotInCone,               // some net direction leaves its component's cone
};

// Indices are 1-based to match the usual y_1, y_2, ... labelling of sources.
struct FailureReason {
  FailureKind kind = FailureKind::Inconsistent;
  int source = 0;     // failing source (NotInCone)
  int component = 0;  // failing component (NotAffinelyIndependent, NotInCone)
};

const char* to_string(FailureKind kind);

using RealizeResult = std::variant<Realization, FailureReason>;

// Decision procedure.  Checks run in a fixed order: consistency, then
// partition of ray supports, then per-component affine independence
// (ascending component), then per-source cone membership (ascending source
// within each component).  On success the realization is weakly reversible,
// has deficiency zero, and its associated system equals sys exactly.
RealizeResult find_wr0(const PolySystem& sys);

bool affinely_independent(const std::vector<Vertex>& points);

// Writes w as a nonnegative combination of the edge vectors out of base,
// w = sum_j c_j (others[j] - base); the coefficients are unique because
// {base} + others is affinely independent.  std::nullopt when no nonnegative
// solution exists.
std::optional<RatVector> decompose_in_cone(const RatVector& w, const Vertex& base,
                                           const std::vector<Vertex>& others);

// Copy of sys with every net direction w_i replaced by a_i * w_i (a_i > 0).
PolySystem scale_net_vectors(const PolySystem& sys, const RatVector& a);

// Positive rescaling of the net directions never changes whether a WR0
// realization exists, and on success rescales the outgoing rates of source i
// by a_i exactly.  Verifies both claims; true when they hold.
bool scaled_equivalence_check(const PolySystem& sys, const RatVector& a);

}  // namespace wrzero
