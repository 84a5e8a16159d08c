#pragma once

// Extreme rays of the pointed polyhedral cone ker(W) intersected with the
// nonnegative orthant, computed exactly with the double description method.
// The ray list drives both the realization search (ray supports become the
// candidate connected components) and the consistency check (the system
// admits positive steady-state candidates iff the ray supports jointly cover
// every source index).

#include <optional>
#include <vector>

#include "wrzero/model.hpp"
#include "wrzero/ratmat.hpp"

namespace wrzero {

struct ConeRays {
  int m = 0;                    // ambient dimension (number of sources)
  std::vector<RatVector> rays;  // primitive integer, >= 0, lex sorted
};

// All extreme rays of {v >= 0 : w v = 0}.  Empty when the cone is {0}.
ConeRays extreme_rays(const RatMatrix& w);

// Indices with nonzero entry, ascending.
std::vector<int> support(const RatVector& v);

// When the ray supports are pairwise disjoint and cover {0..m-1}, returns
// them as a partition ordered by smallest member; std::nullopt otherwise.
std::optional<ComponentPartition> supports_partition(const ConeRays& rays);

// ker(w) meets the strictly positive orthant iff the union of extreme-ray
// supports covers every index.
bool is_consistent(const RatMatrix& w);

}  // namespace wrzero
