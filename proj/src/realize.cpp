#include "wrzero/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace wrzero {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::Inconsistent: return "Inconsistent";
    case FailureKind::NotPartition: return "NotPartition";
    case FailureKind::NotAffinelyIndependent: return "NotAffinelyIndependent";
    case FailureKind::NotInCone: return "NotInCone";
  }
  return "Unknown";
}

bool affinely_independent(const std::vector<Vertex>& points) {
  if (points.size() <= 1) return true;
  RatMatrix diffs(points[0].size(), static_cast<Eigen::Index>(points.size()) - 1);
  for (size_t k = 1; k < points.size(); ++k) {
    diffs.col(static_cast<Eigen::Index>(k - 1)) =
        to_rational(points[k]) - to_rational(points[0]);
  }
  return rank(diffs) == static_cast<Eigen::Index>(points.size()) - 1;
}

std::optional<RatVector> decompose_in_cone(const RatVector& w, const Vertex& base,
                                           const std::vector<Vertex>& others) {
  RatMatrix directions(base.size(), static_cast<Eigen::Index>(others.size()));
  for (size_t k = 0; k < others.size(); ++k) {
    directions.col(static_cast<Eigen::Index>(k)) = to_rational(others[k]) - to_rational(base);
  }
  const std::optional<LinearSolution> sol = solve_exact(directions, w);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty()) {
    throw std::invalid_argument("decompose_in_cone requires affinely independent directions");
  }
  for (Eigen::Index i = 0; i < sol->particular.size(); ++i) {
    if (sol->particular(i) < 0) return std::nullopt;
  }
  return sol->particular;
}

RealizeResult find_wr0(const PolySystem& sys) {
  const int m = static_cast<int>(sys.sources.size());
  const ConeRays rays = extreme_rays(sys.net);

  // Consistency first: without a strictly positive kernel vector no positive
  // steady state can exist, regardless of how the supports fall.
  {
    std::vector<bool> covered(m, false);
    for (const RatVector& ray : rays.rays) {
      for (int i : support(ray)) covered[i] = true;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
      return FailureReason{FailureKind::Inconsistent};
    }
  }

  const std::optional<ComponentPartition> partition = supports_partition(rays);
  if (!partition) return FailureReason{FailureKind::NotPartition};

  // Generators reordered to follow the component order (smallest member
  // first) rather than the lexicographic ray order.
  ConeRays generators;
  generators.m = m;
  for (const std::vector<int>& block : *partition) {
    for (const RatVector& ray : rays.rays) {
      if (ray(block[0]) != 0) {
        generators.rays.push_back(ray);
        break;
      }
    }
  }

  std::vector<Edge> edges;
  for (size_t p = 0; p < partition->size(); ++p) {
    const std::vector<int>& block = (*partition)[p];
    std::vector<Vertex> members;
    for (int i : block) members.push_back(sys.sources[i]);
    if (!affinely_independent(members)) {
      return FailureReason{FailureKind::NotAffinelyIndependent, 0, static_cast<int>(p) + 1};
    }
    for (size_t bi = 0; bi < block.size(); ++bi) {
      const int i = block[bi];
      std::vector<Vertex> others;
      std::vector<int> other_index;
      for (size_t bj = 0; bj < block.size(); ++bj) {
        if (bj == bi) continue;
        others.push_back(sys.sources[block[bj]]);
        other_index.push_back(block[bj]);
      }
      const std::optional<RatVector> coeffs =
          decompose_in_cone(sys.net.col(i), sys.sources[i], others);
      if (!coeffs) {
        return FailureReason{FailureKind::NotInCone, i + 1, static_cast<int>(p) + 1};
      }
      for (size_t k = 0; k < other_index.size(); ++k) {
        if ((*coeffs)(static_cast<Eigen::Index>(k)) > 0) {
          edges.push_back({i, other_index[k], (*coeffs)(static_cast<Eigen::Index>(k))});
        }
      }
    }
  }

  Realization realization;
  realization.graph = make_graph(sys.n, sys.sources, std::move(edges));
  realization.components = *partition;
  realization.generators = std::move(generators);

  // The construction guarantees all of the following; verify defensively.
  const DeficiencyInfo def = deficiency(realization.graph);
  if (def.total != 0 || !is_weakly_reversible(realization.graph) ||
      connected_components(realization.graph) != realization.components ||
      !(associated_system(realization.graph) == sys)) {
    throw std::logic_error("realization postcondition violated");
  }
  realization.deficiency = def.total;
  return realization;
}

PolySystem scale_net_vectors(const PolySystem& sys, const RatVector& a) {
  if (a.size() != static_cast<Eigen::Index>(sys.sources.size())) {
    throw std::invalid_argument("scale vector length mismatch");
  }
  PolySystem scaled = sys;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) <= 0) throw std::invalid_argument("scale factors must be positive");
    scaled.net.col(i) *= a(i);
  }
  return scaled;
}

bool scaled_equivalence_check(const PolySystem& sys, const RatVector& a) {
  const RealizeResult original = find_wr0(sys);
  const RealizeResult scaled = find_wr0(scale_net_vectors(sys, a));

  if (std::holds_alternative<FailureReason>(original)) {
    if (!std::holds_alternative<FailureReason>(scaled)) return false;
    const FailureReason& fo = std::get<FailureReason>(original);
    const FailureReason& fs = std::get<FailureReason>(scaled);
    return fo.kind == fs.kind && fo.source == fs.source && fo.component == fs.component;
  }
  if (!std::holds_alternative<Realization>(scaled)) return false;

  const WeightedEGraph& go = std::get<Realization>(original).graph;
  const WeightedEGraph& gs = std::get<Realization>(scaled).graph;
  if (go.edges.size() != gs.edges.size()) return false;
  for (size_t k = 0; k < go.edges.size(); ++k) {
    const Edge& eo = go.edges[k];
    const Edge& es = gs.edges[k];
    if (eo.from != es.from || eo.to != es.to) return false;
    if (es.kappa != a(eo.from) * eo.kappa) return false;
  }
  return true;
}

}  // namespace wrzero
