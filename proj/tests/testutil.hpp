#pragma once

// Shared fixtures and random generators for the test suite.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wrzero/cone.hpp"
#include "wrzero/model.hpp"
#include "wrzero/ratmat.hpp"
#include "wrzero/realize.hpp"

namespace testutil {

using namespace wrzero;

inline Vertex vertex(std::initializer_list<int> entries) {
  Vertex y(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int e : entries) y(i++) = e;
  return y;
}

inline RatVector ratvec(std::initializer_list<const char*> entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const char* e : entries) v(i++) = rational_from_string(e);
  return v;
}

inline RatMatrix ratmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  RatMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const char* e : row) m(i, j++) = rational_from_string(e);
    ++i;
  }
  return m;
}

// --- Worked systems used across the suite ---------------------------------

// Three-monomial system whose WR0 realization is a triangle on x1, x2^2, x3^2.
inline const char* triangle_text() {
  return "dx1/dt = -12*x1 + x3^2\n"
         "dx2/dt = 14*x1 - 4*x2^2 + 8*x3^2\n"
         "dx3/dt = 10*x1 + 4*x2^2 - 10*x3^2\n";
}

// Same monomials, first net direction perturbed so no WR0 realization exists.
inline const char* mixed_sign_triangle_text() {
  return "dx1/dt = -1/2*x1 + x3^2\n"
         "dx2/dt = -2*x1 - 4*x2^2 + 8*x3^2\n"
         "dx3/dt = 3*x1 + 4*x2^2 - 10*x3^2\n";
}

// Four monomials on the corners of a square; realization is two disjoint
// 2-cycles along the diagonals.
inline const char* square_text() {
  return "dx1/dt = 6 - 10*x1^2 - 4*x1^2*x2^2 + 6*x2^2\n"
         "dx2/dt = 6 + 10*x1^2 - 4*x1^2*x2^2 - 6*x2^2\n";
}

inline PolySystem triangle_system() { return parse_system(triangle_text()); }
inline PolySystem mixed_sign_triangle_system() { return parse_system(mixed_sign_triangle_text()); }
inline PolySystem square_system() { return parse_system(square_text()); }

// The square system's WR0 realization: both diagonals as 2-cycles.
inline WeightedEGraph square_diagonals_graph() {
  std::vector<Vertex> vs = {vertex({0, 0}), vertex({2, 0}), vertex({0, 2}), vertex({2, 2})};
  std::vector<Edge> es = {{0, 3, Rational(3)}, {3, 0, Rational(2)},
                          {2, 1, Rational(3)}, {1, 2, Rational(5)}};
  return make_graph(2, std::move(vs), std::move(es));
}

// Dynamically equivalent to square_diagonals_graph: a single 4-cycle plus one
// diagonal edge; weakly reversible but with deficiency one.
inline WeightedEGraph square_cycle_graph() {
  std::vector<Vertex> vs = {vertex({0, 0}), vertex({2, 0}), vertex({0, 2}), vertex({2, 2})};
  std::vector<Edge> es = {
      {0, 1, Rational(3)}, {1, 0, Rational(5)}, {2, 3, Rational(3)}, {3, 2, Rational(1)},
      {0, 2, Rational(3)}, {2, 0, Rational(3)}, {1, 3, Rational(5)}, {3, 1, Rational(1)},
      {3, 0, Rational(1)}};
  return make_graph(2, std::move(vs), std::move(es));
}

// Dynamically equivalent again: every corner feeds the centre, so the graph
// is not weakly reversible.
inline WeightedEGraph square_funnel_graph() {
  std::vector<Vertex> vs = {vertex({0, 0}), vertex({2, 0}), vertex({0, 2}), vertex({2, 2}),
                            vertex({1, 1})};
  std::vector<Edge> es = {{0, 4, Rational(6)}, {1, 4, Rational(10)}, {2, 4, Rational(6)},
                          {3, 4, Rational(4)}};
  return make_graph(2, std::move(vs), std::move(es));
}

// Two connected components but three terminal strongly connected components:
// two reversible pairs plus a 3-cycle with a transient vertex feeding both
// the cycle and one pair.
inline WeightedEGraph two_component_three_terminal_graph() {
  std::vector<Vertex> vs = {vertex({0, 2}), vertex({2, 3}), vertex({4, 0}), vertex({4, 2}),
                            vertex({0, 0}), vertex({1, 0}), vertex({2, 1}), vertex({3, 1})};
  std::vector<Edge> es = {{0, 1, Rational(2)}, {1, 0, Rational(3)},   // pair
                          {2, 3, Rational(5)}, {3, 2, Rational(7)},   // pair
                          {4, 5, Rational(2)}, {5, 6, Rational(3)},   // 3-cycle
                          {6, 4, Rational(5)},
                          {7, 6, Rational(11)}, {7, 3, Rational(13)}};  // transient
  return make_graph(2, std::move(vs), std::move(es));
}

// --- Randomized generators -------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int max_num = 100, int max_den = 100,
                                bool allow_negative = false) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  if (allow_negative && std::uniform_int_distribution<int>(0, 1)(rng)) q = -q;
  return q;
}

// Matrix with entries from {-max..max} x {1..max_den}, zero with probability
// ~ zero_weight / (zero_weight + 1).
inline RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int max_abs = 6,
                               int max_den = 3, int zero_weight = 1) {
  RatMatrix m(rows, cols);
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  std::uniform_int_distribution<int> zero(0, zero_weight);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (zero(rng) > 0) {
        m(r, c) = 0;
        continue;
      }
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  }
  return m;
}

// Reference implementation of the extreme rays by support enumeration: a
// support T carries an extreme ray iff the columns of w indexed by T have a
// one-dimensional kernel with a strictly positive representative, and no
// proper subset of T supports a nonzero cone member.
inline std::vector<RatVector> brute_force_extreme_rays(const RatMatrix& w) {
  const int m = static_cast<int>(w.cols());
  std::vector<std::set<int>> feasible_supports;  // supports of nonzero cone members
  std::vector<RatVector> rays;

  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) t.push_back(i);
    }
    RatMatrix sub(w.rows(), static_cast<Eigen::Index>(t.size()));
    for (size_t c = 0; c < t.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = w.col(t[c]);
    const std::vector<RatVector> kernel = kernel_basis(sub);
    if (kernel.size() != 1) continue;
    bool positive = true;
    for (Eigen::Index i = 0; i < kernel[0].size(); ++i) positive &= kernel[0](i) > 0;
    if (!positive) continue;
    feasible_supports.emplace_back(t.begin(), t.end());

    RatVector ray = RatVector::Zero(m);
    for (size_t c = 0; c < t.size(); ++c) ray(t[c]) = kernel[0](static_cast<Eigen::Index>(c));
    rays.push_back(primitive_integer(ray));
  }

  // Minimality: discard any candidate whose support strictly contains the
  // support of another nonzero cone member.
  std::vector<RatVector> extreme;
  for (const RatVector& ray : rays) {
    const std::vector<int> s = support(ray);
    const std::set<int> sset(s.begin(), s.end());
    bool minimal = true;
    for (const std::set<int>& other : feasible_supports) {
      if (other != sset && std::includes(sset.begin(), sset.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) extreme.push_back(ray);
  }
  std::sort(extreme.begin(), extreme.end(), ratvec_lex_less);
  return extreme;
}

// Random weakly reversible deficiency-zero weighted graph: a few strongly
// connected components on affinely independent vertex sets whose difference
// subspaces are linearly independent.  max_coord and max_rate_num tame the
// stiffness of the associated dynamics when trajectories get integrated.
inline WeightedEGraph random_wr0_graph(std::mt19937_64& rng, int max_n = 5, int max_coord = 4,
                                       int max_rate_num = 100, int max_rate_den = 100) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  const int n = n_dist(rng);

  // Component sizes s_p >= 2 with sum (s_p - 1) <= n.
  std::vector<int> sizes;
  int budget = n;
  std::uniform_int_distribution<int> more(0, 2);
  while (budget > 0 && sizes.size() < 3) {
    std::uniform_int_distribution<int> size_dist(2, std::min(budget + 1, n + 1));
    const int s = size_dist(rng);
    sizes.push_back(s);
    budget -= s - 1;
    if (!sizes.empty() && more(rng) == 0) break;
  }
  if (sizes.empty()) sizes.push_back(2);

  std::uniform_int_distribution<int> coord(0, max_coord);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> blocks;
    for (int s : sizes) {
      std::vector<int> block;
      for (int k = 0; k < s; ++k) {
        Vertex y(n);
        for (int i = 0; i < n; ++i) y(i) = coord(rng);
        block.push_back(static_cast<int>(vertices.size()));
        vertices.push_back(std::move(y));
      }
      blocks.push_back(std::move(block));
    }

    // All vertices distinct?
    bool distinct = true;
    for (size_t a = 0; a < vertices.size() && distinct; ++a)
      for (size_t b = a + 1; b < vertices.size(); ++b)
        if (vertex_eq(vertices[a], vertices[b])) {
          distinct = false;
          break;
        }
    if (!distinct) continue;

    // Affine independence per component and global independence of the
    // difference subspaces: the stacked difference matrix must have rank
    // sum (s_p - 1).
    Eigen::Index total = 0;
    for (int s : sizes) total += s - 1;
    RatMatrix diffs(n, total);
    Eigen::Index col = 0;
    for (const std::vector<int>& block : blocks) {
      for (size_t k = 1; k < block.size(); ++k) {
        diffs.col(col++) = to_rational(vertices[block[k]]) - to_rational(vertices[block[0]]);
      }
    }
    if (rank(diffs) != total) continue;

    // Strongly connect each component with a random cycle, then sprinkle
    // extra edges inside the component.
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> present;
    for (const std::vector<int>& block : blocks) {
      std::vector<int> cycle = block;
      std::shuffle(cycle.begin(), cycle.end(), rng);
      for (size_t k = 0; k < cycle.size(); ++k) {
        const int from = cycle[k];
        const int to = cycle[(k + 1) % cycle.size()];
        edges.push_back({from, to, random_rational(rng, max_rate_num, max_rate_den)});
        present.insert({from, to});
      }
      std::uniform_int_distribution<int> extra(0, 2);
      int additions = extra(rng);
      std::uniform_int_distribution<size_t> pick(0, block.size() - 1);
      while (additions-- > 0) {
        const int from = block[pick(rng)];
        const int to = block[pick(rng)];
        if (from == to || present.count({from, to})) continue;
        edges.push_back({from, to, random_rational(rng, max_rate_num, max_rate_den)});
        present.insert({from, to});
      }
    }
    return make_graph(n, std::move(vertices), std::move(edges));
  }
  throw std::runtime_error("random_wr0_graph: no admissible vertex placement found");
}

// Random weighted directed graph on distinct lattice vertices; no structure
// beyond validity (used for Kirchhoff kernel checks).
inline WeightedEGraph random_digraph(std::mt19937_64& rng, int max_vertices = 8) {
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::uniform_int_distribution<int> v_dist(2, max_vertices);
  const int n = n_dist(rng);
  // Coordinates live in {0..4}, so n = 1 only offers five distinct vertices.
  const int pool = n == 1 ? 5 : max_vertices;
  const int v = std::min(v_dist(rng), pool);

  std::uniform_int_distribution<int> coord(0, 4);
  std::vector<Vertex> vertices;
  std::set<std::vector<int>> seen;
  while (static_cast<int>(vertices.size()) < v) {
    Vertex y(n);
    for (int i = 0; i < n; ++i) y(i) = coord(rng);
    std::vector<int> key(y.data(), y.data() + n);
    if (seen.insert(key).second) vertices.push_back(std::move(y));
  }

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> present;
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::uniform_int_distribution<int> count(v, 2 * v + 2);
  const int target = std::min(count(rng), v * (v - 1));
  while (static_cast<int>(edges.size()) < target) {
    const int from = pick(rng);
    const int to = pick(rng);
    if (from == to || present.count({from, to})) continue;
    edges.push_back({from, to, random_rational(rng, 9, 4)});
    present.insert({from, to});
  }
  // Give every vertex at least one incident edge.
  for (int i = 0; i < v; ++i) {
    bool touched = false;
    for (const Edge& e : edges) touched |= e.from == i || e.to == i;
    if (!touched) {
      const int to = (i + 1) % v;
      edges.push_back({i, to, random_rational(rng, 9, 4)});
    }
  }
  return make_graph(n, std::move(vertices), std::move(edges));
}

}  // namespace testutil
