#pragma once

// Core data model: polynomial dynamical systems written as a sum of monomial
// terms x^y * w, and Euclidean embedded graphs (directed graphs whose vertices
// are exponent vectors in Z^n_>=0) weighted by positive rational edge rates.
// Free functions implement the graph-side calculus: associated dynamical
// system, dynamical equivalence, connectivity, deficiency, and the Kirchhoff
// (weighted Laplacian) matrix together with its canonical kernel basis.

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wrzero/ratmat.hpp"

namespace wrzero {

// A vertex is a point of Z^n_>=0 interpreted as a monomial exponent vector.
using Vertex = Eigen::VectorXi;

// Canonical vertex order used everywhere: colexicographic, i.e. the last
// coordinate is most significant.  For one variable this is the usual order
// 1 < x1 < x1^2 < ...; in general it pins down a deterministic indexing of
// vertices and monomials.
bool vertex_less(const Vertex& a, const Vertex& b);
bool vertex_eq(const Vertex& a, const Vertex& b);

// Human-readable monomial: (1,0,2) -> "x1*x3^2", the origin -> "1".
std::string monomial_name(const Vertex& y);

// Polynomial dynamical system dx/dt = sum_i x^{sources[i]} * net.col(i).
// Sources are distinct and sorted by vertex_less; every column of net is
// nonzero.
struct PolySystem {
  int n = 0;                    // number of state variables
  std::vector<Vertex> sources;  // m distinct exponent vectors
  RatMatrix net;                // n x m, column i is the net direction w_i
};

// Sorts columns into canonical order and validates the invariants above.
PolySystem make_poly_system(int n, std::vector<Vertex> sources, RatMatrix net);

bool operator==(const PolySystem& a, const PolySystem& b);

struct Edge {
  int from = 0;
  int to = 0;
  Rational kappa;  // positive rate
};

// Weighted embedded graph.  Vertices are sorted by vertex_less and edges by
// (from, to); no self-loops, no parallel edges, no isolated vertices.
struct WeightedEGraph {
  int n = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Canonicalizes (sorts vertices, remaps edge endpoints) and validates.
WeightedEGraph make_graph(int n, std::vector<Vertex> vertices, std::vector<Edge> edges);

bool operator==(const WeightedEGraph& a, const WeightedEGraph& b);

// Disjoint blocks of vertex indices; blocks ordered by smallest member and
// sorted internally.
using ComponentPartition = std::vector<std::vector<int>>;

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

// Parses a system written one equation per line (or ';'-separated):
//   dx1/dt = -12*x1 + x3^2
// Coefficients may be integers, fractions ("55/2") or decimals ("0.5", kept
// exact).  Duplicate monomials are merged; monomials whose merged coefficient
// vector vanishes are dropped with a warning.  Throws ParseError with
// line/column on malformed input.
PolySystem parse_system(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Renders a system in the grammar accepted by parse_system.
std::string render_system(const PolySystem& sys);

// Dynamical system generated by a weighted graph: for every source vertex the
// net direction w_i = sum_j kappa_ij (y_j - y_i); sources with w_i = 0 are
// omitted.
PolySystem associated_system(const WeightedEGraph& g);

// True when both graphs generate identical dynamics, i.e. their net direction
// vectors agree on the union of their source vertex sets.
bool dynamically_equivalent(const WeightedEGraph& a, const WeightedEGraph& b);

// Connected components of the underlying undirected graph.
ComponentPartition connected_components(const WeightedEGraph& g);

// Strongly connected components, blocks ordered by smallest member.
ComponentPartition strongly_connected_components(const WeightedEGraph& g);

// Every edge stays within a strongly connected component.
bool is_weakly_reversible(const WeightedEGraph& g);

// Strongly connected components without outgoing edges.
ComponentPartition terminal_sccs(const WeightedEGraph& g);

struct DeficiencyInfo {
  int total = 0;                   // |V| - #components - dim span{edge vectors}
  std::vector<int> per_component;  // |V_p| - 1 - dim span{y_j - y_i : i,j in V_p}
};

DeficiencyInfo deficiency(const WeightedEGraph& g);

// Weighted Laplacian: column i carries the outflow of vertex i, i.e. entry
// (j,i) = kappa_ij for every edge i->j and entry (i,i) = -sum_j kappa_ij.
// Columns sum to zero.
RatMatrix kirchhoff_matrix(const WeightedEGraph& g);

// Canonical kernel basis of the Kirchhoff matrix: one nonnegative primitive
// vector per terminal strongly connected component, supported exactly on it,
// ordered like terminal_sccs(g).  Throws std::logic_error("kernel support
// mismatch") if verification fails (cannot happen for a valid graph).
std::vector<RatVector> kirchhoff_kernel(const WeightedEGraph& g);

// Floating-point evaluation of x^y and of the right-hand side of the system.
double eval_monomial(const Vertex& y, const Eigen::VectorXd& x);
Eigen::VectorXd eval_rhs(const PolySystem& sys, const Eigen::VectorXd& x);

}  // namespace wrzero
