#pragma once

// Steady-state structure of a WR0 realization.  The positive steady states
// form the log-linear set {exp(z) : D z = J}; this module builds D and J from
// the realization, solves for the minimum-norm log steady state, and exposes
// the conservation laws and the complex-balance residual used to certify
// steady states numerically.

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "wrzero/realize.hpp"

namespace wrzero {

struct SteadyStateParam {
  RatMatrix d;                    // (m - #components) x n, exact, full row rank
  Eigen::VectorXd j;              // log right-hand side
  Eigen::VectorXd z_star;         // minimum-norm solution of d z = j
  std::vector<RatVector> kernel;  // exact basis of ker d
  double residual = 0.0;          // ||d z_star - j||_inf
};

// For every component, with base vertex the smallest-index member: one row
// y_k - y_base per other member k (ascending), with J entry
// log(c[k] / c[base]) taken from the component's cone generator c.
std::pair<RatMatrix, Eigen::VectorXd> build_DJ(const Realization& r);

// Minimum-norm z_star with exact kernel; throws std::runtime_error when the
// residual exceeds 1e-9 (cannot happen: d has full row rank).
SteadyStateParam solve_steady(const RatMatrix& d, const Eigen::VectorXd& j);

// Convenience composition of build_DJ and solve_steady.
SteadyStateParam steady_state_parametrization(const Realization& r);

// Steady states exp(z_star + sum_i t_i k_i) sampled on the grid
// t in {-1,0,1}^dim(kernel).
std::vector<Eigen::VectorXd> sample_steady_states(const SteadyStateParam& p);

// The unique steady state sharing the conserved quantities of x0, i.e. the
// point x = exp(z_star + K t) with K^T x = K^T x0 (K = kernel basis).  Found
// by damped Newton on the strictly convex potential whose gradient is
// K^T (x - x0).
Eigen::VectorXd steady_state_in_polyhedron(const SteadyStateParam& p,
                                           const Eigen::VectorXd& x0);

// Max over vertices of |outflow - inflow| at x: for vertex i the net flux is
// sum_{i->j} kappa_ij x^{y_i} - sum_{j->i} kappa_ji x^{y_j}.  Zero at a
// complex-balanced steady state.
double complex_balance_residual(const WeightedEGraph& g, const Eigen::VectorXd& x);

// Primitive integer basis of {v : v^T W = 0}; every v^T x is constant along
// trajectories of the system.
struct ConservationBasis {
  std::vector<RatVector> vectors;
};

ConservationBasis conservation_laws(const PolySystem& sys);

}  // namespace wrzero
