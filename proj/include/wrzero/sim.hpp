#pragma once

// Trajectory integration and convergence certification.  The integrator is a
// Dormand-Prince 5(4) embedded pair with proportional step control; the
// certifier tracks the relative-entropy Lyapunov function, the conservation
// laws, and the distance to the predicted steady state of the trajectory's
// invariant polyhedron.

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

#include "wrzero/steady.hpp"

namespace wrzero {

struct Trajectory {
  std::vector<double> times;            // accepted step times, starting at 0
  std::vector<Eigen::VectorXd> states;  // states at those times
  int steps_accepted = 0;
  int steps_rejected = 0;
};

struct PositivityError : std::runtime_error {
  PositivityError(double time_, Eigen::VectorXd state_);
  double time = 0.0;
  Eigen::VectorXd state;
};

struct IntegrationOptions {
  double rel_tol = 1e-8;   // must lie in (1e-12, 1e-2)
  double abs_tol = 1e-10;  // must be positive
};

// Integrates dx/dt = f(x) from the positive state x0 up to t_end, recording
// every accepted step.  Throws PositivityError if a state coordinate drops
// below 1e-12 and std::runtime_error on step-size underflow.
Trajectory integrate(const PolySystem& sys, const Eigen::VectorXd& x0, double t_end,
                     const IntegrationOptions& opts = {});

// L(x) = sum_i x_i (log x_i - log x*_i - 1); strictly decreasing along
// trajectories of a complex-balanced system until the steady state x*.
double lyapunov_value(const Eigen::VectorXd& x, const Eigen::VectorXd& x_star);

struct CertificationReport {
  bool lyapunov_monotone = false;     // no increase beyond the slack below
  double max_lyapunov_increase = 0.0; // largest observed step increase
  double lyapunov_slack = 0.0;        // 1e-8 * |L(x0)|
  std::vector<double> conservation_drift;  // max |v.(x(t) - x0)| per law
  double terminal_distance = 0.0;     // ||x(t_end) - x_star||_inf
  bool converged = false;             // terminal_distance < 1e-4
  Eigen::VectorXd x_star;             // steady state of x0's polyhedron
  Trajectory trajectory;
};

// Integrates sys from x0 and checks the convergence guarantees of its WR0
// realization r: monotone Lyapunov decay toward the predicted steady state,
// conserved quantities constant, trajectory ending near the steady state.
CertificationReport certify(const PolySystem& sys, const Realization& r,
                            const Eigen::VectorXd& x0, double t_end,
                            const IntegrationOptions& opts = {});

}  // namespace wrzero
