#include "wrzero/sim.hpp"

#include <algorithm>
#include <cmath>

namespace wrzero {

PositivityError::PositivityError(double time_, Eigen::VectorXd state_)
    : std::runtime_error("state left the positive orthant at t = " + std::to_string(time_)),
      time(time_),
      state(std::move(state_)) {}

namespace {

// Dormand-Prince 5(4) tableau.  The last stage evaluates at the 5th-order
// solution, so it doubles as the first stage of the next step (FSAL).
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// 5th-order minus 4th-order weights; the weighted stage sum is the embedded
// error estimate.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

constexpr double kMinCoordinate = 1e-12;

// Precomputed double view of the system for tight evaluation loops.
struct Evaluator {
  Eigen::MatrixXd net;
  std::vector<Vertex> sources;

  explicit Evaluator(const PolySystem& sys) : net(to_double(sys.net)), sources(sys.sources) {}

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const {
    Eigen::VectorXd monomials(static_cast<Eigen::Index>(sources.size()));
    for (size_t i = 0; i < sources.size(); ++i) {
      monomials(static_cast<Eigen::Index>(i)) = eval_monomial(sources[i], x);
    }
    return net * monomials;
  }
};

double error_norm(const Eigen::VectorXd& error, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& x_new, const IntegrationOptions& opts) {
  double sum = 0;
  for (Eigen::Index i = 0; i < error.size(); ++i) {
    const double scale =
        opts.abs_tol + opts.rel_tol * std::max(std::abs(x(i)), std::abs(x_new(i)));
    const double ratio = error(i) / scale;
    sum += ratio * ratio;
  }
  return std::sqrt(sum / static_cast<double>(error.size()));
}

}  // namespace

Trajectory integrate(const PolySystem& sys, const Eigen::VectorXd& x0, double t_end,
                     const IntegrationOptions& opts) {
  if (!(opts.rel_tol > 1e-12 && opts.rel_tol < 1e-2)) {
    throw std::invalid_argument("rel_tol must lie in (1e-12, 1e-2)");
  }
  if (!(opts.abs_tol > 0)) throw std::invalid_argument("abs_tol must be positive");
  if (x0.size() != sys.n) throw std::invalid_argument("state dimension mismatch");
  if ((x0.array() <= 0).any()) throw std::invalid_argument("x0 must be strictly positive");
  if (!(t_end > 0)) throw std::invalid_argument("t_end must be positive");

  const Evaluator f(sys);
  Trajectory traj;
  double t = 0;
  Eigen::VectorXd x = x0;
  traj.times.push_back(t);
  traj.states.push_back(x);

  Eigen::VectorXd k1 = f(x);
  // Conservative initial step from the relative rate of change.
  double h = 0.01 * (x.norm() / std::max(k1.norm(), 1e-10));
  h = std::clamp(h, 1e-8, t_end / 10);

  while (t < t_end) {
    h = std::min(h, t_end - t);

    const Eigen::VectorXd k2 = f(x + h * (kA21 * k1));
    const Eigen::VectorXd k3 = f(x + h * (kA31 * k1 + kA32 * k2));
    const Eigen::VectorXd k4 = f(x + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    const Eigen::VectorXd k5 = f(x + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    const Eigen::VectorXd k6 =
        f(x + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
    const Eigen::VectorXd x_new =
        x + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const Eigen::VectorXd k7 = f(x_new);
    const Eigen::VectorXd error =
        h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

    const double err = error_norm(error, x, x_new, opts);
    if (err <= 1.0) {
      t += h;
      x = x_new;
      k1 = k7;  // FSAL
      traj.times.push_back(t);
      traj.states.push_back(x);
      ++traj.steps_accepted;
      if ((x.array() < kMinCoordinate).any()) throw PositivityError(t, x);
    } else {
      ++traj.steps_rejected;
    }

    double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    factor = std::clamp(factor, 0.2, 5.0);
    if (err > 1.0) factor = std::min(factor, 1.0);
    h *= factor;
    if (t < t_end && h < 1e-14 * std::max(1.0, t)) {
      throw std::runtime_error("step size underflow at t = " + std::to_string(t));
    }
  }
  return traj;
}

double lyapunov_value(const Eigen::VectorXd& x, const Eigen::VectorXd& x_star) {
  double value = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    value += x(i) * (std::log(x(i)) - std::log(x_star(i)) - 1);
  }
  return value;
}

CertificationReport certify(const PolySystem& sys, const Realization& r,
                            const Eigen::VectorXd& x0, double t_end,
                            const IntegrationOptions& opts) {
  CertificationReport report;
  const SteadyStateParam param = steady_state_parametrization(r);
  report.x_star = steady_state_in_polyhedron(param, x0);
  report.trajectory = integrate(sys, x0, t_end, opts);

  const std::vector<Eigen::VectorXd>& states = report.trajectory.states;
  report.lyapunov_slack = 1e-8 * std::abs(lyapunov_value(x0, report.x_star));
  double previous = lyapunov_value(states.front(), report.x_star);
  for (size_t k = 1; k < states.size(); ++k) {
    const double current = lyapunov_value(states[k], report.x_star);
    report.max_lyapunov_increase = std::max(report.max_lyapunov_increase, current - previous);
    previous = current;
  }
  report.lyapunov_monotone = report.max_lyapunov_increase <= report.lyapunov_slack;

  const ConservationBasis laws = conservation_laws(sys);
  for (const RatVector& law : laws.vectors) {
    const Eigen::VectorXd v = to_double(law);
    const double reference = v.dot(x0);
    double drift = 0;
    for (const Eigen::VectorXd& state : states) {
      drift = std::max(drift, std::abs(v.dot(state) - reference));
    }
    report.conservation_drift.push_back(drift);
  }

  report.terminal_distance = (states.back() - report.x_star).lpNorm<Eigen::Infinity>();
  report.converged = report.terminal_distance < 1e-4;
  return report;
}

}  // namespace wrzero
