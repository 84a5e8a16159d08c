#include "wrzero/steady.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include <cmath>
#include <stdexcept>

namespace wrzero {

std::pair<RatMatrix, Eigen::VectorXd> build_DJ(const Realization& r) {
  const std::vector<Vertex>& vertices = r.graph.vertices;
  Eigen::Index total_rows = 0;
  for (const std::vector<int>& block : r.components) {
    total_rows += static_cast<Eigen::Index>(block.size()) - 1;
  }

  RatMatrix d(total_rows, r.graph.n);
  Eigen::VectorXd j(total_rows);
  Eigen::Index row = 0;
  for (size_t p = 0; p < r.components.size(); ++p) {
    const std::vector<int>& block = r.components[p];
    const RatVector& generator = r.generators.rays[p];
    const int base = block[0];  // smallest index in the component
    for (size_t k = 1; k < block.size(); ++k) {
      d.row(row) = (to_rational(vertices[block[k]]) - to_rational(vertices[base])).transpose();
      j(row) = std::log(to_double(generator(block[k]) / generator(base)));
      ++row;
    }
  }
  return {std::move(d), std::move(j)};
}

SteadyStateParam solve_steady(const RatMatrix& d, const Eigen::VectorXd& j) {
  if (d.rows() != j.size()) throw std::invalid_argument("solve_steady: dimension mismatch");
  SteadyStateParam p;
  p.d = d;
  p.j = j;
  const Eigen::MatrixXd dd = to_double(d);
  p.z_star = dd.completeOrthogonalDecomposition().solve(j);  // minimum-norm solution
  p.residual = d.rows() == 0 ? 0.0 : (dd * p.z_star - j).lpNorm<Eigen::Infinity>();
  if (p.residual > 1e-9) {
    throw std::runtime_error("steady-state solve residual " + std::to_string(p.residual));
  }
  p.kernel = kernel_basis(d);
  return p;
}

SteadyStateParam steady_state_parametrization(const Realization& r) {
  const auto [d, j] = build_DJ(r);
  return solve_steady(d, j);
}

std::vector<Eigen::VectorXd> sample_steady_states(const SteadyStateParam& p) {
  const size_t k = p.kernel.size();
  std::vector<Eigen::VectorXd> samples;
  std::vector<int> t(k, -1);
  while (true) {
    Eigen::VectorXd z = p.z_star;
    for (size_t i = 0; i < k; ++i) z += t[i] * to_double(p.kernel[i]);
    samples.push_back(z.array().exp().matrix());
    size_t carry = 0;
    while (carry < k && t[carry] == 1) t[carry++] = -1;
    if (carry == k) break;
    ++t[carry];
  }
  return samples;
}

Eigen::VectorXd steady_state_in_polyhedron(const SteadyStateParam& p,
                                           const Eigen::VectorXd& x0) {
  const Eigen::Index n = p.z_star.size();
  const Eigen::Index k = static_cast<Eigen::Index>(p.kernel.size());
  if (x0.size() != n) throw std::invalid_argument("state dimension mismatch");
  if ((x0.array() <= 0).any()) throw std::invalid_argument("x0 must be strictly positive");
  if (k == 0) return p.z_star.array().exp().matrix();

  Eigen::MatrixXd kernel(n, k);
  for (Eigen::Index c = 0; c < k; ++c) kernel.col(c) = to_double(p.kernel[c]);
  const Eigen::VectorXd target = kernel.transpose() * x0;

  // Minimize psi(t) = sum(exp(z* + K t)) - t . target; strictly convex with
  // gradient K^T (x - x0), so the minimizer matches x0's conserved
  // quantities.  Damped Newton converges globally here.
  Eigen::VectorXd t = Eigen::VectorXd::Zero(k);
  auto state = [&](const Eigen::VectorXd& tt) -> Eigen::VectorXd {
    return (p.z_star + kernel * tt).array().exp().matrix();
  };
  auto psi = [&](const Eigen::VectorXd& tt) {
    return state(tt).sum() - tt.dot(target);
  };

  const double tolerance = 1e-13 * std::max(1.0, target.lpNorm<Eigen::Infinity>());
  for (int iteration = 0; iteration < 200; ++iteration) {
    const Eigen::VectorXd x = state(t);
    const Eigen::VectorXd gradient = kernel.transpose() * x - target;
    if (gradient.lpNorm<Eigen::Infinity>() <= tolerance) break;
    const Eigen::MatrixXd hessian =
        kernel.transpose() * x.asDiagonal() * kernel;  // positive definite
    const Eigen::VectorXd direction = -hessian.ldlt().solve(gradient);
    double step = 1.0;
    const double value = psi(t);
    const double slope = gradient.dot(direction);
    while (step > 1e-12 && psi(t + step * direction) > value + 1e-4 * step * slope) {
      step *= 0.5;
    }
    t += step * direction;
  }
  return state(t);
}

double complex_balance_residual(const WeightedEGraph& g, const Eigen::VectorXd& x) {
  std::vector<double> monomial(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i) monomial[i] = eval_monomial(g.vertices[i], x);

  Eigen::VectorXd net = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vertices.size()));
  for (const Edge& e : g.edges) {
    const double flux = to_double(e.kappa) * monomial[e.from];
    net(e.from) += flux;  // outflow of e.from
    net(e.to) -= flux;    // inflow of e.to
  }
  return net.lpNorm<Eigen::Infinity>();
}

ConservationBasis conservation_laws(const PolySystem& sys) {
  return ConservationBasis{kernel_basis(sys.net.transpose())};
}

}  // namespace wrzero
