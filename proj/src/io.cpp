#include "wrzero/io.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace wrzero {

namespace {

nlohmann::json vertex_to_json(const Vertex& y) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < y.size(); ++i) out.push_back(y(i));
  return out;
}

Vertex vertex_from_json(const nlohmann::json& j) {
  Vertex y(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) y(static_cast<Eigen::Index>(i)) = j[i].get<int>();
  return y;
}

nlohmann::json ratvec_to_json(const RatVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

nlohmann::json doublevec_to_json(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

PolySystem system_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const nlohmann::json& monomials = j.at("monomials");
  const nlohmann::json& w = j.at("W");
  if (monomials.size() != w.size()) {
    throw std::invalid_argument("monomials and W must have the same length");
  }
  std::vector<Vertex> sources;
  RatMatrix net(n, static_cast<Eigen::Index>(w.size()));
  for (size_t c = 0; c < w.size(); ++c) {
    sources.push_back(vertex_from_json(monomials[c]));
    const nlohmann::json& column = w[c];
    if (column.size() != static_cast<size_t>(n)) {
      throw std::invalid_argument("W column has wrong length");
    }
    for (size_t r = 0; r < column.size(); ++r) {
      const nlohmann::json& entry = column[r];
      net(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          entry.is_string() ? rational_from_string(entry.get<std::string>())
                            : Rational(entry.get<long>());
    }
  }
  return make_poly_system(n, std::move(sources), std::move(net));
}

nlohmann::json system_to_json(const PolySystem& sys) {
  nlohmann::json monomials = nlohmann::json::array();
  nlohmann::json w = nlohmann::json::array();
  for (size_t c = 0; c < sys.sources.size(); ++c) {
    monomials.push_back(vertex_to_json(sys.sources[c]));
    w.push_back(ratvec_to_json(sys.net.col(static_cast<Eigen::Index>(c))));
  }
  return {{"n", sys.n}, {"monomials", monomials}, {"W", w}};
}

PolySystem parse_system_auto(const std::string& text, std::vector<std::string>* warnings) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return system_from_json(nlohmann::json::parse(text));
    break;
  }
  return parse_system(text, warnings);
}

nlohmann::json realization_to_json(const Realization& r) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vertex& y : r.graph.vertices) vertices.push_back(vertex_to_json(y));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : r.graph.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kappa", to_string(e.kappa)}});
  }
  nlohmann::json components = nlohmann::json::array();
  for (const std::vector<int>& block : r.components) components.push_back(block);
  return {{"vertices", vertices},
          {"edges", edges},
          {"components", components},
          {"deficiency", r.deficiency}};
}

WeightedEGraph graph_from_json(const nlohmann::json& j) {
  std::vector<Vertex> vertices;
  for (const nlohmann::json& v : j.at("vertices")) vertices.push_back(vertex_from_json(v));
  if (vertices.empty()) throw std::invalid_argument("graph needs at least one vertex");
  const int n = static_cast<int>(vertices[0].size());
  std::vector<Edge> edges;
  for (const nlohmann::json& e : j.at("edges")) {
    const nlohmann::json& kappa = e.at("kappa");
    edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                     kappa.is_string() ? rational_from_string(kappa.get<std::string>())
                                       : Rational(kappa.get<long>())});
  }
  return make_graph(n, std::move(vertices), std::move(edges));
}

nlohmann::json failure_to_json(const FailureReason& f, const PolySystem& sys) {
  nlohmann::json detail = nlohmann::json::object();
  if (f.component > 0) detail["component"] = f.component;
  if (f.source > 0) {
    detail["source"] = f.source;
    detail["monomial"] = vertex_to_json(sys.sources[f.source - 1]);
  }
  return {{"reason", to_string(f.kind)}, {"detail", detail}};
}

nlohmann::json steady_to_json(const SteadyStateParam& p,
                              const std::vector<Eigen::VectorXd>& samples) {
  nlohmann::json d = nlohmann::json::array();
  for (Eigen::Index r = 0; r < p.d.rows(); ++r) {
    d.push_back(ratvec_to_json(p.d.row(r).transpose()));
  }
  nlohmann::json kernel = nlohmann::json::array();
  for (const RatVector& v : p.kernel) kernel.push_back(ratvec_to_json(v));
  nlohmann::json sample_points = nlohmann::json::array();
  for (const Eigen::VectorXd& x : samples) sample_points.push_back(doublevec_to_json(x));
  return {{"D", d},
          {"J", doublevec_to_json(p.j)},
          {"z_star", doublevec_to_json(p.z_star)},
          {"kernel", kernel},
          {"residual", p.residual},
          {"sample_points", sample_points}};
}

nlohmann::json certification_to_json(const CertificationReport& report) {
  return {{"lyapunov_monotone", report.lyapunov_monotone},
          {"max_lyapunov_increase", report.max_lyapunov_increase},
          {"lyapunov_slack", report.lyapunov_slack},
          {"conservation_drift", report.conservation_drift},
          {"terminal_distance", report.terminal_distance},
          {"converged", report.converged},
          {"x_star", doublevec_to_json(report.x_star)},
          {"t_end", report.trajectory.times.back()},
          {"steps_accepted", report.trajectory.steps_accepted},
          {"steps_rejected", report.trajectory.steps_rejected}};
}

std::string realization_to_dot(const Realization& r) {
  std::ostringstream out;
  out << "digraph realization {\n  rankdir=LR;\n";
  for (size_t i = 0; i < r.graph.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << monomial_name(r.graph.vertices[i]) << "\"];\n";
  }
  for (const Edge& e : r.graph.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_string(e.kappa) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string realization_to_text(const Realization& r) {
  std::ostringstream out;
  out << "WR0 realization: " << r.graph.vertices.size() << " vertices, " << r.graph.edges.size()
      << " edges, " << r.components.size() << " component(s), deficiency " << r.deficiency
      << "\n";
  for (size_t p = 0; p < r.components.size(); ++p) {
    out << "component " << p + 1 << ":";
    for (int i : r.components[p]) out << " " << monomial_name(r.graph.vertices[i]);
    out << "\n";
  }
  for (const Edge& e : r.graph.edges) {
    out << "  " << monomial_name(r.graph.vertices[e.from]) << " -> "
        << monomial_name(r.graph.vertices[e.to]) << "  [kappa " << to_string(e.kappa) << "]\n";
  }
  return out.str();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const Eigen::VectorXd& x_star) {
  out << "t";
  for (Eigen::Index i = 0; i < x_star.size(); ++i) out << ",x" << i + 1;
  out << ",L\n";
  out.precision(15);
  for (size_t k = 0; k < traj.times.size(); ++k) {
    out << traj.times[k];
    for (Eigen::Index i = 0; i < traj.states[k].size(); ++i) out << "," << traj.states[k](i);
    out << "," << lyapunov_value(traj.states[k], x_star) << "\n";
  }
}

}  // namespace wrzero
