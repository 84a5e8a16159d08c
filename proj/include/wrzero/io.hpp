#pragma once

// Serialization boundary: JSON representations of systems, graphs,
// realizations, steady-state data and certification reports, plus Graphviz
// and CSV writers.  Rationals travel as strings ("7", "55/2") so round trips
// stay exact.

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "wrzero/realize.hpp"
#include "wrzero/sim.hpp"
#include "wrzero/steady.hpp"

namespace wrzero {

// {"n": 3, "monomials": [[1,0,0], ...], "W": [["-12","14","10"], ...]}
// with W listed column per monomial.
PolySystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const PolySystem& sys);

// Accepts either the JSON form above or the dx/dt grammar of parse_system,
// detected by a leading '{'.
PolySystem parse_system_auto(const std::string& text, std::vector<std::string>* warnings = nullptr);

// {"vertices": [[...]], "edges": [{"from":0,"to":1,"kappa":"7"}, ...],
//  "components": [[...]], "deficiency": 0}
nlohmann::json realization_to_json(const Realization& r);

// Rebuilds a weighted graph from the "vertices"/"edges" fields of the
// realization JSON.
WeightedEGraph graph_from_json(const nlohmann::json& j);

// {"reason": "NotInCone", "detail": {"source": 1, "component": 1}}
nlohmann::json failure_to_json(const FailureReason& f, const PolySystem& sys);

nlohmann::json steady_to_json(const SteadyStateParam& p,
                              const std::vector<Eigen::VectorXd>& samples);

nlohmann::json certification_to_json(const CertificationReport& report);

std::string realization_to_dot(const Realization& r);
std::string realization_to_text(const Realization& r);

// Header "t,x1,...,xn,L" followed by one row per accepted step.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const Eigen::VectorXd& x_star);

}  // namespace wrzero
