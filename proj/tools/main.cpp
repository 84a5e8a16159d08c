// Command-line front end: analyse a polynomial dynamical system, search for
// its weakly reversible deficiency-zero realization, parametrize its steady
// states, and simulate trajectories with convergence certification.
//
// Exit codes: 0 on success, 2 when the mathematics says "no" (no WR0
// realization exists), 1 on parse or I/O errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wrzero/io.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Eigen::VectorXd parse_x0(const std::string& text, int n) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(std::stod(item));
  if (static_cast<int>(values.size()) != n) {
    throw std::runtime_error("--x0 needs " + std::to_string(n) + " comma-separated values");
  }
  Eigen::VectorXd x0(n);
  for (int i = 0; i < n; ++i) x0(i) = values[i];
  return x0;
}

struct Options {
  std::string input;
  std::string format = "text";
  std::string x0;
  std::string csv;
  double t_end = 20.0;
  double rel_tol = 1e-8;
  unsigned long seed = 0;  // reserved for test tooling; unused by the commands
};

wrzero::PolySystem load_input(const Options& opt) {
  std::vector<std::string> warnings;
  wrzero::PolySystem sys = wrzero::parse_system_auto(read_file(opt.input), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return sys;
}

int cmd_check(const Options& opt) {
  const wrzero::PolySystem sys = load_input(opt);
  const wrzero::ConeRays rays = wrzero::extreme_rays(sys.net);
  const bool consistent = wrzero::is_consistent(sys.net);
  const auto partition = wrzero::supports_partition(rays);

  if (opt.format == "json") {
    nlohmann::json out = {{"n", sys.n},
                          {"m", static_cast<int>(sys.sources.size())},
                          {"consistent", consistent},
                          {"supports_partition", partition.has_value()}};
    nlohmann::json ray_list = nlohmann::json::array();
    for (const auto& ray : rays.rays) {
      nlohmann::json entries = nlohmann::json::array();
      for (Eigen::Index i = 0; i < ray.size(); ++i) entries.push_back(wrzero::to_string(ray(i)));
      ray_list.push_back(entries);
    }
    out["rays"] = ray_list;
    out["partition"] = partition ? nlohmann::json(*partition) : nlohmann::json();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "variables: " << sys.n << ", monomials: " << sys.sources.size() << "\n";
    std::cout << "consistent (admits positive steady-state candidates): "
              << (consistent ? "yes" : "no") << "\n";
    std::cout << "extreme rays of ker(W) >= 0: " << rays.rays.size() << "\n";
    for (const auto& ray : rays.rays) {
      std::cout << " ";
      for (Eigen::Index i = 0; i < ray.size(); ++i) std::cout << " " << wrzero::to_string(ray(i));
      std::cout << "\n";
    }
    std::cout << "ray supports partition the monomials: " << (partition ? "yes" : "no") << "\n";
  }
  return kExitSuccess;
}

int cmd_realize(const Options& opt) {
  const wrzero::PolySystem sys = load_input(opt);
  const wrzero::RealizeResult result = wrzero::find_wr0(sys);
  if (const auto* failure = std::get_if<wrzero::FailureReason>(&result)) {
    std::cout << wrzero::failure_to_json(*failure, sys).dump(2) << "\n";
    return kExitNegative;
  }
  const auto& realization = std::get<wrzero::Realization>(result);
  if (opt.format == "dot") {
    std::cout << wrzero::realization_to_dot(realization);
  } else if (opt.format == "json") {
    std::cout << wrzero::realization_to_json(realization).dump(2) << "\n";
  } else {
    std::cout << wrzero::realization_to_text(realization);
  }
  return kExitSuccess;
}

int cmd_steady(const Options& opt) {
  const wrzero::PolySystem sys = load_input(opt);
  const wrzero::RealizeResult result = wrzero::find_wr0(sys);
  if (const auto* failure = std::get_if<wrzero::FailureReason>(&result)) {
    std::cout << wrzero::failure_to_json(*failure, sys).dump(2) << "\n";
    return kExitNegative;
  }
  const auto& realization = std::get<wrzero::Realization>(result);
  const wrzero::SteadyStateParam param = wrzero::steady_state_parametrization(realization);
  std::cout << wrzero::steady_to_json(param, wrzero::sample_steady_states(param)).dump(2)
            << "\n";
  return kExitSuccess;
}

int cmd_simulate(const Options& opt) {
  const wrzero::PolySystem sys = load_input(opt);
  const wrzero::RealizeResult result = wrzero::find_wr0(sys);
  if (const auto* failure = std::get_if<wrzero::FailureReason>(&result)) {
    std::cout << wrzero::failure_to_json(*failure, sys).dump(2) << "\n";
    return kExitNegative;
  }
  const auto& realization = std::get<wrzero::Realization>(result);

  Eigen::VectorXd x0 = opt.x0.empty() ? Eigen::VectorXd::Ones(sys.n) : parse_x0(opt.x0, sys.n);
  wrzero::IntegrationOptions integration;
  integration.rel_tol = opt.rel_tol;
  const wrzero::CertificationReport report =
      wrzero::certify(sys, realization, x0, opt.t_end, integration);

  const std::string csv_path = opt.csv.empty() ? "trajectory.csv" : opt.csv;
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot write " + csv_path);
  wrzero::write_trajectory_csv(csv, report.trajectory, report.x_star);

  nlohmann::json out = wrzero::certification_to_json(report);
  out["csv"] = csv_path;
  std::cout << out.dump(2) << "\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WR0 realization toolkit for polynomial dynamical systems"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed (reserved for test tooling)");

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "system file (dx<i>/dt grammar or JSON)")->required();
    cmd->add_option("--format", opt.format, "output format: json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  CLI::App* check = app.add_subcommand("check", "consistency and cone diagnostics");
  add_common(check);
  CLI::App* realize = app.add_subcommand("realize", "find the WR0 realization");
  add_common(realize);
  CLI::App* steady = app.add_subcommand("steady-states", "steady-state parametrization");
  add_common(steady);
  CLI::App* simulate = app.add_subcommand("simulate", "integrate and certify convergence");
  add_common(simulate);
  simulate->add_option("--x0", opt.x0, "initial state, comma separated (default: all ones)");
  simulate->add_option("--t-end", opt.t_end, "integration horizon");
  simulate->add_option("--rel-tol", opt.rel_tol, "relative tolerance");
  simulate->add_option("--csv", opt.csv, "trajectory CSV path (default: trajectory.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (realize->parsed()) return cmd_realize(opt);
    if (steady->parsed()) return cmd_steady(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
  } catch (const wrzero::ParseError& e) {
    std::cerr << "parse error (line " << e.line << ", column " << e.column << "): " << e.what()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
