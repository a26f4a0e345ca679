// bpi: two-photon bunching simulator front end.
//
// Subcommands: beta, hom, interf, sweep, dip, solve. Every command
// prints a human-readable summary by default or a single JSON report
// with --json. Exit codes: 0 success, 2 usage/parse error, 3 domain
// error (degenerate post-selection).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "bpi/bunching.hpp"
#include "bpi/hom.hpp"
#include "bpi/interferometer.hpp"
#include "bpi/oracle.hpp"
#include "bpi/sweep.hpp"
#include "render.hpp"

using json = nlohmann::ordered_json;
using namespace bpi;

namespace {

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidParameterError("cannot parse " + what + ": '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw InvalidParameterError("cannot parse " + what + ": '" + text + "'");
  }
  return value;
}

// radians, either plain decimal or a pi fraction: "pi", "pi/4", "3pi/8",
// "-pi/2", "0.5pi"
double parse_angle(const std::string& text) {
  const std::size_t at = text.find("pi");
  if (at == std::string::npos) return parse_number(text, "angle");
  const std::string pre = text.substr(0, at);
  const std::string post = text.substr(at + 2);
  double numerator = 1.0;
  if (pre == "-") {
    numerator = -1.0;
  } else if (!pre.empty()) {
    numerator = parse_number(pre, "angle numerator");
  }
  double denominator = 1.0;
  if (!post.empty()) {
    if (post.front() != '/' || post.size() < 2) {
      throw InvalidParameterError("cannot parse angle: '" + text + "'");
    }
    denominator = parse_number(post.substr(1), "angle denominator");
    if (denominator == 0.0) {
      throw InvalidParameterError("angle denominator must be nonzero");
    }
  }
  return numerator * std::numbers::pi / denominator;
}

Amplitude parse_amplitude(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidParameterError("amplitude must be 're,im', got '" + text + "'");
  }
  return Amplitude(parse_number(text.substr(0, comma), "amplitude"),
                   parse_number(text.substr(comma + 1), "amplitude"));
}

SinglePhotonState parse_state(const std::vector<std::string>& parts) {
  return SinglePhotonState::two_mode(parse_amplitude(parts.at(0)),
                                     parse_amplitude(parts.at(1)));
}

void enforce_normalized(const SinglePhotonState& state, const char* name) {
  if (std::abs(state.norm_sq() - 1.0) > tol::normalize_trigger) {
    throw InvalidParameterError(std::string(name) +
                                " is not normalized (--no-normalize is set)");
  }
}

// echo of the parsed (pre-normalization) amplitudes
json echo_state(const std::vector<std::string>& parts) {
  json out = json::array();
  for (const std::string& part : parts) {
    const Amplitude amp = parse_amplitude(part);
    out.push_back({amp.real(), amp.imag()});
  }
  return out;
}

json warnings_of(const PhotonPair& pair) {
  json warnings = json::array();
  if (pair.photon_a_was_normalized) warnings.push_back("chi was auto-normalized");
  if (pair.photon_b_was_normalized) warnings.push_back("rho was auto-normalized");
  return warnings;
}

json distribution_json(const TwoPhotonDistribution& dist) {
  json out;
  for (const auto& [key, p] : dist.outcomes) {
    out[key.first + "," + key.second] = p;
  }
  return out;
}

void print_human_value(const std::string& key, const json& value, int indent) {
  const std::string pad(indent, ' ');
  if (value.is_object()) {
    std::cout << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) print_human_value(k, v, indent + 2);
  } else if (value.is_number_float()) {
    std::cout << pad << key << " = " << render::format_full(value.get<double>())
              << "\n";
  } else {
    std::cout << pad << key << " = " << value.dump() << "\n";
  }
}

// prints the JSON report or the human summary, returns success
void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report["outputs"].items()) {
    print_human_value(key, value, 0);
  }
  for (const auto& warning : report["warnings"]) {
    std::cerr << "warning: " << warning.get<std::string>() << "\n";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw InvalidParameterError("cannot open '" + path + "' for writing");
  }
  file << content;
}

struct PairArgs {
  std::vector<std::string> chi;
  std::vector<std::string> rho;
  bool no_normalize = false;
  bool as_json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--chi", chi, "first photon amplitudes: re,im re,im")
        ->required()
        ->expected(2);
    cmd->add_option("--rho", rho, "second photon amplitudes: re,im re,im")
        ->required()
        ->expected(2);
    cmd->add_flag("--no-normalize", no_normalize,
                  "reject unnormalized inputs instead of rescaling them");
    cmd->add_flag("--json", as_json, "emit a JSON report");
  }

  PhotonPair make_pair() const {
    const SinglePhotonState a = parse_state(chi);
    const SinglePhotonState b = parse_state(rho);
    if (no_normalize) {
      enforce_normalized(a, "chi");
      enforce_normalized(b, "rho");
    }
    return PhotonPair(a, b, false);
  }
};

int run_beta(const PairArgs& args) {
  const PhotonPair pair = args.make_pair();
  const BunchingReport report = bunching_beta(pair);
  json doc;
  doc["command"] = "beta";
  doc["inputs"] = {{"chi", echo_state(args.chi)},
                   {"rho", echo_state(args.rho)},
                   {"no_normalize", args.no_normalize}};
  doc["outputs"] = {{"overlap_sq", report.overlap_sq},
                    {"beta", report.beta},
                    {"n_b", report.n_b},
                    {"n_d", report.n_d}};
  doc["warnings"] = warnings_of(pair);
  emit(doc, args.as_json);
  return 0;
}

int run_hom(const PairArgs& args) {
  const PhotonPair pair = args.make_pair();
  const BeamSplitter sym = BeamSplitter::from_theta(std::numbers::pi / 4);
  const DipPoint point = dip_point(pair);
  json doc;
  doc["command"] = "hom";
  doc["inputs"] = {{"chi", echo_state(args.chi)},
                   {"rho", echo_state(args.rho)},
                   {"no_normalize", args.no_normalize}};
  doc["outputs"] = {
      {"beta", point.beta},
      {"p_2d", point.same_leg_distinguishable},
      {"p_2id", point.same_leg_indistinguishable},
      {"p_11", point.coincidence},
      {"distributions",
       {{"indistinguishable",
         distribution_json(hom_distribution(pair.with_distinguishable(false), sym))},
        {"distinguishable",
         distribution_json(hom_distribution(pair.with_distinguishable(true), sym))}}}};
  doc["warnings"] = warnings_of(pair);
  emit(doc, args.as_json);
  return 0;
}

struct InterfArgs {
  std::string theta_a, theta_b, theta_c, theta_d;
  bool as_json = false;
};

int run_interf(const InterfArgs& args) {
  const double ta = parse_angle(args.theta_a);
  const double tb = parse_angle(args.theta_b);
  const double tc = parse_angle(args.theta_c);
  const double td = parse_angle(args.theta_d);
  const auto config = InterferometerConfig::from_angles(ta, tb, tc, td);
  const PostSelectedPair ps = post_select(config);
  const BunchingReport report = interferometer_beta(config);
  const SuccessProbabilities success = success_probabilities(config);
  json doc;
  doc["command"] = "interf";
  doc["inputs"] = {{"theta_a", ta}, {"theta_b", tb}, {"theta_c", tc},
                   {"theta_d", td}};
  doc["outputs"] = {{"n1", ps.n1},
                    {"n2", ps.n2},
                    {"overlap_sq", report.overlap_sq},
                    {"beta", report.beta},
                    {"p_success_distinguishable", success.distinguishable},
                    {"p_success_indistinguishable", success.indistinguishable}};
  doc["warnings"] = json::array();
  emit(doc, args.as_json);
  return 0;
}

struct SweepArgs {
  std::string theta_a = "pi/4";
  std::string theta_b = "pi/4";
  std::size_t grid = 201;
  unsigned threads = 1;
  std::string out_path, svg_path;
  bool as_json = false;
};

int run_sweep(const SweepArgs& args) {
  const SweepResult result = sweep_beta(parse_angle(args.theta_a),
                                        parse_angle(args.theta_b), args.grid,
                                        args.threads);
  if (!args.out_path.empty()) write_file(args.out_path, render::sweep_csv(result));
  if (!args.svg_path.empty()) write_file(args.svg_path, render::sweep_svg(result));
  json doc;
  doc["command"] = "sweep";
  doc["inputs"] = {{"theta_a", result.theta_a},
                   {"theta_b", result.theta_b},
                   {"grid", result.grid_n},
                   {"out", args.out_path},
                   {"svg", args.svg_path}};
  doc["outputs"] = {{"beta_min", result.beta_min},
                    {"beta_max", result.beta_max},
                    {"coverage_fraction", result.coverage_fraction},
                    {"degenerate_count", result.degenerate_count},
                    {"cells", result.cells.size()}};
  doc["warnings"] = json::array();
  emit(doc, args.as_json);
  return 0;
}

struct DipArgs {
  std::vector<double> betas;
  double from = 1.0, to = 2.0, step = 0.01;
  std::string out_path, svg_path;
  bool as_json = false;
};

int run_dip(const DipArgs& args) {
  std::vector<double> betas = args.betas;
  if (betas.empty()) {
    if (args.step <= 0.0) {
      throw InvalidParameterError("--step must be positive");
    }
    const int count =
        static_cast<int>(std::floor((args.to - args.from) / args.step + 1e-9));
    for (int k = 0; k <= count; ++k) {
      // k*step can overshoot `to` by an ulp; keep the endpoint exact
      betas.push_back(std::min(args.from + k * args.step, args.to));
    }
  }
  const std::vector<DipPoint> points = dip_curve(betas);
  if (!args.out_path.empty()) write_file(args.out_path, render::dip_csv(points));
  if (!args.svg_path.empty()) write_file(args.svg_path, render::dip_svg(points));
  json doc;
  doc["command"] = "dip";
  doc["inputs"] = {{"betas", betas}, {"out", args.out_path},
                   {"svg", args.svg_path}};
  json table = json::array();
  for (const DipPoint& point : points) {
    table.push_back({{"beta", point.beta}, {"p_11", point.coincidence}});
  }
  doc["outputs"] = {{"points", table}};
  doc["warnings"] = json::array();
  emit(doc, args.as_json);
  return 0;
}

int run_solve(double target, bool as_json) {
  const DesignSolution solution = solve_for_beta(target);
  json doc;
  doc["command"] = "solve";
  doc["inputs"] = {{"target", target}};
  doc["outputs"] = {{"theta_a", std::numbers::pi / 4},
                    {"theta_b", std::numbers::pi / 4},
                    {"theta_c", solution.theta_c},
                    {"theta_d", solution.theta_d},
                    {"achieved_beta", solution.achieved_beta},
                    {"residual", solution.residual}};
  doc["warnings"] = json::array();
  emit(doc, as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon bunching simulator"};
  app.require_subcommand(1);

  PairArgs beta_args;
  CLI::App* beta_cmd = app.add_subcommand(
      "beta", "bunching parameter of a two-mode photon pair");
  beta_args.attach(beta_cmd);

  PairArgs hom_args;
  CLI::App* hom_cmd = app.add_subcommand(
      "hom", "generalized dip scenario on a symmetric splitter");
  hom_args.attach(hom_cmd);

  InterfArgs interf_args;
  CLI::App* interf_cmd = app.add_subcommand(
      "interf", "four-splitter post-selected network");
  interf_cmd->add_option("--theta-a", interf_args.theta_a, "angle of splitter A")
      ->required();
  interf_cmd->add_option("--theta-b", interf_args.theta_b, "angle of splitter B")
      ->required();
  interf_cmd->add_option("--theta-c", interf_args.theta_c, "angle of splitter C")
      ->required();
  interf_cmd->add_option("--theta-d", interf_args.theta_d, "angle of splitter D")
      ->required();
  interf_cmd->add_flag("--json", interf_args.as_json, "emit a JSON report");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "beta over a (theta_C, theta_D) grid");
  sweep_cmd->add_option("--theta-a", sweep_args.theta_a,
                        "angle of splitter A (default pi/4)");
  sweep_cmd->add_option("--theta-b", sweep_args.theta_b,
                        "angle of splitter B (default pi/4)");
  sweep_cmd->add_option("--grid", sweep_args.grid,
                        "points per axis (default 201)");
  sweep_cmd->add_option("--threads", sweep_args.threads,
                        "worker threads, 0 = hardware (default 1)");
  sweep_cmd->add_option("--out", sweep_args.out_path, "CSV output path");
  sweep_cmd->add_option("--svg", sweep_args.svg_path, "SVG heatmap path");
  sweep_cmd->add_flag("--json", sweep_args.as_json, "emit a JSON report");

  DipArgs dip_args;
  CLI::App* dip_cmd = app.add_subcommand(
      "dip", "dip minimum as a function of beta");
  dip_cmd->add_option("--beta", dip_args.betas, "explicit beta values");
  dip_cmd->add_option("--from", dip_args.from, "range start (default 1)");
  dip_cmd->add_option("--to", dip_args.to, "range end (default 2)");
  dip_cmd->add_option("--step", dip_args.step, "range step (default 0.01)");
  dip_cmd->add_option("--out", dip_args.out_path, "CSV output path");
  dip_cmd->add_option("--svg", dip_args.svg_path, "SVG line plot path");
  dip_cmd->add_flag("--json", dip_args.as_json, "emit a JSON report");

  double solve_target = 0.0;
  bool solve_json = false;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "angles realizing a target beta");
  solve_cmd->add_option("--target", solve_target, "target beta in [1, 2]")
      ->required();
  solve_cmd->add_flag("--json", solve_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (beta_cmd->parsed()) return run_beta(beta_args);
    if (hom_cmd->parsed()) return run_hom(hom_args);
    if (interf_cmd->parsed()) return run_interf(interf_args);
    if (sweep_cmd->parsed()) return run_sweep(sweep_args);
    if (dip_cmd->parsed()) return run_dip(dip_args);
    if (solve_cmd->parsed()) return run_solve(solve_target, solve_json);
  } catch (const PostSelectionError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const InvalidParameterError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const TopologyError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
