#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holeburn/errors.hpp"
#include "holeburn/sweep.hpp"

namespace {

using namespace holeburn;

struct CommonOptions {
  std::string family = "ecs";
  std::string engineering = "none";
  double alpha = 1.0;
  double theta = 0.0;
  double p = 0.5;
  int m = 10;
  double chi = 0.02;
  std::string sweep;
  std::vector<int> orders;
  double tol = 1e-12;
  std::string out;
  std::string format = "csv";
  int threads = 0;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_sweep = true) {
  cmd->add_option("--family", opt.family, "state family")->check(CLI::IsMember({"ecs", "bs", "ks"}));
  cmd->add_option("--engineering", opt.engineering, "hole-burning step")
      ->check(CLI::IsMember({"none", "vf", "pa"}));
  cmd->add_option("--alpha", opt.alpha, "|alpha| displacement magnitude");
  cmd->add_option("--theta", opt.theta, "phase of alpha (radians)");
  cmd->add_option("--p", opt.p, "binomial success probability");
  cmd->add_option("--m", opt.m, "binomial photon cap M");
  cmd->add_option("--chi", opt.chi, "Kerr parameter");
  cmd->add_option("--tol", opt.tol, "truncation tail tolerance")->capture_default_str();
  cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  if (with_sweep) {
    cmd->add_option("--sweep", opt.sweep, "swept parameter as NAME=START:STOP:COUNT");
    cmd->add_option("--order", opt.orders, "witness order(s); repeatable");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  }
}

StateSpec spec_from_options(const CommonOptions& opt) {
  StateSpec spec;
  if (opt.family == "ecs") spec.family = Family::even_coherent;
  else if (opt.family == "bs") spec.family = Family::binomial;
  else spec.family = Family::kerr;
  if (opt.engineering == "none") spec.engineering = Engineering::none;
  else if (opt.engineering == "vf") spec.engineering = Engineering::vacuum_filtered;
  else spec.engineering = Engineering::photon_added;
  spec.alpha_mag = opt.alpha;
  spec.theta = opt.theta;
  spec.p = opt.p;
  spec.photon_cap = opt.m;
  spec.chi = opt.chi;
  return spec;
}

GridSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw invalid_parameter("--sweep expects NAME=START:STOP:COUNT");
  GridSpec grid;
  grid.name = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw invalid_parameter("--sweep expects NAME=START:STOP:COUNT");
  }
  try {
    grid.start = std::stod(rest.substr(0, c1));
    grid.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    grid.count = std::stoi(rest.substr(c2 + 1));
  } catch (const std::exception&) {
    throw invalid_parameter("could not parse sweep grid: " + text);
  }
  return grid;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw invalid_parameter("cannot open output path: " + out_path);
  out << payload;
}

std::string render(const DataTable& table, const std::string& format) {
  return format == "json" ? to_json(table) : to_csv(table);
}

// Single-point evaluation: echoes the parameter set, then the value cells.
// Returns the point status so the caller can surface it as the exit code.
int single_point_table(const StateSpec& spec, SweepTarget target, const std::vector<int>& orders,
                       double tol, DataTable& table) {
  const bool closed = target == SweepTarget::entropy;
  table.columns = {"family", "engineering", "alpha", "theta", "p", "m", "chi"};
  for (auto& c : point_columns(target, orders, closed, "")) table.columns.push_back(c);
  table.columns.emplace_back("status");

  std::vector<Cell> row;
  row.emplace_back(std::string(family_name(spec.family)));
  row.emplace_back(std::string(engineering_name(spec.engineering)));
  row.emplace_back(spec.alpha_mag);
  row.emplace_back(spec.theta);
  row.emplace_back(spec.p);
  row.emplace_back(static_cast<long long>(spec.photon_cap));
  row.emplace_back(spec.chi);
  std::vector<Cell> cells;
  const int status = evaluate_point_cells(spec, target, orders, tol, closed, cells);
  if (status != kStatusOk) cells.assign(point_columns(target, orders, closed, "").size(), Cell{});
  for (auto& c : cells) row.push_back(std::move(c));
  row.emplace_back(static_cast<long long>(status));
  table.rows.push_back(std::move(row));
  return status;
}

int run_witness(const CommonOptions& opt, WitnessKind kind) {
  const SweepTarget target = witness_target(kind);
  const std::vector<int> orders = opt.orders.empty() ? default_orders(target) : opt.orders;
  const StateSpec spec = spec_from_options(opt);
  if (!opt.sweep.empty()) {
    SweepConfig config{spec, parse_sweep(opt.sweep), target, orders, opt.tol, opt.threads};
    emit(render(run_sweep(config), opt.format), opt.out);
    return kStatusOk;
  }
  DataTable table;
  const int status = single_point_table(spec, target, orders, opt.tol, table);
  emit(render(table, opt.format), opt.out);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engineered bosonic states: nonclassicality witnesses and sweeps"};
  app.require_subcommand(1);

  CommonOptions state_opt;
  CLI::App* state_cmd = app.add_subcommand("state", "dump amplitudes and photon statistics");
  add_common_flags(state_cmd, state_opt, false);

  CommonOptions witness_opt;
  CLI::App* witness_cmd = app.add_subcommand("witness", "evaluate a nonclassicality witness");
  witness_cmd->require_subcommand(1);
  CLI::App* hoa_cmd = witness_cmd->add_subcommand("hoa", "higher-order antibunching");
  CLI::App* hos_cmd = witness_cmd->add_subcommand("hos", "Hong-Mandel higher-order squeezing");
  CLI::App* hosps_cmd = witness_cmd->add_subcommand("hosps", "higher-order sub-Poissonian statistics");
  add_common_flags(hoa_cmd, witness_opt);
  add_common_flags(hos_cmd, witness_opt);
  add_common_flags(hosps_cmd, witness_opt);

  CommonOptions entropy_opt;
  CLI::App* entropy_cmd = app.add_subcommand("entropy", "beam-splitter linear entropy");
  add_common_flags(entropy_cmd, entropy_opt);

  std::string figure_id;
  std::string out_dir = ".";
  int reproduce_threads = 0;
  int curve_points = 0;
  int contour_points = 0;
  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "emit figure-panel datasets");
  reproduce_cmd->add_option("figure", figure_id, "panel id, e.g. fig1b")->required();
  reproduce_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  reproduce_cmd->add_option("--threads", reproduce_threads, "worker threads (0 = hardware)");
  reproduce_cmd->add_option("--points", curve_points, "grid points for curve panels");
  reproduce_cmd->add_option("--grid", contour_points, "per-axis points for contour panels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : holeburn::kStatusInvalidParameter;
  }

  try {
    if (state_cmd->parsed()) {
      emit(dump_state(spec_from_options(state_opt), state_opt.format, state_opt.tol), state_opt.out);
      return holeburn::kStatusOk;
    }
    if (witness_cmd->parsed()) {
      holeburn::WitnessKind kind = holeburn::WitnessKind::antibunching;
      if (hos_cmd->parsed()) kind = holeburn::WitnessKind::squeezing;
      if (hosps_cmd->parsed()) kind = holeburn::WitnessKind::sub_poissonian;
      return run_witness(witness_opt, kind);
    }
    if (entropy_cmd->parsed()) {
      const holeburn::StateSpec spec = spec_from_options(entropy_opt);
      if (!entropy_opt.sweep.empty()) {
        holeburn::SweepConfig config{spec, parse_sweep(entropy_opt.sweep),
                                     holeburn::SweepTarget::entropy, {}, entropy_opt.tol,
                                     entropy_opt.threads};
        emit(render(holeburn::run_sweep(config), entropy_opt.format), entropy_opt.out);
        return holeburn::kStatusOk;
      }
      holeburn::DataTable table;
      const int status =
          single_point_table(spec, holeburn::SweepTarget::entropy, {}, entropy_opt.tol, table);
      emit(render(table, entropy_opt.format), entropy_opt.out);
      return status;
    }
    if (reproduce_cmd->parsed()) {
      holeburn::reproduce(figure_id, out_dir, reproduce_threads, curve_points, contour_points);
      return holeburn::kStatusOk;
    }
  } catch (const holeburn::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return holeburn::kStatusInvalidParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return holeburn::kStatusConvergenceFailure;
  }
  return holeburn::kStatusOk;
}
