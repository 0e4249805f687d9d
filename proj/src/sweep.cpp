#include "holeburn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

#include <json.hpp>

#include "holeburn/entanglement.hpp"
#include "holeburn/errors.hpp"
#include "holeburn/moments.hpp"

namespace holeburn {

namespace {

constexpr int kWitnessPad = 12;  // cutoff headroom so high-order moments never touch the boundary

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

std::string cell_to_csv(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return nullptr;
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) return *i;
  return std::get<std::string>(cell);
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

void set_spec_param(StateSpec& spec, const std::string& name, double value) {
  if (name == "alpha") spec.alpha_mag = value;
  else if (name == "theta") spec.theta = value;
  else if (name == "p") spec.p = value;
  else if (name == "chi") spec.chi = value;
  else throw invalid_parameter("unknown sweep parameter: " + name);
}

bool param_applies(Family family, const std::string& name) {
  switch (family) {
    case Family::even_coherent: return name == "alpha" || name == "theta";
    case Family::binomial: return name == "p";
    case Family::kerr: return name == "alpha" || name == "theta" || name == "chi";
  }
  return false;
}

int max_index_order(SweepTarget target, const std::vector<int>& orders) {
  int top = 1;
  for (int o : orders) {
    switch (target) {
      case SweepTarget::antibunching: top = std::max(top, o + 1); break;
      case SweepTarget::squeezing: top = std::max(top, o); break;
      case SweepTarget::sub_poissonian: top = std::max(top, o + 1); break;
      case SweepTarget::entropy: break;
    }
  }
  return top;
}

void validate_orders(SweepTarget target, const std::vector<int>& orders) {
  if (target == SweepTarget::entropy) return;
  if (orders.empty()) throw invalid_parameter("at least one witness order is required");
  for (int o : orders) {
    switch (target) {
      case SweepTarget::antibunching:
        if (o < 1 || o > 5) throw invalid_parameter("hoa order must lie in [1, 5]");
        break;
      case SweepTarget::squeezing:
        if (o < 2 || o % 2 != 0 || o > 6) throw invalid_parameter("hos order must be even in [2, 6]");
        break;
      case SweepTarget::sub_poissonian:
        if (o < 2 || o > 5) throw invalid_parameter("hosps order must lie in [2, 5]");
        break;
      case SweepTarget::entropy: break;
    }
  }
}

const char* target_name(SweepTarget target) {
  switch (target) {
    case SweepTarget::antibunching: return "hoa";
    case SweepTarget::squeezing: return "hos";
    case SweepTarget::sub_poissonian: return "hosps";
    case SweepTarget::entropy: return "entropy";
  }
  return "?";
}

}  // namespace

std::string to_csv(const DataTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_to_csv(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const DataTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      obj[table.columns[c]] = cell_to_json(row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

double GridSpec::at(int i) const {
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void GridSpec::validate() const {
  if (count < 2) throw invalid_parameter("sweep grid needs at least 2 points");
  if (!(start < stop)) throw invalid_parameter("sweep grid needs start < stop");
}

SweepTarget witness_target(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::antibunching: return SweepTarget::antibunching;
    case WitnessKind::squeezing: return SweepTarget::squeezing;
    case WitnessKind::sub_poissonian: return SweepTarget::sub_poissonian;
  }
  return SweepTarget::entropy;
}

std::vector<int> default_orders(SweepTarget target) {
  switch (target) {
    case SweepTarget::antibunching: return {1, 2, 3};
    case SweepTarget::squeezing: return {2, 4};
    case SweepTarget::sub_poissonian: return {2, 3, 4, 5};
    case SweepTarget::entropy: return {};
  }
  return {};
}

std::vector<std::string> point_columns(SweepTarget target, const std::vector<int>& orders,
                                       bool closed_form, const std::string& prefix) {
  std::vector<std::string> cols;
  if (target == SweepTarget::entropy) {
    cols.push_back(prefix + "entropy");
    if (closed_form) cols.push_back(prefix + "entropy_closed");
    return cols;
  }
  for (int o : orders) {
    const std::string stem = prefix + target_name(target) + std::to_string(o);
    cols.push_back(stem + "_formula");
    cols.push_back(stem + "_oracle");
    cols.push_back(stem + "_nonclassical");
  }
  return cols;
}

int evaluate_point_cells(const StateSpec& spec, SweepTarget target, const std::vector<int>& orders,
                         double tail_tol, bool closed_form, std::vector<Cell>& cells) {
  try {
    validate_orders(target, orders);
    if (target == SweepTarget::entropy) {
      const FockVector v = build_state(spec, tail_tol);
      cells.emplace_back(linear_entropy(v));
      if (closed_form) cells.emplace_back(linear_entropy_closed_form(spec, tail_tol));
      return kStatusOk;
    }

    const int need = max_index_order(target, orders);
    const FockVector v = build_state(spec, tail_tol, kWitnessPad);
    const MomentTable analytic = analytic_moment_table(spec, need, need);
    for (int o : orders) {
      switch (target) {
        case SweepTarget::antibunching: {
          const WitnessReport formula = higher_order_antibunching(analytic, o);
          const MomentTable oracle = oracle_moment_table(v, o + 1, o + 1);
          const WitnessReport reference = higher_order_antibunching(oracle, o);
          cells.emplace_back(formula.formula_value);
          cells.emplace_back(reference.formula_value);
          cells.emplace_back(static_cast<long long>(formula.nonclassical ? 1 : 0));
          break;
        }
        case SweepTarget::squeezing: {
          const WitnessReport report = hong_mandel_squeezing(analytic, v, o);
          cells.emplace_back(report.formula_value);
          cells.emplace_back(report.oracle_value);
          cells.emplace_back(static_cast<long long>(report.nonclassical ? 1 : 0));
          break;
        }
        case SweepTarget::sub_poissonian: {
          const WitnessReport report = sub_poissonian_statistics(analytic, v, o);
          cells.emplace_back(report.formula_value);
          cells.emplace_back(report.oracle_value);
          cells.emplace_back(static_cast<long long>(report.nonclassical ? 1 : 0));
          break;
        }
        case SweepTarget::entropy: break;
      }
    }
    return kStatusOk;
  } catch (const invalid_parameter&) {
    return kStatusInvalidParameter;
  } catch (const std::exception&) {
    return kStatusConvergenceFailure;
  }
}

DataTable run_sweep(const SweepConfig& config) {
  config.grid.validate();
  if (!param_applies(config.base.family, config.grid.name)) {
    throw invalid_parameter("sweep parameter '" + config.grid.name + "' does not apply to family " +
                            family_name(config.base.family));
  }
  const std::vector<int> orders = config.orders.empty() ? default_orders(config.target) : config.orders;
  validate_orders(config.target, orders);
  const bool closed_form = config.target == SweepTarget::entropy;

  DataTable table;
  table.columns.push_back(config.grid.name);
  for (auto& c : point_columns(config.target, orders, closed_form, "")) table.columns.push_back(c);
  table.columns.emplace_back("status");
  table.rows.resize(static_cast<std::size_t>(config.grid.count));

  const std::size_t value_cells = point_columns(config.target, orders, closed_form, "").size();
  parallel_for(config.grid.count, config.threads, [&](int i) {
    const double x = config.grid.at(i);
    std::vector<Cell> row;
    row.emplace_back(x);
    StateSpec spec = config.base;
    std::vector<Cell> cells;
    int status;
    try {
      set_spec_param(spec, config.grid.name, x);
      status = evaluate_point_cells(spec, config.target, orders, config.tail_tol, closed_form, cells);
    } catch (const invalid_parameter&) {
      status = kStatusInvalidParameter;
      cells.clear();
    } catch (const std::exception&) {
      status = kStatusConvergenceFailure;
      cells.clear();
    }
    if (status != kStatusOk) cells.assign(value_cells, Cell{});
    for (auto& c : cells) row.push_back(std::move(c));
    row.emplace_back(static_cast<long long>(status));
    table.rows[static_cast<std::size_t>(i)] = std::move(row);
  });
  return table;
}

namespace {

struct FigureDef {
  std::string id;
  std::vector<StateSpec> states;
  SweepTarget target = SweepTarget::entropy;
  std::vector<int> orders;
  GridSpec x;
  std::optional<GridSpec> y;
  std::map<std::string, double> caption_fixed;
  bool closed_form = false;
};

StateSpec make_spec(Family family, Engineering engineering, double alpha, double theta, double p,
                    int photon_cap, double chi) {
  StateSpec s;
  s.family = family;
  s.engineering = engineering;
  s.alpha_mag = alpha;
  s.theta = theta;
  s.p = p;
  s.photon_cap = photon_cap;
  s.chi = chi;
  return s;
}

std::vector<StateSpec> family_trio(Family family, double alpha, double theta, double p, int cap,
                                   double chi) {
  return {make_spec(family, Engineering::none, alpha, theta, p, cap, chi),
          make_spec(family, Engineering::vacuum_filtered, alpha, theta, p, cap, chi),
          make_spec(family, Engineering::photon_added, alpha, theta, p, cap, chi)};
}

GridSpec alpha_grid() { return {"alpha", 0.0, 3.0, 0}; }
GridSpec p_grid() { return {"p", 0.005, 0.995, 0}; }
GridSpec chi_grid() { return {"chi", 0.0, 0.1, 0}; }
GridSpec theta_grid() { return {"theta", 0.0, 2.0 * M_PI, 0}; }

std::vector<FigureDef> figure_defs() {
  std::vector<FigureDef> defs;
  const int cap = 10;
  const double chi0 = 0.02;

  defs.push_back({"fig1a", family_trio(Family::even_coherent, 1.0, 0.0, 0.0, 0, 0.0),
                  SweepTarget::antibunching, {1, 2, 3}, alpha_grid(), std::nullopt, {}, false});
  defs.push_back({"fig1b", family_trio(Family::binomial, 0.0, 0.0, 0.5, cap, 0.0),
                  SweepTarget::antibunching, {1, 2, 3}, p_grid(), std::nullopt,
                  {{"m", static_cast<double>(cap)}}, false});
  defs.push_back({"fig1c", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0),
                  SweepTarget::antibunching, {1, 2, 3}, alpha_grid(), std::nullopt, {}, false});

  defs.push_back({"fig2a", family_trio(Family::binomial, 0.0, 0.0, 0.5, cap, 0.0),
                  SweepTarget::squeezing, {2, 4}, p_grid(), std::nullopt, {}, false});
  defs.push_back({"fig2b", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0), SweepTarget::squeezing,
                  {2, 4}, alpha_grid(), std::nullopt, {{"chi", chi0}}, false});
  defs.push_back({"fig2c", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0), SweepTarget::squeezing,
                  {2, 4}, chi_grid(), std::nullopt, {{"alpha", 1.0}}, false});

  const auto paks_only = std::vector<StateSpec>{
      make_spec(Family::kerr, Engineering::photon_added, 3.0, 0.0, 0.0, 0, chi0)};
  defs.push_back({"fig3a", paks_only, SweepTarget::squeezing, {4}, chi_grid(), theta_grid(),
                  {{"alpha", 3.0}, {"l", 4.0}}, false});
  defs.push_back({"fig3b", paks_only, SweepTarget::squeezing, {4}, alpha_grid(), theta_grid(),
                  {{"chi", chi0}, {"l", 4.0}}, false});
  defs.push_back({"fig3c", paks_only, SweepTarget::squeezing, {4}, alpha_grid(), chi_grid(),
                  {{"theta", 0.0}, {"l", 4.0}}, false});

  defs.push_back({"fig4a", family_trio(Family::even_coherent, 1.0, 0.0, 0.0, 0, 0.0),
                  SweepTarget::sub_poissonian, {2, 3, 4, 5}, alpha_grid(), std::nullopt, {}, false});
  defs.push_back({"fig4b", family_trio(Family::binomial, 0.0, 0.0, 0.5, cap, 0.0),
                  SweepTarget::sub_poissonian, {2, 3, 4, 5}, p_grid(), std::nullopt, {}, false});
  defs.push_back({"fig4c", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0),
                  SweepTarget::sub_poissonian, {2, 3, 4, 5}, alpha_grid(), std::nullopt, {}, false});

  defs.push_back({"fig5a", family_trio(Family::even_coherent, 1.0, 0.0, 0.0, 0, 0.0),
                  SweepTarget::entropy, {}, alpha_grid(), std::nullopt, {}, true});
  defs.push_back({"fig5b", family_trio(Family::binomial, 0.0, 0.0, 0.5, cap, 0.0),
                  SweepTarget::entropy, {}, p_grid(), std::nullopt, {}, true});
  defs.push_back({"fig5c", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0), SweepTarget::entropy,
                  {}, alpha_grid(), std::nullopt, {{"chi", chi0}}, true});
  defs.push_back({"fig5d", family_trio(Family::kerr, 1.0, 0.0, 0.0, 0, chi0), SweepTarget::entropy,
                  {}, chi_grid(), std::nullopt, {{"alpha", 1.0}}, true});

  defs.push_back({"fig6a",
                  {make_spec(Family::kerr, Engineering::none, 1.0, 0.0, 0.0, 0, chi0)},
                  SweepTarget::entropy, {}, alpha_grid(), chi_grid(), {}, false});
  defs.push_back({"fig6b",
                  {make_spec(Family::kerr, Engineering::vacuum_filtered, 1.0, 0.0, 0.0, 0, chi0)},
                  SweepTarget::entropy, {}, alpha_grid(), chi_grid(), {}, false});
  defs.push_back({"fig6c",
                  {make_spec(Family::kerr, Engineering::photon_added, 1.0, 0.0, 0.0, 0, chi0)},
                  SweepTarget::entropy, {}, alpha_grid(), chi_grid(), {}, false});
  return defs;
}

}  // namespace

std::vector<std::string> known_figures() {
  std::vector<std::string> ids;
  for (const auto& def : figure_defs()) ids.push_back(def.id);
  return ids;
}

std::filesystem::path reproduce(const std::string& figure_id, const std::filesystem::path& out_dir,
                                int threads, int curve_points, int contour_points) {
  const auto defs = figure_defs();
  const auto it =
      std::find_if(defs.begin(), defs.end(), [&](const FigureDef& d) { return d.id == figure_id; });
  if (it == defs.end()) throw invalid_parameter("unknown figure id: " + figure_id);
  FigureDef def = *it;

  def.x.count = def.y ? (contour_points > 0 ? contour_points : 101)
                      : (curve_points > 0 ? curve_points : 99);
  if (def.y) def.y->count = def.x.count;
  def.x.validate();
  if (def.y) def.y->validate();

  const double tail_tol = 1e-12;
  DataTable table;
  table.columns.push_back(def.x.name);
  if (def.y) table.columns.push_back(def.y->name);
  for (const auto& spec : def.states) {
    for (auto& c : point_columns(def.target, def.orders, def.closed_form, spec.label() + "_")) {
      table.columns.push_back(c);
    }
  }
  table.columns.emplace_back("status");

  const int rows_x = def.x.count;
  const int rows_y = def.y ? def.y->count : 1;
  table.rows.resize(static_cast<std::size_t>(rows_x) * static_cast<std::size_t>(rows_y));

  parallel_for(rows_x * rows_y, threads, [&](int idx) {
    const int ix = idx / rows_y;
    const int iy = idx % rows_y;
    std::vector<Cell> row;
    row.emplace_back(def.x.at(ix));
    if (def.y) row.emplace_back(def.y->at(iy));
    int combined_status = kStatusOk;
    for (const auto& base : def.states) {
      StateSpec spec = base;
      std::vector<Cell> cells;
      int status;
      try {
        set_spec_param(spec, def.x.name, def.x.at(ix));
        if (def.y) set_spec_param(spec, def.y->name, def.y->at(iy));
        status =
            evaluate_point_cells(spec, def.target, def.orders, tail_tol, def.closed_form, cells);
      } catch (const invalid_parameter&) {
        status = kStatusInvalidParameter;
        cells.clear();
      } catch (const std::exception&) {
        status = kStatusConvergenceFailure;
        cells.clear();
      }
      if (status != kStatusOk) {
        cells.assign(point_columns(def.target, def.orders, def.closed_form, "").size(), Cell{});
        combined_status = std::max(combined_status, status);
      }
      for (auto& c : cells) row.push_back(std::move(c));
    }
    row.emplace_back(static_cast<long long>(combined_status));
    table.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path csv_path = out_dir / (figure_id + ".csv");
  {
    std::ofstream out(csv_path, std::ios::binary);
    out << to_csv(table);
  }

  nlohmann::ordered_json manifest;
  manifest["figure"] = def.id;
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (const auto& s : def.states) states.push_back(s.label());
  manifest["states"] = states;
  manifest["quantity"] = target_name(def.target);
  if (def.target != SweepTarget::entropy) manifest["orders"] = def.orders;
  nlohmann::ordered_json axes = nlohmann::ordered_json::array();
  axes.push_back({{"name", def.x.name}, {"start", def.x.start}, {"stop", def.x.stop},
                  {"count", def.x.count}});
  if (def.y) {
    axes.push_back({{"name", def.y->name}, {"start", def.y->start}, {"stop", def.y->stop},
                    {"count", def.y->count}});
  }
  manifest["axes"] = axes;
  manifest["caption_fixed"] = def.caption_fixed.empty()
                                  ? nlohmann::ordered_json::object()
                                  : nlohmann::ordered_json(def.caption_fixed);
  nlohmann::ordered_json defaults;
  defaults["tail_tol"] = tail_tol;
  if (!def.states.empty()) {
    const StateSpec& s0 = def.states.front();
    if (s0.family == Family::binomial) defaults["m"] = s0.photon_cap;
    if (s0.family != Family::binomial && def.x.name != "alpha" &&
        (!def.y || def.y->name != "alpha")) {
      defaults["alpha"] = s0.alpha_mag;
    }
    if (s0.family != Family::binomial && def.x.name != "theta" &&
        (!def.y || def.y->name != "theta")) {
      defaults["theta"] = s0.theta;
    }
    if (s0.family == Family::kerr && def.x.name != "chi" && (!def.y || def.y->name != "chi")) {
      defaults["chi"] = s0.chi;
    }
  }
  manifest["defaults"] = defaults;
  {
    std::ofstream out(out_dir / (figure_id + "_manifest.json"), std::ios::binary);
    out << manifest.dump(2) << "\n";
  }
  return csv_path;
}

std::string dump_state(const StateSpec& spec, const std::string& format, double tail_tol) {
  spec.validate();
  const FockVector v = build_state(spec, tail_tol);
  const int cutoff = v.cutoff();

  if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["engineering"] = engineering_name(spec.engineering);
    nlohmann::ordered_json params;
    params["alpha"] = spec.alpha_mag;
    params["theta"] = spec.theta;
    params["p"] = spec.p;
    params["m"] = spec.photon_cap;
    params["chi"] = spec.chi;
    j["parameters"] = params;
    j["cutoff"] = cutoff;
    j["tail_bound"] = v.tail_bound();
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    nlohmann::ordered_json probs = nlohmann::ordered_json::array();
    for (int n = 0; n <= cutoff; ++n) {
      const complexd c = v.amplitude(n);
      amps.push_back({c.real(), c.imag()});
      probs.push_back(v.probability(n));
    }
    j["amplitudes"] = amps;
    j["photon_number_distribution"] = probs;
    return j.dump(2) + "\n";
  }
  if (format != "csv") throw invalid_parameter("unknown dump format: " + format);

  std::string out;
  out += "family,engineering,alpha,theta,p,m,chi,cutoff,tail_bound\n";
  out += std::string(family_name(spec.family)) + "," + engineering_name(spec.engineering) + "," +
         format_double(spec.alpha_mag) + "," + format_double(spec.theta) + "," +
         format_double(spec.p) + "," + std::to_string(spec.photon_cap) + "," +
         format_double(spec.chi) + "," + std::to_string(cutoff) + "," +
         format_double(v.tail_bound()) + "\n\n";
  out += "n,amplitude_re,amplitude_im,probability\n";
  for (int n = 0; n <= cutoff; ++n) {
    const complexd c = v.amplitude(n);
    out += std::to_string(n) + "," + format_double(c.real()) + "," + format_double(c.imag()) + "," +
           format_double(v.probability(n)) + "\n";
  }
  return out;
}

}  // namespace holeburn
