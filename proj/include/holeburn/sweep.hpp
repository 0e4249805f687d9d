#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holeburn/states.hpp"
#include "holeburn/witnesses.hpp"

namespace holeburn {

/// Error codes used in sweep output and as CLI exit codes.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusInvalidParameter = 2;
inline constexpr int kStatusConvergenceFailure = 3;

/// Empty cell, real value, integer (flags/status), or raw token.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row; reals carry 12 significant digits in scientific
/// notation; empty cells for per-point failures.
std::string to_csv(const DataTable& table);
/// JSON array of row objects (null for empty cells).
std::string to_json(const DataTable& table);

struct GridSpec {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  double at(int i) const;
  /// count >= 2, start < stop.
  void validate() const;
};

enum class SweepTarget { antibunching, squeezing, sub_poissonian, entropy };

SweepTarget witness_target(WitnessKind kind);

struct SweepConfig {
  StateSpec base;
  GridSpec grid;
  SweepTarget target = SweepTarget::entropy;
  std::vector<int> orders;  // witness orders; ignored for entropy
  double tail_tol = 1e-12;
  int threads = 0;  // 0 = hardware concurrency
};

/// Default witness orders: xi in {1,2,3} (hoa), l in {2,4} (hos),
/// l in {2,3,4,5} (hosps).
std::vector<int> default_orders(SweepTarget target);

/// One row per grid point with formula/oracle/nonclassical columns per
/// order (entropy: numeric and closed-form columns) and a status column.
/// Per-point failures leave empty cells and a nonzero status; the sweep
/// itself never aborts on them.
DataTable run_sweep(const SweepConfig& config);

/// Evaluate one state at one parameter point; appends the witness (or
/// entropy) cells for that state to `cells`. Returns the point status.
int evaluate_point_cells(const StateSpec& spec, SweepTarget target, const std::vector<int>& orders,
                         double tail_tol, bool closed_form, std::vector<Cell>& cells);

/// Column labels matching evaluate_point_cells, optionally prefixed with the
/// state label.
std::vector<std::string> point_columns(SweepTarget target, const std::vector<int>& orders,
                                       bool closed_form, const std::string& prefix);

/// Figure panels whose data the `reproduce` command emits.
std::vector<std::string> known_figures();

/// Writes <figure_id>.csv and <figure_id>_manifest.json into out_dir with
/// the panel's fixed parameters baked in. Curve panels default to 99 grid
/// points and contour panels to a 101x101 grid; pass overrides > 0 to
/// change either. Returns the CSV path.
std::filesystem::path reproduce(const std::string& figure_id, const std::filesystem::path& out_dir,
                                int threads = 0, int curve_points = 0, int contour_points = 0);

/// State dump (family, parameters, cutoff, certified tail bound, amplitudes
/// and photon-number distribution) as a JSON or CSV string.
std::string dump_state(const StateSpec& spec, const std::string& format, double tail_tol = 1e-12);

}  // namespace holeburn
