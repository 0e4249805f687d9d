#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "holeburn/errors.hpp"
#include "holeburn/sweep.hpp"

using namespace holeburn;

namespace {

StateSpec bs_spec(Engineering e, double p, int cap) {
  StateSpec s;
  s.family = Family::binomial;
  s.engineering = e;
  s.p = p;
  s.photon_cap = cap;
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int column_index(const DataTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("antibunching sweep over the binomial family") {
  SweepConfig config;
  config.base = bs_spec(Engineering::none, 0.5, 10);
  config.grid = {"p", 0.01, 0.99, 99};
  config.target = SweepTarget::antibunching;
  config.orders = {1};
  DataTable table = run_sweep(config);
  CHECK(table.rows.size() == 99);
  CHECK(table.columns ==
        std::vector<std::string>{"p", "hoa1_formula", "hoa1_oracle", "hoa1_nonclassical", "status"});
  for (const auto& row : table.rows) {
    CHECK(std::get<long long>(row.back()) == 0);
  }
  // Binomial states are sub-Poissonian: formula negative across the grid.
  const int f = column_index(table, "hoa1_formula");
  for (const auto& row : table.rows) CHECK(std::get<double>(row[static_cast<std::size_t>(f)]) < 0.0);
}

TEST_CASE("sweep grid validation") {
  SweepConfig config;
  config.base = bs_spec(Engineering::none, 0.5, 10);
  config.target = SweepTarget::antibunching;
  config.orders = {1};
  config.grid = {"p", 0.1, 0.9, 1};
  CHECK_THROWS_AS(run_sweep(config), invalid_parameter);
  config.grid = {"p", 0.9, 0.1, 10};
  CHECK_THROWS_AS(run_sweep(config), invalid_parameter);
  config.grid = {"chi", 0.0, 0.1, 10};  // chi does not apply to the binomial family
  CHECK_THROWS_AS(run_sweep(config), invalid_parameter);
  config.grid = {"p", 0.1, 0.9, 10};
  config.orders = {9};
  CHECK_THROWS_AS(run_sweep(config), invalid_parameter);
}

TEST_CASE("two-point sweep is still a valid table") {
  SweepConfig config;
  config.base = bs_spec(Engineering::none, 0.5, 10);
  config.grid = {"p", 0.2, 0.8, 2};
  config.target = SweepTarget::entropy;
  DataTable table = run_sweep(config);
  CHECK(table.rows.size() == 2);
  const std::string csv = to_csv(table);
  CHECK(csv.find("entropy,entropy_closed,status") != std::string::npos);
}

TEST_CASE("per-point failures become empty cells with an error code") {
  SweepConfig config;
  config.base = bs_spec(Engineering::vacuum_filtered, 0.5, 10);
  config.grid = {"p", 0.0, 0.9, 10};  // p = 0 is an invalid filtration target
  config.target = SweepTarget::entropy;
  DataTable table = run_sweep(config);
  CHECK(table.rows.size() == 10);
  const auto& first = table.rows.front();
  CHECK(std::get<long long>(first.back()) == kStatusInvalidParameter);
  CHECK(std::holds_alternative<std::monostate>(first[1]));
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(std::get<long long>(table.rows[i].back()) == kStatusOk);
  }
}

TEST_CASE("csv formatting uses 12 significant digits") {
  DataTable t;
  t.columns = {"x", "flag"};
  t.rows.push_back({Cell{1.0 / 3.0}, Cell{static_cast<long long>(1)}});
  CHECK(to_csv(t) == "x,flag\n3.33333333333e-01,1\n");
}

TEST_CASE("json rendering preserves columns and nulls") {
  DataTable t;
  t.columns = {"x", "value", "status"};
  t.rows.push_back({Cell{0.5}, Cell{}, Cell{static_cast<long long>(2)}});
  const auto parsed = nlohmann::json::parse(to_json(t));
  CHECK(parsed.size() == 1);
  CHECK(parsed[0]["x"] == 0.5);
  CHECK(parsed[0]["value"].is_null());
  CHECK(parsed[0]["status"] == 2);
}

TEST_CASE("sweeps are deterministic across repeats and thread counts") {
  SweepConfig config;
  config.base = bs_spec(Engineering::photon_added, 0.5, 10);
  config.grid = {"p", 0.05, 0.95, 31};
  config.target = SweepTarget::sub_poissonian;
  config.orders = {2, 3};
  config.threads = 4;
  const std::string first = to_csv(run_sweep(config));
  const std::string second = to_csv(run_sweep(config));
  config.threads = 1;
  const std::string serial = to_csv(run_sweep(config));
  CHECK(first == second);
  CHECK(first == serial);
}

TEST_CASE("state dumps round trip") {
  StateSpec pabs = bs_spec(Engineering::photon_added, 0.3, 10);
  const std::string json_text = dump_state(pabs, "json");
  const auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["family"] == "bs");
  CHECK(parsed["cutoff"] == 11);
  double norm = 0.0;
  for (const auto& pair : parsed["amplitudes"]) {
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    norm += re * re + im * im;
  }
  CHECK(std::abs(norm - 1.0) < 1e-12);
  CHECK(parsed["photon_number_distribution"][0] == 0.0);

  // CSV block: recompute the norm from the amplitude table.
  const std::string csv_text = dump_state(pabs, "csv");
  std::istringstream lines(csv_text);
  std::string line;
  // Skip metadata header, metadata row, blank line, table header.
  for (int i = 0; i < 4; ++i) std::getline(lines, line);
  double csv_norm = 0.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string n, re, im, prob;
    std::getline(cells, n, ',');
    std::getline(cells, re, ',');
    std::getline(cells, im, ',');
    std::getline(cells, prob, ',');
    csv_norm += std::stod(re) * std::stod(re) + std::stod(im) * std::stod(im);
    ++rows;
  }
  CHECK(rows == 12);
  CHECK(std::abs(csv_norm - 1.0) < 1e-12);

  // Parity structure of the even coherent dump.
  StateSpec ecs;
  ecs.family = Family::even_coherent;
  ecs.alpha_mag = 1.0;
  const auto ecs_dump = nlohmann::json::parse(dump_state(ecs, "json"));
  const auto& pn = ecs_dump["photon_number_distribution"];
  for (std::size_t n = 0; n < pn.size(); ++n) {
    if (n % 2 == 1) CHECK(pn[n] == 0.0);
  }

  CHECK_THROWS_AS(dump_state(pabs, "yaml"), invalid_parameter);
}

TEST_CASE("reproduce emits figure data with a manifest") {
  const auto dir = std::filesystem::temp_directory_path() / "holeburn_fig_test";
  std::filesystem::remove_all(dir);

  const auto csv_path = reproduce("fig5d", dir, 2, 7, 0);
  CHECK(std::filesystem::exists(csv_path));
  const std::string csv = read_file(csv_path);
  CHECK(csv.rfind("chi,ks_entropy,ks_entropy_closed,vfks_entropy,vfks_entropy_closed,"
                  "paks_entropy,paks_entropy_closed,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);  // header + 7 rows

  const auto manifest = nlohmann::json::parse(read_file(dir / "fig5d_manifest.json"));
  CHECK(manifest["figure"] == "fig5d");
  CHECK(manifest["caption_fixed"]["alpha"] == 1.0);

  // Contour panels come in long format with both axes leading.
  const auto contour_path = reproduce("fig3a", dir, 2, 0, 5);
  const std::string contour = read_file(contour_path);
  CHECK(contour.rfind("chi,theta,", 0) == 0);
  CHECK(std::count(contour.begin(), contour.end(), '\n') == 26);  // header + 25 rows
  const auto m3 = nlohmann::json::parse(read_file(dir / "fig3a_manifest.json"));
  CHECK(m3["caption_fixed"]["alpha"] == 3.0);
  CHECK(m3["caption_fixed"]["l"] == 4.0);

  CHECK_THROWS_AS(reproduce("fig9z", dir), invalid_parameter);
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure ids cover all published panels") {
  const auto ids = known_figures();
  CHECK(ids.size() == 19);
  for (const std::string expected :
       {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig4a",
        "fig4b", "fig4c", "fig5a", "fig5b", "fig5c", "fig5d", "fig6a", "fig6b", "fig6c"}) {
    CHECK(std::find(ids.begin(), ids.end(), expected) != ids.end());
  }
}

TEST_CASE("figure manifests pin exactly the caption-cited parameters") {
  const std::map<std::string, std::map<std::string, double>> expected = {
      {"fig1a", {}},
      {"fig1b", {{"m", 10.0}}},
      {"fig1c", {}},
      {"fig2a", {}},
      {"fig2b", {{"chi", 0.02}}},
      {"fig2c", {{"alpha", 1.0}}},
      {"fig3a", {{"alpha", 3.0}, {"l", 4.0}}},
      {"fig3b", {{"chi", 0.02}, {"l", 4.0}}},
      {"fig3c", {{"theta", 0.0}, {"l", 4.0}}},
      {"fig4a", {}},
      {"fig4b", {}},
      {"fig4c", {}},
      {"fig5a", {}},
      {"fig5b", {}},
      {"fig5c", {{"chi", 0.02}}},
      {"fig5d", {{"alpha", 1.0}}},
      {"fig6a", {}},
      {"fig6b", {}},
      {"fig6c", {}},
  };
  const auto dir = std::filesystem::temp_directory_path() / "holeburn_manifest_test";
  std::filesystem::remove_all(dir);
  for (const auto& [figure, fixed] : expected) {
    const auto csv_path = reproduce(figure, dir, 0, 3, 3);
    CHECK(std::filesystem::exists(csv_path));
    const auto manifest = nlohmann::json::parse(read_file(dir / (figure + "_manifest.json")));
    CAPTURE(figure);
    CHECK(manifest["caption_fixed"].size() == fixed.size());
    for (const auto& [key, value] : fixed) {
      CHECK(manifest["caption_fixed"][key] == value);
    }
  }
  std::filesystem::remove_all(dir);
}
