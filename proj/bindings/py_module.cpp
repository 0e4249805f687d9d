#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "holeburn/entanglement.hpp"
#include "holeburn/errors.hpp"
#include "holeburn/moments.hpp"
#include "holeburn/special_functions.hpp"
#include "holeburn/sweep.hpp"
#include "holeburn/witnesses.hpp"

namespace py = pybind11;
using namespace holeburn;

namespace {

std::string sweep_csv(const StateSpec& spec, const std::string& param, double start, double stop,
                      int count, const std::string& quantity, const std::vector<int>& orders,
                      double tol, int threads) {
  SweepConfig config;
  config.base = spec;
  config.grid = GridSpec{param, start, stop, count};
  if (quantity == "hoa") config.target = SweepTarget::antibunching;
  else if (quantity == "hos") config.target = SweepTarget::squeezing;
  else if (quantity == "hosps") config.target = SweepTarget::sub_poissonian;
  else if (quantity == "entropy") config.target = SweepTarget::entropy;
  else throw invalid_parameter("unknown sweep quantity: " + quantity);
  config.orders = orders;
  config.tail_tol = tol;
  config.threads = threads;
  return to_csv(run_sweep(config));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hole-burnt bosonic states, nonclassicality witnesses, and sweep tools";

  py::register_exception<invalid_parameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<convergence_failure>(m, "ConvergenceFailure", PyExc_RuntimeError);

  py::enum_<Family>(m, "Family")
      .value("EVEN_COHERENT", Family::even_coherent)
      .value("BINOMIAL", Family::binomial)
      .value("KERR", Family::kerr);
  py::enum_<Engineering>(m, "Engineering")
      .value("NONE", Engineering::none)
      .value("VACUUM_FILTERED", Engineering::vacuum_filtered)
      .value("PHOTON_ADDED", Engineering::photon_added);

  py::class_<StateSpec>(m, "StateSpec")
      .def(py::init([](Family family, Engineering engineering, double alpha, double theta, double p,
                       int m_cap, double chi) {
             StateSpec s;
             s.family = family;
             s.engineering = engineering;
             s.alpha_mag = alpha;
             s.theta = theta;
             s.p = p;
             s.photon_cap = m_cap;
             s.chi = chi;
             return s;
           }),
           py::arg("family"), py::arg("engineering") = Engineering::none, py::arg("alpha") = 0.0,
           py::arg("theta") = 0.0, py::arg("p") = 0.0, py::arg("m") = 0, py::arg("chi") = 0.0)
      .def_readwrite("family", &StateSpec::family)
      .def_readwrite("engineering", &StateSpec::engineering)
      .def_readwrite("alpha", &StateSpec::alpha_mag)
      .def_readwrite("theta", &StateSpec::theta)
      .def_readwrite("p", &StateSpec::p)
      .def_readwrite("m", &StateSpec::photon_cap)
      .def_readwrite("chi", &StateSpec::chi)
      .def("label", &StateSpec::label)
      .def("validate", &StateSpec::validate);

  py::class_<FockVector>(m, "FockVector")
      .def_property_readonly("cutoff", &FockVector::cutoff)
      .def_property_readonly("tail_bound", &FockVector::tail_bound)
      .def_property_readonly("amplitudes",
                             [](const FockVector& v) {
                               return std::vector<complexd>(v.amplitudes().begin(),
                                                            v.amplitudes().end());
                             })
      .def("amplitude", &FockVector::amplitude, py::arg("n"))
      .def("probability", &FockVector::probability, py::arg("n"))
      .def("norm", &FockVector::norm);

  py::class_<MomentTable>(m, "MomentTable")
      .def("get", &MomentTable::get, py::arg("j"), py::arg("k"))
      .def("contains", &MomentTable::contains, py::arg("j"), py::arg("k"));

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_property_readonly("kind",
                             [](const WitnessReport& r) { return witness_kind_name(r.kind); })
      .def_readonly("order", &WitnessReport::order)
      .def_readonly("formula_value", &WitnessReport::formula_value)
      .def_readonly("oracle_value", &WitnessReport::oracle_value)
      .def_readonly("nonclassical", &WitnessReport::nonclassical)
      .def_readonly("discrepancy", &WitnessReport::discrepancy)
      .def_readonly("note", &WitnessReport::note)
      .def("__repr__", [](const WitnessReport& r) {
        return std::string("<WitnessReport ") + witness_kind_name(r.kind) + "(" +
               std::to_string(r.order) + ") formula=" + std::to_string(r.formula_value) +
               " oracle=" + std::to_string(r.oracle_value) + ">";
      });

  m.def("choose_cutoff", &choose_cutoff, py::arg("spec"), py::arg("tail_tol") = 1e-12);
  m.def("build_state", &build_state, py::arg("spec"), py::arg("tail_tol") = 1e-12,
        py::arg("pad") = 0);
  m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("tail_tol") = 1e-12,
        py::arg("pad") = 0);
  m.def("vacuum_filter", &vacuum_filter, py::arg("state"));
  m.def("photon_add", &photon_add, py::arg("state"));

  m.def("moment_oracle", &moment_oracle, py::arg("state"), py::arg("j"), py::arg("k"));
  m.def("analytic_moment", &analytic_moment, py::arg("spec"), py::arg("j"), py::arg("k"));
  m.def("oracle_moment_table", &oracle_moment_table, py::arg("state"), py::arg("max_j") = 6,
        py::arg("max_k") = 6);
  m.def("analytic_moment_table", &analytic_moment_table, py::arg("spec"), py::arg("max_j") = 6,
        py::arg("max_k") = 6);
  m.def("mean_photon_number", &mean_photon_number, py::arg("state"));
  m.def("quadrature_central_moment", &quadrature_central_moment_oracle, py::arg("state"),
        py::arg("l"));
  m.def("number_central_moment", &number_central_moment_oracle, py::arg("state"), py::arg("l"));

  m.def("higher_order_antibunching", &higher_order_antibunching, py::arg("moments"),
        py::arg("xi"));
  m.def("hong_mandel_squeezing", &hong_mandel_squeezing, py::arg("moments"), py::arg("state"),
        py::arg("l"));
  m.def("sub_poissonian_statistics", &sub_poissonian_statistics, py::arg("moments"),
        py::arg("state"), py::arg("l"));
  m.def("poisson_central_moment", &poisson_central_moment, py::arg("l"), py::arg("mean"));

  m.def("linear_entropy", &linear_entropy, py::arg("state"));
  m.def("linear_entropy_closed_form", &linear_entropy_closed_form, py::arg("spec"),
        py::arg("tail_tol") = 1e-12);

  m.def("derived_normalization", &derived_normalization, py::arg("spec"));
  m.def("published_normalization", &published_normalization, py::arg("spec"));
  m.def("summed_normalization", &summed_normalization, py::arg("spec"),
        py::arg("tail_tol") = 1e-12);

  m.def("pochhammer", &pochhammer, py::arg("x"), py::arg("n"));
  m.def("double_factorial", &double_factorial, py::arg("n"));
  m.def("stirling2", &stirling2, py::arg("u"), py::arg("v"));

  m.def("dump_state", &dump_state, py::arg("spec"), py::arg("format") = "json",
        py::arg("tail_tol") = 1e-12);
  m.def("sweep_csv", &sweep_csv, py::arg("spec"), py::arg("param"), py::arg("start"),
        py::arg("stop"), py::arg("count"), py::arg("quantity"),
        py::arg("orders") = std::vector<int>{}, py::arg("tol") = 1e-12, py::arg("threads") = 0);
  m.def("reproduce", &reproduce, py::arg("figure"), py::arg("out_dir"), py::arg("threads") = 0,
        py::arg("curve_points") = 0, py::arg("contour_points") = 0);
  m.def("known_figures", &known_figures);
}
