#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <stdexcept>
#include <string>

#include "netflippa/dcsbm.hpp"
#include "netflippa/edgelist.hpp"
#include "netflippa/flippa.hpp"
#include "netflippa/normadj.hpp"
#include "netflippa/parallel.hpp"
#include "netflippa/spectra.hpp"
#include "netflippa/theory.hpp"

namespace py = pybind11;
using namespace netflippa;

namespace {

DcsbmParams family_by_name(const std::string& name, int n, RngStream& rng) {
  if (name == "fig1") return preset_fig1(n, rng);
  if (name == "fig2") return preset_fig2(n, rng);
  if (name == "decay") return preset_decay(n, rng);
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Embedding dimension selection for undirected networks by "
            "signflip parallel analysis on normalized adjacency matrices";

  py::class_<DcsbmParams>(m, "DcsbmParams")
      .def(py::init<>())
      .def_readwrite("n", &DcsbmParams::n)
      .def_readwrite("K", &DcsbmParams::K)
      .def_readwrite("q", &DcsbmParams::q)
      .def_readwrite("g", &DcsbmParams::g, "community labels, 1-based")
      .def_readwrite("M", &DcsbmParams::M)
      .def_readwrite("q_min", &DcsbmParams::q_min)
      .def_readwrite("q_max", &DcsbmParams::q_max)
      .def_readwrite("m_max", &DcsbmParams::m_max);

  py::class_<DegreeData>(m, "DegreeData")
      .def_readonly("d", &DegreeData::d)
      .def_readonly("two_m", &DegreeData::two_m)
      .def_readonly("d_neg_alpha", &DegreeData::d_neg_alpha);

  py::class_<NormalizedAdjacency>(m, "NormalizedAdjacency")
      .def_readonly("alpha", &NormalizedAdjacency::alpha)
      .def_readonly("matrix", &NormalizedAdjacency::matrix)
      .def_readonly("degrees", &NormalizedAdjacency::degrees);

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_readonly("eigenvalues", &SelectionResult::eigenvalues)
      .def_readonly("flip_leading", &SelectionResult::flip_leading)
      .def_readonly("threshold", &SelectionResult::threshold)
      .def_readonly("k_hat", &SelectionResult::k_hat)
      .def_readonly("margin", &SelectionResult::margin)
      .def_property_readonly("comparison_mode", [](const SelectionResult& r) {
        return r.mode == ComparisonMode::kUpperEdge ? "upper-edge" : "pairwise";
      });

  py::class_<SignalNoiseParts>(m, "SignalNoiseParts")
      .def_readonly("U", &SignalNoiseParts::U)
      .def_readonly("Lambda", &SignalNoiseParts::Lambda)
      .def_readonly("v_c", &SignalNoiseParts::v_c)
      .def_readonly("X", &SignalNoiseParts::X)
      .def_readonly("S", &SignalNoiseParts::S)
      .def_readonly("N", &SignalNoiseParts::N)
      .def_readonly("L_tilde", &SignalNoiseParts::L_tilde);

  py::class_<DecayFit>(m, "DecayFit")
      .def_readonly("grid", &DecayFit::grid)
      .def_readonly("estimates", &DecayFit::estimates)
      .def_readonly("samples", &DecayFit::samples)
      .def_readonly("slope", &DecayFit::slope)
      .def_readonly("intercept", &DecayFit::intercept);

  m.def(
      "preset",
      [](const std::string& name, int n, std::uint64_t seed,
         std::uint64_t stream) {
        RngStream rng(seed, stream);
        return family_by_name(name, n, rng);
      },
      py::arg("name"), py::arg("n"), py::arg("seed") = 0,
      py::arg("stream") = 0,
      "Benchmark DCSBM parameters; name is 'fig1', 'fig2' or 'decay'.");

  m.def("community_matrix", &community_matrix, py::arg("params"));
  m.def("expected_adjacency", &expected_adjacency, py::arg("params"));

  m.def(
      "sample_adjacency",
      [](const DcsbmParams& params, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return sample_adjacency(params, rng);
      },
      py::arg("params"), py::arg("seed") = 0, py::arg("stream") = 1,
      py::call_guard<py::gil_scoped_release>(),
      "One symmetric 0/1 adjacency sample.");

  m.def(
      "normalized_adjacency",
      [](const Matrix& a, double alpha, bool strict_zero_power) {
        return build_normalized_adjacency(a, alpha, strict_zero_power);
      },
      py::arg("a"), py::arg("alpha"), py::arg("strict_zero_power") = true,
      py::call_guard<py::gil_scoped_release>(),
      "Build L_alpha = (2m)^a n^(-1/2) D^-a (A - dd'/(2m)) D^-a.");

  m.def(
      "select_dimension",
      [](const Matrix& a, double alpha, int trials, double quantile,
         std::uint64_t seed, const std::string& mode, double margin) {
        FlipConfig cfg;
        cfg.trials = trials;
        cfg.quantile = quantile;
        cfg.seed = seed;
        cfg.margin = margin;
        if (mode == "upper-edge") {
          cfg.mode = ComparisonMode::kUpperEdge;
        } else if (mode == "pairwise") {
          cfg.mode = ComparisonMode::kPairwise;
        } else {
          throw std::invalid_argument("unknown comparison mode: " + mode);
        }
        return select_dimension(build_normalized_adjacency(a, alpha), cfg);
      },
      py::arg("a"), py::arg("alpha") = 0.5, py::arg("trials") = 20,
      py::arg("quantile") = 1.0, py::arg("seed") = 0,
      py::arg("mode") = "upper-edge", py::arg("margin") = 0.0,
      py::call_guard<py::gil_scoped_release>(),
      "Select the embedding dimension of an adjacency matrix.");

  m.def(
      "embed",
      [](const Matrix& a, double alpha, int k) {
        return embed(build_normalized_adjacency(a, alpha), k);
      },
      py::arg("a"), py::arg("alpha") = 0.5, py::arg("k") = 2,
      py::call_guard<py::gil_scoped_release>(),
      "Top-k sign-normalized eigenvectors of L_alpha.");

  m.def(
      "signflip",
      [](const Matrix& l, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return signflip(l, rng);
      },
      py::arg("l"), py::arg("seed") = 0, py::arg("stream") = 0,
      "Random symmetric signflip R o L.");

  m.def("eigvals_sym", &eigvals_sym, py::arg("m"),
        py::call_guard<py::gil_scoped_release>(),
        "Eigenvalues sorted in decreasing algebraic order.");
  m.def(
      "eigh_topk",
      [](const Matrix& m, int k) {
        const EighResult top = eigh_topk(m, k);
        return py::make_tuple(top.eigenvalues, top.eigenvectors);
      },
      py::arg("m"), py::arg("k"), "Top-k eigenpairs (values, vectors).");
  m.def("op_norm", &op_norm, py::arg("m"),
        py::call_guard<py::gil_scoped_release>());
  m.def("two_inf_norm", &two_inf_norm, py::arg("m"));

  m.def(
      "build_parts",
      [](const DcsbmParams& params, const Matrix& a, double alpha) {
        return build_parts(params, a, alpha);
      },
      py::arg("params"), py::arg("a"), py::arg("alpha"),
      py::call_guard<py::gil_scoped_release>(),
      "Signal-plus-noise decomposition for known DCSBM parameters.");

  m.def("moment_norm", &moment_norm, py::arg("samples"), py::arg("p") = 1);

  m.def(
      "decay_fit",
      [](const std::string& stat, const std::vector<int>& grid, int reps,
         const std::string& family, double alpha, std::uint64_t seed) {
        static const std::map<std::string, DecayStat> kStats = {
            {"thm1", DecayStat::kThm1}, {"thm2a", DecayStat::kThm2a},
            {"thm2b", DecayStat::kThm2b}, {"thm3", DecayStat::kThm3},
            {"thm4", DecayStat::kThm4}};
        const auto found = kStats.find(stat);
        if (found == kStats.end())
          throw std::invalid_argument("unknown statistic: " + stat);
        return decay_fit(
            found->second, grid, reps,
            [&family](int n, RngStream& rng) {
              return family_by_name(family, n, rng);
            },
            alpha, seed);
      },
      py::arg("stat"), py::arg("grid"), py::arg("reps") = 50,
      py::arg("family") = "decay", py::arg("alpha") = 0.5, py::arg("seed") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "Monte Carlo decay-rate estimate over a grid of network sizes.");

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("format_edge_list", &format_edge_list, py::arg("a"));

  m.def("set_max_threads", &set_max_threads, py::arg("n"),
        "Cap worker threads; 0 restores the NETFLIPPA_THREADS/hardware "
        "default.");

#ifdef NETFLIPPA_VERSION
  m.attr("__version__") = NETFLIPPA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
