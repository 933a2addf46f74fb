// Copyright 2026 The qanneal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qanneal/analysis.hpp"
#include "qanneal/errors.hpp"
#include "qanneal/evolution.hpp"
#include "qanneal/fixtures.hpp"
#include "qanneal/instance_io.hpp"
#include "qanneal/problem.hpp"
#include "qanneal/spectrum.hpp"
#include "qanneal/twospin.hpp"

namespace py = pybind11;
using namespace qanneal;

namespace {

TriggerSpec trigger(const std::string& kind, double g) {
  TriggerSpec t{parse_trigger_kind(kind), g};
  t.validate();
  return t;
}

}  // namespace

PYBIND11_MODULE(_qanneal, m) {
  m.doc() = "Quantum annealing simulator for 2-SAT Ising problems with trigger Hamiltonians";
  m.attr("__version__") = QANNEAL_VERSION;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  py::class_<Coupling>(m, "Coupling")
      .def(py::init<int, int, double>(), py::arg("i"), py::arg("j"), py::arg("value"))
      .def_readwrite("i", &Coupling::i)
      .def_readwrite("j", &Coupling::j)
      .def_readwrite("value", &Coupling::value);

  py::class_<SpinProblem>(m, "SpinProblem")
      .def(py::init([](int n, std::vector<double> h, std::vector<Coupling> j, double y, std::string label) {
             SpinProblem p{n, std::move(h), std::move(j), y, std::move(label), {}};
             p.validate();
             return p;
           }),
           py::arg("n"), py::arg("h_z"), py::arg("couplings"), py::arg("y") = 0.0, py::arg("label") = "")
      .def_readonly("n", &SpinProblem::n)
      .def_readonly("h_z", &SpinProblem::h_z)
      .def_readonly("couplings", &SpinProblem::z_couplings)
      .def_readonly("y", &SpinProblem::y_coupling_strength)
      .def_readonly("label", &SpinProblem::label)
      .def("diagonal_energies", &SpinProblem::diagonal_energies)
      .def("__repr__", [](const SpinProblem& p) {
        return "<SpinProblem n=" + std::to_string(p.n) + " label='" + p.label + "'>";
      });

  py::class_<GroundTruth>(m, "GroundTruth")
      .def_readonly("bitstring", &GroundTruth::bitstring)
      .def_readonly("energy", &GroundTruth::energy)
      .def_readonly("degeneracy", &GroundTruth::degeneracy)
      .def_readonly("first_excited_energy", &GroundTruth::first_excited_energy);

  m.def("fixture", &fixture_problem, py::arg("label"), "One of the bundled 12-variable instances (709, 950, 103, 99)");
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def("brute_force_solve", &brute_force_solve, py::arg("problem"));
  m.def(
      "generate",
      [](int n, std::uint64_t seed, bool nonstoquastic) {
        const GeneratedInstance g = generate_2sat_instance(n, seed);
        SpinProblem p = map_formula_to_problem(g.formula, nonstoquastic);
        p.seed = seed;
        return py::make_tuple(p, g.truth);
      },
      py::arg("n"), py::arg("seed"), py::arg("nonstoquastic") = false,
      "Random 2-SAT instance with a unique solution; returns (problem, ground_truth)");

  m.def(
      "anneal",
      [](const SpinProblem& p, const std::string& kind, double g, double t_anneal, double tau) {
        EvolutionConfig c;
        c.t_anneal = t_anneal;
        c.tau = tau;
        const AnnealResult r = evolve(p, trigger(kind, g), c);
        py::dict out;
        out["p"] = r.success_probability;
        out["final_norm"] = r.final_norm;
        out["steps"] = r.plan.steps;
        out["tau"] = r.plan.tau;
        return out;
      },
      py::arg("problem"), py::arg("trigger") = "none", py::arg("g") = 0.0, py::arg("t_anneal") = 100.0,
      py::arg("tau") = 0.01);

  m.def(
      "lowest",
      [](const SpinProblem& p, const std::string& kind, double g, double s, int k, std::uint64_t seed) {
        const OperatorTerms terms = OperatorTerms::build(p, trigger(kind, g));
        return lanczos_lowest(terms, s, k, seed).energies;
      },
      py::arg("problem"), py::arg("trigger") = "none", py::arg("g") = 0.0, py::arg("s") = 0.5, py::arg("k") = 3,
      py::arg("seed") = 1);

  m.def(
      "gap_profile",
      [](const SpinProblem& p, const std::string& kind, double g, int grid, int k, bool refine) {
        GapProfileOptions o;
        o.grid_points = grid;
        o.k = k;
        o.refine = refine;
        const GapProfile prof = gap_profile(p, trigger(kind, g), o);
        std::vector<double> s, gap;
        std::vector<std::vector<double>> energies;
        for (const auto& x : prof.samples) {
          s.push_back(x.s);
          gap.push_back(x.gap());
          energies.push_back(x.energies);
        }
        py::list crossings;
        for (const auto& a : prof.anticrossings) crossings.append(py::make_tuple(a.s, a.delta, a.prominence));
        py::dict out;
        out["s"] = s;
        out["energies"] = energies;
        out["gap"] = gap;
        out["delta_min"] = prof.delta_min;
        out["s_min"] = prof.s_min;
        out["anticrossings"] = crossings;
        out["stretch_width"] = prof.stretch_width;
        return out;
      },
      py::arg("problem"), py::arg("trigger") = "none", py::arg("g") = 0.0, py::arg("grid") = 1001, py::arg("k") = 3,
      py::arg("refine") = true);

  m.def(
      "lz_fit",
      [](const std::vector<double>& delta, const std::vector<double>& p) {
        if (delta.size() != p.size()) throw ValidationError("delta and p differ in length");
        std::vector<LzPoint> pts;
        for (std::size_t i = 0; i < delta.size(); ++i) pts.push_back({delta[i], p[i]});
        const LzFitResult r = lz_fit(pts);
        py::dict out;
        out["a"] = r.a;
        out["b"] = r.b;
        out["residual"] = r.residual;
        out["converged"] = r.converged;
        return out;
      },
      py::arg("delta"), py::arg("p"), "Fit p = 1 - exp(-a delta^b)");

  m.def(
      "twospin_spectrum",
      [](double g, double jx, double jy, double jz, double s, double sign, double hx) {
        return twospin_spectrum_numeric({g, jx, jy, jz, s, sign, hx});
      },
      py::arg("g"), py::arg("jx"), py::arg("jy"), py::arg("jz"), py::arg("s"), py::arg("sign") = -1.0,
      py::arg("hx") = 1.0);
}
