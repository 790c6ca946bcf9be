// Copyright 2026 The fermicomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fermicomm/cli.hpp"
#include "fermicomm/dimensions.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/exact.hpp"
#include "fermicomm/invariants.hpp"
#include "fermicomm/magic.hpp"
#include "fermicomm/state_spec.hpp"

namespace py = pybind11;
using namespace fermicomm;

namespace {

py::object to_py(const ExactInteger& v) {
    return py::int_(py::str(to_string(v)));
}

py::object to_py(const ExactRational& v) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(ExactInteger(numerator(v))), to_py(ExactInteger(denominator(v))));
}

GroupKind parse_group(const std::string& name) {
    if (name == "pp") {
        return GroupKind::pp;
    }
    if (name == "gauss") {
        return GroupKind::gauss;
    }
    throw DomainError("group must be 'pp' or 'gauss', got '" + name + "'");
}

StateVector make_state(const DenseVector& amplitudes) {
    return StateVector(amplitudes);
}

py::dict report_to_dict(const InvariantReport& report) {
    py::dict values;
    for (const auto& e : report.entries) {
        values[py::tuple(py::cast(e.label))] = e.value;
    }
    py::dict out;
    out["quantity"] = report.quantity;
    out["labels"] = report.label_names;
    out["values"] = values;
    out["residuals"] = report.residuals;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Commutants of fermionic Gaussian unitaries";
    m.attr("__version__") = FERMICOMM_VERSION;

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<RetryError>(m, "RetryError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);
    py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "dim_commutant",
        [](const std::string& group, int t, int n) {
            return to_py(parse_group(group) == GroupKind::pp ? dim_pp_commutant(t, n) : dim_gauss_commutant(t, n));
        },
        py::arg("group"), py::arg("t"), py::arg("n"));
    m.def(
        "brute_force_commutant_dim",
        [](const std::string& group, int t, int n, int max_qubits) {
            return brute_force_commutant_dim(n, t, parse_group(group), max_qubits);
        },
        py::arg("group"), py::arg("t"), py::arg("n"), py::arg("max_qubits") = 6);

    m.def("state_from_spec", [](const std::string& spec, int n) { return parse_state_spec(spec, n).amplitudes(); },
          py::arg("spec"), py::arg("n"));
    m.def(
        "s4", [](const DenseVector& psi, int n) { return s4(make_state(psi), n); }, py::arg("psi"), py::arg("n"));
    m.def(
        "m_lin", [](const DenseVector& psi, int n) { return m_lin(make_state(psi), n); }, py::arg("psi"),
        py::arg("n"));
    m.def(
        "plucker_rank", [](const DenseVector& psi, int n) { return plucker_rank(make_state(psi), n); },
        py::arg("psi"), py::arg("n"));
    m.def(
        "p_ki_spectrum", [](const DenseVector& psi, int n) { return report_to_dict(p_ki_spectrum(make_state(psi), n)); },
        py::arg("psi"), py::arg("n"));
    m.def(
        "spin_sector_probs",
        [](const DenseVector& psi, int n, int r) { return report_to_dict(spin_sector_probs(make_state(psi), n, r)); },
        py::arg("psi"), py::arg("n"), py::arg("r"));

    m.def(
        "avg_gauss_s4_exact", [](int n) { return to_py(avg_gauss_s4_exact(n)); }, py::arg("n"));
    m.def(
        "avg_pp_s4_exact", [](int n, int r) { return to_py(avg_pp_s4_exact(n, r)); }, py::arg("n"), py::arg("r"));
    m.def(
        "zonal_ck", [](int k) { return to_py(zonal_ck(k)); }, py::arg("k"));
    m.def(
        "baseline_s4",
        [](int n, const std::string& kind) {
            if (kind != "haar" && kind != "product") {
                throw DomainError("baseline must be 'haar' or 'product', got '" + kind + "'");
            }
            return to_py(baseline_s4(n, kind == "haar" ? Baseline::haar : Baseline::product));
        },
        py::arg("n"), py::arg("kind"));
    m.def(
        "mc_average_s4",
        [](int n, const std::string& ensemble, std::uint64_t samples, std::uint64_t seed, int threads) {
            MCEstimate est;
            {
                py::gil_scoped_release release;
                est = mc_average_s4(n, Ensemble::parse(ensemble), samples, seed, threads);
            }
            py::dict out;
            out["mean"] = est.mean;
            out["stderr"] = est.std_error;
            out["samples"] = est.samples;
            out["seed"] = est.seed;
            return out;
        },
        py::arg("n"), py::arg("ensemble"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv = {"fermicomm"};
            for (const auto& a : args) {
                argv.push_back(a.c_str());
            }
            std::ostringstream out, err;
            const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"));
}
