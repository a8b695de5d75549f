#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "enscoh/coherence.hpp"
#include "enscoh/discrimination.hpp"
#include "enscoh/ensemble_io.hpp"
#include "enscoh/ensembles.hpp"
#include "enscoh/sweep.hpp"
#include "enscoh/unitary_opt.hpp"

namespace py = pybind11;
using namespace enscoh;

namespace {

Ket to_ket(const CVector& v) { return Ket::normalized(v); }

OptimizerConfig config_or_default(const ProductEnsemble& e, const std::optional<OptimizerConfig>& cfg) {
    return cfg ? *cfg : OptimizerConfig::defaults_for(e.d1(), e.d2());
}

}  // namespace

PYBIND11_MODULE(_enscoh, m) {
    m.doc() = "Ensemble coherence measures and restricted one-way LOCC discrimination";
    py::register_exception<Error>(m, "EnscohError", PyExc_ValueError);

    py::enum_<CoherenceMeasure>(m, "Measure")
        .value("L1", CoherenceMeasure::L1)
        .value("REL", CoherenceMeasure::RelativeEntropy);
    py::enum_<SuccessCriterion>(m, "Criterion")
        .value("WORST", SuccessCriterion::Worst)
        .value("AVG", SuccessCriterion::Average);

    py::class_<ProductEnsemble>(m, "ProductEnsemble")
        .def(py::init([](std::size_t d1, std::size_t d2, const std::vector<std::pair<CVector, CVector>>& states,
                         const std::string& label) {
                 std::vector<ProductState> s;
                 for (const auto& [a, b] : states) s.push_back({to_ket(a), to_ket(b)});
                 return ProductEnsemble(d1, d2, std::move(s), label);
             }),
             py::arg("d1"), py::arg("d2"), py::arg("states"), py::arg("label") = "",
             "States are (alice, bob) amplitude pairs; each side is normalized.")
        .def_property_readonly("d1", &ProductEnsemble::d1)
        .def_property_readonly("d2", &ProductEnsemble::d2)
        .def_property_readonly("label", &ProductEnsemble::label)
        .def("__len__", &ProductEnsemble::size)
        .def_property_readonly("states",
                               [](const ProductEnsemble& e) {
                                   std::vector<std::pair<CVector, CVector>> out;
                                   for (const auto& s : e.states()) out.push_back({s.alice.amplitudes(), s.bob.amplitudes()});
                                   return out;
                               })
        .def("superposed_state", [](const ProductEnsemble& e) { return CVector(superposed_state(e).amplitudes()); })
        .def("to_json", [](const ProductEnsemble& e) { return ensemble_to_json(e).dump(); })
        .def_static("from_json", [](const std::string& text) { return parse_ensemble(text); });

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &OptimizerConfig::restarts)
        .def_readwrite("max_evals", &OptimizerConfig::max_evals)
        .def_readwrite("f_tol", &OptimizerConfig::f_tol)
        .def_readwrite("seed", &OptimizerConfig::seed)
        .def_static("defaults_for", &OptimizerConfig::defaults_for, py::arg("d1"), py::arg("d2"),
                    py::arg("seed") = kAcceptanceSeed);

    py::class_<CoherenceReport>(m, "CoherenceReport")
        .def_readonly("tau", &CoherenceReport::tau)
        .def_readonly("mec", &CoherenceReport::mec)
        .def_readonly("mec_normalized", &CoherenceReport::mec_normalized)
        .def_readonly("deficit", &CoherenceReport::deficit)
        .def_property_readonly("u1", [](const CoherenceReport& r) { return r.u1_star.matrix(); })
        .def_property_readonly("u2", [](const CoherenceReport& r) { return r.u2_star.matrix(); })
        .def_property_readonly("tau_ties", [](const CoherenceReport& r) { return r.tau_ties.size(); });

    py::class_<DiscriminationResult>(m, "DiscriminationResult")
        .def_property_readonly("configuration", [](const DiscriminationResult& r) { return r.config.pairing; })
        .def_property_readonly("projectors",
                               [](const DiscriminationResult& r) { return CMatrix(basis_matrix(r.projectors.directions())); })
        .def_readonly("p_succ_worst", &DiscriminationResult::p_succ_worst)
        .def_readonly("p_succ_avg", &DiscriminationResult::p_succ_avg)
        .def_readonly("overlap_sum", &DiscriminationResult::overlap_sum)
        .def_property_readonly("reduced_sets", [](const DiscriminationResult& r) {
            std::vector<std::size_t> idx;
            for (const auto& s : r.reduced_sets) idx.push_back(s.index);
            return idx;
        });

    m.def("ensemble_names", &ensemble_names);
    m.def("named_ensemble", [](const std::string& name) { return named_ensemble(name); });
    m.def("make_arb_2x2", &make_arb_2x2, py::arg("theta1"), py::arg("theta2"), py::arg("phi1") = 0.0,
          py::arg("phi2") = 0.0);
    m.def("make_arb_2x3", &make_arb_2x3, py::arg("theta1"), py::arg("phi1"), py::arg("theta2"), py::arg("phi2"));

    m.def("coherence", [](CoherenceMeasure meas, const CVector& amps) { return coherence(meas, to_ket(amps)); },
          py::arg("measure"), py::arg("amplitudes"));
    m.def("c_l1", [](const CMatrix& rho) { return c_l1(DensityMatrix(rho)); }, py::arg("rho"));
    m.def("c_rel", [](const CMatrix& rho) { return c_rel(DensityMatrix(rho)); }, py::arg("rho"));
    m.def("max_coherence", &max_coherence);
    m.def("relative_local_coherence", &relative_local_coherence);

    m.def("mec",
          [](const ProductEnsemble& e, CoherenceMeasure meas, std::optional<OptimizerConfig> cfg) {
              py::gil_scoped_release release;
              return mec(e, meas, config_or_default(e, cfg));
          },
          py::arg("ensemble"), py::arg("measure") = CoherenceMeasure::L1, py::arg("config") = py::none());
    m.def("check_maximal_superposition",
          [](const ProductEnsemble& e, std::optional<OptimizerConfig> cfg) {
              return check_maximal_superposition(e, config_or_default(e, cfg));
          },
          py::arg("ensemble"), py::arg("config") = py::none());
    m.def("success_probability",
          [](const ProductEnsemble& e, std::optional<OptimizerConfig> cfg) {
              py::gil_scoped_release release;
              return success_probability(e, config_or_default(e, cfg));
          },
          py::arg("ensemble"), py::arg("config") = py::none());
    m.def("brute_force_oracle", &brute_force_oracle, py::arg("ensemble"), py::arg("grid_step"),
          py::call_guard<py::gil_scoped_release>());

    m.def("sweep_csv",
          [](const std::string& family, std::size_t samples, std::uint64_t seed, SuccessCriterion criterion,
             std::optional<std::size_t> restarts) {
              SweepSpec spec;
              spec.family = parse_family(family);
              spec.samples = samples;
              spec.seed = seed;
              spec.criterion = criterion;
              spec.restarts = restarts;
              std::ostringstream out;
              {
                  py::gil_scoped_release release;
                  write_csv(out, run_sweep(spec));
              }
              return out.str();
          },
          py::arg("family"), py::arg("samples"), py::arg("seed") = kAcceptanceSeed,
          py::arg("criterion") = SuccessCriterion::Worst, py::arg("restarts") = py::none());
}
