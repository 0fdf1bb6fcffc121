#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "harrisar1/checks.hpp"
#include "harrisar1/config.hpp"
#include "harrisar1/process.hpp"
#include "harrisar1/verify.hpp"

namespace py = pybind11;
using namespace harrisar1;

namespace {

// Configs arrive as plain dicts; round-tripping through the json module
// reuses the CLI's parser, so both front ends reject the same inputs.
RunConfig config_from(const py::object& obj) {
    const std::string text =
        py::cast<std::string>(py::module_::import("json").attr("dumps")(obj));
    try {
        return parse_config_json(nlohmann::ordered_json::parse(text));
    } catch (const ConfigError& e) {
        throw py::value_error(e.what());
    }
}

LawConfig law_from(const py::object& obj) {
    py::dict wrap;
    wrap["law"] = obj;
    const RunConfig cfg = config_from(wrap);
    if (cfg.law.family.empty()) throw py::value_error("law config needs a 'family' key");
    return cfg.law;
}

StabilityKind stability_from(const std::string& name) {
    if (name == "sum") return StabilityKind::Sum;
    if (name == "max") return StabilityKind::Max;
    if (name == "min") return StabilityKind::Min;
    throw py::value_error("scheme must be 'sum', 'max' or 'min'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "stationary AR(1) schemes for semi-stable laws: sampling, simulation and "
              "numerical verification";
    m.attr("__version__") = "0.1.0";

    py::class_<SemiStableExponent>(m, "Exponent",
                                   "scaling exponent psi with psi-type self-similarity in b")
        .def(py::init([](double lambda, double alpha, double beta, double b, bool increasing) {
                 return SemiStableExponent(lambda, alpha, beta, b,
                                           increasing ? Tail::Increasing : Tail::Decreasing);
             }),
             py::arg("lam") = 1.0, py::arg("alpha") = 1.0, py::arg("beta") = 0.0,
             py::arg("b") = 0.5, py::arg("increasing") = true)
        .def("__call__", [](const SemiStableExponent& psi, double x) { return psi(x); },
             py::arg("x"))
        .def("invert", &SemiStableExponent::invert, py::arg("y"))
        .def_property_readonly("lam", &SemiStableExponent::lambda)
        .def_property_readonly("alpha", &SemiStableExponent::alpha)
        .def_property_readonly("beta", &SemiStableExponent::beta)
        .def_property_readonly("b", &SemiStableExponent::b)
        .def_property_readonly("a", &SemiStableExponent::a)
        .def_property_readonly("log_period", &SemiStableExponent::log_period)
        .def_property_readonly("natural_scale", &SemiStableExponent::natural_scale)
        .def_static("beta_bound", &SemiStableExponent::beta_bound, py::arg("alpha"),
                    py::arg("b"));

    py::class_<TransformLaw>(m, "Transform", "one law's characterizing transform on reals")
        .def("__call__", [](const TransformLaw& t, double x) { return t.eval(x); }, py::arg("x"))
        .def_property_readonly("kind",
                               [](const TransformLaw& t) { return std::string(to_string(t.kind)); })
        .def_property_readonly("name", [](const TransformLaw& t) { return t.name; })
        .def_property_readonly("scale", [](const TransformLaw& t) { return t.scale; })
        .def_property_readonly("gap", [](const TransformLaw& t) { return t.gap; });

    m.def("build_transform", [](const py::object& law) { return build_transform(law_from(law)); },
          py::arg("law"), "characterizing transform of a law config dict");

    m.def(
        "sample",
        [](const py::object& law, std::int64_t n, std::uint64_t seed) {
            if (n < 1) throw py::value_error("n must be at least 1");
            const auto draw = build_sampler(law_from(law));
            RandomStream rng(seed);
            std::vector<double> out(static_cast<std::size_t>(n));
            for (auto& v : out) v = draw(rng);
            return out;
        },
        py::arg("law"), py::arg("n"), py::arg("seed") = 1,
        "n seeded draws from a law config dict");

    m.def(
        "simulate_aggregate",
        [](const py::object& config) {
            RunConfig cfg = config_from(config);
            cfg.command = Command::Simulate;
            validate(cfg);
            const SchemeSpec spec = build_scheme(cfg);
            const auto trajectories = simulate(spec, cfg.n_steps, cfg.n_paths, cfg.seed);
            std::vector<std::vector<double>> out;
            out.reserve(trajectories.size());
            for (const auto& t : trajectories) out.push_back(t.aggregate);
            return out;
        },
        py::arg("config"),
        "aggregate series per path for a scheme config dict (law = innovation)");

    m.def("check_names", [] {
        std::vector<std::string> names;
        for (const NamedCheck& c : check_registry()) names.push_back(c.name);
        return names;
    });

    m.def(
        "run_check_json",
        [](const std::string& name, std::uint64_t seed) {
            try {
                return run_check(name, seed).to_json().dump();
            } catch (const std::invalid_argument& e) {
                throw py::value_error(e.what());
            }
        },
        py::arg("name"), py::arg("seed") = 1, "one verification check, result as a JSON string");

    m.def(
        "fixed_point_json",
        [](const py::object& law, double a, double b, double k, const std::string& scheme) {
            const TransformLaw t = build_transform(law_from(law));
            const auto grid = default_grid(t);
            return harris_fixed_point_residual(t, a, b, k, stability_from(scheme), grid)
                .to_json()
                .dump();
        },
        py::arg("law"), py::arg("a"), py::arg("b"), py::arg("k"), py::arg("scheme"),
        "fixed-point residual report for one pairing, as a JSON string");

    m.def(
        "stationarity_json",
        [](const py::object& law, double p, double b, int k) {
            const TransformLaw t = build_transform(law_from(law));
            const auto grid = default_grid(t);
            return stationarity_identity_residual(t, p, b, k, grid).to_json().dump();
        },
        py::arg("law"), py::arg("p"), py::arg("b"), py::arg("k"),
        "one-step stationarity balance report, as a JSON string");
}
