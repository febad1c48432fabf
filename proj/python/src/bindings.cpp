#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qloop/json_io.hpp"
#include "qloop/suites.hpp"

namespace py = pybind11;
using namespace qloop;

namespace {

// Mat results cross the boundary as JSON text; the Python side decodes.
std::string dump(const json& j) { return j.dump(); }

std::string report_json(const Report& r) { return dump(to_json(r)); }

}  // namespace

PYBIND11_MODULE(_qloop, m)
{
    m.doc() = "Exact rational-function checks for sl2-hat Borel modules";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("known_suites", [] { return std::vector<std::string>(known_suites().begin(), known_suites().end()); });
    m.def("matrix_builders",
          [] { return std::vector<std::string>(matrix_builders().begin(), matrix_builders().end()); });
    m.def("qchar_builders", [] { return std::vector<std::string>(qchar_builders().begin(), qchar_builders().end()); });

    m.def(
        "run_suites",
        [](int trunc, int depth, int u_order, std::uint64_t seed, const std::string& strategy,
           std::optional<std::vector<std::string>> suites, int jobs) {
            SuiteConfig cfg;
            cfg.trunc = trunc;
            cfg.depth = depth;
            cfg.u_order = u_order;
            cfg.seed = seed;
            cfg.jobs = jobs;
            parse_strategy(strategy, cfg);
            if (suites) cfg.suites = std::set<std::string>(suites->begin(), suites->end());
            Report r;
            {
                py::gil_scoped_release nogil;
                r = run_suites(cfg);
            }
            return report_json(r);
        },
        py::arg("trunc") = 8, py::arg("depth") = 8, py::arg("u_order") = 4, py::arg("seed") = 1,
        py::arg("strategy") = "exact", py::arg("suites") = py::none(), py::arg("jobs") = 1);

    m.def(
        "emit_matrix",
        [](const std::string& builder, int k, int ell, int trunc, int u_order, bool poles) {
            BuildParams p;
            p.k = k;
            p.ell = ell;
            p.trunc = trunc;
            p.u_order = u_order;
            Mat mat;
            {
                py::gil_scoped_release nogil;
                mat = emit_matrix(builder, p);
            }
            return poles ? dump(json(pole_scan(mat))) : dump(to_json(mat));
        },
        py::arg("builder"), py::arg("k") = 1, py::arg("ell") = 1, py::arg("trunc") = 8, py::arg("u_order") = 4,
        py::arg("poles") = false);

    m.def(
        "emit_qchar",
        [](const std::string& builder, int k, int shift, int depth) {
            if (depth < 0) throw ConfigError("depth must be >= 0");
            BuildParams p;
            p.k = k;
            p.shift = shift;
            p.depth = depth;
            return dump(to_json(emit_qchar(builder, p)));
        },
        py::arg("builder"), py::arg("k") = 1, py::arg("shift") = 0, py::arg("depth") = 8);

    m.def("qchar_text", [](const std::string& builder, int k, int shift, int depth) {
        BuildParams p;
        p.k = k;
        p.shift = shift;
        p.depth = depth;
        return emit_qchar(builder, p).str();
    }, py::arg("builder"), py::arg("k") = 1, py::arg("shift") = 0, py::arg("depth") = 8);

    m.def("check_wronskian", [](int d, bool perturb) { return report_json(check_wronskian(d, perturb)); },
          py::arg("depth") = 8, py::arg("perturb") = false);
    m.def("check_qq_dual", [](int d, bool perturb) { return report_json(check_qq_dual(d, perturb)); },
          py::arg("depth") = 8, py::arg("perturb") = false);
    m.def("check_baxter_qt", [](int d, bool drop) { return report_json(check_baxter_qt(d, drop)); },
          py::arg("depth") = 8, py::arg("drop_term") = false);
    m.def("check_iq_kr", [](int k, int d, bool bad) { return report_json(check_iq_kr(k, d, bad)); }, py::arg("k"),
          py::arg("depth") = 8, py::arg("marker_mismatch") = false);
    m.def("check_twist_prefund", [](int trunc) { return report_json(check_twist_prefund(trunc)); },
          py::arg("trunc") = 10);
    m.def("check_intertwining", [](int k) { return report_json(check_intertwining(rmat_kr_explicit(k))); },
          py::arg("k"));
    m.def("check_relations", [](const std::string& kind, int k, int trunc) {
        ModuleModel mod = kind == "kr"              ? kr_module(k)
                          : kind == "prefund-plus"  ? prefund_plus(0, trunc)
                          : kind == "prefund-minus" ? prefund_minus(0, trunc)
                                                    : throw ConfigError("unknown module kind: " + kind);
        return report_json(check_relations(mod));
    }, py::arg("kind"), py::arg("k") = 1, py::arg("trunc") = 8);
}
