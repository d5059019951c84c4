#include "fusionkit/axioms.hpp"
#include "fusionkit/catalog.hpp"
#include "fusionkit/cli.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/foelner.hpp"
#include "fusionkit/ring_file.hpp"
#include "fusionkit/spectral.hpp"
#include "fusionkit/window.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;
using namespace fusionkit;

namespace {

using Labels = std::vector<std::string>;
using MeasureArg = std::variant<std::string, std::map<std::string, double>>;

Label parse_label(const FusionRing& ring, const std::string& text) { return ring.parse(text); }

LabelSet parse_labels(const FusionRing& ring, const Labels& labels) {
    LabelSet s;
    for (const auto& text : labels) {
        s.insert(ring.parse(text));
    }
    return s;
}

template <class Range>
Labels render(const FusionRing& ring, const Range& labels) {
    Labels out;
    for (const auto& label : labels) {
        out.push_back(ring.render(label));
    }
    return out;
}

LabelSet support_or_generators(const FusionRing& ring, const std::optional<Labels>& support) {
    if (support) {
        return parse_labels(ring, *support);
    }
    const auto gens = ring.generators();
    return {gens.begin(), gens.end()};
}

ProbMeasure to_measure(const FusionRing& ring, const MeasureArg& arg) {
    if (const auto* spec = std::get_if<std::string>(&arg)) {
        return parse_measure_spec(ring, *spec);
    }
    std::map<Label, double> weights;
    for (const auto& [text, w] : std::get<std::map<std::string, double>>(arg)) {
        weights[ring.parse(text)] += w;
    }
    return ProbMeasure(ring, weights);
}

Function to_function(const FusionRing& ring, const std::map<std::string, double>& values) {
    Function f(ring);
    for (const auto& [text, v] : values) {
        f.add(ring.parse(text), v);
    }
    return f;
}

py::dict report_dict(const FusionRing& ring, const FoelnerReport& r) {
    py::dict d;
    d["condition"] = condition_name(r.condition);
    d["F"] = render(ring, r.F);
    d["support"] = render(ring, r.support);
    d["epsilon"] = r.epsilon;
    d["lhs"] = r.lhs.value();
    d["rhs"] = r.rhs.value();
    d["weight_F"] = r.weight_F.value();
    d["lhs_exact"] = r.lhs.str();
    d["weight_F_exact"] = r.weight_F.str();
    d["ratio"] = r.ratio;
    d["satisfied"] = r.satisfied;
    py::dict per;
    for (const auto& [xi, v] : r.per_generator) {
        per[py::str(ring.render(xi))] = v.value();
    }
    d["per_generator"] = per;
    if (r.support_identity) {
        d["support_identity"] = *r.support_identity;
    }
    py::list curve;
    for (const auto& p : r.curve) {
        curve.append(py::make_tuple(p.step, p.set_size, p.weight_F.value(), p.weight_boundary.value(), p.ratio));
    }
    d["curve"] = curve;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fusionkit, m) {
    m.doc() = "Fusion rings, Foelner conditions and truncated Kesten spectra";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::object(py::exception<FusionError>(m, "FusionError", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const FusionError& e) {
            const py::object& type = error_type.get_stored();
            py::object instance = type(e.what());
            instance.attr("kind") = std::string(error_name(e.kind()));
            PyErr_SetObject(type.ptr(), instance.ptr());
        }
    });

    py::class_<FusionRing>(m, "Ring", "A fusion ring with string labels; products are computed lazily.")
        .def_static("su2", &build_su2_ring)
        .def_static("deformed_su2", &build_deformed_su2_ring, py::arg("n"))
        .def_static("zd", &build_zd_ring, py::arg("d"))
        .def_static("free", &build_free_group_ring, py::arg("rank"))
        .def_static("cyclic", &build_cyclic_ring, py::arg("n"))
        .def_static("trivial", &build_trivial_ring)
        .def_static("finite_group", &build_finite_group_ring, py::arg("table"), py::arg("names") = Labels{})
        .def_static("tensor", &tensor_product, py::arg("left"), py::arg("right"))
        .def_static(
            "from_json",
            [](const std::string& text, bool verify) { return ring_from_json(text, RingLoadOptions{verify}); },
            py::arg("text"), py::arg("verify") = true)
        .def_static(
            "load", [](const std::string& path, bool verify) { return load_ring_file(path, RingLoadOptions{verify}); },
            py::arg("path"), py::arg("verify") = true)
        .def_property_readonly("description", &FusionRing::description)
        .def_property_readonly("unit", [](const FusionRing& r) { return r.render(r.unit()); })
        .def_property_readonly("generators", [](const FusionRing& r) { return render(r, r.generators()); })
        .def("is_label", [](const FusionRing& r, const std::string& text) {
            try {
                return r.is_valid(r.parse(text));
            } catch (const FusionError&) {
                return false;
            }
        })
        .def("conjugate", [](const FusionRing& r, const std::string& a) { return r.render(r.conjugate(r.parse(a))); })
        .def("dim", [](const FusionRing& r, const std::string& a) { return r.dim_value(r.parse(a)); })
        .def("dim_exact", [](const FusionRing& r, const std::string& a) { return r.dim(r.parse(a)).str(); })
        .def("product",
             [](const FusionRing& r, const std::string& a, const std::string& b) {
                 std::map<std::string, py::int_> out;
                 for (const auto& [c, n] : r.product(r.parse(a), r.parse(b))) {
                     out.emplace(r.render(c), py::int_(py::str(n.str())));
                 }
                 return out;
             })
        .def("subset_weight",
             [](const FusionRing& r, const Labels& labels) { return subset_weight(r, parse_labels(r, labels)).str(); })
        .def(
            "window",
            [](const FusionRing& r, int radius, const std::optional<Labels>& support, std::size_t cap) {
                return render(r, build_window(r, support_or_generators(r, support), radius, cap).labels());
            },
            py::arg("radius"), py::arg("support") = py::none(), py::arg("cap") = 200000)
        .def(
            "verify_axioms",
            [](const FusionRing& r, int radius, const std::optional<Labels>& support) {
                const auto window = build_window(r, support_or_generators(r, support), radius, 200000);
                const AxiomReport report = verify_axioms(r, window);
                py::dict out;
                for (const auto& c : report.checks) {
                    out[py::str(c.name)] = py::make_tuple(c.passed, c.probes, c.witness);
                }
                return out;
            },
            py::arg("radius") = 4, py::arg("support") = py::none())
        .def("export_json",
             [](const FusionRing& r, int radius, const std::optional<Labels>& support) {
                 return export_table_json(r, build_window(r, support_or_generators(r, support), radius, 200000));
             },
             py::arg("radius") = 2, py::arg("support") = py::none())
        .def("__repr__", [](const FusionRing& r) { return "<fusionkit.Ring " + r.description() + ">"; });

    m.def(
        "boundary",
        [](const FusionRing& r, const Labels& S, const Labels& F) {
            const BoundaryResult b = boundary(r, parse_labels(r, S), parse_labels(r, F));
            return py::make_tuple(render(r, b.inner), render(r, b.outer));
        },
        py::arg("ring"), py::arg("support"), py::arg("F"), "Inner and outer parts of the S-boundary of F.");

    m.def(
        "fc1_check",
        [](const FusionRing& r, const MeasureArg& mu, const Labels& F, double eps) {
            return report_dict(r, fc1_check(r, to_measure(r, mu), parse_labels(r, F), eps));
        },
        py::arg("ring"), py::arg("measure"), py::arg("F"), py::arg("epsilon"));
    m.def(
        "fc2_check",
        [](const FusionRing& r, const Labels& S, const Labels& F, double eps) {
            return report_dict(r, fc2_check(r, parse_labels(r, S), parse_labels(r, F), eps));
        },
        py::arg("ring"), py::arg("support"), py::arg("F"), py::arg("epsilon"));
    m.def(
        "fc3_check",
        [](const FusionRing& r, const Labels& S, const Labels& F, double eps) {
            return report_dict(r, fc3_check(r, parse_labels(r, S), parse_labels(r, F), eps));
        },
        py::arg("ring"), py::arg("support"), py::arg("F"), py::arg("epsilon"));

    m.def(
        "foelner_search",
        [](const FusionRing& r, const Labels& S, double eps, const std::string& strategy, std::size_t budget) {
            SearchStrategy s = SearchStrategy::Balls;
            if (strategy == "greedy") {
                s = SearchStrategy::Greedy;
            } else if (strategy != "balls") {
                throw FusionError(ErrorKind::InvalidParam, "strategy must be balls or greedy");
            }
            const SearchResult result = foelner_search(r, parse_labels(r, S), eps, s, budget);
            py::dict d = report_dict(r, result.report);
            d["found"] = result.found;
            d["budget_exhausted"] = result.budget_exhausted;
            return d;
        },
        py::arg("ring"), py::arg("support"), py::arg("epsilon"), py::arg("strategy") = "balls",
        py::arg("budget") = 200);

    m.def(
        "spectrum",
        [](const FusionRing& r, const MeasureArg& mu, const std::vector<int>& radii, double tol, std::size_t cap) {
            AmenabilityOptions options;
            options.tol = tol;
            options.cap = cap;
            const AmenabilityReport rep = amenability_estimate(r, to_measure(r, mu), radii, options);
            py::list rows;
            for (const auto& e : rep.estimates) {
                rows.append(py::make_tuple(e.radius, e.window_size, e.lambda_max));
            }
            py::dict d;
            d["estimates"] = rows;
            d["gap"] = rep.gap;
            d["verdict"] = verdict_name(rep.verdict);
            d["note"] = rep.note;
            return d;
        },
        py::arg("ring"), py::arg("measure") = "uniform-gens", py::arg("radii") = std::vector<int>{1, 2, 4, 8},
        py::arg("tol") = 1e-10, py::arg("cap") = 200000,
        "Top eigenvalue of l_mu on generator windows of each radius, with a heuristic verdict.");

    m.def(
        "l_matrix",
        [](const FusionRing& r, const MeasureArg& mu, int radius) {
            const ProbMeasure measure = to_measure(r, mu);
            const TruncationWindow w = build_window(r, measure.support(), radius, 200000);
            const CompressedOperator op = l_measure_operator(r, measure, w);
            return py::make_tuple(render(r, w.labels()), Eigen::MatrixXd(op.matrix));
        },
        py::arg("ring"), py::arg("measure"), py::arg("radius"),
        "Window labels and the dense compression of l_mu to the window of the given radius.");

    m.def(
        "transition_kernel",
        [](const FusionRing& r, const MeasureArg& mu, const std::string& xi, const std::string& eta) {
            return transition_kernel(r, to_measure(r, mu), parse_label(r, xi), parse_label(r, eta));
        },
        py::arg("ring"), py::arg("measure"), py::arg("xi"), py::arg("eta"));

    m.def(
        "dirichlet_norm",
        [](const FusionRing& r, const MeasureArg& mu, const std::map<std::string, double>& f, int order) {
            return dirichlet_norm(r, to_measure(r, mu), to_function(r, f), order);
        },
        py::arg("ring"), py::arg("measure"), py::arg("f"), py::arg("r") = 1);
    m.def(
        "weighted_norm",
        [](const FusionRing& r, const std::map<std::string, double>& f, int order) {
            return weighted_norm(to_function(r, f), order);
        },
        py::arg("ring"), py::arg("f"), py::arg("r") = 1);
    m.def(
        "nw_ratio",
        [](const FusionRing& r, const MeasureArg& mu, const std::map<std::string, double>& f, int order) {
            return nw_ratio(r, to_measure(r, mu), to_function(r, f), order);
        },
        py::arg("ring"), py::arg("measure"), py::arg("f"), py::arg("r") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a fusionkit subcommand in-process; returns (exit code, stdout, stderr).");
}
