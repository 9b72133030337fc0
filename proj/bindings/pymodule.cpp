#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "shiftcurves/constructions.hpp"
#include "shiftcurves/io.hpp"
#include "shiftcurves/shift_graph.hpp"
#include "shiftcurves/verification.hpp"

namespace py = pybind11;
using namespace shiftcurves;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

CurveFamily make_family(int m, int segments, const std::string& profile,
                        const std::optional<std::string>& stretch_base) {
    if (segments == 4) {
        if (profile == "figure") return four_segment_family(m, ParamProfile::figure());
        if (profile == "canonical") return four_segment_family(m, ParamProfile::canonical(m));
        throw std::invalid_argument("profile must be 'canonical' or 'figure'");
    }
    if (segments == 3) {
        std::optional<Integer> k;
        if (stretch_base) {
            Integer v;
            if (v.set_str(*stretch_base, 10) != 0)
                throw std::invalid_argument("stretch_base must be a decimal integer");
            k = v;
        }
        return three_segment_family(m, k);
    }
    throw std::invalid_argument("segments must be 3 or 4");
}

}  // namespace

PYBIND11_MODULE(_shiftcurves, mod) {
    mod.doc() = "Curve families whose disjointness graphs are shift graphs, verified exactly";

    mod.def("lex_rank", &lex_rank, py::arg("i"), py::arg("j"), py::arg("m"));
    mod.def(
        "lex_unrank",
        [](long r, int m) {
            const PairVertex v = lex_unrank(r, m);
            return py::make_tuple(v.i, v.j);
        },
        py::arg("r"), py::arg("m"));

    mod.def(
        "shift_graph",
        [](int m) { return json_to_py(graph_to_json(build_shift_graph(m))); }, py::arg("m"),
        "H_m as {'m', 'vertices', 'edges'}");

    mod.def(
        "is_triangle_free", [](int m) { return is_triangle_free(build_shift_graph(m)); },
        py::arg("m"));

    mod.def(
        "clique_number", [](int m) { return clique_number(build_shift_graph(m)); }, py::arg("m"));

    mod.def(
        "formula_coloring", [](int m) { return formula_coloring(m).colors; }, py::arg("m"),
        "per-vertex colors in lex vertex order");

    mod.def(
        "chromatic_number",
        [](int m, long long budget) {
            const ChromaticResult res = chromatic_number_exact(build_shift_graph(m), budget);
            py::dict out;
            out["conclusive"] = res.conclusive;
            out["nodes_expanded"] = res.nodes_expanded;
            if (res.conclusive) {
                out["chi"] = res.chi;
                out["witness"] = res.witness.colors;
                out["lower_bound_certified"] = res.lower_bound_certified;
            }
            return out;
        },
        py::arg("m"), py::arg("budget") = 50'000'000LL);

    mod.def(
        "generate_family",
        [](int m, int segments, const std::string& profile,
           const std::optional<std::string>& stretch_base) {
            return json_to_py(family_to_json(make_family(m, segments, profile, stretch_base)));
        },
        py::arg("m"), py::arg("segments"), py::arg("profile") = "canonical",
        py::arg("stretch_base") = py::none(),
        "family in the curve-family/v1 JSON shape, rationals as strings");

    mod.def(
        "verify_family",
        [](int m, int segments, const std::string& profile, bool chi) {
            VerifyOptions options;
            options.check_chromatic = chi;
            const CurveFamily fam = make_family(m, segments, profile, std::nullopt);
            return json_to_py(report_to_json(verify_family(fam, options)));
        },
        py::arg("m"), py::arg("segments"), py::arg("profile") = "canonical",
        py::arg("chi") = false);

    mod.def(
        "verify_family_json",
        [](const std::string& text, bool chi) {
            VerifyOptions options;
            options.check_chromatic = chi;
            return json_to_py(report_to_json(verify_family(family_from_string(text), options)));
        },
        py::arg("family_json"), py::arg("chi") = false,
        "verify a serialized family file (claim violations land in the report)");

    mod.def(
        "render_svg",
        [](const std::string& text, bool signed_log) {
            RenderOptions options;
            if (signed_log) options.x_compress = RenderOptions::XCompress::SignedLog;
            return render_svg(family_from_string(text), options);
        },
        py::arg("family_json"), py::arg("signed_log") = false);

    mod.def(
        "graph_dot", [](int m) { return graph_to_dot(build_shift_graph(m)); }, py::arg("m"));
}
