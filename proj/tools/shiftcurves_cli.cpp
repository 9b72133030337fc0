// Command-line front end: generate / verify / render / graph / chi.
// Exit codes: 0 success (or verification pass), 1 verification refuted,
// 2 bad input (arguments, constraints, unreadable files).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "shiftcurves/constructions.hpp"
#include "shiftcurves/io.hpp"
#include "shiftcurves/shift_graph.hpp"
#include "shiftcurves/verification.hpp"

namespace {

using namespace shiftcurves;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBadInput = 2;

ParamProfile profile_by_name(const std::string& name, int m) {
    if (name == "canonical") return ParamProfile::canonical(m);
    if (name == "figure") return ParamProfile::figure();
    throw std::invalid_argument("unknown profile '" + name + "'");
}

CurveFamily make_family(int m, int segments, const std::string& profile_name,
                        const std::optional<std::string>& k_str) {
    if (segments == 4) {
        if (k_str) throw std::invalid_argument("--K applies only to --segments 3");
        return four_segment_family(m, profile_by_name(profile_name, m));
    }
    if (segments == 3) {
        std::optional<Integer> k;
        if (k_str) {
            Integer v;
            if (v.set_str(*k_str, 10) != 0)
                throw std::invalid_argument("--K must be a decimal integer");
            k = v;
        }
        return three_segment_family(m, k);
    }
    throw std::invalid_argument("--segments must be 3 or 4");
}

int cmd_generate(int m, int segments, const std::string& profile_name,
                 const std::optional<std::string>& k_str, const std::string& out_path) {
    const CurveFamily fam = make_family(m, segments, profile_name, k_str);
    write_family(out_path, fam);
    std::cout << "wrote " << out_path << " (" << fam.curve_count() << " curves)\n";
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& in_path, std::optional<int> m,
               std::optional<int> segments, const std::string& profile_name,
               const std::optional<std::string>& k_str, bool chi,
               const std::optional<std::string>& json_path) {
    CurveFamily fam;
    if (in_path) {
        fam = read_family(*in_path);
    } else if (m && segments) {
        fam = make_family(*m, *segments, profile_name, k_str);
    } else {
        throw std::invalid_argument("verify needs --in FILE or both --m and --segments");
    }
    VerifyOptions options;
    options.check_chromatic = chi;
    const VerificationReport report = verify_family(fam, options);
    std::cout << report_to_text(report);
    if (json_path) {
        const std::string payload = report_to_json(report).dump(2) + "\n";
        if (*json_path == "-") {
            std::cout << payload;
        } else {
            std::ofstream out(*json_path);
            if (!out) throw std::runtime_error("cannot open " + *json_path);
            out << payload;
        }
    }
    return report.pass() ? kExitOk : kExitRefuted;
}

int cmd_render(const std::string& in_path, const std::string& out_path,
               const std::string& compress, int width, int height, bool no_labels) {
    const CurveFamily fam = read_family(in_path);
    RenderOptions options;
    options.width = width;
    options.height = height;
    options.labels = !no_labels;
    if (compress == "signed-log") {
        options.x_compress = RenderOptions::XCompress::SignedLog;
    } else if (compress != "none") {
        throw std::invalid_argument("--x-compress must be none or signed-log");
    }
    if (options.x_compress == RenderOptions::XCompress::None &&
        fam.kind == FamilyKind::ThreeSegment) {
        for (const PolylineCurve& c : fam.curves) {
            if (abs(c.vertices[0].x) > 1000000) {
                std::cerr << "warning: |x| exceeds 10^6; consider --x-compress signed-log\n";
                break;
            }
        }
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << render_svg(fam, options);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_graph(int m, const std::string& format) {
    const ShiftGraph g = build_shift_graph(m);
    if (format == "dot") {
        std::cout << graph_to_dot(g);
    } else if (format == "json") {
        std::cout << graph_to_json(g).dump(2) << "\n";
    } else {
        throw std::invalid_argument("--format must be dot or json");
    }
    return kExitOk;
}

int cmd_chi(int m, long long budget) {
    const ShiftGraph g = build_shift_graph(m);
    const ChromaticResult res = chromatic_number_exact(g, budget);
    if (!res.conclusive) {
        std::cout << "inconclusive: node budget " << budget << " exhausted after "
                  << res.nodes_expanded << " nodes\n";
        return kExitRefuted;
    }
    std::cout << "chi(H_" << m << ") = " << res.chi << " (formula ceil(log2 m) = " << ceil_log2(m)
              << ", " << res.nodes_expanded << " nodes, lower bound "
              << (res.lower_bound_certified ? "certified" : "not certified") << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polygonal curve families realizing shift graphs, with exact verification"};
    app.require_subcommand(1);

    int m = 0, segments = 0, width = 900, height = 900;
    long long budget = 50'000'000;
    std::string profile_name = "canonical", out_path, in_path, format = "dot",
                compress = "none";
    std::optional<std::string> k_str, json_path;
    bool chi = false, no_labels = false;

    auto* gen = app.add_subcommand("generate", "Generate a curve family file");
    gen->add_option("--m", m, "number of base points")->required();
    gen->add_option("--segments", segments, "3 or 4")->required();
    gen->add_option("--profile", profile_name, "canonical|figure (4-segment only)");
    gen->add_option("--K", k_str, "stretch base (3-segment only)");
    gen->add_option("--out", out_path, "output file")->required();

    auto* ver = app.add_subcommand("verify", "Verify a family against every claimed property");
    std::string ver_in;
    ver->add_option("--in", ver_in, "family file to verify");
    ver->add_option("--m", m, "generate-and-verify: number of base points");
    ver->add_option("--segments", segments, "generate-and-verify: 3 or 4");
    ver->add_option("--profile", profile_name, "canonical|figure");
    ver->add_option("--K", k_str, "stretch base (3-segment only)");
    ver->add_flag("--chi", chi, "also certify the chromatic number of H_m");
    std::string json_out;
    ver->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");

    auto* ren = app.add_subcommand("render", "Render a family file to SVG");
    ren->add_option("--in", in_path, "family file")->required();
    ren->add_option("--out", out_path, "output SVG")->required();
    ren->add_option("--x-compress", compress, "none|signed-log");
    ren->add_option("--width", width, "SVG width");
    ren->add_option("--height", height, "SVG height");
    ren->add_flag("--no-labels", no_labels, "omit vertex labels");

    auto* gra = app.add_subcommand("graph", "Export the shift graph H_m");
    gra->add_option("--m", m, "number of base points")->required();
    gra->add_option("--format", format, "dot|json");

    auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number of H_m");
    chi_cmd->add_option("--m", m, "number of base points")->required();
    chi_cmd->add_option("--budget", budget, "search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (gen->parsed()) return cmd_generate(m, segments, profile_name, k_str, out_path);
        if (ver->parsed())
            return cmd_verify(ver_in.empty() ? std::nullopt : std::optional(ver_in),
                              ver->count("--m") ? std::optional(m) : std::nullopt,
                              ver->count("--segments") ? std::optional(segments) : std::nullopt,
                              profile_name, k_str, chi,
                              json_out.empty() ? std::nullopt : std::optional(json_out));
        if (ren->parsed()) return cmd_render(in_path, out_path, compress, width, height, no_labels);
        if (gra->parsed()) return cmd_graph(m, format);
        if (chi_cmd->parsed()) return cmd_chi(m, budget);
    } catch (const FamilyParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
