#include "shiftcurves/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace shiftcurves {

namespace {

std::string kind_name(FamilyKind k) {
    return k == FamilyKind::FourSegment ? "four_segment" : "three_segment";
}

FamilyKind kind_from_name(const std::string& s) {
    if (s == "four_segment") return FamilyKind::FourSegment;
    if (s == "three_segment") return FamilyKind::ThreeSegment;
    throw FamilyParseError("unknown family kind '" + s + "'");
}

}  // namespace

nlohmann::ordered_json family_to_json(const CurveFamily& f) {
    nlohmann::ordered_json j;
    j["format"] = "curve-family";
    j["version"] = 1;
    j["m"] = f.m;
    j["kind"] = kind_name(f.kind);
    if (f.kind == FamilyKind::FourSegment && f.profile) {
        nlohmann::ordered_json p;
        p["alpha"] = to_string(f.profile->alpha);
        p["beta"] = to_string(f.profile->beta);
        p["gamma_b"] = to_string(f.profile->gamma_b);
        p["b1"] = to_string(f.profile->b1);
        p["delta"] = to_string(f.profile->delta);
        j["profile"] = p;
    }
    if (f.kind == FamilyKind::ThreeSegment && f.stretch_base)
        j["K"] = f.stretch_base->get_str();
    nlohmann::ordered_json curves = nlohmann::ordered_json::array();
    long rank = 0;
    for (const PolylineCurve& c : f.curves) {
        nlohmann::ordered_json jc;
        jc["i"] = c.i;
        jc["j"] = c.j;
        jc["rank"] = ++rank;
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        for (const Point& p : c.vertices)
            verts.push_back({to_string(p.x), to_string(p.y)});
        jc["vertices"] = verts;
        nlohmann::ordered_json tags = nlohmann::ordered_json::array();
        for (char t : c.part_tags) tags.push_back(std::string(1, t));
        jc["part_tags"] = tags;
        curves.push_back(jc);
    }
    j["curves"] = curves;
    return j;
}

CurveFamily family_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format").get<std::string>() != "curve-family")
            throw FamilyParseError("not a curve-family file");
        if (j.at("version").get<int>() != 1)
            throw FamilyParseError("unsupported file version");
        CurveFamily f;
        f.m = j.at("m").get<int>();
        f.kind = kind_from_name(j.at("kind").get<std::string>());
        if (j.contains("profile")) {
            const auto& p = j.at("profile");
            f.profile = ParamProfile{rational_from_string(p.at("alpha").get<std::string>()),
                                     rational_from_string(p.at("beta").get<std::string>()),
                                     rational_from_string(p.at("gamma_b").get<std::string>()),
                                     rational_from_string(p.at("b1").get<std::string>()),
                                     rational_from_string(p.at("delta").get<std::string>())};
        }
        if (j.contains("K")) {
            Integer k;
            if (k.set_str(j.at("K").get<std::string>(), 10) != 0)
                throw FamilyParseError("cannot parse K");
            f.stretch_base = k;
        }
        for (const auto& jc : j.at("curves")) {
            PolylineCurve c;
            c.i = jc.at("i").get<int>();
            c.j = jc.at("j").get<int>();
            for (const auto& jv : jc.at("vertices")) {
                if (!jv.is_array() || jv.size() != 2)
                    throw FamilyParseError("vertex must be a [x, y] pair");
                c.vertices.push_back({rational_from_string(jv[0].get<std::string>()),
                                      rational_from_string(jv[1].get<std::string>())});
            }
            for (const auto& jt : jc.at("part_tags")) {
                const std::string t = jt.get<std::string>();
                if (t.size() != 1) throw FamilyParseError("part tag must be a single character");
                c.part_tags.push_back(t[0]);
            }
            f.curves.push_back(std::move(c));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw FamilyParseError(std::string("malformed family file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FamilyParseError(std::string("malformed family file: ") + e.what());
    }
}

std::string family_to_string(const CurveFamily& f) {
    return family_to_json(f).dump(2) + "\n";
}

CurveFamily family_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FamilyParseError(std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
}

void write_family(const std::filesystem::path& path, const CurveFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << family_to_string(f);
}

CurveFamily read_family(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FamilyParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return family_from_string(buf.str());
}

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const CurveFamily& f, const RenderOptions& options) {
    const bool compress = options.x_compress == RenderOptions::XCompress::SignedLog;
    auto tx = [&](const Rational& x) {
        return compress ? signed_log_compress(x) : to_double_approx(x);
    };
    auto ty = [&](const Rational& y) { return to_double_approx(y); };

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const PolylineCurve& c : f.curves) {
        for (const Point& p : c.vertices) {
            const double x = tx(p.x), y = ty(p.y);
            if (first) {
                minx = maxx = x;
                miny = maxy = y;
                first = false;
            }
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
    if (first) minx = miny = 0, maxx = maxy = 1;
    const double spanx = std::max(maxx - minx, 1e-9);
    const double spany = std::max(maxy - miny, 1e-9);
    const double pad = 0.06 * std::max(options.width, options.height);
    auto sx = [&](double x) { return pad + (x - minx) / spanx * (options.width - 2 * pad); };
    auto sy = [&](double y) { return options.height - pad - (y - miny) / spany * (options.height - 2 * pad); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
        << options.height << "\">\n";
    svg << "<desc>curve family m=" << f.m << " kind=" << kind_name(f.kind);
    if (compress) svg << " x-compression=signed-log (non-isometric display transform)";
    svg << "</desc>\n";

    const bool draw_line = !compress && f.kind == FamilyKind::FourSegment && f.profile &&
                           f.profile->alpha == f.profile->beta;
    if (draw_line) {
        // x + y + beta = 0 clipped to the drawing window.
        const double beta = to_double_approx(f.profile->beta);
        const double x0 = minx, x1 = maxx;
        svg << "<line x1=\"" << fmt(sx(x0)) << "\" y1=\"" << fmt(sy(-beta - x0)) << "\" x2=\""
            << fmt(sx(x1)) << "\" y2=\"" << fmt(sy(-beta - x1))
            << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\" fill=\"none\"/>\n";
    }

    int idx = 0;
    for (const PolylineCurve& c : f.curves) {
        ++idx;
        svg << "<polyline id=\"curve-" << idx << "\" points=\"";
        bool sep = false;
        for (const Point& p : c.vertices) {
            if (sep) svg << " ";
            svg << fmt(sx(tx(p.x))) << "," << fmt(sy(ty(p.y)));
            sep = true;
        }
        svg << "\" fill=\"none\" stroke=\"#1f3b99\" stroke-width=\"1.5\"/>\n";
        if (options.labels) {
            const Point& corner = c.vertices[1];
            svg << "<text x=\"" << fmt(sx(tx(corner.x)) - 4) << "\" y=\"" << fmt(sy(ty(corner.y)))
                << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">(" << c.i
                << "," << c.j << ")</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string graph_to_dot(const ShiftGraph& g) {
    std::ostringstream os;
    os << "graph shift_graph_m" << g.m << " {\n";
    for (const PairVertex& v : g.vertices)
        os << "  \"(" << v.i << "," << v.j << ")\";\n";
    for (const auto& [u, v] : g.edges)
        os << "  \"(" << g.vertices[u].i << "," << g.vertices[u].j << ")\" -- \"("
           << g.vertices[v].i << "," << g.vertices[v].j << ")\";\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json graph_to_json(const ShiftGraph& g) {
    nlohmann::ordered_json j;
    j["m"] = g.m;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const PairVertex& v : g.vertices) verts.push_back({v.i, v.j});
    j["vertices"] = verts;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["m"] = report.m;
    j["kind"] = kind_name(report.kind);
    j["pass"] = report.pass();
    j["elapsed_seconds"] = report.elapsed_seconds;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace shiftcurves
