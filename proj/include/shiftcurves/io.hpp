#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "shiftcurves/constructions.hpp"
#include "shiftcurves/shift_graph.hpp"
#include "shiftcurves/verification.hpp"

namespace shiftcurves {

// Raised on malformed family files (bad JSON shape, unparsable rationals).
struct FamilyParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FamilyFileV1: canonical key order, rationals as "num/den" strings.
nlohmann::ordered_json family_to_json(const CurveFamily& f);
CurveFamily family_from_json(const nlohmann::json& j);

std::string family_to_string(const CurveFamily& f);
CurveFamily family_from_string(const std::string& text);

void write_family(const std::filesystem::path& path, const CurveFamily& f);
CurveFamily read_family(const std::filesystem::path& path);

struct RenderOptions {
    int width = 900;
    int height = 900;
    bool labels = true;
    enum class XCompress { None, SignedLog } x_compress = XCompress::None;
};

// Deterministic SVG 1.1 drawing: one polyline per curve, lex labels, and the
// touching line for 4-segment alpha == beta profiles. The signed-log mode is
// display-only and flagged as non-isometric in the SVG metadata.
std::string render_svg(const CurveFamily& f, const RenderOptions& options = {});

std::string graph_to_dot(const ShiftGraph& g);
nlohmann::ordered_json graph_to_json(const ShiftGraph& g);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace shiftcurves
