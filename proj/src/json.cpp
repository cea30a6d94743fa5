#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "stacktree/backends.hpp"

namespace stacktree {

void RenderStyle::validate() const {
    if (!(pt_per_px > 0.0)) throw std::invalid_argument("pt_per_px must be positive");
    if (!(ascii_col_width_pt > 0.0))
        throw std::invalid_argument("ascii_col_width_pt must be positive");
    if (!(ascii_row_height_pt > 0.0))
        throw std::invalid_argument("ascii_row_height_pt must be positive");
    if (json_precision < 1 || json_precision > 17)
        throw std::invalid_argument("json_precision must be in 1..17");
}

std::string format_fixed(double value, int precision) {
    std::array<char, 400> buf{};
    auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed,
                      precision);
    if (ec != std::errc{}) throw std::runtime_error("number out of range");
    std::string out(buf.data(), ptr);
    // Collapse "-0.000" to "0.000".
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string emit_json(const Scene& scene, const RenderStyle& style) {
    const int p = style.json_precision;
    auto num = [p](double v) { return format_fixed(v, p); };

    std::string out = "{\n";
    out += "  \"width\": " + num(scene.width) + ",\n";
    out += "  \"height\": " + num(scene.height) + ",\n";
    out += "  \"texts\": [";
    for (std::size_t i = 0; i < scene.texts.size(); ++i) {
        const PlacedText& t = scene.texts[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"x\": " + num(t.x) + ", \"y\": " + num(t.y) +
               ", \"width\": " + num(t.box.width) + ", \"height\": " + num(t.box.height) +
               ", \"lines\": [";
        for (std::size_t k = 0; k < t.box.lines.size(); ++k) {
            if (k > 0) out += ", ";
            out += nlohmann::json(t.box.lines[k]).dump();
        }
        out += "]}";
    }
    out += scene.texts.empty() ? "],\n" : "\n  ],\n";
    out += "  \"segments\": [";
    for (std::size_t i = 0; i < scene.segments.size(); ++i) {
        const Segment& s = scene.segments[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"x1\": " + num(s.x1) + ", \"y1\": " + num(s.y1) + ", \"x2\": " +
               num(s.x2) + ", \"y2\": " + num(s.y2) + "}";
    }
    out += scene.segments.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

Scene parse_scene_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Scene scene;
    scene.width = j.at("width").get<double>();
    scene.height = j.at("height").get<double>();
    for (const auto& t : j.at("texts")) {
        PlacedText placed;
        placed.x = t.at("x").get<double>();
        placed.y = t.at("y").get<double>();
        placed.box.width = t.at("width").get<double>();
        placed.box.height = t.at("height").get<double>();
        placed.box.lines = t.at("lines").get<std::vector<std::string>>();
        placed.box.line_widths.assign(placed.box.lines.size(), placed.box.width);
        if (!placed.box.lines.empty()) {
            placed.box.line_height =
                placed.box.height / static_cast<double>(placed.box.lines.size());
        }
        scene.texts.push_back(std::move(placed));
    }
    for (const auto& s : j.at("segments")) {
        scene.segments.push_back(Segment{s.at("x1").get<double>(), s.at("y1").get<double>(),
                                         s.at("x2").get<double>(), s.at("y2").get<double>()});
    }
    return scene;
}

}  // namespace stacktree
