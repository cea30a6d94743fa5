#include "numfmt.hpp"
#include "stacktree/backends.hpp"

namespace stacktree {

namespace {

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string emit_svg(const Scene& scene, const RenderStyle& style) {
    const double k = 1.0 / style.pt_per_px;
    auto num = [k](double v) { return detail::format_shortest(v * k); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(scene.width) + "\" height=\"" + num(scene.height) + "\" viewBox=\"0 0 " +
           num(scene.width) + " " + num(scene.height) + "\">\n";
    if (!scene.segments.empty()) {
        out += "<g stroke=\"black\" stroke-width=\"" + num(0.4) + "\" fill=\"none\">\n";
        for (const Segment& s : scene.segments) {
            out += "<line x1=\"" + num(s.x1) + "\" y1=\"" + num(s.y1) + "\" x2=\"" +
                   num(s.x2) + "\" y2=\"" + num(s.y2) + "\"/>\n";
        }
        out += "</g>\n";
    }
    if (!scene.texts.empty()) {
        out += "<g font-family=\"monospace\" text-anchor=\"middle\" "
               "dominant-baseline=\"central\" fill=\"black\">\n";
        for (const PlacedText& t : scene.texts) {
            const double cx = t.x + 0.5 * t.box.width;
            for (std::size_t i = 0; i < t.box.lines.size(); ++i) {
                const double cy = t.y + (static_cast<double>(i) + 0.5) * t.box.line_height;
                out += "<text x=\"" + num(cx) + "\" y=\"" + num(cy) + "\" font-size=\"" +
                       num(t.box.font_size) + "\">" + xml_escape(t.box.lines[i]) +
                       "</text>\n";
            }
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace stacktree
