#include <cmath>
#include <numeric>

#include "numfmt.hpp"
#include "stacktree/backends.hpp"
#include "stacktree/errors.hpp"

namespace stacktree {

namespace {

std::string escape_tex(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '#': out += "\\#"; break;
            case '$': out += "\\$"; break;
            case '%': out += "\\%"; break;
            case '&': out += "\\&"; break;
            case '_': out += "\\_"; break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::optional<std::pair<int, int>> picture_slope(double dx, double dy) {
    if (dy < 0.0) {
        dx = -dx;
        dy = -dy;
    }
    const double scale = std::max({1.0, std::abs(dx), std::abs(dy)});
    const double tol = 1e-9 * scale;
    if (std::abs(dx) <= tol && dy <= tol) return std::nullopt;
    for (int q = 0; q <= kMaxSlopeComponent; ++q) {
        for (int p = -kMaxSlopeComponent; p <= kMaxSlopeComponent; ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (q == 0 && std::abs(p) != 1) continue;
            // (dx, dy) parallel to (p, q) and pointing the same way.
            if (std::abs(dx * q - dy * p) <= tol && dx * p + dy * q > 0.0) {
                return std::pair{p, q};
            }
        }
    }
    return std::nullopt;
}

// TeX lengths resolve to 1/65536 pt; nine decimals keep the printed
// picture free of binary noise such as 8.600000000000001.
std::string emit_latex_picture(const Scene& scene, const RenderStyle&) {
    auto fmt = [](double v) { return detail::format_trimmed(v, 9); };
    const double h = scene.height;
    auto flip = [h, fmt](double y) { return fmt(h - y); };

    std::string out = "\\setlength{\\unitlength}{1pt}\n";
    out += "\\begin{picture}(" + fmt(scene.width) + "," + fmt(h) +
           ")\n";
    for (const Segment& s : scene.segments) {
        // Draw upward from the lower endpoint.
        double bx = s.x1, by = s.y1, tx = s.x2, ty = s.y2;
        if (by < ty) {
            std::swap(bx, tx);
            std::swap(by, ty);
        }
        const double dx = tx - bx;
        const double dy = by - ty;
        const auto slope = picture_slope(dx, dy);
        if (!slope) throw UnrepresentableSlope(dx, dy);
        const auto [p, q] = *slope;
        const double extent = p == 0 ? dy : std::abs(dx);
        out += "\\put(" + fmt(bx) + "," + flip(by) + "){\\line(" +
               std::to_string(p) + "," + std::to_string(q) + "){" + fmt(extent) +
               "}}\n";
    }
    for (const PlacedText& t : scene.texts) {
        std::string body;
        for (std::size_t i = 0; i < t.box.lines.size(); ++i) {
            if (i > 0) body += "\\\\";
            body += escape_tex(t.box.lines[i]);
        }
        out += "\\put(" + fmt(t.x) + "," + flip(t.y + t.box.height) +
               "){\\makebox(" + fmt(t.box.width) + "," +
               fmt(t.box.height) + "){\\shortstack{" + body + "}}}\n";
    }
    out += "\\end{picture}\n";
    return out;
}

}  // namespace stacktree
