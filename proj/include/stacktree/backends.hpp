#pragma once

#include <optional>
#include <string>
#include <utility>

#include "stacktree/scene.hpp"

namespace stacktree {

struct RenderStyle {
    /// SVG pixels = pt / pt_per_px.
    double pt_per_px = 1.0;
    double ascii_col_width_pt = 6.0;
    double ascii_row_height_pt = 12.0;
    int json_precision = 4;

    void validate() const;
};

/// Largest slope component the picture backend accepts. The strict
/// connectors only use (0,1), (+-1,1), (+-2,1), (+-3,1) and (+-4,1).
inline constexpr int kMaxSlopeComponent = 4;

/// Finds coprime (p, q) with |p|, |q| <= kMaxSlopeComponent such that
/// (dx, dy) is parallel to (p, q) and q >= 0. Returns nullopt otherwise.
std::optional<std::pair<int, int>> picture_slope(double dx, double dy);

std::string emit_svg(const Scene& scene, const RenderStyle& style = {});

/// Flat `picture` environment with unitlength 1pt and y pointing up.
/// Throws UnrepresentableSlope.
std::string emit_latex_picture(const Scene& scene, const RenderStyle& style = {});

std::string emit_ascii(const Scene& scene, const RenderStyle& style = {});

/// Canonical JSON. Key order: width, height, texts (x, y, width, height,
/// lines), segments (x1, y1, x2, y2). Numbers are fixed-point with
/// `json_precision` decimals, ties rounded to even.
std::string emit_json(const Scene& scene, const RenderStyle& style = {});

/// Reads emit_json output back into a Scene. Line widths are not stored in
/// the JSON; each line is given the full box width.
Scene parse_scene_json(const std::string& text);

/// Fixed-point decimal with round-half-even on the exact binary value.
std::string format_fixed(double value, int precision);

}  // namespace stacktree
