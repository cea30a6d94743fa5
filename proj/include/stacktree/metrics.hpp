#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stacktree {

enum class MetricsMode { Mono, WidthTable };

/// Font model used in place of real font measurement. All lengths in pt.
struct MetricsConfig {
    double font_size = 10.0;
    double char_width_factor = 0.6;
    double line_height_factor = 1.2;
    /// Absolute size of 1 ex; the unary connector is 2 ex tall.
    double ex_pt = 4.3;
    MetricsMode mode = MetricsMode::Mono;
    /// Per-code-point width factors, consulted only in WidthTable mode.
    std::map<char32_t, double> width_table;

    /// Throws std::invalid_argument when a factor or size is not positive.
    void validate() const;

    double line_height() const { return line_height_factor * font_size; }
    double char_width(char32_t c) const;
};

/// A measured multi-line label whose lines are centered in a column of
/// `width`.
struct LabelBox {
    std::vector<std::string> lines;
    std::vector<double> line_widths;
    double width = 0.0;
    double height = 0.0;
    double line_height = 0.0;
    double font_size = 0.0;

    bool empty() const { return lines.empty(); }
    double line_inset(std::size_t i) const { return (width - line_widths[i]) / 2.0; }

    friend bool operator==(const LabelBox&, const LabelBox&) = default;
};

/// Splits on `\\` (two backslashes) and on newline. Empty text has no lines.
std::vector<std::string> split_label_lines(std::string_view text);

/// Decodes UTF-8 into code points. Invalid bytes decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);

double measure_line(std::string_view line, const MetricsConfig& cfg);

LabelBox measure_label(std::string_view text, const MetricsConfig& cfg);

}  // namespace stacktree
