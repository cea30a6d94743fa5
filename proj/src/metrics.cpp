#include "stacktree/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacktree {

void MetricsConfig::validate() const {
    if (!(font_size > 0.0)) throw std::invalid_argument("font_size must be positive");
    if (!(char_width_factor > 0.0))
        throw std::invalid_argument("char_width_factor must be positive");
    if (!(line_height_factor > 0.0))
        throw std::invalid_argument("line_height_factor must be positive");
    if (!(ex_pt > 0.0)) throw std::invalid_argument("ex_pt must be positive");
    for (const auto& [c, factor] : width_table) {
        if (!(factor >= 0.0)) throw std::invalid_argument("width table factors must be >= 0");
    }
}

double MetricsConfig::char_width(char32_t c) const {
    if (mode == MetricsMode::WidthTable) {
        if (auto it = width_table.find(c); it != width_table.end()) {
            return it->second * font_size;
        }
    }
    return char_width_factor * font_size;
}

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        }
        bool ok = len != 0 && i + len <= text.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (b & 0x3F);
            }
        }
        if (!ok) {
            out.push_back(U'\uFFFD');
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::vector<std::string> split_label_lines(std::string_view text) {
    std::vector<std::string> lines;
    if (text.empty()) return lines;
    std::string current;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == '\\') {
            lines.push_back(std::move(current));
            current.clear();
            ++i;
        } else {
            current.push_back(text[i]);
        }
    }
    lines.push_back(std::move(current));
    return lines;
}

double measure_line(std::string_view line, const MetricsConfig& cfg) {
    double w = 0.0;
    for (char32_t c : decode_utf8(line)) {
        w += cfg.char_width(c);
    }
    return w;
}

LabelBox measure_label(std::string_view text, const MetricsConfig& cfg) {
    LabelBox box;
    box.line_height = cfg.line_height();
    box.font_size = cfg.font_size;
    box.lines = split_label_lines(text);
    box.line_widths.reserve(box.lines.size());
    for (const auto& line : box.lines) {
        const double w = measure_line(line, cfg);
        box.line_widths.push_back(w);
        box.width = std::max(box.width, w);
    }
    box.height = static_cast<double>(box.lines.size()) * box.line_height;
    return box;
}

}  // namespace stacktree
