#include <algorithm>
#include <cmath>

#include "stacktree/backends.hpp"

namespace stacktree {

namespace {

constexpr double kMergeTol = 1e-9;

void append_utf8(std::string& out, char32_t c) {
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
}

// Piecewise-linear map from scene y to grid rows. Every band between
// consecutive breakpoints gets round(len / row_height) rows, and at least
// one when a text line starts there. A connector always spans at least
// one row.
class RowMap {
public:
    RowMap(const Scene& scene, double row_height) {
        std::vector<double> text_tops;
        for (const auto& t : scene.texts) {
            for (std::size_t i = 0; i <= t.box.lines.size(); ++i) {
                const double y = t.y + static_cast<double>(i) * t.box.line_height;
                breaks_.push_back(y);
                if (i < t.box.lines.size()) text_tops.push_back(y);
            }
        }
        for (const auto& s : scene.segments) {
            breaks_.push_back(s.y1);
            breaks_.push_back(s.y2);
        }
        std::sort(breaks_.begin(), breaks_.end());
        breaks_.erase(std::unique(breaks_.begin(), breaks_.end(),
                                  [](double a, double b) { return b - a <= kMergeTol; }),
                      breaks_.end());

        start_row_.assign(breaks_.size(), 0);
        rows_.assign(breaks_.size(), 0);
        for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
            const double lo = breaks_[k];
            int n = static_cast<int>(std::lround((breaks_[k + 1] - lo) / row_height));
            const bool starts_text = std::any_of(text_tops.begin(), text_tops.end(), [&](double y) {
                return std::abs(y - lo) <= kMergeTol;
            });
            rows_[k] = starts_text ? std::max(n, 1) : n;
        }
        // A connector that would collapse to zero rows gets one, in its
        // longest band.
        for (const auto& s : scene.segments) {
            const std::size_t first = band_of(std::min(s.y1, s.y2));
            const std::size_t last = band_of(std::max(s.y1, s.y2));
            int total = 0;
            std::size_t longest = first;
            for (std::size_t k = first; k < last; ++k) {
                total += rows_[k];
                if (breaks_[k + 1] - breaks_[k] > breaks_[longest + 1] - breaks_[longest])
                    longest = k;
            }
            if (total == 0 && first < last) rows_[longest] = 1;
        }
        int row = 0;
        for (std::size_t k = 0; k < breaks_.size(); ++k) {
            start_row_[k] = row;
            row += rows_[k];
        }
        total_rows_ = row;
    }

    int row_of(double y) const { return start_row_[band_of(y)]; }

    int total_rows() const { return total_rows_; }

    /// Scene y at the vertical middle of grid row `r`, or NaN if r is empty.
    double mid_y(int r) const {
        for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
            if (r >= start_row_[k] && r < start_row_[k] + rows_[k]) {
                const double len = (breaks_[k + 1] - breaks_[k]) / rows_[k];
                return breaks_[k] + (r - start_row_[k] + 0.5) * len;
            }
        }
        return std::nan("");
    }

private:
    std::size_t band_of(double y) const {
        auto it = std::lower_bound(breaks_.begin(), breaks_.end(), y - kMergeTol);
        if (it == breaks_.end()) return breaks_.size() - 1;
        return static_cast<std::size_t>(it - breaks_.begin());
    }

    std::vector<double> breaks_;
    std::vector<int> start_row_;
    std::vector<int> rows_;
    int total_rows_ = 0;
};

class Grid {
public:
    void put(int row, int col, char32_t c) {
        if (row < 0 || col < 0) return;
        if (static_cast<std::size_t>(row) >= cells_.size()) cells_.resize(row + 1);
        auto& line = cells_[row];
        if (static_cast<std::size_t>(col) >= line.size()) line.resize(col + 1, U' ');
        line[col] = c;
    }

    void ensure_rows(int n) {
        if (n > 0 && static_cast<std::size_t>(n) > cells_.size()) cells_.resize(n);
    }

    std::string str() const {
        std::string out;
        for (const auto& line : cells_) {
            std::size_t end = line.size();
            while (end > 0 && line[end - 1] == U' ') --end;
            for (std::size_t i = 0; i < end; ++i) append_utf8(out, line[i]);
            out.push_back('\n');
        }
        return out;
    }

private:
    std::vector<std::u32string> cells_;
};

}  // namespace

std::string emit_ascii(const Scene& scene, const RenderStyle& style) {
    if (scene.texts.empty() && scene.segments.empty()) return {};
    const double cw = style.ascii_col_width_pt;
    const RowMap rows(scene, style.ascii_row_height_pt);
    Grid grid;
    grid.ensure_rows(rows.total_rows());

    for (const Segment& s : scene.segments) {
        const double top_y = std::min(s.y1, s.y2);
        const double bot_y = std::max(s.y1, s.y2);
        const double top_x = s.y1 <= s.y2 ? s.x1 : s.x2;
        const double bot_x = s.y1 <= s.y2 ? s.x2 : s.x1;
        const double dy = bot_y - top_y;
        if (dy <= kMergeTol) {
            const int r = std::max(rows.row_of(top_y) - 1, 0);
            const auto c0 = static_cast<int>(std::floor(std::min(s.x1, s.x2) / cw));
            const auto c1 = static_cast<int>(std::floor(std::max(s.x1, s.x2) / cw));
            for (int c = c0; c <= c1; ++c) grid.put(r, c, U'_');
            continue;
        }
        char32_t glyph = U'|';
        if (std::abs(top_x - bot_x) > kMergeTol) glyph = top_x > bot_x ? U'/' : U'\\';
        for (int r = rows.row_of(top_y); r < rows.row_of(bot_y); ++r) {
            const double y = rows.mid_y(r);
            if (std::isnan(y)) continue;
            const double x = top_x + (bot_x - top_x) * (y - top_y) / dy;
            grid.put(r, static_cast<int>(std::floor(x / cw)), glyph);
        }
    }

    for (const PlacedText& t : scene.texts) {
        for (std::size_t i = 0; i < t.box.lines.size(); ++i) {
            const int r = rows.row_of(t.y + static_cast<double>(i) * t.box.line_height);
            const double left = t.x + t.box.line_inset(i);
            int c = static_cast<int>(std::lround(left / cw));
            for (char32_t ch : decode_utf8(t.box.lines[i])) grid.put(r, c++, ch);
        }
    }
    return grid.str();
}

}  // namespace stacktree
