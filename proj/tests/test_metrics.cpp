#include <doctest.h>

#include <stdexcept>

#include "stacktree/metrics.hpp"

using namespace stacktree;

TEST_CASE("mono metrics measure two characters") {
    const LabelBox b = measure_label("NP", MetricsConfig{});
    CHECK(b.lines.size() == 1);
    CHECK(b.width == doctest::Approx(12.0));
    CHECK(b.height == doctest::Approx(12.0));
}

TEST_CASE("double backslash splits lines and lines are centered") {
    const LabelBox b = measure_label("a\\\\bb", MetricsConfig{});
    REQUIRE(b.lines == std::vector<std::string>{"a", "bb"});
    CHECK(b.width == 12.0);
    CHECK(b.height == 24.0);
    CHECK(b.line_inset(0) == 3.0);
    CHECK(b.line_inset(1) == 0.0);
}

TEST_CASE("newline also splits lines") {
    const LabelBox b = measure_label("V\nruns", MetricsConfig{});
    CHECK(b.lines == std::vector<std::string>{"V", "runs"});
    CHECK(b.width == 24.0);
}

TEST_CASE("empty label has no lines") {
    const LabelBox b = measure_label("", MetricsConfig{});
    CHECK(b.lines.empty());
    CHECK(b.width == 0.0);
    CHECK(b.height == 0.0);
}

TEST_CASE("a single backslash is ordinary text") {
    const LabelBox b = measure_label("a\\b", MetricsConfig{});
    CHECK(b.lines.size() == 1);
    CHECK(b.width == doctest::Approx(18.0));
}

TEST_CASE("width table with fallback") {
    MetricsConfig m;
    m.mode = MetricsMode::WidthTable;
    m.width_table[U'W'] = 1.0;
    CHECK(measure_line("W", m) == 10.0);
    CHECK(measure_line("Wi", m) == doctest::Approx(16.0));

    m.mode = MetricsMode::Mono;
    CHECK(measure_line("W", m) == doctest::Approx(6.0));
}

TEST_CASE("code points, not bytes, are measured") {
    CHECK(measure_line("\xC3\xA9t\xC3\xA9", MetricsConfig{}) == doctest::Approx(18.0));
    CHECK(decode_utf8("\xE2\x82\xAC").size() == 1);
    CHECK(decode_utf8("\xFF") == std::u32string(1, U'\uFFFD'));
}

TEST_CASE("measure_label invariants over generated labels") {
    MetricsConfig m;
    m.font_size = 11.0;
    m.line_height_factor = 1.25;
    const std::string alphabet = "abcXYZ \\\n";
    unsigned state = 12345;
    for (int iter = 0; iter < 500; ++iter) {
        std::string text;
        state = state * 1103515245u + 12345u;
        const int len = static_cast<int>((state >> 16) % 12);
        for (int i = 0; i < len; ++i) {
            state = state * 1103515245u + 12345u;
            text.push_back(alphabet[(state >> 16) % alphabet.size()]);
        }
        const LabelBox b = measure_label(text, m);
        CHECK(b == measure_label(text, m));
        double widest = 0.0;
        for (double w : b.line_widths) widest = std::max(widest, w);
        CHECK(b.width == widest);
        CHECK(b.height == doctest::Approx(b.lines.size() * 1.25 * 11.0));
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
            CHECK(b.line_inset(i) * 2 + b.line_widths[i] == doctest::Approx(b.width));
        }
        // Appending a character never narrows; appending a line adds one row.
        const LabelBox longer = measure_label(text + "m", m);
        CHECK(longer.width >= b.width);
        if (!text.empty()) {
            const LabelBox taller = measure_label(text + "\\\\z", m);
            CHECK(taller.height == doctest::Approx(b.height + 1.25 * 11.0));
        }
    }
}

TEST_CASE("invalid metrics are rejected") {
    MetricsConfig m;
    m.font_size = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = MetricsConfig{};
    m.ex_pt = -1.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}
