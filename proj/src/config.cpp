#include "stacktree/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "stacktree/errors.hpp"

namespace stacktree {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view v, std::size_t line) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("expected a number, got '" + std::string(v) + "'", line);
    }
    return out;
}

double parse_positive(std::string_view key, std::string_view v, std::size_t line) {
    const double d = parse_number(v, line);
    if (!(d > 0.0)) throw ConfigError(std::string(key) + " must be positive", line);
    return d;
}

bool parse_bool(std::string_view v, std::size_t line) {
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    throw ConfigError("expected true or false, got '" + std::string(v) + "'", line);
}

}  // namespace

Settings parse_config(std::string_view text, Settings base) {
    Settings s = std::move(base);
    bool mode_explicit = false;
    bool saw_width_entry = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        // A comment starts at a '#' that opens the line or follows whitespace,
        // so `width.# = 0.5` still names the hash character.
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == '#' && (i == 0 || raw[i - 1] == ' ' || raw[i - 1] == '\t')) {
                raw = raw.substr(0, i);
                break;
            }
        }
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", line_no);
        if (value.empty()) throw ConfigError("missing value for " + std::string(key), line_no);

        if (key == "strict") {
            s.engine.strict = parse_bool(value, line_no);
        } else if (key == "allow_partial") {
            s.engine.allow_partial = parse_bool(value, line_no);
        } else if (key == "min_branch_width") {
            s.engine.min_branch_width = parse_positive(key, value, line_no);
        } else if (key == "epsilon") {
            s.engine.epsilon = parse_number(value, line_no);
            if (s.engine.epsilon < 0.0) throw ConfigError("epsilon must be >= 0", line_no);
        } else if (key == "font_size") {
            s.metrics.font_size = parse_positive(key, value, line_no);
        } else if (key == "char_width_factor") {
            s.metrics.char_width_factor = parse_positive(key, value, line_no);
        } else if (key == "line_height_factor") {
            s.metrics.line_height_factor = parse_positive(key, value, line_no);
        } else if (key == "ex_pt") {
            s.metrics.ex_pt = parse_positive(key, value, line_no);
        } else if (key == "metrics_mode") {
            if (value == "mono") {
                s.metrics.mode = MetricsMode::Mono;
            } else if (value == "width_table") {
                s.metrics.mode = MetricsMode::WidthTable;
            } else {
                throw ConfigError("metrics_mode must be mono or width_table", line_no);
            }
            mode_explicit = true;
        } else if (key.starts_with("width.")) {
            const std::u32string ch = decode_utf8(key.substr(6));
            if (ch.size() != 1) {
                throw ConfigError("width entries name exactly one character", line_no);
            }
            const double factor = parse_number(value, line_no);
            if (factor < 0.0) throw ConfigError("width factor must be >= 0", line_no);
            s.metrics.width_table[ch[0]] = factor;
            saw_width_entry = true;
        } else if (key == "pt_per_px") {
            s.style.pt_per_px = parse_positive(key, value, line_no);
        } else if (key == "ascii_col_width_pt") {
            s.style.ascii_col_width_pt = parse_positive(key, value, line_no);
        } else if (key == "ascii_row_height_pt") {
            s.style.ascii_row_height_pt = parse_positive(key, value, line_no);
        } else if (key == "json_precision") {
            const double p = parse_number(value, line_no);
            if (p < 1 || p > 17 || p != static_cast<int>(p)) {
                throw ConfigError("json_precision must be an integer in 1..17", line_no);
            }
            s.style.json_precision = static_cast<int>(p);
        } else if (key == "tree_gap") {
            s.tree_gap = parse_number(value, line_no);
            if (s.tree_gap < 0.0) throw ConfigError("tree_gap must be >= 0", line_no);
        } else {
            throw ConfigError("unknown key '" + std::string(key) + "'", line_no);
        }
    }
    if (saw_width_entry && !mode_explicit) s.metrics.mode = MetricsMode::WidthTable;
    return s;
}

Settings load_config(const std::filesystem::path& path, Settings base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                                "cannot open config " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

}  // namespace stacktree
