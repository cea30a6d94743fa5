#pragma once

#include <filesystem>
#include <string_view>

#include "stacktree/backends.hpp"
#include "stacktree/layout.hpp"
#include "stacktree/metrics.hpp"

namespace stacktree {

struct Settings {
    EngineConfig engine;
    MetricsConfig metrics;
    RenderStyle style;
    /// Vertical gap between stacked trees, pt.
    double tree_gap = 12.0;
};

/// Applies `key = value` lines on top of `base`. Recognised keys:
///
///     strict, min_branch_width, epsilon, allow_partial,
///     font_size, char_width_factor, line_height_factor, ex_pt,
///     metrics_mode (mono | width_table), width.<char>,
///     pt_per_px, ascii_col_width_pt, ascii_row_height_pt,
///     json_precision, tree_gap
///
/// A `width.<char>` entry switches to width_table mode unless metrics_mode
/// is given explicitly. Throws ConfigError with the 1-based line number.
Settings parse_config(std::string_view text, Settings base = {});

/// Reads and parses a config file. I/O failures throw std::system_error.
Settings load_config(const std::filesystem::path& path, Settings base = {});

}  // namespace stacktree
