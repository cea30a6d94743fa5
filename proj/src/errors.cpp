#include "stacktree/errors.hpp"

#include <cstdio>

namespace stacktree {

namespace {

std::string layout_what(LayoutError::Kind kind, const std::string& detail,
                        std::optional<std::size_t> index) {
    std::string msg(kind_name(kind));
    if (index) {
        msg += " at command " + std::to_string(*index);
    }
    if (!detail.empty()) {
        msg += ": " + detail;
    }
    return msg;
}

std::string slope_what(double dx, double dy) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "UnrepresentableSlope: segment direction (%g, %g) has no picture slope", dx,
                  dy);
    return buf;
}

}  // namespace

LayoutError::LayoutError(Kind kind, std::string detail, std::optional<std::size_t> command_index)
    : std::runtime_error(layout_what(kind, detail, command_index)),
      kind_(kind),
      detail_(std::move(detail)),
      index_(command_index) {}

LayoutError LayoutError::at_command(std::size_t index) const {
    return LayoutError(kind_, detail_, index);
}

std::string_view kind_name(LayoutError::Kind kind) {
    switch (kind) {
        case LayoutError::Kind::DepthExceeded: return "DepthExceeded";
        case LayoutError::Kind::EmptyStack: return "EmptyStack";
        case LayoutError::Kind::Underflow: return "Underflow";
        case LayoutError::Kind::ArityUnsupported: return "ArityUnsupported";
        case LayoutError::Kind::ArityZero: return "ArityZero";
        case LayoutError::Kind::ResidualStack: return "ResidualStack";
    }
    return "LayoutError";
}

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error("SyntaxError at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      message_(std::move(message)),
      line_(line),
      column_(column) {}

UnrepresentableSlope::UnrepresentableSlope(double dx, double dy)
    : std::runtime_error(slope_what(dx, dy)), dx_(dx), dy_(dy) {}

ConfigError::ConfigError(std::string message, std::size_t line)
    : std::runtime_error("ConfigError at line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace stacktree
