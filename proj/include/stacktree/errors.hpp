#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stacktree {

/// Failure of the layout machine. `command_index` is filled in by
/// run_program; direct calls on a Machine leave it empty.
class LayoutError : public std::runtime_error {
public:
    enum class Kind {
        DepthExceeded,
        EmptyStack,
        Underflow,
        ArityUnsupported,
        ArityZero,
        ResidualStack,
    };

    LayoutError(Kind kind, std::string detail,
                std::optional<std::size_t> command_index = std::nullopt);

    Kind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }
    std::optional<std::size_t> command_index() const noexcept { return index_; }

    LayoutError at_command(std::size_t index) const;

private:
    Kind kind_;
    std::string detail_;
    std::optional<std::size_t> index_;
};

std::string_view kind_name(LayoutError::Kind kind);

/// Malformed postfix or bracketed input. Line and column are 1-based.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A connector whose slope has no LaTeX picture `\line` equivalent.
class UnrepresentableSlope : public std::runtime_error {
public:
    UnrepresentableSlope(double dx, double dy);

    double dx() const noexcept { return dx_; }
    double dy() const noexcept { return dy_; }

private:
    double dx_;
    double dy_;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string message, std::size_t line);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace stacktree
