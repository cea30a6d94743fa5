#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stacktree {

struct Leaf {
    std::string label;
    friend bool operator==(const Leaf&, const Leaf&) = default;
};

struct Branch {
    std::size_t arity = 0;
    std::string label;
    friend bool operator==(const Branch&, const Branch&) = default;
};

struct FakeWidth {
    std::string label;
    friend bool operator==(const FakeWidth&, const FakeWidth&) = default;
};

struct Tree {
    friend bool operator==(const Tree&, const Tree&) = default;
};

using Command = std::variant<Leaf, Branch, FakeWidth, Tree>;
using Program = std::vector<Command>;

struct CompileOptions {
    /// Collapse `(POS word)` into a single two-line leaf `POS\\word`.
    bool merge_preterminals = false;
};

/// Parses the postfix statement language:
///
///     leaf "<label>"   branch <n> "<label>"   fake "<label>"   tree
///
/// Inside quotes `\"` is a quote and `\\` stays as the two-character line
/// break. `#` comments run to end of line. Throws SyntaxError.
Program parse_postfix(std::string_view text);

/// Inverse of parse_postfix for labels it can produce (no lone backslash
/// directly before a quote or at the end of a label).
std::string format_postfix(const Program& program);

/// Compiles `(LABEL child ...)` trees into post-order commands, one `tree`
/// per top-level tree. Throws SyntaxError.
Program compile_bracketed(std::string_view text, const CompileOptions& opts = {});

/// Re-emits the program as the original LaTeX macro calls
/// (`\leaf`, `\branch`, `\faketreewidth`, `\tree`).
std::string format_qobitex(const Program& program);

}  // namespace stacktree
