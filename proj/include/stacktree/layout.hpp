#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stacktree/commands.hpp"
#include "stacktree/errors.hpp"
#include "stacktree/metrics.hpp"
#include "stacktree/scene.hpp"

namespace stacktree {

inline constexpr std::size_t kStrictMaxDepth = 20;
inline constexpr std::size_t kStrictMaxArity = 5;

struct EngineConfig {
    /// Enforce stack depth <= 20 and branch arity <= 5.
    bool strict = true;
    /// Floor for the branch width; smaller values are clamped with a diagnostic.
    double min_branch_width = 1.0;
    double epsilon = 1e-9;
    /// Accept programs that leave subtrees on the stack.
    bool allow_partial = false;

    void validate() const;
};

/// One stacked subtree. `offset` is the attachment x relative to the
/// subtree's left edge. `declared_width` is the footprint used for sibling
/// spacing, `actual_width` the box width, and `shift` how far the declared
/// left edge sits right of the box's left edge.
struct StackEntry {
    Scene subscene;
    double offset = 0.0;
    double shift = 0.0;
    double declared_width = 0.0;
    double actual_width = 0.0;
    double height = 0.0;
};

struct Diagnostic {
    std::size_t command_index = 0;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// The tree stack. Top of stack is the most recently pushed entry, which
/// becomes the rightmost daughter of the next branch.
///
/// Every operation either completes or throws LayoutError leaving the
/// machine unchanged.
class Machine {
public:
    explicit Machine(EngineConfig cfg = {}, MetricsConfig metrics = {});

    void push_leaf(const LabelBox& label);
    void apply_fake_width(const LabelBox& label);
    void reduce_branch(std::size_t arity, const LabelBox& label);
    Scene pop_tree();

    std::size_t depth() const { return stack_.size(); }
    std::size_t max_depth_seen() const { return max_depth_; }
    const StackEntry& top() const;
    const StackEntry& at_depth(std::size_t from_top) const;
    const std::vector<std::string>& notes() const { return notes_; }
    std::vector<std::string> take_notes();

    const EngineConfig& config() const { return cfg_; }
    const MetricsConfig& metrics() const { return metrics_; }

private:
    void reduce_unary(const LabelBox& label);
    void reduce_nary(std::size_t arity, const LabelBox& label);

    EngineConfig cfg_;
    MetricsConfig metrics_;
    std::vector<StackEntry> stack_;
    std::size_t max_depth_ = 0;
    std::vector<std::string> notes_;
};

struct RunResult {
    std::vector<Scene> scenes;
    std::vector<Diagnostic> diagnostics;
    std::size_t max_depth = 0;
};

/// Executes commands in order. Errors are rethrown with the failing command
/// index attached; a non-empty stack at the end raises ResidualStack unless
/// `cfg.allow_partial`.
RunResult run_program(const Program& program, const EngineConfig& cfg,
                      const MetricsConfig& metrics);

}  // namespace stacktree
