#include "stacktree/layout.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace stacktree {

namespace {

Scene label_scene(const LabelBox& label, double x, double y) {
    Scene s;
    if (!label.empty()) s.texts.push_back(PlacedText{x, y, label});
    return s;
}

std::string format_pt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void EngineConfig::validate() const {
    if (!(min_branch_width > 0.0)) throw std::invalid_argument("min_branch_width must be positive");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
}

Machine::Machine(EngineConfig cfg, MetricsConfig metrics)
    : cfg_(cfg), metrics_(std::move(metrics)) {
    cfg_.validate();
    metrics_.validate();
}

const StackEntry& Machine::top() const {
    if (stack_.empty()) throw LayoutError(LayoutError::Kind::EmptyStack, "stack is empty");
    return stack_.back();
}

const StackEntry& Machine::at_depth(std::size_t from_top) const {
    if (from_top >= stack_.size()) {
        throw LayoutError(LayoutError::Kind::Underflow, "no entry at that depth");
    }
    return stack_[stack_.size() - 1 - from_top];
}

std::vector<std::string> Machine::take_notes() {
    std::vector<std::string> out;
    out.swap(notes_);
    return out;
}

void Machine::push_leaf(const LabelBox& label) {
    if (cfg_.strict && stack_.size() >= kStrictMaxDepth) {
        throw LayoutError(LayoutError::Kind::DepthExceeded,
                          "Tree stack overflow (limit " + std::to_string(kStrictMaxDepth) + ")");
    }
    StackEntry e;
    e.subscene = label_scene(label, 0.0, 0.0);
    e.subscene.width = label.width;
    e.subscene.height = label.height;
    e.offset = 0.5 * label.width;
    e.shift = 0.0;
    e.declared_width = label.width;
    e.actual_width = label.width;
    e.height = label.height;
    stack_.push_back(std::move(e));
    max_depth_ = std::max(max_depth_, stack_.size());
}

void Machine::apply_fake_width(const LabelBox& label) {
    if (stack_.empty()) {
        throw LayoutError(LayoutError::Kind::EmptyStack, "fake width applied to an empty stack");
    }
    StackEntry& e = stack_.back();
    const double half = 0.5 * label.width;
    e.declared_width = e.offset + half;
    e.shift = e.offset - half;
}

void Machine::reduce_branch(std::size_t arity, const LabelBox& label) {
    if (arity == 0) {
        throw LayoutError(LayoutError::Kind::ArityZero, "branch arity must be at least 1");
    }
    if (cfg_.strict && arity > kStrictMaxArity) {
        throw LayoutError(LayoutError::Kind::ArityUnsupported,
                          "Can't handle " + std::to_string(arity) + " branching");
    }
    if (stack_.size() < arity) {
        throw LayoutError(LayoutError::Kind::Underflow,
                          "Tree stack underflow: branch " + std::to_string(arity) + " needs " +
                              std::to_string(arity) + " subtrees, stack has " +
                              std::to_string(stack_.size()));
    }
    if (arity == 1) {
        reduce_unary(label);
    } else {
        reduce_nary(arity, label);
    }
}

// The unary case ignores the daughter's shift and spaces by its box width.
void Machine::reduce_unary(const LabelBox& label) {
    const StackEntry& d = stack_.back();
    const double w = label.width;
    const double rise = 2.0 * metrics_.ex_pt;

    double parent_left = d.offset - 0.5 * w;
    double row_shift = 0.0;
    if (parent_left < 0.0) {
        row_shift = -parent_left;
        parent_left = 0.0;
    }
    const double attach = row_shift + d.offset;
    const double row_top = label.height + rise;

    StackEntry combined;
    Scene& s = combined.subscene;
    s = label_scene(label, parent_left, 0.0);
    s.segments.push_back(Segment{attach, row_top, attach, label.height});
    s.append(d.subscene, row_shift, row_top);

    const double row_width = row_shift + d.actual_width;
    combined.declared_width = std::max(row_width, parent_left + w);
    combined.actual_width = combined.declared_width;
    combined.offset = parent_left + 0.5 * w;
    combined.shift = 0.0;
    combined.height = row_top + d.height;
    s.width = std::max(combined.actual_width, s.content_right());
    s.height = std::max(combined.height, s.content_bottom());

    stack_.back() = std::move(combined);
}

// Daughters are numbered from the top of the stack: e(1) is the rightmost.
void Machine::reduce_nary(std::size_t n, const LabelBox& label) {
    const std::size_t base = stack_.size() - n;
    auto e = [&](std::size_t k) -> const StackEntry& { return stack_[stack_.size() - k]; };

    // Pair spacing between daughter i and its left neighbour i + 1, for
    // i = 1..n-1.
    std::vector<double> spacing(n + 1, 0.0);
    double branch_width = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        spacing[i] = e(i + 1).declared_width + e(i).offset - e(i).shift - e(i + 1).offset;
        branch_width = i == 1 ? spacing[i] : std::max(branch_width, spacing[i]);
    }
    if (branch_width < cfg_.min_branch_width) {
        notes_.push_back("branch width " + format_pt(branch_width) + "pt clamped to " +
                         format_pt(cfg_.min_branch_width) + "pt");
        branch_width = cfg_.min_branch_width;
    }

    std::vector<double> gap(n + 1, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        gap[i] = branch_width - spacing[i] - e(i).shift;
    }

    const double w = label.width;
    const double apex_rel = e(n).offset + 0.5 * static_cast<double>(n - 1) * branch_width;

    // Daughter left edges relative to the row start.
    std::vector<double> x(n + 1, 0.0);
    double leftmost = 0.0;
    for (std::size_t j = n; j >= 2; --j) {
        x[j - 1] = x[j] + e(j).declared_width + gap[j - 1];
        leftmost = std::min(leftmost, x[j - 1]);
    }

    // Clip: pin whichever of the parent label or the daughter row reaches
    // furthest left to x = 0.
    double parent_left = apex_rel - 0.5 * w;
    const double row_shift = -std::min({0.0, parent_left, leftmost});
    parent_left += row_shift;
    if (parent_left < 0.0) parent_left = 0.0;
    for (std::size_t j = 1; j <= n; ++j) x[j] += row_shift;

    const double apex = row_shift + apex_rel;
    const double rise = (n == 2 ? 0.25 : 0.5) * branch_width;
    const double row_top = label.height + rise;

    StackEntry combined;
    Scene& s = combined.subscene;
    s = label_scene(label, parent_left, 0.0);
    for (std::size_t j = n; j >= 1; --j) {
        s.segments.push_back(Segment{x[j] + e(j).offset, row_top, apex, label.height});
    }
    double daughter_height = 0.0;
    for (std::size_t j = n; j >= 1; --j) {
        s.append(e(j).subscene, x[j], row_top);
        daughter_height = std::max(daughter_height, e(j).height);
    }

    const double row_width = x[1] + e(1).actual_width;
    combined.declared_width = std::max(row_width, parent_left + w);
    combined.actual_width = combined.declared_width;
    combined.offset = parent_left + 0.5 * w;
    combined.shift = 0.0;
    combined.height = row_top + daughter_height;
    s.width = std::max(combined.actual_width, s.content_right());
    s.height = std::max(combined.height, s.content_bottom());

    stack_.resize(base);
    stack_.push_back(std::move(combined));
}

Scene Machine::pop_tree() {
    if (stack_.empty()) {
        throw LayoutError(LayoutError::Kind::Underflow, "Tree stack underflow: nothing to emit");
    }
    Scene out = std::move(stack_.back().subscene);
    stack_.pop_back();
    return out;
}

RunResult run_program(const Program& program, const EngineConfig& cfg,
                      const MetricsConfig& metrics) {
    Machine m(cfg, metrics);
    RunResult result;
    for (std::size_t i = 0; i < program.size(); ++i) {
        try {
            std::visit(Overloaded{
                           [&](const Leaf& c) { m.push_leaf(measure_label(c.label, metrics)); },
                           [&](const FakeWidth& c) {
                               m.apply_fake_width(measure_label(c.label, metrics));
                           },
                           [&](const Branch& c) {
                               m.reduce_branch(c.arity, measure_label(c.label, metrics));
                           },
                           [&](const Tree&) { result.scenes.push_back(m.pop_tree()); },
                       },
                       program[i]);
        } catch (const LayoutError& err) {
            throw err.at_command(i);
        }
        for (auto& note : m.take_notes()) {
            result.diagnostics.push_back(Diagnostic{i, std::move(note)});
        }
    }
    result.max_depth = m.max_depth_seen();
    if (m.depth() != 0) {
        const std::string detail =
            std::to_string(m.depth()) + " subtree(s) left on the stack at end of program";
        if (!cfg.allow_partial) {
            throw LayoutError(LayoutError::Kind::ResidualStack, detail);
        }
        result.diagnostics.push_back(Diagnostic{program.size(), detail});
    }
    return result;
}

}  // namespace stacktree
