#pragma once

#include <span>
#include <vector>

#include "stacktree/metrics.hpp"

namespace stacktree {

/// A label placed with its box's top-left corner at (x, y).
struct PlacedText {
    double x = 0.0;
    double y = 0.0;
    LabelBox box;

    friend bool operator==(const PlacedText&, const PlacedText&) = default;
};

/// Straight line. Connectors run from the daughter attachment point
/// (x1, y1) up to the apex (x2, y2).
struct Segment {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Absolute-coordinate drawing: x rightward, y downward, origin top-left,
/// lengths in pt.
struct Scene {
    double width = 0.0;
    double height = 0.0;
    std::vector<PlacedText> texts;
    std::vector<Segment> segments;

    /// Copies `other` into this scene translated by (dx, dy). Does not
    /// touch width/height.
    void append(const Scene& other, double dx, double dy);

    /// Right and bottom extents of the drawn content.
    double content_right() const;
    double content_bottom() const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Stacks scenes top to bottom, left-aligned, `gap` pt apart.
Scene compose_stacked(std::span<const Scene> scenes, double gap);

}  // namespace stacktree
