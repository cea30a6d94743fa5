#include "stacktree/scene.hpp"

#include <algorithm>

namespace stacktree {

void Scene::append(const Scene& other, double dx, double dy) {
    texts.reserve(texts.size() + other.texts.size());
    for (const auto& t : other.texts) {
        texts.push_back(PlacedText{t.x + dx, t.y + dy, t.box});
    }
    segments.reserve(segments.size() + other.segments.size());
    for (const auto& s : other.segments) {
        segments.push_back(Segment{s.x1 + dx, s.y1 + dy, s.x2 + dx, s.y2 + dy});
    }
}

double Scene::content_right() const {
    double right = 0.0;
    for (const auto& t : texts) right = std::max(right, t.x + t.box.width);
    for (const auto& s : segments) right = std::max({right, s.x1, s.x2});
    return right;
}

double Scene::content_bottom() const {
    double bottom = 0.0;
    for (const auto& t : texts) bottom = std::max(bottom, t.y + t.box.height);
    for (const auto& s : segments) bottom = std::max({bottom, s.y1, s.y2});
    return bottom;
}

Scene compose_stacked(std::span<const Scene> scenes, double gap) {
    Scene out;
    double y = 0.0;
    for (std::size_t i = 0; i < scenes.size(); ++i) {
        if (i > 0) y += gap;
        out.append(scenes[i], 0.0, y);
        out.width = std::max(out.width, scenes[i].width);
        y += scenes[i].height;
    }
    out.height = y;
    return out;
}

}  // namespace stacktree
