#pragma once

#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"

#include <string>
#include <vector>

namespace adaptcoord {

struct DiagramPanel {
    std::string title;
    std::vector<Monomial> support;
    std::vector<Vertex> vertices;
    Rational distance;
    Face face;
};

DiagramPanel make_panel(const std::string& title, const BiPoly& f);

// Panels are laid out left to right. Output depends only on the panel data.
std::string render_svg(const std::vector<DiagramPanel>& panels);

} // namespace adaptcoord
