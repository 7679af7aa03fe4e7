#pragma once

#include "udg/graph.hpp"
#include "udg/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace udg {

struct SvgOptions {
    double scale = 120.0;   // pixels per unit distance
    double margin = 0.6;    // in unit-distance units
    double vertex_radius = 4.0;
    std::optional<OrbitPartition> color_by_orbit;
    std::optional<std::vector<Rat>> weights;  // radius scaled by weight when given
};

/// Figure-style rendering: unit edges as segments, vertices as circles at
/// float-projected coordinates. Abstract graphs get a circular layout.
std::string graph_to_svg(const UDGraph& g, const SvgOptions& opt = {});

}  // namespace udg
