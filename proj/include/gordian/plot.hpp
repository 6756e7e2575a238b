#ifndef GORDIAN_PLOT_HPP
#define GORDIAN_PLOT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gordian/universe.hpp"

namespace gordian {

/// Static rendering of a universe: vertices positioned by (a2 level,
/// within-level slot), edges between adjacent levels. Optionally highlights
/// one geodesic triangle (sides drawn distinctly, first geodesic per corner
/// pair) and/or one ball N(center, radius).
struct PlotOptions {
    std::size_t vertex_cap = 500;
    std::optional<std::array<ConwayClass, 3>> triangle_corners;
    std::optional<std::pair<ConwayClass, std::int64_t>> ball;
};

std::string render_svg(const FiniteUniverse& u, const PlotOptions& options = {});

// The same graph as a flat CSV table: vertex rows then edge rows.
std::string render_csv(const FiniteUniverse& u, const PlotOptions& options = {});

}  // namespace gordian

#endif  // GORDIAN_PLOT_HPP
