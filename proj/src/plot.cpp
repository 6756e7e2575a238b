#include "gordian/plot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gordian/errors.hpp"

namespace gordian {

namespace {

constexpr int kMargin = 40;
constexpr int kLevelGap = 110;
constexpr int kSlotGap = 46;
constexpr int kRadius = 7;

struct Layout {
    int x(const FiniteUniverse& u, std::size_t v) const {
        return kMargin + static_cast<int>(u.a2_of(v) - u.params().a2_min) * kLevelGap;
    }
    int y(const FiniteUniverse& u, std::size_t v) const {
        return kMargin + static_cast<int>(v % u.width()) * kSlotGap;
    }
};

std::size_t require_index(const FiniteUniverse& u, const ConwayClass& c, const char* what) {
    auto idx = u.index_of(c);
    if (!idx)
        throw ValidationError(std::string(what) + " " + c.to_list() + " is not in the universe");
    return *idx;
}

struct Highlights {
    std::set<std::size_t> ball;
    std::array<GeodesicPath, 3> sides;
    bool has_triangle = false;
    std::optional<std::size_t> ball_center;
};

Highlights resolve_highlights(const FiniteUniverse& u, const PlotOptions& options) {
    Highlights h;
    if (options.ball) {
        std::size_t center = require_index(u, options.ball->first, "ball center");
        for (std::size_t v : neighborhood(u, center, options.ball->second)) h.ball.insert(v);
        h.ball_center = center;
    }
    if (options.triangle_corners) {
        h.has_triangle = true;
        std::array<std::size_t, 3> corners;
        for (int i = 0; i < 3; ++i)
            corners[static_cast<std::size_t>(i)] =
                require_index(u, (*options.triangle_corners)[static_cast<std::size_t>(i)],
                              "triangle corner");
        for (int s = 0; s < 3; ++s) {
            auto geos = enumerate_geodesics(u, corners[static_cast<std::size_t>(s)],
                                            corners[static_cast<std::size_t>((s + 1) % 3)]);
            h.sides[static_cast<std::size_t>(s)] = geos.paths.front();
        }
    }
    return h;
}

}  // namespace

std::string render_svg(const FiniteUniverse& u, const PlotOptions& options) {
    if (u.size() > options.vertex_cap)
        throw ResourceLimitError("universe has " + std::to_string(u.size()) +
                                 " vertices, plot cap is " + std::to_string(options.vertex_cap));
    Highlights h = resolve_highlights(u, options);
    Layout l;

    int width = 2 * kMargin + static_cast<int>(u.level_count() - 1) * kLevelGap;
    int height = 2 * kMargin + static_cast<int>(u.width() - 1) * kSlotGap;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <!-- levels: a2 from " << u.params().a2_min << " to " << u.params().a2_max
        << ", width " << u.width() << " -->\n";

    // edges: complete bipartite between adjacent levels
    svg << "  <g stroke=\"#c8c8c8\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u.adjacent_indices(i, j))
                svg << "    <line x1=\"" << l.x(u, i) << "\" y1=\"" << l.y(u, i) << "\" x2=\""
                    << l.x(u, j) << "\" y2=\"" << l.y(u, j) << "\"/>\n";
    svg << "  </g>\n";

    if (h.has_triangle) {
        static const char* kSideStyle[3] = {
            "stroke=\"#d62728\" stroke-width=\"3\"",
            "stroke=\"#1f77b4\" stroke-width=\"3\" stroke-dasharray=\"8 4\"",
            "stroke=\"#2ca02c\" stroke-width=\"3\" stroke-dasharray=\"2 4\"",
        };
        for (int s = 0; s < 3; ++s) {
            const GeodesicPath& side = h.sides[static_cast<std::size_t>(s)];
            svg << "  <polyline fill=\"none\" " << kSideStyle[s] << " points=\"";
            for (std::size_t i = 0; i < side.vertices.size(); ++i) {
                if (i) svg << " ";
                svg << l.x(u, side.vertices[i]) << "," << l.y(u, side.vertices[i]);
            }
            svg << "\"/>\n";
        }
    }

    for (std::size_t v = 0; v < u.size(); ++v) {
        bool in_ball = h.ball.count(v) > 0;
        bool is_center = h.ball_center && *h.ball_center == v;
        const char* fill = is_center ? "#ff7f0e" : (in_ball ? "#ffbb78" : "#444444");
        svg << "  <circle cx=\"" << l.x(u, v) << "\" cy=\"" << l.y(u, v) << "\" r=\"" << kRadius
            << "\" fill=\"" << fill << "\"><title>" << u.vertex(v).to_list()
            << "</title></circle>\n";
    }

    // level axis labels
    for (std::size_t lev = 0; lev < u.level_count(); ++lev) {
        std::int64_t a2v = u.params().a2_min + static_cast<std::int64_t>(lev);
        svg << "  <text x=\"" << (kMargin + static_cast<int>(lev) * kLevelGap) << "\" y=\""
            << (height - 10) << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#222222\">a2="
            << a2v << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string render_csv(const FiniteUniverse& u, const PlotOptions& options) {
    if (u.size() > options.vertex_cap)
        throw ResourceLimitError("universe has " + std::to_string(u.size()) +
                                 " vertices, plot cap is " + std::to_string(options.vertex_cap));
    Highlights h = resolve_highlights(u, options);

    std::set<std::pair<std::size_t, std::size_t>> side_edges;
    if (h.has_triangle)
        for (const GeodesicPath& side : h.sides)
            for (std::size_t i = 0; i + 1 < side.vertices.size(); ++i)
                side_edges.insert({std::min(side.vertices[i], side.vertices[i + 1]),
                                   std::max(side.vertices[i], side.vertices[i + 1])});

    std::ostringstream csv;
    csv << "type,id,a2,slot,class,source,target,highlight\n";
    for (std::size_t v = 0; v < u.size(); ++v) {
        const char* mark = h.ball.count(v) ? "ball" : "";
        csv << "vertex," << v << "," << u.a2_of(v) << "," << (v % u.width()) << ",\""
            << u.vertex(v).to_list() << "\",,," << mark << "\n";
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u.adjacent_indices(i, j)) {
                const char* mark = side_edges.count({i, j}) ? "triangle" : "";
                csv << "edge,,,,," << i << "," << j << "," << mark << "\n";
            }
    return csv.str();
}

}  // namespace gordian
