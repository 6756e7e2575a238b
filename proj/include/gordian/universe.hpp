#ifndef GORDIAN_UNIVERSE_HPP
#define GORDIAN_UNIVERSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gordian/metric.hpp"
#include "gordian/poly.hpp"

namespace gordian {

struct UniverseParams {
    std::int64_t a2_min = 0;
    std::int64_t a2_max = 0;
    int depth = 1;                 // highest tracked power is z^(2*depth)
    std::int64_t coeff_bound = 0;  // coefficients of z^4..z^(2*depth) range over [-c, c]

    bool operator==(const UniverseParams& rhs) const = default;
};

/// An explicit finite truncation of the vertex set of the Gordian graph:
/// all classes (1, a2, a4, ..., a_(2L)) with a2 in [a2_min, a2_max] and
/// each higher coefficient in [-c, c].
///
/// Vertices are enumerated level by level (a2 ascending), within a level in
/// lexicographic order of (a4, ..., a_(2L)). The induced adjacency is
/// complete bipartite between neighboring levels, so with at least two
/// levels the truncated graph distance agrees with the global formula;
/// construction therefore requires a2_min < a2_max.
///
/// Immutable after construction; all queries are pure.
class FiniteUniverse {
public:
    static constexpr std::size_t kDefaultVertexCap = 10'000;

    static FiniteUniverse build(const UniverseParams& params,
                                std::size_t vertex_cap = kDefaultVertexCap);

    const UniverseParams& params() const { return params_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<ConwayClass>& vertices() const { return vertices_; }
    const ConwayClass& vertex(std::size_t i) const { return vertices_[i]; }

    // Vertices per level: (2c+1)^(depth-1).
    std::size_t width() const { return width_; }
    std::size_t level_count() const;
    std::size_t edge_count() const;

    std::int64_t a2_of(std::size_t i) const { return vertices_[i].a2(); }

    // Index of a class in the enumeration, or nullopt when it lies outside
    // the truncation.
    std::optional<std::size_t> index_of(const ConwayClass& c) const;

    bool contains(const ConwayClass& c) const { return index_of(c).has_value(); }

    // Indices of level V_n. Throws ValidationError when n is out of range.
    std::vector<std::size_t> level(std::int64_t n) const;

    bool adjacent_indices(std::size_t i, std::size_t j) const {
        return std::abs(a2_of(i) - a2_of(j)) == 1;
    }

    std::int64_t distance(std::size_t i, std::size_t j) const {
        return delta_nabla_distance(vertices_[i], vertices_[j]);
    }

private:
    FiniteUniverse() = default;

    UniverseParams params_;
    std::size_t width_ = 1;
    std::vector<ConwayClass> vertices_;
};

// All vertices within graph distance <= radius of the center vertex,
// as sorted indices.
std::vector<std::size_t> neighborhood(const FiniteUniverse& u, std::size_t center,
                                      std::int64_t radius);

// All vertices within graph distance <= radius of the level set V_n.
std::vector<std::size_t> level_neighborhood(const FiniteUniverse& u, std::int64_t n,
                                            std::int64_t radius);

/// A geodesic inside a universe, stored as vertex indices. Consecutive
/// vertices are adjacent and the length equals the graph distance of the
/// endpoints.
struct GeodesicPath {
    std::vector<std::size_t> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool operator==(const GeodesicPath& rhs) const = default;
};

struct GeodesicEnumeration {
    std::vector<GeodesicPath> paths;
    bool truncated = false;  // the cap was hit
};

// All geodesics between two vertices whose interior stays inside the
// universe, in lexicographic index order, up to `cap` paths. For endpoints
// with |a2 gap| = k >= 1 these are exactly the a2-monotone paths; for
// distinct endpoints on one level the length-2 paths through a common
// neighbor.
GeodesicEnumeration enumerate_geodesics(const FiniteUniverse& u, std::size_t from,
                                        std::size_t to, std::size_t cap = 10'000);

// Validates the GeodesicPath invariants against a universe.
bool is_geodesic(const FiniteUniverse& u, const GeodesicPath& path);

// Brute-force shortest path length over the explicit induced graph;
// independent oracle for the distance formula.
std::int64_t bfs_distance(const FiniteUniverse& u, std::size_t from, std::size_t to);

// Versioned universe file (JSON). Save writes the full vertex list; load
// validates the schema and the vertex enumeration.
void save_universe(const FiniteUniverse& u, const std::string& path);
FiniteUniverse load_universe(const std::string& path);
std::string universe_to_json(const FiniteUniverse& u);
FiniteUniverse universe_from_json(const std::string& text);

}  // namespace gordian

#endif  // GORDIAN_UNIVERSE_HPP
