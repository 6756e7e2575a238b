#include "gordian/universe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "gordian/errors.hpp"

namespace gordian {

using nlohmann::json;

FiniteUniverse FiniteUniverse::build(const UniverseParams& params, std::size_t vertex_cap) {
    if (params.a2_min >= params.a2_max)
        throw ValidationError("universe needs at least two levels (a2_min < a2_max)");
    if (params.depth < 1) throw ValidationError("universe depth must be >= 1");
    if (params.coeff_bound < 0) throw ValidationError("coefficient bound must be >= 0");

    std::size_t levels = static_cast<std::size_t>(params.a2_max - params.a2_min + 1);
    std::size_t base = static_cast<std::size_t>(2 * params.coeff_bound + 1);
    std::size_t width = 1;
    for (int j = 1; j < params.depth; ++j) {
        if (width > vertex_cap / base + 1) {
            width = vertex_cap + 1;  // overflow guard; fails the cap check below
            break;
        }
        width *= base;
    }
    if (levels > (vertex_cap / width) || levels * width > vertex_cap)
        throw ResourceLimitError("universe would have " + std::to_string(levels) + " x " +
                                 std::to_string(width) + " vertices, cap is " +
                                 std::to_string(vertex_cap));

    FiniteUniverse u;
    u.params_ = params;
    u.width_ = width;
    u.vertices_.reserve(levels * width);

    std::vector<std::int64_t> even(static_cast<std::size_t>(params.depth), 0);
    for (std::int64_t n = params.a2_min; n <= params.a2_max; ++n) {
        // odometer over (a4, ..., a_2L), last coordinate fastest
        std::fill(even.begin(), even.end(), -params.coeff_bound);
        even[0] = n;
        while (true) {
            u.vertices_.push_back(ConwayClass::from_even_coeffs(even));
            int j = params.depth - 1;
            while (j >= 1 && even[static_cast<std::size_t>(j)] == params.coeff_bound) {
                even[static_cast<std::size_t>(j)] = -params.coeff_bound;
                --j;
            }
            if (j < 1) break;
            ++even[static_cast<std::size_t>(j)];
        }
    }
    return u;
}

std::size_t FiniteUniverse::level_count() const {
    return static_cast<std::size_t>(params_.a2_max - params_.a2_min + 1);
}

std::size_t FiniteUniverse::edge_count() const {
    return (level_count() - 1) * width_ * width_;
}

std::optional<std::size_t> FiniteUniverse::index_of(const ConwayClass& c) const {
    if (c.poly().degree() > 2 * params_.depth) return std::nullopt;
    std::int64_t n = c.a2();
    if (n < params_.a2_min || n > params_.a2_max) return std::nullopt;

    std::size_t base = static_cast<std::size_t>(2 * params_.coeff_bound + 1);
    std::size_t tuple_index = 0;
    for (int j = 2; j <= params_.depth; ++j) {
        const Integer& cj = c.even_coeff(static_cast<std::size_t>(j));
        if (cj < -params_.coeff_bound || cj > params_.coeff_bound) return std::nullopt;
        std::int64_t digit = static_cast<std::int64_t>(cj) + params_.coeff_bound;
        tuple_index = tuple_index * base + static_cast<std::size_t>(digit);
    }
    std::size_t level_index = static_cast<std::size_t>(n - params_.a2_min);
    return level_index * width_ + tuple_index;
}

std::vector<std::size_t> FiniteUniverse::level(std::int64_t n) const {
    if (n < params_.a2_min || n > params_.a2_max)
        throw ValidationError("level " + std::to_string(n) + " outside universe range [" +
                              std::to_string(params_.a2_min) + ", " +
                              std::to_string(params_.a2_max) + "]");
    std::size_t start = static_cast<std::size_t>(n - params_.a2_min) * width_;
    std::vector<std::size_t> out(width_);
    for (std::size_t i = 0; i < width_; ++i) out[i] = start + i;
    return out;
}

std::vector<std::size_t> neighborhood(const FiniteUniverse& u, std::size_t center,
                                      std::int64_t radius) {
    if (center >= u.size()) throw ValidationError("neighborhood center outside the universe");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.distance(center, i) <= radius) out.push_back(i);
    return out;
}

std::vector<std::size_t> level_neighborhood(const FiniteUniverse& u, std::int64_t n,
                                            std::int64_t radius) {
    if (n < u.params().a2_min || n > u.params().a2_max)
        throw ValidationError("level outside universe range");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (std::abs(u.a2_of(i) - n) <= radius) out.push_back(i);
    return out;
}

GeodesicEnumeration enumerate_geodesics(const FiniteUniverse& u, std::size_t from,
                                        std::size_t to, std::size_t cap) {
    if (from >= u.size() || to >= u.size())
        throw ValidationError("geodesic endpoints outside the universe");

    GeodesicEnumeration result;
    if (from == to) {
        result.paths.push_back({{from}});
        return result;
    }

    std::int64_t a_from = u.a2_of(from), a_to = u.a2_of(to);
    if (a_from == a_to) {
        // length-2 paths through any vertex on a neighboring level
        for (std::size_t mid = 0; mid < u.size(); ++mid) {
            if (std::abs(u.a2_of(mid) - a_from) != 1) continue;
            if (result.paths.size() >= cap) {
                result.truncated = true;
                break;
            }
            result.paths.push_back({{from, mid, to}});
        }
        return result;
    }

    // a2-monotone paths: one free vertex choice per intermediate level
    std::int64_t step = a_to > a_from ? 1 : -1;
    std::vector<std::vector<std::size_t>> layers;
    for (std::int64_t lvl = a_from + step; lvl != a_to; lvl += step)
        layers.push_back(u.level(lvl));

    std::vector<std::size_t> choice(layers.size(), 0);
    while (true) {
        if (result.paths.size() >= cap) {
            result.truncated = true;
            break;
        }
        GeodesicPath p;
        p.vertices.push_back(from);
        for (std::size_t l = 0; l < layers.size(); ++l) p.vertices.push_back(layers[l][choice[l]]);
        p.vertices.push_back(to);
        result.paths.push_back(std::move(p));

        // odometer, last layer fastest
        std::size_t l = layers.size();
        while (l > 0 && choice[l - 1] + 1 == layers[l - 1].size()) {
            choice[l - 1] = 0;
            --l;
        }
        if (l == 0) break;
        ++choice[l - 1];
    }
    return result;
}

bool is_geodesic(const FiniteUniverse& u, const GeodesicPath& path) {
    if (path.vertices.empty()) return false;
    for (std::size_t v : path.vertices)
        if (v >= u.size()) return false;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (!u.adjacent_indices(path.vertices[i], path.vertices[i + 1])) return false;
    return static_cast<std::int64_t>(path.length()) ==
           u.distance(path.vertices.front(), path.vertices.back());
}

std::int64_t bfs_distance(const FiniteUniverse& u, std::size_t from, std::size_t to) {
    if (from >= u.size() || to >= u.size())
        throw ValidationError("BFS endpoints outside the universe");
    if (from == to) return 0;

    // Explicit adjacency scan, independent of the distance formula.
    std::vector<std::int64_t> dist(u.size(), -1);
    std::deque<std::size_t> queue;
    dist[from] = 0;
    queue.push_back(from);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < u.size(); ++w) {
            if (dist[w] != -1 || !u.adjacent_indices(v, w)) continue;
            dist[w] = dist[v] + 1;
            if (w == to) return dist[w];
            queue.push_back(w);
        }
    }
    throw ValidationError("universe graph is disconnected");  // cannot happen with >= 2 levels
}

namespace {

json universe_json(const FiniteUniverse& u) {
    json vertices = json::array();
    for (const ConwayClass& c : u.vertices()) {
        json coeffs = json::array();
        for (const Integer& x : c.poly().coeffs())
            coeffs.push_back(static_cast<std::int64_t>(x));
        vertices.push_back(std::move(coeffs));
    }
    return json{
        {"schema_version", 1},
        {"kind", "universe"},
        {"a2_min", u.params().a2_min},
        {"a2_max", u.params().a2_max},
        {"depth", u.params().depth},
        {"coeff_bound", u.params().coeff_bound},
        {"vertex_count", u.size()},
        {"edge_count", u.edge_count()},
        {"vertices", std::move(vertices)},
    };
}

FiniteUniverse universe_from(const json& j) {
    if (!j.is_object() || j.value("kind", "") != "universe")
        throw ValidationError("not a universe file");
    if (j.value("schema_version", 0) != 1)
        throw ValidationError("unsupported universe schema version");
    UniverseParams p;
    p.a2_min = j.at("a2_min").get<std::int64_t>();
    p.a2_max = j.at("a2_max").get<std::int64_t>();
    p.depth = j.at("depth").get<int>();
    p.coeff_bound = j.at("coeff_bound").get<std::int64_t>();
    FiniteUniverse u = FiniteUniverse::build(p);

    const json& vertices = j.at("vertices");
    if (vertices.size() != u.size())
        throw ValidationError("universe file vertex count does not match its parameters");
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<Integer> coeffs;
        for (const auto& c : vertices[i]) coeffs.emplace_back(c.get<std::int64_t>());
        if (ConwayPolynomial::from_coeffs(std::move(coeffs)) != u.vertex(i).poly())
            throw ValidationError("universe file vertex list does not match its parameters");
    }
    return u;
}

}  // namespace

std::string universe_to_json(const FiniteUniverse& u) { return universe_json(u).dump(2) + "\n"; }

FiniteUniverse universe_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("corrupt universe file: ") + e.what());
    }
    return universe_from(j);
}

void save_universe(const FiniteUniverse& u, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write universe file: " + path);
    out << universe_to_json(u);
}

FiniteUniverse load_universe(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read universe file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return universe_from_json(text);
}

}  // namespace gordian
