#include "gordian/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "gordian/burau.hpp"
#include "gordian/errors.hpp"
#include "gordian/rng.hpp"

namespace gordian {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Number of geodesics between two vertices, matching the enumeration order
// of enumerate_geodesics.
std::uint64_t geodesic_count(const FiniteUniverse& u, std::size_t from, std::size_t to) {
    if (from == to) return 1;
    std::int64_t af = u.a2_of(from), at = u.a2_of(to);
    std::uint64_t w = u.width();
    if (af == at) {
        std::uint64_t c = 0;
        if (af - 1 >= u.params().a2_min) c += w;
        if (af + 1 <= u.params().a2_max) c += w;
        return c;
    }
    std::uint64_t k = static_cast<std::uint64_t>(std::llabs(af - at));
    std::uint64_t count = 1;
    for (std::uint64_t i = 1; i < k; ++i) count *= w;
    return count;
}

// rank-th geodesic in the enumeration order of enumerate_geodesics.
GeodesicPath geodesic_at(const FiniteUniverse& u, std::size_t from, std::size_t to,
                         std::uint64_t rank) {
    if (from == to) return {{from}};
    std::int64_t af = u.a2_of(from), at = u.a2_of(to);
    if (af == at) {
        std::uint64_t w = u.width();
        if (af - 1 >= u.params().a2_min && rank < w)
            return {{from, u.level(af - 1)[rank], to}};
        if (af - 1 >= u.params().a2_min) rank -= w;
        return {{from, u.level(af + 1)[rank], to}};
    }
    std::int64_t step = at > af ? 1 : -1;
    std::uint64_t k = static_cast<std::uint64_t>(std::llabs(af - at));
    std::uint64_t w = u.width();
    GeodesicPath p;
    p.vertices.push_back(from);
    if (k >= 2) {
        std::uint64_t place = 1;
        for (std::uint64_t i = 1; i + 1 < k; ++i) place *= w;
        for (std::int64_t lvl = af + step; lvl != at; lvl += step) {
            std::uint64_t digit = (rank / place) % w;
            p.vertices.push_back(u.level(lvl)[digit]);
            place = place == 1 ? 1 : place / w;
        }
    }
    p.vertices.push_back(to);
    return p;
}

// Case split on the sorted corner levels (paper of record: the proof walks
// cases by the two level gaps).
int triangle_case(const FiniteUniverse& u, const std::array<std::size_t, 3>& corners) {
    std::array<std::int64_t, 3> a{u.a2_of(corners[0]), u.a2_of(corners[1]),
                                  u.a2_of(corners[2])};
    std::sort(a.begin(), a.end());
    std::int64_t k = a[1] - a[0], kp = a[2] - a[1];
    if (k >= 1 && kp >= 1) return 1;
    if (k == 0 && kp >= 1) return 2;
    if (k >= 1 && kp == 0) return 3;
    return 4;
}

struct BudgetExceeded {
    std::string what;
};

json universe_params_json(const UniverseParams& p) {
    return json{{"a2_min", p.a2_min},
                {"a2_max", p.a2_max},
                {"depth", p.depth},
                {"coeff_bound", p.coeff_bound}};
}

json path_json(const GeodesicPath& p) {
    json a = json::array();
    for (std::size_t v : p.vertices) a.push_back(v);
    return a;
}

json class_list_json(const ConwayClass& c) {
    json a = json::array();
    for (const Integer& x : c.poly().coeffs()) a.push_back(static_cast<std::int64_t>(x));
    return a;
}

}  // namespace

HalfInteger gromov_product(const ConwayClass& u, const ConwayClass& v, const ConwayClass& w) {
    return {delta_nabla_distance(u, w) + delta_nabla_distance(v, w) -
            delta_nabla_distance(u, v)};
}

void validate_triangle(const FiniteUniverse& u, const GeodesicTriangle& t) {
    for (std::size_t c : t.corners)
        if (c >= u.size()) throw ValidationError("triangle corner outside the universe");
    for (int s = 0; s < 3; ++s) {
        const GeodesicPath& side = t.sides[static_cast<std::size_t>(s)];
        if (!is_geodesic(u, side))
            throw ValidationError("triangle side " + std::to_string(s) + " is not a geodesic");
        std::size_t from = t.corners[static_cast<std::size_t>(s)];
        std::size_t to = t.corners[static_cast<std::size_t>((s + 1) % 3)];
        if (side.vertices.front() != from || side.vertices.back() != to)
            throw ValidationError("triangle side " + std::to_string(s) +
                                  " does not join its corners");
    }
}

std::int64_t triangle_slimness(const FiniteUniverse& u, const GeodesicTriangle& t) {
    validate_triangle(u, t);
    std::int64_t delta = 0;
    for (std::size_t s = 0; s < 3; ++s) {
        const auto& own = t.sides[s].vertices;
        const auto& other1 = t.sides[(s + 1) % 3].vertices;
        const auto& other2 = t.sides[(s + 2) % 3].vertices;
        for (std::size_t v : own) {
            std::int64_t best = -1;
            for (std::size_t w : other1) {
                std::int64_t d = u.distance(v, w);
                if (best < 0 || d < best) best = d;
            }
            for (std::size_t w : other2) {
                std::int64_t d = u.distance(v, w);
                if (best < 0 || d < best) best = d;
            }
            delta = std::max(delta, best);
        }
    }
    return delta;
}

namespace {

// Measures one triangle and folds it into the running result; keeps the
// lexicographically first witness of the maximum.
void fold_triangle(const FiniteUniverse& u, const GeodesicTriangle& t, SlimnessResult& r) {
    int tcase = triangle_case(u, t.corners);
    ++r.case_count[tcase];
    ++r.triangles_examined;

    std::int64_t delta = 0;
    std::size_t far_side = 0, far_vertex = t.corners[0];
    for (std::size_t s = 0; s < 3; ++s) {
        const auto& own = t.sides[s].vertices;
        const auto& other1 = t.sides[(s + 1) % 3].vertices;
        const auto& other2 = t.sides[(s + 2) % 3].vertices;
        for (std::size_t v : own) {
            std::int64_t best = -1;
            for (std::size_t w : other1) {
                std::int64_t d = u.distance(v, w);
                if (best < 0 || d < best) best = d;
            }
            for (std::size_t w : other2) {
                std::int64_t d = u.distance(v, w);
                if (best < 0 || d < best) best = d;
            }
            if (best > delta) {
                delta = best;
                far_side = s;
                far_vertex = v;
            }
        }
    }

    auto& cmax = r.case_max[tcase];
    cmax = std::max(cmax, delta);
    // keep the first (lexicographically smallest) witness of the maximum
    if (!r.witness || delta > r.max_delta)
        r.witness = SlimnessWitness{t, far_side, far_vertex, delta};
    r.max_delta = std::max(r.max_delta, delta);
}

SlimnessResult slimness_exhaustive(const FiniteUniverse& u, const AuditConfig& config) {
    SlimnessResult r;
    std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                GeodesicEnumeration g1 = enumerate_geodesics(u, i, j, config.geodesic_cap);
                GeodesicEnumeration g2 = enumerate_geodesics(u, j, k, config.geodesic_cap);
                GeodesicEnumeration g3 = enumerate_geodesics(u, k, i, config.geodesic_cap);
                if (g1.truncated || g2.truncated || g3.truncated)
                    throw BudgetExceeded{"geodesic cap hit while enumerating triangle sides"};
                std::uint64_t combos = static_cast<std::uint64_t>(g1.paths.size()) *
                                       g2.paths.size() * g3.paths.size();
                if (r.triangles_examined + combos > config.triangle_budget)
                    throw BudgetExceeded{"triangle enumeration budget exceeded"};
                for (const GeodesicPath& s1 : g1.paths)
                    for (const GeodesicPath& s2 : g2.paths)
                        for (const GeodesicPath& s3 : g3.paths)
                            fold_triangle(u, GeodesicTriangle{{i, j, k}, {s1, s2, s3}}, r);
            }
        }
    }
    return r;
}

SlimnessResult slimness_sampled(const FiniteUniverse& u, const AuditConfig& config) {
    if (config.sample_size == 0)
        throw ValidationError("sampled slimness audit requires a positive sample size");
    SlimnessResult r;
    SeededRng rng(config.seed);
    std::size_t n = u.size();
    for (std::size_t draw = 0; draw < config.sample_size; ++draw) {
        std::array<std::size_t, 3> corners;
        for (auto& c : corners) c = static_cast<std::size_t>(rng.below(n));
        std::array<GeodesicPath, 3> sides;
        for (int s = 0; s < 3; ++s) {
            std::size_t from = corners[static_cast<std::size_t>(s)];
            std::size_t to = corners[static_cast<std::size_t>((s + 1) % 3)];
            std::uint64_t count = geodesic_count(u, from, to);
            sides[static_cast<std::size_t>(s)] = geodesic_at(u, from, to, rng.below(count));
        }
        fold_triangle(u, GeodesicTriangle{corners, sides}, r);
    }
    return r;
}

}  // namespace

AuditReport audit_slimness(const FiniteUniverse& u, const AuditConfig& config) {
    Stopwatch timer;
    AuditReport report;
    report.kind = "slimness";
    report.algorithm = SeededRng::kAlgorithmId;
    report.mode = config.mode;
    report.universe = u.params();
    if (config.mode == AuditMode::sampled) {
        report.seed = config.seed;
        report.sample_size = config.sample_size;
    }

    SlimnessResult result;
    if (config.mode == AuditMode::exhaustive) {
        try {
            result = slimness_exhaustive(u, config);
        } catch (const BudgetExceeded& e) {
            if (!config.sampling_fallback)
                throw ResourceLimitError(e.what +
                                         " (enable the sampling fallback or raise the cap)");
            result = slimness_sampled(u, config);
            result.switched_to_sampling = true;
            report.seed = config.seed;
            report.sample_size = config.sample_size;
        }
    } else {
        result = slimness_sampled(u, config);
    }

    std::int64_t case4 = result.case_max.count(4) ? result.case_max.at(4) : 0;
    report.pass = result.max_delta <= 2 && case4 <= 1;
    report.slimness = std::move(result);
    report.duration_ms = timer.elapsed_ms();
    return report;
}

AuditReport audit_four_point(const FiniteUniverse& u, const AuditConfig& config) {
    Stopwatch timer;
    AuditReport report;
    report.kind = "four_point";
    report.algorithm = SeededRng::kAlgorithmId;
    report.mode = config.mode;
    report.universe = u.params();

    FourPointResult result;
    std::size_t n = u.size();

    // doubled Gromov product (x|y)_w
    auto gp2 = [&](std::size_t x, std::size_t y, std::size_t w) {
        return u.distance(x, w) + u.distance(y, w) - u.distance(x, y);
    };
    auto fold = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
        std::int64_t v = std::min(gp2(x, y, w), gp2(y, z, w)) - gp2(x, z, w);
        if (v < 0) v = 0;
        ++result.quadruples_examined;
        // keep the first witness of the maximum
        if (result.quadruples_examined == 1 || v > result.max_delta.doubled)
            result.witness = {x, y, z, w};
        result.max_delta.doubled = std::max(result.max_delta.doubled, v);
    };

    std::uint64_t total = 1;
    for (int rep = 0; rep < 4; ++rep) total *= n;
    bool exhaustive = config.mode == AuditMode::exhaustive;
    if (exhaustive && total > config.quadruple_budget) {
        if (!config.sampling_fallback)
            throw ResourceLimitError("quadruple budget exceeded (" + std::to_string(total) +
                                     " > " + std::to_string(config.quadruple_budget) +
                                     "); enable the sampling fallback or raise the cap");
        exhaustive = false;
        result.switched_to_sampling = true;
    }

    if (exhaustive) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t w = 0; w < n; ++w) fold(x, y, z, w);
    } else {
        if (config.sample_size == 0)
            throw ValidationError("sampled four-point audit requires a positive sample size");
        report.seed = config.seed;
        report.sample_size = config.sample_size;
        SeededRng rng(config.seed);
        for (std::size_t draw = 0; draw < config.sample_size; ++draw) {
            std::size_t x = static_cast<std::size_t>(rng.below(n));
            std::size_t y = static_cast<std::size_t>(rng.below(n));
            std::size_t z = static_cast<std::size_t>(rng.below(n));
            std::size_t w = static_cast<std::size_t>(rng.below(n));
            fold(x, y, z, w);
        }
    }

    report.pass = result.max_delta.doubled <= 4;  // delta_4 <= 2
    report.four_point = result;
    report.duration_ms = timer.elapsed_ms();
    return report;
}

AuditReport audit_quasi_isometry(const FiniteUniverse& u) {
    Stopwatch timer;
    AuditReport report;
    report.kind = "quasi_isometry";
    report.algorithm = SeededRng::kAlgorithmId;
    report.mode = AuditMode::exhaustive;
    report.universe = u.params();

    QuasiIsometryResult result;
    std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            ++result.pairs_examined;
            std::int64_t d = u.distance(i, j);
            std::int64_t gap = std::llabs(u.a2_of(i) - u.a2_of(j));
            if (!(d - result.b <= gap && gap <= d)) result.violations.push_back({i, j});
        }
    }

    result.levels_covered = true;
    for (std::int64_t lvl = u.params().a2_min; lvl <= u.params().a2_max; ++lvl) {
        ConwayClass twist_class = ConwayClass::from_even_coeffs({lvl});
        if (!u.contains(twist_class)) result.levels_covered = false;
    }

    report.pass = result.violations.empty() && result.levels_covered;
    report.quasi_isometry = std::move(result);
    report.duration_ms = timer.elapsed_ms();
    return report;
}

AuditReport audit_triangle_free(const FiniteUniverse& u) {
    Stopwatch timer;
    AuditReport report;
    report.kind = "triangle_free";
    report.algorithm = SeededRng::kAlgorithmId;
    report.mode = AuditMode::exhaustive;
    report.universe = u.params();

    TriangleFreeResult result;
    std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++result.triples_examined;
                if (u.adjacent_indices(i, j) && u.adjacent_indices(j, k) &&
                    u.adjacent_indices(i, k)) {
                    ++result.cliques_found;
                    if (!result.witness) result.witness = {{i, j, k}};
                }
            }

    report.pass = result.cliques_found == 0;
    report.triangle_free = std::move(result);
    report.duration_ms = timer.elapsed_ms();
    return report;
}

AuditReport audit_delta_walk(const BraidWord& start, std::size_t steps, std::uint64_t seed) {
    Stopwatch timer;
    AuditReport report;
    report.kind = "delta_walk";
    report.algorithm = SeededRng::kAlgorithmId;
    report.mode = AuditMode::sampled;
    report.seed = seed;
    report.sample_size = steps;

    if (start.closure_components() != 1)
        throw ValidationError("Delta-walk requires a braid whose closure is a knot");
    if (steps > 0 && start.strands() < 3)
        throw ValidationError("no valid Delta-move site: the walk needs at least 3 strands");

    DeltaWalkResult result{start, a2(conway_via_matrix(start)), {}, false};
    SeededRng rng(seed);
    BraidWord word = start;
    bool ok = true;
    for (std::size_t s = 0; s < steps; ++s) {
        MoveSite site;
        site.position = static_cast<std::size_t>(rng.below(word.length() + 1));
        site.strand_index = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(word.strands() - 2)));
        site.sign = rng.coin() ? +1 : -1;
        word = apply_delta_move(word, site);
        std::int64_t a2_after;
        try {
            a2_after = a2(conway_via_matrix(word));
        } catch (const ResourceLimitError&) {
            result.truncated = true;
            break;
        }
        std::int64_t prev = result.steps.empty() ? result.a2_start : result.steps.back().a2_after;
        if (std::llabs(a2_after - prev) != 1) ok = false;
        result.steps.push_back({site.position, site.strand_index, site.sign, a2_after});
    }

    report.pass = ok;
    report.delta_walk = std::move(result);
    report.duration_ms = timer.elapsed_ms();
    return report;
}

std::vector<std::int64_t> DeltaWalkResult::a2_trace() const {
    std::vector<std::int64_t> trace{a2_start};
    for (const DeltaWalkStep& s : steps) trace.push_back(s.a2_after);
    return trace;
}

std::string AuditReport::to_json() const {
    json j{
        {"schema_version", schema_version},
        {"kind", kind},
        {"algorithm", algorithm},
        {"mode", mode == AuditMode::exhaustive ? "exhaustive" : "sampled"},
        {"seed", seed ? json(*seed) : json(nullptr)},
        {"sample_size", sample_size ? json(*sample_size) : json(nullptr)},
        {"pass", pass},
        {"duration_ms", duration_ms},
    };
    if (universe) j["universe"] = universe_params_json(*universe);

    if (slimness) {
        json cases = json::object();
        for (const auto& [c, m] : slimness->case_max) {
            cases["case" + std::to_string(c)] = {
                {"max_delta", m},
                {"triangles", slimness->case_count.at(c)},
            };
        }
        for (const auto& [c, cnt] : slimness->case_count) {
            std::string key = "case" + std::to_string(c);
            if (!cases.contains(key)) cases[key] = {{"max_delta", 0}, {"triangles", cnt}};
        }
        json details{
            {"max_delta", slimness->max_delta},
            {"asserted_bound", 2},
            {"equal_level_bound", 1},
            {"cases", cases},
            {"triangles_examined", slimness->triangles_examined},
            {"switched_to_sampling", slimness->switched_to_sampling},
        };
        if (slimness->witness) {
            const SlimnessWitness& w = *slimness->witness;
            details["witness"] = json{
                {"corners", {w.triangle.corners[0], w.triangle.corners[1], w.triangle.corners[2]}},
                {"sides",
                 {path_json(w.triangle.sides[0]), path_json(w.triangle.sides[1]),
                  path_json(w.triangle.sides[2])}},
                {"far_side", w.side},
                {"far_vertex", w.vertex},
                {"delta", w.delta},
            };
        }
        j["details"] = std::move(details);
    }
    if (four_point) {
        j["details"] = json{
            {"max_delta4_doubled", four_point->max_delta.doubled},
            {"max_delta4", four_point->max_delta.to_text()},
            {"asserted_bound_doubled", 4},
            {"witness",
             {four_point->witness[0], four_point->witness[1], four_point->witness[2],
              four_point->witness[3]}},
            {"quadruples_examined", four_point->quadruples_examined},
            {"switched_to_sampling", four_point->switched_to_sampling},
        };
    }
    if (quasi_isometry) {
        json violations = json::array();
        for (const auto& v : quasi_isometry->violations) violations.push_back({v[0], v[1]});
        j["details"] = json{
            {"constants",
             {{"A", quasi_isometry->a},
              {"B", quasi_isometry->b},
              {"C", quasi_isometry->c},
              {"D", quasi_isometry->d},
              {"E", quasi_isometry->e.to_text()}}},
            {"pairs_examined", quasi_isometry->pairs_examined},
            {"violations", std::move(violations)},
            {"levels_covered", quasi_isometry->levels_covered},
        };
    }
    if (triangle_free) {
        json details{
            {"triples_examined", triangle_free->triples_examined},
            {"cliques_found", triangle_free->cliques_found},
        };
        if (triangle_free->witness)
            details["witness"] = {(*triangle_free->witness)[0], (*triangle_free->witness)[1],
                                  (*triangle_free->witness)[2]};
        j["details"] = std::move(details);
    }
    if (delta_walk) {
        json steps = json::array();
        for (const DeltaWalkStep& s : delta_walk->steps)
            steps.push_back({{"position", s.position},
                             {"strand_index", s.strand_index},
                             {"sign", s.sign},
                             {"a2_after", s.a2_after}});
        json trace = json::array();
        for (std::int64_t a : delta_walk->a2_trace()) trace.push_back(a);
        j["details"] = json{
            {"start", delta_walk->start.to_text()},
            {"a2_start", delta_walk->a2_start},
            {"a2_trace", std::move(trace)},
            {"steps", std::move(steps)},
            {"truncated", delta_walk->truncated},
        };
    }
    return j.dump(2) + "\n";
}

}  // namespace gordian
