#include <doctest.h>

#include <cstdlib>
#include <regex>

#include "gordian/audit.hpp"
#include "gordian/errors.hpp"
#include "gordian/metric.hpp"

using namespace gordian;

namespace {

ConwayClass cls(const char* list) { return ConwayClass(ConwayPolynomial::parse_list(list)); }

std::string strip_duration(const std::string& report_json) {
    static const std::regex duration_re("\"duration_ms\": [0-9.e+-]+");
    return std::regex_replace(report_json, duration_re, "\"duration_ms\": 0");
}

GeodesicTriangle first_triangle(const FiniteUniverse& u, std::size_t x, std::size_t y,
                                std::size_t z) {
    return GeodesicTriangle{{x, y, z},
                            {enumerate_geodesics(u, x, y).paths.front(),
                             enumerate_geodesics(u, y, z).paths.front(),
                             enumerate_geodesics(u, z, x).paths.front()}};
}

}  // namespace

TEST_CASE("Gromov products on worked examples") {
    ConwayClass unknot = ConwayClass::unknot();
    ConwayClass t1 = cls("[1,0,1]");
    ConwayClass t2 = cls("[1,0,2]");
    ConwayClass deep = cls("[1,0,1,0,1]");

    CHECK(gromov_product(t1, t1, unknot) == HalfInteger{2});  // = d(u,w) when u = v
    CHECK(gromov_product(unknot, t2, t1) == HalfInteger{0});
    CHECK(gromov_product(t1, deep, unknot) == HalfInteger{0});
    CHECK(gromov_product(unknot, unknot, unknot) == HalfInteger{0});
    CHECK(HalfInteger{3}.to_text() == "3/2");
    CHECK(HalfInteger{4}.to_text() == "2");
}

TEST_CASE("triangle slimness of degenerate and path-graph triangles") {
    FiniteUniverse path = FiniteUniverse::build({0, 4, 1, 0});
    // degenerate: all corners equal
    GeodesicTriangle degenerate = first_triangle(path, 2, 2, 2);
    CHECK(triangle_slimness(path, degenerate) == 0);
    // in a path graph every triangle is 0-slim (sides overlap)
    for (std::size_t x = 0; x < path.size(); ++x)
        for (std::size_t y = x; y < path.size(); ++y)
            for (std::size_t z = y; z < path.size(); ++z)
                CHECK(triangle_slimness(path, first_triangle(path, x, y, z)) == 0);
}

TEST_CASE("triangle validation rejects broken sides") {
    FiniteUniverse u = FiniteUniverse::build({-1, 1, 1, 0});
    GeodesicTriangle t = first_triangle(u, 0, 1, 2);
    t.sides[0].vertices.push_back(2);  // endpoint no longer matches
    CHECK_THROWS_AS(triangle_slimness(u, t), ValidationError);

    GeodesicTriangle t2 = first_triangle(u, 0, 1, 2);
    t2.sides[1].vertices = {1, 0, 1, 2};  // not a geodesic
    CHECK_THROWS_AS(validate_triangle(u, t2), ValidationError);
}

TEST_CASE("slimness audit on a width-1 universe reports zero") {
    FiniteUniverse path = FiniteUniverse::build({0, 4, 1, 0});
    AuditReport report = audit_slimness(path);
    CHECK(report.pass);
    CHECK(report.slimness->max_delta == 0);
    CHECK(report.slimness->case_count.at(1) > 0);
}

TEST_CASE("slimness audit on (0,1,2,1): only cases 2-4, bound 1") {
    FiniteUniverse u = FiniteUniverse::build({0, 1, 2, 1});
    AuditReport report = audit_slimness(u);
    CHECK(report.pass);
    CHECK(report.slimness->case_count.count(1) == 0);  // needs three distinct levels
    CHECK(report.slimness->case_count.at(2) > 0);
    CHECK(report.slimness->case_count.at(3) > 0);
    CHECK(report.slimness->case_count.at(4) > 0);
    std::int64_t case4 = report.slimness->case_max.count(4) ? report.slimness->case_max.at(4) : 0;
    CHECK(case4 <= 1);
    CHECK(report.slimness->max_delta <= 1);
}

TEST_CASE("exhaustive slimness audit on (-2,2,2,1) meets the theorem bound") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditReport report = audit_slimness(u);
    CHECK(report.pass);
    CHECK(report.slimness->max_delta <= 2);
    REQUIRE(report.slimness->witness.has_value());

    // the witness re-evaluates to the reported delta
    const SlimnessWitness& w = *report.slimness->witness;
    CHECK(triangle_slimness(u, w.triangle) == w.delta);
    CHECK(w.delta == report.slimness->max_delta);
}

TEST_CASE("slimness budget errors without the sampling fallback") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditConfig tight;
    tight.triangle_budget = 10;
    CHECK_THROWS_AS(audit_slimness(u, tight), ResourceLimitError);

    tight.sampling_fallback = true;
    tight.seed = 9;
    tight.sample_size = 200;
    AuditReport report = audit_slimness(u, tight);
    CHECK(report.slimness->switched_to_sampling);
    CHECK(report.slimness->triangles_examined == 200);
    CHECK(report.pass);
}

TEST_CASE("sampled slimness audit is deterministic given the seed") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditConfig config;
    config.mode = AuditMode::sampled;
    config.seed = 12345;
    config.sample_size = 500;
    AuditReport a = audit_slimness(u, config);
    AuditReport b = audit_slimness(u, config);
    CHECK(strip_duration(a.to_json()) == strip_duration(b.to_json()));
    CHECK(a.pass);
}

TEST_CASE("four-point audit: path universes are 0-hyperbolic, small ones too") {
    AuditReport path = audit_four_point(FiniteUniverse::build({0, 4, 1, 0}));
    CHECK(path.pass);
    CHECK(path.four_point->max_delta.doubled == 0);

    AuditReport tiny = audit_four_point(FiniteUniverse::build({-1, 1, 1, 0}));
    CHECK(tiny.four_point->max_delta.doubled == 0);
    CHECK(tiny.four_point->quadruples_examined == 81);
}

TEST_CASE("four-point audit on (-2,2,2,1) stays within delta_4 <= 2") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditReport report = audit_four_point(u);
    CHECK(report.pass);
    CHECK(report.four_point->max_delta.doubled <= 4);
    CHECK(report.four_point->quadruples_examined == 15ull * 15 * 15 * 15);

    // witness re-evaluates: recompute the clamped difference
    auto w = report.four_point->witness;
    auto gp2 = [&](std::size_t x, std::size_t y, std::size_t z) {
        return u.distance(x, z) + u.distance(y, z) - u.distance(x, y);
    };
    std::int64_t v = std::min(gp2(w[0], w[1], w[3]), gp2(w[1], w[2], w[3])) - gp2(w[0], w[2], w[3]);
    if (v < 0) v = 0;
    CHECK(v == report.four_point->max_delta.doubled);
}

TEST_CASE("quasi-isometry audit: constants, tight pairs, coverage") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditReport report = audit_quasi_isometry(u);
    CHECK(report.pass);
    CHECK(report.quasi_isometry->violations.empty());
    CHECK(report.quasi_isometry->levels_covered);
    CHECK(report.quasi_isometry->b == 2);

    // tightness: distinct equal-level pair has d = 2, gap = 0
    auto tops = u.level(2);
    CHECK(u.distance(tops[0], tops[1]) - 2 == 0);
    // cross-level pair: d = gap
    CHECK(u.distance(0, u.size() - 1) == 4);
}

TEST_CASE("triangle-freeness audit") {
    for (UniverseParams params : {UniverseParams{-2, 2, 2, 1}, UniverseParams{0, 1, 2, 1}}) {
        AuditReport report = audit_triangle_free(FiniteUniverse::build(params));
        CHECK(report.pass);
        CHECK(report.triangle_free->cliques_found == 0);
    }
}

TEST_CASE("delta-walk audit tracks a2 by unit steps") {
    BraidWord start(3, {1, 2});
    AuditReport zero = audit_delta_walk(start, 0, 7);
    CHECK(zero.pass);
    CHECK(zero.delta_walk->a2_trace() == std::vector<std::int64_t>{0});

    AuditReport one = audit_delta_walk(start, 1, 7);
    CHECK(one.pass);
    auto trace = one.delta_walk->a2_trace();
    REQUIRE(trace.size() == 2);
    CHECK(std::abs(trace[1] - trace[0]) == 1);

    AuditReport walk = audit_delta_walk(start, 12, 99);
    CHECK(walk.pass);
    auto t = walk.delta_walk->a2_trace();
    CHECK(t.size() == 13);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(std::abs(t[i] - t[i - 1]) == 1);

    // determinism
    AuditReport again = audit_delta_walk(start, 12, 99);
    CHECK(strip_duration(again.to_json()) == strip_duration(walk.to_json()));
}

TEST_CASE("delta-walk rejects impossible starts") {
    CHECK_THROWS_AS(audit_delta_walk(BraidWord(2, {1}), 3, 0), ValidationError);   // no site
    CHECK_THROWS_AS(audit_delta_walk(BraidWord(3, {}), 3, 0), ValidationError);    // unlink
    CHECK_THROWS_AS(audit_delta_walk(BraidWord(2, {1, 1}), 1, 0), ValidationError);
}

TEST_CASE("reports serialize with a schema version and stable fields") {
    FiniteUniverse u = FiniteUniverse::build({-1, 1, 1, 0});
    AuditReport report = audit_slimness(u);
    std::string j = report.to_json();
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"kind\": \"slimness\"") != std::string::npos);
    CHECK(j.find("\"algorithm\": \"mt19937_64/rejection-v1\"") != std::string::npos);
    CHECK(j.find("\"universe\"") != std::string::npos);
}

TEST_CASE("a 50-step walk from the unknot stays within the +-1 ladder") {
    AuditReport r = audit_delta_walk(BraidWord(3, {1, 2}), 50, 2024);
    CHECK(r.pass);
    auto trace = r.delta_walk->a2_trace();
    REQUIRE(trace.size() == 51);
    CHECK(std::abs(trace.back()) <= 50);
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(std::abs(trace[i] - trace[i - 1]) == 1);
}

TEST_CASE("sampled four-point audit is deterministic and within the exhaustive bound") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    AuditConfig config;
    config.mode = AuditMode::sampled;
    config.seed = 31;
    config.sample_size = 2000;
    AuditReport a = audit_four_point(u, config);
    AuditReport b = audit_four_point(u, config);
    CHECK(strip_duration(a.to_json()) == strip_duration(b.to_json()));
    CHECK(a.four_point->quadruples_examined == 2000);

    AuditReport full = audit_four_point(u);
    CHECK(a.four_point->max_delta.doubled <= full.four_point->max_delta.doubled);

    AuditConfig no_size = config;
    no_size.sample_size = 0;
    CHECK_THROWS_AS(audit_four_point(u, no_size), ValidationError);

    AuditConfig tight;
    tight.quadruple_budget = 10;
    CHECK_THROWS_AS(audit_four_point(u, tight), ResourceLimitError);
    tight.sampling_fallback = true;
    tight.seed = 5;
    tight.sample_size = 100;
    AuditReport fb = audit_four_point(u, tight);
    CHECK(fb.four_point->switched_to_sampling);
}

TEST_CASE("the slimness audit agrees with direct per-triangle measurement") {
    FiniteUniverse u = FiniteUniverse::build({0, 1, 2, 1});
    AuditReport report = audit_slimness(u);

    std::int64_t direct_max = 0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i; j < u.size(); ++j)
            for (std::size_t k = j; k < u.size(); ++k) {
                auto g1 = enumerate_geodesics(u, i, j);
                auto g2 = enumerate_geodesics(u, j, k);
                auto g3 = enumerate_geodesics(u, k, i);
                for (const auto& s1 : g1.paths)
                    for (const auto& s2 : g2.paths)
                        for (const auto& s3 : g3.paths) {
                            GeodesicTriangle t{{i, j, k}, {s1, s2, s3}};
                            direct_max = std::max(direct_max, triangle_slimness(u, t));
                            ++count;
                        }
            }
    CHECK(report.slimness->max_delta == direct_max);
    CHECK(report.slimness->triangles_examined == count);
}
