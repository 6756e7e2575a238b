#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include "gordian/errors.hpp"
#include "gordian/universe.hpp"

using namespace gordian;

TEST_CASE("universe enumeration for (-1,1,1,0)") {
    FiniteUniverse u = FiniteUniverse::build({-1, 1, 1, 0});
    REQUIRE(u.size() == 3);
    CHECK(u.vertex(0).to_list() == "[1,0,-1]");
    CHECK(u.vertex(1).to_list() == "[1]");
    CHECK(u.vertex(2).to_list() == "[1,0,1]");
    CHECK(u.width() == 1);
    CHECK(u.edge_count() == 2);
}

TEST_CASE("universe counting formula") {
    FiniteUniverse u = FiniteUniverse::build({0, 2, 2, 1});
    CHECK(u.size() == 9);  // 3 levels x 3 choices of a4
    CHECK(u.width() == 3);
    CHECK(u.edge_count() == 18);  // complete bipartite between adjacent levels

    FiniteUniverse v = FiniteUniverse::build({-2, 2, 2, 1});
    CHECK(v.size() == 15);
    FiniteUniverse w = FiniteUniverse::build({-3, 3, 2, 1});
    CHECK(w.size() == 21);
    FiniteUniverse deep = FiniteUniverse::build({0, 1, 3, 2});
    CHECK(deep.size() == 2 * 25);
}

TEST_CASE("universe vertex order is deterministic and indexable") {
    FiniteUniverse u = FiniteUniverse::build({0, 2, 2, 1});
    // level 0 first, within the level a4 ascending
    CHECK(u.vertex(0).to_list() == "[1,0,0,0,-1]");
    CHECK(u.vertex(1).to_list() == "[1]");
    CHECK(u.vertex(2).to_list() == "[1,0,0,0,1]");
    CHECK(u.vertex(3).to_list() == "[1,0,1,0,-1]");

    for (std::size_t i = 0; i < u.size(); ++i) {
        auto idx = u.index_of(u.vertex(i));
        REQUIRE(idx.has_value());
        CHECK(*idx == i);
    }
    CHECK_FALSE(u.index_of(ConwayClass::from_even_coeffs({5})).has_value());
    CHECK_FALSE(u.index_of(ConwayClass::from_even_coeffs({0, 2})).has_value());
    CHECK_FALSE(u.index_of(ConwayClass::from_even_coeffs({0, 0, 1})).has_value());
}

TEST_CASE("universe parameter validation and caps") {
    CHECK_THROWS_AS(FiniteUniverse::build({0, 0, 1, 0}), ValidationError);   // single level
    CHECK_THROWS_AS(FiniteUniverse::build({1, 0, 1, 0}), ValidationError);   // empty range
    CHECK_THROWS_AS(FiniteUniverse::build({0, 1, 0, 0}), ValidationError);   // bad depth
    CHECK_THROWS_AS(FiniteUniverse::build({0, 1, 1, -1}), ValidationError);  // bad bound
    // (0,1,2,60) fits in the default cap: 2 * 121 vertices
    CHECK(FiniteUniverse::build({0, 1, 2, 60}).size() == 242);
    // (0,1,3,60) would be 2 * 121^2 vertices
    CHECK_THROWS_AS(FiniteUniverse::build({0, 1, 3, 60}), ResourceLimitError);
}

TEST_CASE("neighborhoods by vertex and by level") {
    FiniteUniverse small = FiniteUniverse::build({-1, 1, 1, 0});
    std::size_t unknot_idx = *small.index_of(ConwayClass::unknot());
    CHECK(neighborhood(small, unknot_idx, 0) == std::vector<std::size_t>{unknot_idx});
    CHECK(neighborhood(small, unknot_idx, 1) == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(neighborhood(small, 99, 1), ValidationError);

    FiniteUniverse u = FiniteUniverse::build({0, 2, 2, 1});
    // N(V_1, 1) covers all 9 vertices; verified independently by exhaustive
    // distance evaluation
    std::vector<std::size_t> ball = level_neighborhood(u, 1, 1);
    CHECK(ball.size() == 9);
    for (std::size_t v = 0; v < u.size(); ++v) {
        std::int64_t best = 1000;
        for (std::size_t w : u.level(1)) best = std::min(best, u.distance(v, w));
        CHECK((best <= 1) == std::binary_search(ball.begin(), ball.end(), v));
    }
}

TEST_CASE("geodesic enumeration: trivial, unique, counted") {
    FiniteUniverse u = FiniteUniverse::build({0, 3, 1, 0});
    std::size_t from = *u.index_of(ConwayClass::unknot());
    std::size_t to = *u.index_of(ConwayClass::from_even_coeffs({3}));

    auto self = enumerate_geodesics(u, from, from);
    REQUIRE(self.paths.size() == 1);
    CHECK(self.paths[0].vertices == std::vector<std::size_t>{from});
    CHECK(self.paths[0].length() == 0);

    auto unique = enumerate_geodesics(u, from, to);
    REQUIRE(unique.paths.size() == 1);  // width-1 levels
    CHECK(unique.paths[0].length() == 3);
    CHECK_FALSE(unique.truncated);

    // width 3, |a2 gap| = 2: exactly 3 geodesics through level 1
    FiniteUniverse wide = FiniteUniverse::build({0, 2, 2, 1});
    auto three = enumerate_geodesics(wide, 1, 7);  // [1] at level 0 to [1,0,2] at level 2
    CHECK(wide.a2_of(1) == 0);
    CHECK(wide.a2_of(7) == 2);
    REQUIRE(three.paths.size() == 3);
    for (const GeodesicPath& p : three.paths) CHECK(is_geodesic(wide, p));
}

TEST_CASE("geodesic counts match an independent path search") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    // brute-force: depth-first search over all shortest paths in the
    // explicit graph
    auto brute_count = [&](std::size_t from, std::size_t to) {
        std::int64_t d = bfs_distance(u, from, to);
        std::uint64_t count = 0;
        std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t v, std::int64_t left) {
            if (left == 0) {
                if (v == to) ++count;
                return;
            }
            for (std::size_t w = 0; w < u.size(); ++w)
                if (u.adjacent_indices(v, w) && u.distance(w, to) == left - 1) dfs(w, left - 1);
        };
        dfs(from, d);
        return count;
    };
    for (std::size_t from : {std::size_t{0}, std::size_t{4}, std::size_t{7}}) {
        for (std::size_t to = 0; to < u.size(); ++to) {
            auto enumerated = enumerate_geodesics(u, from, to);
            REQUIRE_FALSE(enumerated.truncated);
            CHECK(enumerated.paths.size() == brute_count(from, to));
            for (const GeodesicPath& p : enumerated.paths) CHECK(is_geodesic(u, p));
            // paths are pairwise distinct
            std::set<std::vector<std::size_t>> dedup;
            for (const GeodesicPath& p : enumerated.paths) dedup.insert(p.vertices);
            CHECK(dedup.size() == enumerated.paths.size());
        }
    }
}

TEST_CASE("geodesic count formula w^(k-1) and the truncation flag") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    std::size_t lo = *u.index_of(ConwayClass::from_even_coeffs({-2}));
    std::size_t hi = *u.index_of(ConwayClass::from_even_coeffs({2}));
    auto all = enumerate_geodesics(u, lo, hi);
    CHECK(all.paths.size() == 27);  // 3^(4-1)
    CHECK_FALSE(all.truncated);

    auto capped = enumerate_geodesics(u, lo, hi, 10);
    CHECK(capped.paths.size() == 10);
    CHECK(capped.truncated);
}

TEST_CASE("equal-level geodesics route through a neighboring level") {
    FiniteUniverse u = FiniteUniverse::build({0, 2, 2, 1});
    // two distinct vertices on the top level: only level 1 is adjacent
    auto tops = u.level(2);
    auto geos = enumerate_geodesics(u, tops[0], tops[1]);
    CHECK(geos.paths.size() == 3);
    for (const GeodesicPath& p : geos.paths) {
        REQUIRE(p.vertices.size() == 3);
        CHECK(u.a2_of(p.vertices[1]) == 1);
    }
    CHECK(bfs_distance(u, tops[0], tops[1]) == 2);
}

TEST_CASE("BFS oracle equals the closed-form distance on all pairs") {
    for (UniverseParams params : {UniverseParams{-2, 2, 2, 1}, UniverseParams{-3, 3, 2, 1}}) {
        FiniteUniverse u = FiniteUniverse::build(params);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                CHECK(bfs_distance(u, i, j) == u.distance(i, j));
    }
}

TEST_CASE("universe files round-trip") {
    FiniteUniverse u = FiniteUniverse::build({-2, 2, 2, 1});
    std::string path = "test_universe_roundtrip.json";
    save_universe(u, path);
    FiniteUniverse loaded = load_universe(path);
    CHECK(loaded.params() == u.params());
    CHECK(loaded.size() == u.size());
    CHECK(loaded.edge_count() == u.edge_count());
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(loaded.vertex(i) == u.vertex(i));
    std::remove(path.c_str());

    CHECK_THROWS_AS(universe_from_json("{ not json"), ValidationError);
    CHECK_THROWS_AS(universe_from_json("{\"kind\":\"other\"}"), ValidationError);
    CHECK_THROWS_AS(load_universe("does_not_exist.json"), ValidationError);
}
