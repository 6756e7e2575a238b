#ifndef GORDIAN_AUDIT_HPP
#define GORDIAN_AUDIT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gordian/braid.hpp"
#include "gordian/poly.hpp"
#include "gordian/universe.hpp"

namespace gordian {

// Exact half-integer (stored doubled); delta values are never floating
// point.
struct HalfInteger {
    std::int64_t doubled = 0;

    bool operator==(const HalfInteger& rhs) const = default;
    auto operator<=>(const HalfInteger& rhs) const = default;

    std::string to_text() const {
        if (doubled % 2 == 0) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }
};

// Gromov product (u|v)_w = (d(u,w) + d(v,w) - d(u,v)) / 2 under the exact
// distance formula.
HalfInteger gromov_product(const ConwayClass& u, const ConwayClass& v, const ConwayClass& w);

/// A geodesic triangle inside a universe: three corners x, y, z with sides
/// s(x,y), s(y,z), s(z,x). Corners may coincide (degenerate triangles are
/// allowed).
struct GeodesicTriangle {
    std::array<std::size_t, 3> corners;  // universe indices of x, y, z
    std::array<GeodesicPath, 3> sides;   // s(x,y), s(y,z), s(z,x)
};

// Throws ValidationError unless each side is a geodesic in the universe
// whose endpoints match the corner pair.
void validate_triangle(const FiniteUniverse& u, const GeodesicTriangle& t);

// Vertex-resolution slimness: the least integer delta such that every
// vertex of every side is within graph distance delta of some vertex on
// the union of the other two sides. (Measured at vertices only; interior
// points of edges move the value by at most 1.)
std::int64_t triangle_slimness(const FiniteUniverse& u, const GeodesicTriangle& t);

enum class AuditMode { exhaustive, sampled };

/// Knobs for the audits. In sampled mode `seed` and `sample_size` are
/// required. When an exhaustive enumeration would exceed its budget the
/// audit fails with ResourceLimitError unless `sampling_fallback` is set,
/// in which case it switches to seeded sampling and records the switch.
struct AuditConfig {
    AuditMode mode = AuditMode::exhaustive;
    std::uint64_t seed = 0;
    std::size_t sample_size = 0;
    std::size_t triangle_budget = 20'000'000;
    std::size_t quadruple_budget = 20'000'000;
    std::size_t geodesic_cap = 10'000;
    bool sampling_fallback = false;
};

struct SlimnessWitness {
    GeodesicTriangle triangle;
    std::size_t side;        // side containing the far vertex
    std::size_t vertex;      // universe index of the far vertex
    std::int64_t delta = 0;  // its distance to the union of the other sides
};

struct SlimnessResult {
    std::int64_t max_delta = 0;
    // Triangles keyed by the case split on sorted corner levels
    // (k, k') = (mid - lo, hi - mid): 1: k,k' >= 1; 2: k = 0, k' >= 1;
    // 3: k >= 1, k' = 0; 4: k = k' = 0 (all corners on one level).
    std::map<int, std::int64_t> case_max;
    std::map<int, std::uint64_t> case_count;
    std::optional<SlimnessWitness> witness;
    std::uint64_t triangles_examined = 0;
    bool switched_to_sampling = false;
};

struct FourPointResult {
    HalfInteger max_delta;                  // delta_4
    std::array<std::size_t, 4> witness{};   // maximizing (x, y, z, w)
    std::uint64_t quadruples_examined = 0;
    bool switched_to_sampling = false;
};

struct QuasiIsometryResult {
    // d - B <= |a2 gap| <= d with the constants below; image is E-dense in
    // [a2_min, a2_max].
    std::int64_t a = 1, b = 2, c = 1, d = 0;
    HalfInteger e{1};
    std::uint64_t pairs_examined = 0;
    std::vector<std::array<std::size_t, 2>> violations;
    bool levels_covered = false;  // every integer level is hit by a twist-knot class
};

struct TriangleFreeResult {
    std::uint64_t triples_examined = 0;
    std::uint64_t cliques_found = 0;
    std::optional<std::array<std::size_t, 3>> witness;
};

struct DeltaWalkStep {
    std::size_t position;
    int strand_index;
    int sign;
    std::int64_t a2_after;
};

struct DeltaWalkResult {
    BraidWord start;
    std::int64_t a2_start = 0;
    std::vector<DeltaWalkStep> steps;
    bool truncated = false;  // a resource cap cut the walk short
    std::vector<std::int64_t> a2_trace() const;
};

/// One audit outcome. Everything except duration_ms is a deterministic
/// function of (universe, kind, mode, seed, sample_size).
struct AuditReport {
    int schema_version = 1;
    std::string kind;
    std::string algorithm;  // stable RNG identifier
    AuditMode mode = AuditMode::exhaustive;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> sample_size;
    std::optional<UniverseParams> universe;
    bool pass = false;
    double duration_ms = 0.0;

    std::optional<SlimnessResult> slimness;
    std::optional<FourPointResult> four_point;
    std::optional<QuasiIsometryResult> quasi_isometry;
    std::optional<TriangleFreeResult> triangle_free;
    std::optional<DeltaWalkResult> delta_walk;

    // Versioned JSON document, one audit per file.
    std::string to_json() const;
};

// Slimness over geodesic triangles: asserts max delta <= 2 overall and
// <= 1 over triangles with all corners on one level.
AuditReport audit_slimness(const FiniteUniverse& u, const AuditConfig& config = {});

// Four-point condition: delta_4 = max over ordered quadruples (x, y, z, w)
// of min((x|y)_w, (y|z)_w) - (x|z)_w clamped at 0; asserts delta_4 <= 2.
AuditReport audit_four_point(const FiniteUniverse& u, const AuditConfig& config = {});

// Quasi-isometry of the level map g(v) = a2(v) onto the integer range:
// d(u,v) - 2 <= |g(u) - g(v)| <= d(u,v) for all pairs, with every level
// inhabited (coarse density 1/2).
AuditReport audit_quasi_isometry(const FiniteUniverse& u);

// No three vertices are pairwise adjacent (the graph carries no triangle).
AuditReport audit_triangle_free(const FiniteUniverse& u);

// Seeded random walk of Delta-moves from a knot-closure braid word,
// recomputing a2 of the closure after every step; passes iff every step
// changes a2 by exactly +-1. A resource cap truncates the walk with a
// partial report.
AuditReport audit_delta_walk(const BraidWord& start, std::size_t steps, std::uint64_t seed);

}  // namespace gordian

#endif  // GORDIAN_AUDIT_HPP
