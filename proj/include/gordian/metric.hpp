#ifndef GORDIAN_METRIC_HPP
#define GORDIAN_METRIC_HPP

#include <cstdint>
#include <set>

#include "gordian/poly.hpp"

namespace gordian {

// Exact distance between two vertices of the Delta-move Gordian graph on
// Conway classes:
//
//   d(u, v) = |a2(u) - a2(v)|   when the a2 coefficients differ,
//             2                 when they agree but u != v,
//             0                 when u = v.
std::int64_t delta_nabla_distance(const ConwayClass& u, const ConwayClass& v);

// Lower-bound and parity test for a claimed distance d between u and v:
// true iff d >= |a2(u) - a2(v)| and d == |a2(u) - a2(v)| (mod 2).
bool distance_bound_and_parity(const ConwayClass& u, const ConwayClass& v, std::int64_t d);

// Adjacency in the graph: distance exactly 1, i.e. |a2(u) - a2(v)| = 1.
bool adjacent(const ConwayClass& u, const ConwayClass& v);

// Bounds on the crossing-change distance between two Conway classes:
// {0} when u = v; {1} when either class is the unknot class (every class
// contains an unknotting-number-one knot); {1, 2} otherwise — the graph has
// diameter two but the exact value is not decidable here. For the trefoil
// vs figure-eight pair the exact value is known to be 2; that is recorded
// as documentation only, never computed.
std::set<std::int64_t> x_nabla_distance_bounds(const ConwayClass& u, const ConwayClass& v);

}  // namespace gordian

#endif  // GORDIAN_METRIC_HPP
