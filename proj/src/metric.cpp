#include "gordian/metric.hpp"

#include <cstdlib>

namespace gordian {

std::int64_t delta_nabla_distance(const ConwayClass& u, const ConwayClass& v) {
    std::int64_t gap = std::llabs(u.a2() - v.a2());
    if (gap != 0) return gap;
    return u == v ? 0 : 2;
}

bool distance_bound_and_parity(const ConwayClass& u, const ConwayClass& v, std::int64_t d) {
    std::int64_t gap = std::llabs(u.a2() - v.a2());
    return d >= gap && (d - gap) % 2 == 0;
}

bool adjacent(const ConwayClass& u, const ConwayClass& v) {
    return std::llabs(u.a2() - v.a2()) == 1;
}

std::set<std::int64_t> x_nabla_distance_bounds(const ConwayClass& u, const ConwayClass& v) {
    if (u == v) return {0};
    if (u == ConwayClass::unknot() || v == ConwayClass::unknot()) return {1};
    return {1, 2};
}

}  // namespace gordian
