#ifndef GORDIAN_CONWAY_HPP
#define GORDIAN_CONWAY_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/poly.hpp"

namespace gordian {

/// Resource limits for the skein computation. Exceeding a cap raises
/// ResourceLimitError; there is no silent approximation.
struct SkeinLimits {
    std::size_t max_crossings = 24;
    std::size_t max_nodes = 8'000'000;  // recursion nodes per evaluation
};

/// Conway polynomial by skein resolution:
///
///   nabla(L+) - nabla(L-) = z * nabla(L0),
///   nabla(unknot) = 1, nabla(split link) = 0.
///
/// Crossings are resolved in the order that drives the diagram toward a
/// descending (hence trivial) form; results are memoized on the canonical
/// diagram encoding. The sign convention gives nabla(positive Hopf link)
/// = +z; knot-level coefficients are convention-independent.
///
/// An engine instance keeps its memo table across calls. It is cheap to
/// construct and deliberately not thread-shared: use one engine per thread
/// (results are deterministic and independent of cache state).
class SkeinEngine {
public:
    explicit SkeinEngine(SkeinLimits limits = {});

    ConwayPolynomial conway(const LinkDiagram& d);

    std::size_t nodes_visited() const { return nodes_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::int32_t>& key) const;
    };

    ConwayPolynomial resolve(const LinkDiagram& d, int depth);

    SkeinLimits limits_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::vector<std::int32_t>, ConwayPolynomial, KeyHash> memo_;
};

// One-shot convenience wrapper around a fresh engine.
ConwayPolynomial conway_polynomial(const LinkDiagram& d, SkeinLimits limits = {});

// The Conway class of a knot diagram. Throws ValidationError for
// multi-component inputs.
ConwayClass conway_class(const LinkDiagram& d, SkeinLimits limits = {});

}  // namespace gordian

#endif  // GORDIAN_CONWAY_HPP
