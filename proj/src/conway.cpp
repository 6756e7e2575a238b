#include "gordian/conway.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gordian/errors.hpp"

namespace gordian {

namespace {

// Walks every component of the diagram in deterministic order (components
// started at their smallest arc label) and returns the index of the first
// crossing whose first visit arrives on the under-strand, or nullopt when
// the diagram is descending.
//
// A descending diagram is a stacked union of unknotted circles, so its
// Conway polynomial is 1 for a knot and 0 otherwise.
std::optional<std::size_t> first_ascending_crossing(const LinkDiagram& d) {
    const auto& xs = d.crossings();

    // head position of every arc: (crossing, slot) where it is incoming
    std::map<ArcId, std::pair<std::size_t, int>> head;
    for (std::size_t c = 0; c < xs.size(); ++c) {
        head[xs[c].arcs[0]] = {c, 0};
        head[xs[c].arcs[d.over_in_slot(c)]] = {c, d.over_in_slot(c)};
    }

    std::map<ArcId, bool> arc_visited;
    for (const auto& [a, _] : head) arc_visited[a] = false;
    std::vector<bool> crossing_visited(xs.size(), false);

    for (const auto& [start, _] : head) {
        if (arc_visited[start]) continue;
        ArcId a = start;
        while (!arc_visited[a]) {
            arc_visited[a] = true;
            auto [c, slot] = head.at(a);
            bool under = (slot == 0);
            if (!crossing_visited[c]) {
                crossing_visited[c] = true;
                if (under) return c;
            }
            int out_slot = under ? 2 : (slot + 2) % 4;
            a = xs[c].arcs[out_slot];
        }
    }
    return std::nullopt;
}

// True when the crossing graph is disconnected (a diagram-level split link).
bool is_split(const LinkDiagram& d) {
    const auto& xs = d.crossings();
    if (xs.size() <= 1) return false;
    std::map<ArcId, std::size_t> first_seen;
    std::vector<std::size_t> parent(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t c = 0; c < xs.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            ArcId a = xs[c].arcs[s];
            auto it = first_seen.find(a);
            if (it == first_seen.end()) {
                first_seen[a] = c;
            } else {
                std::size_t ra = find(it->second), rb = find(c);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    std::size_t root0 = find(0);
    for (std::size_t c = 1; c < xs.size(); ++c)
        if (find(c) != root0) return true;
    return false;
}

// Removes one Reidemeister-I kink or one cancelling Reidemeister-II pair,
// if present. Both moves are isotopies, so the Conway polynomial is
// unchanged while the crossing count drops; smoothed braid closures reduce
// in cascades, which keeps the skein tree narrow.
std::optional<LinkDiagram> reduce_once(const LinkDiagram& d) {
    const auto& xs = d.crossings();

    struct Splicer {
        std::map<ArcId, ArcId> root;
        std::vector<std::pair<ArcId, ArcId>> unions;

        ArcId find(ArcId a) {
            while (root.count(a) && root[a] != a) a = root[a];
            return a;
        }
        void unite(ArcId a, ArcId b) {
            root.emplace(a, a);
            root.emplace(b, b);
            unions.push_back({a, b});
            ArcId ra = find(a), rb = find(b);
            if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
        }
        // Rebuild without the given crossings; spliced arc classes that no
        // longer occur anywhere become free loops.
        LinkDiagram rebuild(const LinkDiagram& d, std::vector<std::size_t> removed) {
            std::vector<Crossing> out;
            std::map<ArcId, int> remaining;
            for (std::size_t i = 0; i < d.crossing_count(); ++i) {
                if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
                Crossing nc = d.crossings()[i];
                for (int s = 0; s < 4; ++s) {
                    if (root.count(nc.arcs[s])) {
                        nc.arcs[s] = find(nc.arcs[s]);
                        ++remaining[nc.arcs[s]];
                    }
                }
                out.push_back(nc);
            }
            int new_loops = 0;
            std::map<ArcId, bool> seen;
            for (const auto& [a, b] : unions) {
                (void)b;
                ArcId r = find(a);
                if (!seen[r]) {
                    seen[r] = true;
                    if (remaining[r] == 0) ++new_loops;
                }
            }
            return LinkDiagram(std::move(out), d.free_loops() + new_loops);
        }
    };

    // R1: an arc with both ends at one crossing is a kink; the other two
    // slots carry the through-strand.
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (int s = 0; s < 4; ++s) {
            for (int s2 = s + 1; s2 < 4; ++s2) {
                if (xs[i].arcs[s] != xs[i].arcs[s2]) continue;
                std::vector<int> through;
                for (int t = 0; t < 4; ++t)
                    if (t != s && t != s2) through.push_back(t);
                Splicer sp;
                sp.unite(xs[i].arcs[through[0]], xs[i].arcs[through[1]]);
                return sp.rebuild(d, {i});
            }
        }
    }

    // R2: strand x over both crossings, strand y under both, opposite
    // signs. Arcs have no interior crossings, so the bigon is a face and
    // the pair cancels.
    auto over_in_arc = [&](std::size_t c) { return xs[c].arcs[d.over_in_slot(c)]; };
    auto over_out_arc = [&](std::size_t c) { return xs[c].arcs[(d.over_in_slot(c) + 2) % 4]; };
    for (std::size_t p = 0; p < xs.size(); ++p) {
        for (std::size_t q = 0; q < xs.size(); ++q) {
            if (p == q || d.sign(p) == d.sign(q)) continue;
            if (over_out_arc(p) != over_in_arc(q)) continue;
            if (xs[p].arcs[2] == xs[q].arcs[0]) {  // parallel: both run p -> q
                Splicer sp;
                sp.unite(over_in_arc(p), over_out_arc(q));
                sp.unite(xs[p].arcs[0], xs[q].arcs[2]);
                return sp.rebuild(d, {p, q});
            }
            if (xs[q].arcs[2] == xs[p].arcs[0]) {  // antiparallel: under runs q -> p
                Splicer sp;
                sp.unite(over_in_arc(p), over_out_arc(q));
                sp.unite(xs[q].arcs[0], xs[p].arcs[2]);
                return sp.rebuild(d, {p, q});
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::size_t SkeinEngine::KeyHash::operator()(const std::vector<std::int32_t>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t v : key) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

SkeinEngine::SkeinEngine(SkeinLimits limits) : limits_(limits) {}

ConwayPolynomial SkeinEngine::conway(const LinkDiagram& d) {
    if (d.crossing_count() > limits_.max_crossings)
        throw ResourceLimitError("diagram has " + std::to_string(d.crossing_count()) +
                                 " crossings, skein cap is " +
                                 std::to_string(limits_.max_crossings) +
                                 " (raise the cap to proceed)");
    nodes_ = 0;
    ConwayPolynomial p = resolve(d, 0);

    // Parity sanity: knots are even polynomials with constant term 1,
    // 2-component links odd.
    if (d.component_count() == 1 && !p.is_zero() && !p.knot_form())
        throw InternalError("skein result violates knot parity: " + p.to_text());
    if (d.component_count() == 2 && !p.even_coeffs_zero())
        throw InternalError("skein result violates link parity: " + p.to_text());
    return p;
}

ConwayPolynomial SkeinEngine::resolve(const LinkDiagram& diagram, int depth) {
    if (++nodes_ > limits_.max_nodes)
        throw ResourceLimitError("skein node budget exceeded (" +
                                 std::to_string(limits_.max_nodes) + " nodes)");

    LinkDiagram d = diagram;
    while (true) {
        if (d.crossing_count() == 0)
            return d.free_loops() == 1 ? ConwayPolynomial::one() : ConwayPolynomial::zero();
        if (d.free_loops() > 0) return ConwayPolynomial::zero();
        if (is_split(d)) return ConwayPolynomial::zero();
        std::optional<LinkDiagram> reduced = reduce_once(d);
        if (!reduced) break;
        d = std::move(*reduced);
    }

    const std::vector<std::int32_t>& key = d.canonical_key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<std::size_t> bad = first_ascending_crossing(d);
    ConwayPolynomial result;
    if (!bad) {
        result = d.component_count() == 1 ? ConwayPolynomial::one() : ConwayPolynomial::zero();
    } else {
        LinkDiagram flipped = crossing_change(d, *bad);
        LinkDiagram smoothed = smooth_crossing(d, *bad);
        ConwayPolynomial smoothed_part = resolve(smoothed, depth + 1).shifted(1);
        if (d.sign(*bad) > 0) {
            // d = L+: nabla(L+) = nabla(L-) + z * nabla(L0)
            result = resolve(flipped, depth + 1) + smoothed_part;
        } else {
            // d = L-: nabla(L-) = nabla(L+) - z * nabla(L0)
            result = resolve(flipped, depth + 1) - smoothed_part;
        }
    }
    memo_.emplace(key, result);
    return result;
}

ConwayPolynomial conway_polynomial(const LinkDiagram& d, SkeinLimits limits) {
    SkeinEngine engine(limits);
    return engine.conway(d);
}

ConwayClass conway_class(const LinkDiagram& d, SkeinLimits limits) {
    if (d.component_count() != 1)
        throw ValidationError("Conway classes are defined for knots; diagram has " +
                              std::to_string(d.component_count()) + " components");
    return ConwayClass(conway_polynomial(d, limits));
}

}  // namespace gordian
