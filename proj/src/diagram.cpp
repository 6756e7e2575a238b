#include "gordian/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "gordian/errors.hpp"

namespace gordian {

namespace {

// (crossing index, slot index) of one occurrence of an arc label.
struct Occurrence {
    std::int32_t crossing;
    std::int32_t slot;
};

// label -> its (exactly two) occurrences, in deterministic order.
using OccurrenceMap = std::map<ArcId, std::array<Occurrence, 2>>;

OccurrenceMap collect_occurrences(const std::vector<Crossing>& crossings) {
    std::map<ArcId, std::vector<Occurrence>> raw;
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            ArcId a = crossings[c].arcs[s];
            if (a <= 0) throw ValidationError("arc labels must be positive integers");
            raw[a].push_back({static_cast<std::int32_t>(c), s});
        }
    }
    OccurrenceMap occ;
    for (const auto& [label, list] : raw) {
        if (list.size() != 2)
            throw ValidationError("arc label " + std::to_string(label) + " appears " +
                                  std::to_string(list.size()) + " times, expected exactly 2");
        occ[label] = {list[0], list[1]};
    }
    return occ;
}

// Resolves, for every crossing, which over slot (1 or 3) is incoming.
//
// Under slots have fixed roles (slot 0 in, slot 2 out); each arc label must
// be incoming at one occurrence and outgoing at the other. Constraints are
// propagated to a fixpoint. Crossings left unconstrained (components that
// never pass under anything) get a deterministic default.
std::vector<std::uint8_t> resolve_over_slots(const std::vector<Crossing>& crossings,
                                             const OccurrenceMap& occ) {
    const std::uint8_t kUnknown = 0;
    std::vector<std::uint8_t> over_in(crossings.size(), kUnknown);

    // role of a slot: +1 incoming, -1 outgoing, 0 unknown
    auto role = [&](const Occurrence& o) -> int {
        if (o.slot == 0) return +1;
        if (o.slot == 2) return -1;
        if (over_in[o.crossing] == kUnknown) return 0;
        return over_in[o.crossing] == o.slot ? +1 : -1;
    };

    // Assign over_in for a crossing from one known slot role; returns false
    // on contradiction.
    auto assign = [&](const Occurrence& o, int r, std::deque<std::int32_t>& queue) -> bool {
        if (o.slot == 0) return r == +1;
        if (o.slot == 2) return r == -1;
        std::uint8_t want = (r == +1) ? static_cast<std::uint8_t>(o.slot)
                                      : static_cast<std::uint8_t>(4 - o.slot);
        if (over_in[o.crossing] == kUnknown) {
            over_in[o.crossing] = want;
            queue.push_back(o.crossing);
            return true;
        }
        return over_in[o.crossing] == want;
    };

    auto propagate_label = [&](ArcId label, std::deque<std::int32_t>& queue) -> bool {
        const auto& pair = occ.at(label);
        int r0 = role(pair[0]);
        int r1 = role(pair[1]);
        if (r0 != 0 && r1 != 0) return r0 != r1;
        if (r0 != 0) return assign(pair[1], -r0, queue);
        if (r1 != 0) return assign(pair[0], -r1, queue);
        return true;  // both unknown; revisit later
    };

    std::deque<std::int32_t> queue;
    for (const auto& [label, pair] : occ) {
        (void)pair;
        if (!propagate_label(label, queue))
            throw ValidationError("inconsistent orientation at arc label " + std::to_string(label));
    }
    auto drain = [&]() {
        while (!queue.empty()) {
            std::int32_t c = queue.front();
            queue.pop_front();
            for (int s : {1, 3}) {
                ArcId label = crossings[c].arcs[s];
                if (!propagate_label(label, queue))
                    throw ValidationError("inconsistent orientation at arc label " +
                                          std::to_string(label));
            }
        }
    };
    drain();

    // Components that never pass under anything carry no orientation
    // constraint; orient them deterministically.
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        if (over_in[c] == kUnknown) {
            over_in[c] = 3;
            queue.push_back(static_cast<std::int32_t>(c));
            drain();
        }
    }

    // Final verification over every label.
    for (const auto& [label, pair] : occ) {
        if (role(pair[0]) == role(pair[1]))
            throw ValidationError("inconsistent orientation at arc label " + std::to_string(label));
    }
    return over_in;
}

// Directed successor structure: for each arc, the crossing/slot where it
// ends and the arc it continues into.
struct TraceTables {
    std::map<ArcId, Occurrence> head;  // where the arc is incoming
    std::map<ArcId, ArcId> succ;       // next arc along the orientation
};

TraceTables build_trace(const std::vector<Crossing>& crossings,
                        const std::vector<std::uint8_t>& over_in, const OccurrenceMap& occ) {
    TraceTables t;
    for (const auto& [label, pair] : occ) {
        for (const Occurrence& o : pair) {
            bool incoming = (o.slot == 0) || (o.slot == over_in[o.crossing]);
            if (incoming) t.head[label] = o;
        }
    }
    for (const auto& [label, o] : t.head) {
        int out_slot = (o.slot == 0) ? 2 : (o.slot + 2) % 4;
        t.succ[label] = crossings[o.crossing].arcs[out_slot];
    }
    return t;
}

int count_cycles(const TraceTables& t) {
    std::map<ArcId, bool> visited;
    for (const auto& [label, _] : t.succ) visited[label] = false;
    int cycles = 0;
    for (const auto& [start, _] : t.succ) {
        if (visited[start]) continue;
        ++cycles;
        ArcId a = start;
        while (!visited[a]) {
            visited[a] = true;
            a = t.succ.at(a);
        }
    }
    return cycles;
}

// Connected components of the crossing graph (crossings joined by shared
// arc labels).
std::vector<std::vector<std::int32_t>> crossing_components(const std::vector<Crossing>& crossings,
                                                           const OccurrenceMap& occ) {
    std::size_t n = crossings.size();
    std::vector<std::int32_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::int32_t>(i);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [label, pair] : occ) {
        (void)label;
        std::int32_t a = find(pair[0].crossing), b = find(pair[1].crossing);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::int32_t, std::vector<std::int32_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(static_cast<std::int32_t>(i))].push_back(static_cast<std::int32_t>(i));
    std::vector<std::vector<std::int32_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

// One deterministic walk of a connected piece starting at `start`, assigning
// new consecutive arc labels in first-visit order and recording crossings in
// first-visit order. Returns the flat encoding
//   [per crossing: new_a, new_b, new_c, new_d, over_in].
struct WalkEncoding {
    std::vector<std::int32_t> key;
    std::vector<std::int32_t> crossing_order;   // original indices, visit order
    std::map<ArcId, std::int32_t> relabel;      // old label -> new label
};

WalkEncoding walk_encode(const std::vector<Crossing>& crossings,
                         const std::vector<std::uint8_t>& over_in, const TraceTables& trace,
                         const std::vector<std::int32_t>& members, ArcId start) {
    WalkEncoding enc;
    std::int32_t next_label = 1;
    std::deque<ArcId> pending;  // seen-but-unvisited arcs, encounter order
    std::map<std::int32_t, bool> crossing_seen;
    std::size_t arcs_total = members.size() * 2;

    auto visit_cycle = [&](ArcId s) {
        ArcId a = s;
        do {
            enc.relabel[a] = next_label++;
            const Occurrence& h = trace.head.at(a);
            if (!crossing_seen[h.crossing]) {
                crossing_seen[h.crossing] = true;
                enc.crossing_order.push_back(h.crossing);
            }
            // note the other strand's arcs in a fixed order
            int other_in = (h.slot == 0) ? over_in[h.crossing] : 0;
            int other_out = (other_in + 2) % 4;
            for (int s2 : {other_in, other_out}) {
                ArcId other = crossings[h.crossing].arcs[s2];
                if (!enc.relabel.count(other)) pending.push_back(other);
            }
            a = trace.succ.at(a);
        } while (a != s);
    };

    visit_cycle(start);
    while (enc.relabel.size() < arcs_total) {
        while (!pending.empty() && enc.relabel.count(pending.front())) pending.pop_front();
        if (pending.empty())
            throw InternalError("walk_encode: disconnected piece");
        ArcId nxt = pending.front();
        pending.pop_front();
        visit_cycle(nxt);
    }

    enc.key.reserve(enc.crossing_order.size() * 5);
    for (std::int32_t c : enc.crossing_order) {
        for (int s = 0; s < 4; ++s) enc.key.push_back(enc.relabel.at(crossings[c].arcs[s]));
        enc.key.push_back(over_in[c]);
    }
    return enc;
}

// Canonical encoding of one connected piece: minimum over all start arcs.
WalkEncoding canonical_piece(const std::vector<Crossing>& crossings,
                             const std::vector<std::uint8_t>& over_in, const TraceTables& trace,
                             const std::vector<std::int32_t>& members) {
    std::vector<ArcId> starts;
    for (std::int32_t c : members)
        for (int s = 0; s < 4; ++s) starts.push_back(crossings[c].arcs[s]);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::optional<WalkEncoding> best;
    for (ArcId s : starts) {
        WalkEncoding e = walk_encode(crossings, over_in, trace, members, s);
        if (!best || e.key < best->key) best = std::move(e);
    }
    return *best;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw ValidationError("free loop count cannot be negative");
    OccurrenceMap occ = collect_occurrences(crossings_);
    over_in_ = resolve_over_slots(crossings_, occ);
    TraceTables trace = build_trace(crossings_, over_in_, occ);
    n_components_ = count_cycles(trace) + free_loops_;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (std::size_t i = 0; i < crossings_.size(); ++i) w += sign(i);
    return w;
}

const std::vector<std::int32_t>& LinkDiagram::canonical_key() const {
    if (!canonical_key_.empty() || (crossings_.empty() && free_loops_ == 0)) return canonical_key_;

    std::vector<std::int32_t> key;
    key.push_back(static_cast<std::int32_t>(crossings_.size()));
    key.push_back(free_loops_);
    if (!crossings_.empty()) {
        OccurrenceMap occ = collect_occurrences(crossings_);
        TraceTables trace = build_trace(crossings_, over_in_, occ);
        auto pieces = crossing_components(crossings_, occ);
        std::vector<std::vector<std::int32_t>> encodings;
        for (const auto& members : pieces)
            encodings.push_back(canonical_piece(crossings_, over_in_, trace, members).key);
        std::sort(encodings.begin(), encodings.end());
        for (const auto& e : encodings) {
            key.push_back(static_cast<std::int32_t>(e.size() / 5));  // piece crossing count
            key.insert(key.end(), e.begin(), e.end());
        }
    }
    canonical_key_ = std::move(key);
    return canonical_key_;
}

LinkDiagram LinkDiagram::canonicalized() const {
    if (crossings_.empty()) return *this;
    OccurrenceMap occ = collect_occurrences(crossings_);
    TraceTables trace = build_trace(crossings_, over_in_, occ);
    auto pieces = crossing_components(crossings_, occ);

    std::vector<std::pair<std::vector<std::int32_t>, WalkEncoding>> encoded;
    for (const auto& members : pieces) {
        WalkEncoding e = canonical_piece(crossings_, over_in_, trace, members);
        encoded.emplace_back(e.key, std::move(e));
    }
    std::sort(encoded.begin(), encoded.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Crossing> out;
    std::int32_t label_offset = 0;
    for (const auto& [key, enc] : encoded) {
        (void)key;
        for (std::int32_t c : enc.crossing_order) {
            Crossing nc;
            for (int s = 0; s < 4; ++s)
                nc.arcs[s] = enc.relabel.at(crossings_[c].arcs[s]) + label_offset;
            out.push_back(nc);
        }
        label_offset += static_cast<std::int32_t>(enc.relabel.size());
    }
    return LinkDiagram(std::move(out), free_loops_);
}

std::string LinkDiagram::to_pd() const {
    if (crossings_.empty() && free_loops_ > 1)
        throw ValidationError("PD text cannot express crossing-free unlink components");
    std::ostringstream out;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (i) out << " ";
        out << "X(" << crossings_[i].arcs[0] << "," << crossings_[i].arcs[1] << ","
            << crossings_[i].arcs[2] << "," << crossings_[i].arcs[3] << ")";
    }
    return out.str();
}

LinkDiagram parse_pd(std::string_view text) {
    std::vector<Crossing> crossings;
    std::size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](std::size_t n = 1) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto skip_ws_and_comments = [&] {
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                advance();
            } else if (text[i] == '#') {
                while (i < text.size() && text[i] != '\n') advance();
            } else {
                break;
            }
        }
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "' in PD token", line, col);
        advance();
    };
    auto read_int = [&]() -> ArcId {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance();
        if (i == start) throw ParseError("expected arc label (positive integer)", line, col);
        long v = std::stol(std::string(text.substr(start, i - start)));
        if (v <= 0 || v > 1000000000)
            throw ParseError("arc label out of range", line, col);
        return static_cast<ArcId>(v);
    };

    while (true) {
        skip_ws_and_comments();
        if (i >= text.size()) break;
        if (text[i] != 'X')
            throw ParseError("expected crossing token 'X(a,b,c,d)'", line, col);
        advance();
        expect('(');
        Crossing c;
        for (int s = 0; s < 4; ++s) {
            skip_ws_and_comments();
            c.arcs[s] = read_int();
            skip_ws_and_comments();
            if (s < 3) expect(',');
        }
        expect(')');
        crossings.push_back(c);
    }

    if (crossings.empty()) return LinkDiagram::unknot();
    return LinkDiagram(std::move(crossings), 0);
}

int component_count(const LinkDiagram& d) { return d.component_count(); }

LinkDiagram crossing_change(const LinkDiagram& d, std::size_t crossing_index) {
    if (crossing_index >= d.crossing_count())
        throw ValidationError("crossing index " + std::to_string(crossing_index) +
                              " out of range (diagram has " + std::to_string(d.crossing_count()) +
                              " crossings)");
    std::vector<Crossing> out = d.crossings();
    int o = d.over_in_slot(crossing_index);
    Crossing& c = out[crossing_index];
    Crossing rotated;
    for (int s = 0; s < 4; ++s) rotated.arcs[s] = c.arcs[(o + s) % 4];
    c = rotated;
    return LinkDiagram(std::move(out), d.free_loops());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t crossing_index) {
    if (crossing_index >= d.crossing_count())
        throw ValidationError("crossing index out of range");

    const Crossing& x = d.crossings()[crossing_index];
    // Oriented reconnection: incoming arcs continue into the *other*
    // strand's outgoing arcs.
    std::array<std::pair<ArcId, ArcId>, 2> pairs;
    if (d.sign(crossing_index) > 0)
        pairs = {{{x.arcs[0], x.arcs[1]}, {x.arcs[3], x.arcs[2]}}};
    else
        pairs = {{{x.arcs[0], x.arcs[3]}, {x.arcs[1], x.arcs[2]}}};

    std::map<ArcId, ArcId> root;
    auto find = [&](ArcId a) {
        while (root.count(a) && root[a] != a) a = root[a];
        return a;
    };
    for (auto [a, b] : pairs) {
        root.emplace(a, a);
        root.emplace(b, b);
        ArcId ra = find(a), rb = find(b);
        if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }

    std::vector<Crossing> out;
    out.reserve(d.crossing_count() - 1);
    std::map<ArcId, int> remaining;  // occurrences of each class root
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        if (i == crossing_index) continue;
        Crossing nc = d.crossings()[i];
        for (int s = 0; s < 4; ++s) {
            if (root.count(nc.arcs[s])) {
                nc.arcs[s] = find(nc.arcs[s]);
                ++remaining[nc.arcs[s]];
            }
        }
        out.push_back(nc);
    }

    // A spliced class with no occurrences left is a closed crossing-free loop.
    int new_loops = 0;
    std::map<ArcId, bool> seen_root;
    for (auto& [label, r] : root) {
        (void)label;
        ArcId rr = find(r);
        if (!seen_root[rr]) {
            seen_root[rr] = true;
            if (remaining[rr] == 0) ++new_loops;
        }
    }

    return LinkDiagram(std::move(out), d.free_loops() + new_loops).canonicalized();
}

LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2) {
    if (d1.component_count() != 1 || d2.component_count() != 1)
        throw ValidationError("connected sum requires two knot diagrams (1 component each)");
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;

    LinkDiagram a = d1.canonicalized();
    LinkDiagram b = d2.canonicalized();
    ArcId offset = static_cast<ArcId>(2 * a.crossing_count());

    std::vector<Crossing> out = a.crossings();
    for (const Crossing& c : b.crossings()) {
        Crossing nc;
        for (int s = 0; s < 4; ++s) nc.arcs[s] = c.arcs[s] + offset;
        out.push_back(nc);
    }

    // Cut arc alpha of a and arc beta of b, splice the four ends:
    // alpha's tail now runs to beta's old head, beta's tail to alpha's old
    // head. Heads are the slots where the arc is incoming.
    ArcId alpha = 1, beta = offset + 1;
    auto head_slot = [&](const LinkDiagram& d, ArcId label, std::size_t crossing_offset,
                         std::vector<Crossing>& cs, ArcId local) -> std::pair<std::size_t, int> {
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            for (int s = 0; s < 4; ++s) {
                if (d.crossings()[i].arcs[s] != local) continue;
                bool incoming = (s == 0) || (s == d.over_in_slot(i));
                if (incoming) return {i + crossing_offset, s};
            }
        }
        (void)label;
        (void)cs;
        throw InternalError("connected_sum: arc head not found");
    };
    auto [ca, sa] = head_slot(a, alpha, 0, out, alpha);
    auto [cb, sb] = head_slot(b, beta, a.crossing_count(), out, 1);

    out[cb].arcs[sb] = alpha;  // alpha flows into b
    out[ca].arcs[sa] = beta;   // beta flows back into a

    return LinkDiagram(std::move(out), 0).canonicalized();
}

}  // namespace gordian
