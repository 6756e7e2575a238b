#ifndef GORDIAN_DIAGRAM_HPP
#define GORDIAN_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gordian {

using ArcId = std::int32_t;

/// One crossing of a planar diagram in PD form.
///
/// The quadruple lists the four arc labels counterclockwise starting from
/// the incoming under-strand, so arcs[0] is the under-strand entering the
/// crossing and arcs[2] is it leaving. The over-strand occupies slots 1
/// and 3; which of the two is incoming is not stored but derived from the
/// global orientation of the diagram (see LinkDiagram). The crossing sign
/// follows from that: over-strand entering at slot 3 is a positive
/// crossing, at slot 1 a negative one.
struct Crossing {
    std::array<ArcId, 4> arcs;

    bool operator==(const Crossing& rhs) const { return arcs == rhs.arcs; }
};

/// An oriented link diagram: a list of PD crossings plus a count of
/// crossing-free unknot components (PD codes cannot express those; the
/// zero-crossing unknot is crossings = {} and free_loops = 1).
///
/// Construction validates the diagram: every arc label must appear exactly
/// twice and a consistent orientation of the over-strands must exist. The
/// derived per-crossing orientation and the component count are computed
/// once and cached. Values are immutable after construction.
class LinkDiagram {
public:
    // The zero-crossing unknot.
    static LinkDiagram unknot() { return LinkDiagram({}, 1); }

    // An unlink of n crossing-free components.
    static LinkDiagram unlink(int n) { return LinkDiagram({}, n); }

    // Validates and orients. Throws ValidationError on dangling labels or
    // inconsistent orientation.
    explicit LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::size_t crossing_count() const { return crossings_.size(); }
    int free_loops() const { return free_loops_; }

    // Number of link components (traced arc cycles plus free loops).
    int component_count() const { return n_components_; }

    // Slot (1 or 3) at which the over-strand enters crossing i.
    int over_in_slot(std::size_t i) const { return over_in_[i]; }

    // Derived crossing sign: +1 or -1.
    int sign(std::size_t i) const { return over_in_[i] == 3 ? +1 : -1; }

    // Writhe: sum of crossing signs.
    int writhe() const;

    // Semantic equality: equal canonical forms (same diagram up to arc
    // relabeling and crossing reordering).
    bool operator==(const LinkDiagram& rhs) const { return canonical_key() == rhs.canonical_key(); }
    bool operator!=(const LinkDiagram& rhs) const { return !(*this == rhs); }

    // A flat encoding of the canonical form. Two diagrams have equal keys
    // iff they are equal up to relabeling/reordering. Cached.
    const std::vector<std::int32_t>& canonical_key() const;

    // The diagram rebuilt with canonical consecutive arc labels and
    // crossings in canonical order.
    LinkDiagram canonicalized() const;

    // PD text, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    std::string to_pd() const;

private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<std::uint8_t> over_in_;
    int n_components_ = 0;
    mutable std::vector<std::int32_t> canonical_key_;  // lazily computed
};

// Parses the PD text format: whitespace-separated tokens "X(a,b,c,d)" with
// positive integer arc labels; '#' starts a comment running to end of line.
// Empty input is the zero-crossing unknot. Throws ParseError (syntax) or
// ValidationError (dangling labels, inconsistent orientation).
LinkDiagram parse_pd(std::string_view text);

int component_count(const LinkDiagram& d);

// Exchanges over- and under-strand at the indexed crossing by rotating the
// PD quadruple one position (in the direction that keeps the diagram's
// orientation consistent). Arc labels and crossing order are unchanged, so
// applying twice at the same index returns the original diagram.
LinkDiagram crossing_change(const LinkDiagram& d, std::size_t crossing_index);

// Oriented smoothing of the indexed crossing (the Conway skein L0): the
// crossing is removed and the strands reconnected respecting orientation.
// The result is relabeled canonically. Component count changes by exactly
// one (up or down).
LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t crossing_index);

// Connected sum of two knot diagrams: one arc of each is cut and the ends
// spliced. Throws ValidationError when either input has more than one
// component.
LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace gordian

#endif  // GORDIAN_DIAGRAM_HPP
