#ifndef GORDIAN_BRAID_HPP
#define GORDIAN_BRAID_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

/// A word in the braid group B_n. Letter k > 0 is the generator sigma_k (a
/// positive crossing between strand positions k and k+1), letter -k is its
/// inverse (a negative crossing). Valid letters satisfy 1 <= |k| <= n-1;
/// the empty word is the trivial braid.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    // Permutation of strand positions induced by the word: result[i] is the
    // final position of the strand starting at position i (0-based).
    std::vector<int> permutation() const;

    // Number of cycles of the permutation = component count of the closure.
    int closure_components() const;

    bool operator==(const BraidWord& rhs) const {
        return strands_ == rhs.strands_ && letters_ == rhs.letters_;
    }

    std::string to_text() const;  // "B3: 1 -2 1 -2"

private:
    int strands_;
    std::vector<int> letters_;
};

// Braid text format: optional header "B<n>:" declaring the strand count,
// then whitespace-separated nonzero integers. Without a header the strand
// count is inferred as max|letter| + 1 (1 for the empty word). '#' starts a
// comment. Throws ParseError on zero letters, malformed tokens, or letters
// exceeding a declared strand count.
BraidWord parse_braid(std::string_view text);

// Standard trace closure as a PD diagram. Crossings appear in word order;
// the crossing count equals the word length; strands not involved in any
// crossing close into free loops. Arc labels are renumbered canonically.
LinkDiagram braid_closure(const BraidWord& w);

/// Location of a Delta-move insertion in a braid word: the 6-letter block
/// is inserted at `position` (0 = before the first letter) acting on the
/// three strands starting at `strand_index`.
struct MoveSite {
    std::size_t position;
    int strand_index;  // 1 <= strand_index <= strands - 2
    int sign;          // +1 or -1
};

// Inserts the Delta-move block (sigma_i sigma_{i+1}^-1)^3 (sign +1) or its
// inverse (sign -1) at the given site, i = strand_index. The block is a
// pure braid, so the closure's component count is unchanged; the z^2
// coefficient of the closure's Conway polynomial changes by exactly +-1.
// Throws ValidationError when the site is out of range or the closure is
// not a knot.
BraidWord apply_delta_move(const BraidWord& w, const MoveSite& site);

// A braid word whose closure is a knot with Conway polynomial 1 + m*z^2
// (the twist-knot family: m = 0 the unknot, m = 1 the trefoil, m = -1 the
// figure-eight knot).
BraidWord twist_knot(int m);

}  // namespace gordian

#endif  // GORDIAN_BRAID_HPP
