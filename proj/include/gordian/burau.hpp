#ifndef GORDIAN_BURAU_HPP
#define GORDIAN_BURAU_HPP

#include "gordian/braid.hpp"
#include "gordian/poly.hpp"

namespace gordian {

// Conway polynomial of the closure of a braid word, computed independently
// of the skein engine: the Alexander polynomial is read off the reduced
// Burau representation of the braid and normalized to the Conway form via
// z^2 = t - 2 + 1/t.
//
// Requires the closure to be a knot (ValidationError otherwise). A failure
// of the normalization itself signals an implementation bug and raises
// InternalError.
ConwayPolynomial conway_via_matrix(const BraidWord& w);

}  // namespace gordian

#endif  // GORDIAN_BURAU_HPP
