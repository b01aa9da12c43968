#pragma once

#include "omvals/poly.hpp"

namespace omvals {

// Exact Res(f,g) over Z via the subresultant PRS.  Deliberately the slow,
// engine-independent path: it materializes the full integers.
Int naive_resultant(const PIntPoly& f, const PIntPoly& g);

// Exact Disc(g) = (-1)^(n(n-1)/2) Res(g, g') / lc(g).
Int naive_discriminant(const PIntPoly& g);

}  // namespace omvals
