#pragma once

// Independent reference implementations used only by the test suite.  None
// of these share code paths with the library routines they check.

#include <cstdint>
#include <map>
#include <vector>

#include "legcob/diagram.hpp"
#include "legcob/laurent.hpp"
#include "legcob/linalg.hpp"

namespace legcob::oracle {

/// Rank over GF(2) by enumerating the whole row span: |span| = 2^rank.
int rank_by_span(const Z2Matrix& m);

/// Rank by Smith-style elimination on a plain bool matrix (row and column
/// operations, no bit packing).
int rank_by_smith(const std::vector<std::vector<int>>& m);

/// Exact-sequence feasibility by exhausting all interior rank vectors with
/// entries bounded by the largest dimension.
bool les_by_bruteforce(const std::vector<long long>& v);

/// Homology dimensions of a graded complex computed through the Smith-style
/// elimination above.
LaurentDims homology_by_smith(const GradedComplex& c);

/// Dimensions of H_k(L, A) over Z2 where L is the compact orientable surface
/// of the given genus with `boundary_circles` boundary components and A is
/// one designated boundary circle, computed from an explicit cell structure.
/// Index k = 0, 1, 2.
std::vector<int> surface_relative_homology(int genus, int boundary_circles);

/// Smooth-knot identification data: |Alexander(-1)| (the determinant) and
/// |Alexander(5)| with all factors of 5 removed.  Both are mirror-invariant
/// and computed from the Wirtinger presentation of the front's underlying
/// smooth diagram.
struct AlexanderSample {
  long long det = 0;       // |Delta(-1)|
  long long at5 = 0;       // |Delta(5)| / 5^v
};

AlexanderSample alexander_sample(const FrontDiagram& d);

}  // namespace legcob::oracle
