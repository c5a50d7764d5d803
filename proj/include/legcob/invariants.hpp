#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "legcob/dga.hpp"
#include "legcob/diagram.hpp"
#include "legcob/laurent.hpp"
#include "legcob/linalg.hpp"

namespace legcob {

/// A graded algebra map DGA -> Z2: nonzero only on degree-0 generators and
/// vanishing on every differential.
struct Augmentation {
  std::vector<uint8_t> values;  // one entry per generator
};

struct AugmentationOptions {
  /// Refuse the 2^k sweep past this many degree-0 generators.
  int max_degree_zero = 24;
  bool serial = false;
};

/// Exhaustive sweep over Z2 assignments on degree-0 generators, keeping the
/// ones that annihilate the differential.  Sorted by assignment bits, and
/// bit-identical whether run serial or parallel.
std::vector<Augmentation> enumerate_augmentations(const Dga& g, const AugmentationOptions& opts = {});

/// Poincare polynomial of the linearized homology at e: conjugate d by
/// a -> a + e(a), take the word-length-1 part, compute homology.  Degrees are
/// Reeb-chord (Conley-Zehnder) degrees.
LaurentDims linearized_poincare(const Dga& g, const Augmentation& e);

/// The deduplicated set of linearized Poincare polynomials over all graded
/// augmentations; the computational stand-in for the set of generating family
/// cohomologies.  Requires rotation number 0.
std::set<LaurentDims> gf_polynomial_set(const FrontDiagram& d);

/// A graded normal ruling, recorded by the event indices of its switches.
struct Ruling {
  std::vector<int> switches;
};

/// Left-to-right sweep over all switch/departure/return choices satisfying
/// normality, with switches only at degree-0 crossings.
std::vector<Ruling> enumerate_graded_rulings(const FrontDiagram& d);

/// Summary consumed by the obstruction engine.  Manual profiles (entered as
/// JSON) are first-class; diagram-derived ones have n = 1.
struct LegendrianProfile {
  int n = 1;
  int tb = 0;
  int rot = 0;
  std::vector<LaurentDims> polys;  // sorted, deduplicated
  LaurentDims chord_degrees;       // histogram of Reeb-chord degrees
};

LegendrianProfile profile(const FrontDiagram& d);

/// Degreewise sum, matching the additivity of the invariant under disjoint
/// union of Legendrians.
LaurentDims disjoint_union_polys(const LaurentDims& p, const LaurentDims& q);

std::string profile_to_json(const LegendrianProfile& p);
LegendrianProfile profile_from_json(const std::string& text);

}  // namespace legcob
