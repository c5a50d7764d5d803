#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legcob/invariants.hpp"
#include "legcob/laurent.hpp"
#include "legcob/linalg.hpp"

namespace legcob {

/// Query for a gf-compatible Lagrangian cobordism from source to target.
/// Only connected, orientable cobordisms are implemented; the flag exists so
/// callers state the assumption explicitly.
struct CobordismQuery {
  LegendrianProfile source;  // negative end
  LegendrianProfile target;  // positive end
  bool connected = true;
};

struct CheckResult {
  std::string name;
  std::string cite;
  bool pass = false;
  std::string detail;
};

struct ObstructionReport {
  bool obstructed = false;
  std::vector<CheckResult> checks;
  std::vector<int> genus;  // allowed genus values, when the checks determine them
};

std::string report_to_json(const ObstructionReport& r);

/// Genus forced on a connected orientable cobordism between knots:
/// g = (tb_plus - tb_minus)/2 when that is a nonnegative integer, nothing
/// otherwise (the cobordism is obstructed).  Rejects n != 1.
std::optional<int> genus_constraint(int tb_minus, int tb_plus, int n);

/// Betti numbers of a knot over Z2 (b0 = b1 = 1).
LaurentDims knot_betti();

/// Dimensions of H^*(L, Lambda+) for a connected orientable genus-g
/// cobordism between knots: 2g in degree 1, zero elsewhere.
LaurentDims h_rel_knot_cobordism(int genus);

/// Splices GH^k(f-) -> GH^k(f+) -> H^{k+1}(L, Lambda+) over the full support
/// and decides exactness feasibility.
LesResult cobordism_les_check(const LaurentDims& p_minus, const LaurentDims& p_plus,
                              const LaurentDims& h_rel);

ObstructionReport obstruct_cobordism(const CobordismQuery& q);

ObstructionReport obstruct_filling(const LegendrianProfile& p);

/// Feasibility of the duality long exact sequence
/// ... -> GH^{k-1}(f) -> GH_{n-k}(f) -> H^k(Lambda) -> ...
/// with both generating-family dimensions read off p (the calibrated degree
/// dictionary is the identity; see the grading notes in invariants.cpp).
LesResult duality_feasible(const LaurentDims& p, int n, const LaurentDims& betti);

struct ArnoldResult {
  bool pass = true;
  std::map<int, int> margins;  // i -> r_i + r_{n-i} - b_i
};

/// Chord-count bound r_i + r_{n-i} >= b_i for 0 <= i <= n.
ArnoldResult arnold_check(const LaurentDims& chords, int n, const LaurentDims& betti);

}  // namespace legcob
