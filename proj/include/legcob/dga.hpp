#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "legcob/diagram.hpp"

namespace legcob {

struct Generator {
  std::string id;  // crossing identifier, "a<k>" in column order
  int degree;
};

/// A word in the tensor algebra: generator indices in order.  The empty word
/// is the unit 1.
using Word = std::vector<int>;

/// Chekanov-Eliashberg DGA over Z2.  differential[i] is the canonically
/// sorted set of words of d(generators[i]); set membership is coefficient 1.
struct Dga {
  std::vector<Generator> generators;
  std::vector<std::vector<Word>> differential;
  /// 0 for a Z-graded algebra; otherwise degrees only make sense mod this.
  int degree_modulus = 0;

  int degree(int gen) const { return generators[gen].degree; }
  int word_degree(const Word& w) const
  {
    int s = 0;
    for (int g : w) s += generators[g].degree;
    return s;
  }
  bool degrees_equal(int a, int b) const
  {
    if (degree_modulus == 0) return a == b;
    return ((a - b) % degree_modulus + degree_modulus) % degree_modulus == 0;
  }
};

struct SearchExplosion : std::runtime_error {
  explicit SearchExplosion(const std::string& what) : std::runtime_error(what) {}
};

struct DiskSearchOptions {
  /// Abort threshold for the number of partial boundary paths explored.
  long long max_partial_paths = 10'000'000;
  /// How often one directed arc may appear on a single disk boundary.
  /// Immersed disks can double back over an arc when they wind a face more
  /// than once, so 1 is not enough.
  int max_arc_multiplicity = 2;
  /// Total budget of repeat visits along one boundary, which caps how much
  /// of the diagram a single disk may wind twice.
  int max_extra_visits = 4;
  /// Longest negative-corner word considered.  The longest word on the
  /// builtin library is 7 letters; the differential is insensitive to this
  /// cap between 10 and 16 on every diagram tested, while the search tree
  /// explodes without it.
  int max_word_length = 16;
  /// Force single-threaded search (results are identical either way).
  bool serial = false;
};

/// Builds the DGA of a resolved diagram: generators are the crossings, and
/// d(a) collects the boundary words of immersed disks with convex corners
/// and exactly one positive corner at a, negative corners read off
/// counterclockwise.  Throws SearchExplosion past the configured bound.
Dga build_dga(const ResolvedDiagram& r, const DiskSearchOptions& opts = {});

struct IdentityViolation {
  int generator;
  Word word;        // offending word (for Leibniz) or empty for d^2 words
  std::string kind; // "leibniz" or "d-squared"
};

struct IdentityReport {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

/// Verifies graded Leibniz consistency (every word of d(a) has total degree
/// deg(a) - 1) and d^2 = 0.  Violations are report content, not errors.
IdentityReport check_identities(const Dga& g);

/// d of a single word by the Leibniz rule over Z2, for tests and d^2.
std::vector<Word> differential_of_word(const Dga& g, const Word& w);

}  // namespace legcob
