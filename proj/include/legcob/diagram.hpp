#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace legcob {

enum class EventType { LeftCusp, RightCusp, Crossing };

/// One column of a plat-position front: a cusp or a crossing acting on the
/// live strands at 1-based position pos (counted from the top).
struct Event {
  EventType type;
  int pos;
  bool operator==(const Event& o) const { return type == o.type && pos == o.pos; }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_, std::string token_)
      : std::runtime_error(what), line(line_), token(std::move(token_))
  {
  }
  int line;
  std::string token;
};

struct DiagramError : std::runtime_error {
  DiagramError(const std::string& what, int column_) : std::runtime_error(what), column(column_) {}
  /// 1-based index of the offending event (0 when the whole diagram is at fault).
  int column;
};

/// A Legendrian front in plat position, stored as its event sequence.
/// Construction validates strand bookkeeping, plat closure and that tracing
/// the strands yields a single component (a knot).
class FrontDiagram {
 public:
  static FrontDiagram from_events(std::vector<Event> events);

  const std::vector<Event>& events() const { return events_; }
  int crossings() const { return crossings_; }
  int left_cusps() const { return left_cusps_; }
  int right_cusps() const { return right_cusps_; }

  /// Mirror across a horizontal axis (top strand becomes bottom strand).
  FrontDiagram mirrored_z() const;

 private:
  FrontDiagram() = default;
  std::vector<Event> events_;
  int crossings_ = 0;
  int left_cusps_ = 0;
  int right_cusps_ = 0;
};

/// Parses the front file format: one event per line, `L <pos>` | `R <pos>` |
/// `X <pos>`, `#` comments, blank lines ignored.
FrontDiagram parse_front(const std::string& text);

/// Built-in diagrams: unknot, trefoil, m52_K1, m52_K2, m821, and
/// twist(<m>,<word>) with m <= -3 and word of length |m+2| over
/// {Z+,Z-,S+,S-}.
FrontDiagram builtin(const std::string& name);

/// Writhe of the front minus the number of right cusps.
int thurston_bennequin(const FrontDiagram& d);

/// Half the difference of down-cusp and up-cusp counts along the oriented
/// knot; the traversal starts along the first left cusp's upper strand.
int rotation_number(const FrontDiagram& d);

/// Maslov potential on the strands.  A "segment" is a maximal strand piece
/// between two cusps (the potential is constant through crossings, so finer
/// subdivisions carry the same value).  Segment ids are assigned in birth
/// order; segment 0 is the first left cusp's upper strand.
struct MaslovPotential {
  /// modulus == 0 means a genuine integer potential (rotation number zero),
  /// normalized so the minimum value is 0.  Otherwise values live in
  /// [0, modulus) with modulus = 2*|rotation|.
  int modulus = 0;
  std::vector<int> by_segment;
};

MaslovPotential maslov_potential(const FrontDiagram& d);

/// Lagrangian resolution: a 4-valent planar diagram whose crossings are the
/// front crossings plus one crossing per right cusp.  Ports at a crossing
/// are named by compass direction; the strand entering at WU leaves at EL
/// and is the upper strand of the Reeb chord.
enum class Port : int { WU = 0, WL = 1, EU = 2, EL = 3 };

struct ResolvedCrossing {
  int id;           // 1-based, in column order
  int degree;       // Maslov degree of the Reeb chord
  bool from_right_cusp;
  int event_index;  // which event produced it (0-based)
};

struct ArcEnd {
  int node = -1;    // crossing index (0-based into crossings())
  Port port = Port::WU;
};

class ResolvedDiagram {
 public:
  const std::vector<ResolvedCrossing>& crossings() const { return crossings_; }

  /// Follow the arc attached at (node, port) to its other end.
  ArcEnd neighbor(int node, Port port) const { return adj_[static_cast<size_t>(node) * 4 + static_cast<int>(port)]; }

  /// Tangent turning picked up along that arc, in units of pi/2: +2 for a
  /// left U-turn through a cusp, -2 for a right one, 0 for a straight run.
  int turn(int node, Port port) const { return turn_[static_cast<size_t>(node) * 4 + static_cast<int>(port)]; }

  /// 0 for honest integer degrees, otherwise degrees live mod this.
  int degree_modulus() const { return degree_modulus_; }

  /// Complementary faces of the diagram.  face(n, p) is the face on the left
  /// when traversing the arc attached at (n, p) away from n.
  int face(int node, Port port) const { return face_[static_cast<size_t>(node) * 4 + static_cast<int>(port)]; }
  int num_faces() const { return num_faces_; }
  int outer_face() const { return outer_face_; }

  friend ResolvedDiagram lagrangian_resolution(const FrontDiagram& d, const MaslovPotential& p);

 private:
  void build_faces();

  std::vector<ResolvedCrossing> crossings_;
  std::vector<ArcEnd> adj_;  // 4 entries per crossing
  std::vector<int> turn_;
  std::vector<int> face_;
  int num_faces_ = 0;
  int outer_face_ = -1;
  int degree_modulus_ = 0;
};

ResolvedDiagram lagrangian_resolution(const FrontDiagram& d, const MaslovPotential& p);

}  // namespace legcob
