#include "legcob/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace legcob {

namespace {

// Maximal strand pieces between two cusps ("wires"), the cusps joining them,
// and the crossings they pass through.  Everything downstream (orientation,
// Maslov data, resolution) is phrased in terms of this trace.
struct CuspRec {
  bool left;
  int event;
  int upper, lower;  // wire ids
};

struct CrossRec {
  int event;
  int upper, lower;  // wires at positions (pos, pos+1) entering the crossing
};

struct Trace {
  std::vector<CuspRec> cusps;
  std::vector<CrossRec> crossings;
  int n_wires = 0;
  std::vector<int> birth, death;  // wire -> cusp index
  std::vector<int> dir;           // wire -> +1 (left-to-right) or -1
  int components = 0;
};

Trace make_trace(const std::vector<Event>& events)
{
  Trace t;
  std::vector<int> live;
  auto new_wire = [&](int cusp) {
    t.birth.push_back(cusp);
    t.death.push_back(-1);
    return t.n_wires++;
  };

  for (size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    int s = static_cast<int>(live.size());
    switch (e.type) {
      case EventType::LeftCusp: {
        int cusp = static_cast<int>(t.cusps.size());
        int u = new_wire(cusp), l = new_wire(cusp);
        t.cusps.push_back({true, static_cast<int>(i), u, l});
        live.insert(live.begin() + (e.pos - 1), {u, l});
        break;
      }
      case EventType::RightCusp: {
        int cusp = static_cast<int>(t.cusps.size());
        int u = live[e.pos - 1], l = live[e.pos];
        t.cusps.push_back({false, static_cast<int>(i), u, l});
        t.death[u] = t.death[l] = cusp;
        live.erase(live.begin() + (e.pos - 1), live.begin() + (e.pos + 1));
        break;
      }
      case EventType::Crossing: {
        t.crossings.push_back({static_cast<int>(i), live[e.pos - 1], live[e.pos]});
        std::swap(live[e.pos - 1], live[e.pos]);
        break;
      }
    }
    (void)s;
  }

  // Component count: wires joined at cusps.
  std::vector<int> parent(t.n_wires);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& c : t.cusps) parent[find(c.upper)] = find(c.lower);
  int comp = 0;
  for (int w = 0; w < t.n_wires; ++w)
    if (find(w) == w) ++comp;
  t.components = comp;

  // Orientation by traversing the knot, starting rightward along the first
  // left cusp's upper strand.
  t.dir.assign(t.n_wires, 0);
  if (comp == 1 && t.n_wires > 0) {
    int w = t.cusps[0].upper;
    int d = +1;
    do {
      t.dir[w] = d;
      const CuspRec& c = d > 0 ? t.cusps[t.death[w]] : t.cusps[t.birth[w]];
      w = (c.upper == w) ? c.lower : c.upper;
      d = -d;
    } while (w != t.cusps[0].upper);
  }
  return t;
}

void validate(const std::vector<Event>& events)
{
  int strands = 0;
  for (size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    int col = static_cast<int>(i) + 1;
    switch (e.type) {
      case EventType::LeftCusp:
        if (e.pos < 1 || e.pos > strands + 1)
          throw DiagramError("left cusp position " + std::to_string(e.pos) + " out of range with " +
                                 std::to_string(strands) + " strands at column " + std::to_string(col),
                             col);
        strands += 2;
        break;
      case EventType::RightCusp:
        if (e.pos < 1 || e.pos > strands - 1)
          throw DiagramError("right cusp position " + std::to_string(e.pos) + " out of range with " +
                                 std::to_string(strands) + " strands at column " + std::to_string(col),
                             col);
        strands -= 2;
        break;
      case EventType::Crossing:
        if (e.pos < 1 || e.pos > strands - 1)
          throw DiagramError("crossing position " + std::to_string(e.pos) + " out of range with " +
                                 std::to_string(strands) + " strands at column " + std::to_string(col),
                             col);
        break;
    }
  }
  if (strands != 0)
    throw DiagramError("plat closure violated: " + std::to_string(strands) + " strands left open", 0);
  if (events.empty()) throw DiagramError("empty diagram", 0);

  Trace t = make_trace(events);
  if (t.components != 1)
    throw DiagramError("diagram has " + std::to_string(t.components) + " components; knots only", 0);
}

// Maslov potential per wire: mu(upper) = mu(lower) + 1 at every cusp.
// The defect around the knot is 2*rotation, so an integer potential exists
// iff the rotation number vanishes; otherwise values are defined mod 2|rot|.
std::vector<int> raw_potential(const Trace& t)
{
  std::vector<int> mu(t.n_wires, 0);
  std::vector<char> seen(t.n_wires, 0);
  std::deque<int> queue{t.cusps[0].upper};
  seen[t.cusps[0].upper] = 1;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int cusp : {t.birth[w], t.death[w]}) {
      const CuspRec& c = t.cusps[cusp];
      int other = (c.upper == w) ? c.lower : c.upper;
      int val = (c.upper == w) ? mu[w] - 1 : mu[w] + 1;
      if (!seen[other]) {
        seen[other] = 1;
        mu[other] = val;
        queue.push_back(other);
      }
    }
  }
  return mu;
}

int rotation_from_trace(const Trace& t)
{
  int down = 0, up = 0;
  for (auto& c : t.cusps) {
    bool enters_on_upper = c.left ? (t.dir[c.upper] < 0) : (t.dir[c.upper] > 0);
    if (enters_on_upper)
      ++down;
    else
      ++up;
  }
  assert((down - up) % 2 == 0);
  return (down - up) / 2;
}

// Sign convention for front-crossing Reeb chord degrees: the strand of
// lesser slope (entering from the upper-left) is the top of the chord.
// Calibrated once against the m(5_2) reproductions and frozen.
constexpr int kDegreeSign = +1;

}  // namespace

FrontDiagram FrontDiagram::from_events(std::vector<Event> events)
{
  validate(events);
  FrontDiagram d;
  for (auto& e : events) {
    if (e.type == EventType::Crossing) ++d.crossings_;
    if (e.type == EventType::LeftCusp) ++d.left_cusps_;
    if (e.type == EventType::RightCusp) ++d.right_cusps_;
  }
  d.events_ = std::move(events);
  return d;
}

FrontDiagram FrontDiagram::mirrored_z() const
{
  std::vector<Event> out;
  int strands = 0;
  for (const Event& e : events_) {
    switch (e.type) {
      case EventType::LeftCusp:
        out.push_back({EventType::LeftCusp, strands + 2 - e.pos});
        strands += 2;
        break;
      case EventType::RightCusp:
        out.push_back({EventType::RightCusp, strands - e.pos});
        strands -= 2;
        break;
      case EventType::Crossing:
        out.push_back({EventType::Crossing, strands - e.pos});
        break;
    }
  }
  return from_events(std::move(out));
}

FrontDiagram parse_front(const std::string& text)
{
  std::vector<Event> events;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank
    EventType type;
    if (kind == "L")
      type = EventType::LeftCusp;
    else if (kind == "R")
      type = EventType::RightCusp;
    else if (kind == "X")
      type = EventType::Crossing;
    else
      throw ParseError("unknown event '" + kind + "' on line " + std::to_string(lineno), lineno, kind);
    std::string num;
    if (!(ls >> num) || num.find_first_not_of("0123456789") != std::string::npos || num.empty())
      throw ParseError("expected positive integer position on line " + std::to_string(lineno), lineno, num);
    std::string extra;
    if (ls >> extra)
      throw ParseError("trailing token '" + extra + "' on line " + std::to_string(lineno), lineno, extra);
    events.push_back({type, std::stoi(num)});
  }
  return FrontDiagram::from_events(std::move(events));
}

int thurston_bennequin(const FrontDiagram& d)
{
  Trace t = make_trace(d.events());
  int writhe = 0;
  for (auto& c : t.crossings) writhe += t.dir[c.upper] * t.dir[c.lower];
  return writhe - d.right_cusps();
}

int rotation_number(const FrontDiagram& d)
{
  return rotation_from_trace(make_trace(d.events()));
}

MaslovPotential maslov_potential(const FrontDiagram& d)
{
  Trace t = make_trace(d.events());
  std::vector<int> mu = raw_potential(t);
  int rot = rotation_from_trace(t);

  MaslovPotential p;
  if (rot == 0) {
    int lo = *std::min_element(mu.begin(), mu.end());
    for (int& v : mu) v -= lo;
    p.modulus = 0;
  } else {
    int m = 2 * std::abs(rot);
    for (int& v : mu) v = ((v % m) + m) % m;
    p.modulus = m;
  }
  p.by_segment = std::move(mu);
  return p;
}

ResolvedDiagram lagrangian_resolution(const FrontDiagram& d, const MaslovPotential& p)
{
  Trace t = make_trace(d.events());
  const std::vector<int>& mu = p.by_segment;

  auto reduce = [&](int deg) {
    if (p.modulus == 0) return deg;
    return ((deg % p.modulus) + p.modulus) % p.modulus;
  };

  ResolvedDiagram r;

  // Arcs are built incrementally.  Each live strand position carries a
  // token = one open arc end.  The arc's other end is either already
  // attached to a crossing port (other_known) or is a still-open cup mate.
  // `turn` is the tangent turning when traversing the arc starting from this
  // token's end: +2 units (pi/2 each) through a cup entered on its upper
  // strand, -2 entered on its lower strand, 0 for a cusp-free run.
  struct Token {
    bool other_known = false;
    ArcEnd other;
    int mate = -1;
    int turn = 0;
    int turn_from_other = 0;
  };
  std::vector<Token> tokens;
  std::vector<int> live;

  int n_nodes = d.crossings() + d.right_cusps();
  r.adj_.assign(static_cast<size_t>(n_nodes) * 4, ArcEnd{});
  r.turn_.assign(static_cast<size_t>(n_nodes) * 4, 0);
  r.degree_modulus_ = p.modulus;

  auto connect = [&](const ArcEnd& a, const ArcEnd& b, int turn_from_a) {
    r.adj_[static_cast<size_t>(a.node) * 4 + static_cast<int>(a.port)] = b;
    r.adj_[static_cast<size_t>(b.node) * 4 + static_cast<int>(b.port)] = a;
    r.turn_[static_cast<size_t>(a.node) * 4 + static_cast<int>(a.port)] = turn_from_a;
    r.turn_[static_cast<size_t>(b.node) * 4 + static_cast<int>(b.port)] = -turn_from_a;
  };
  auto bind = [&](int token_idx, int node, Port port) {
    Token& tok = tokens[token_idx];
    ArcEnd here{node, port};
    if (tok.other_known) {
      connect(here, tok.other, tok.turn);
    } else {
      Token& mate = tokens[tok.mate];
      mate.other_known = true;
      mate.other = here;
    }
  };
  auto east_token = [&](int node, Port port) {
    Token t2;
    t2.other_known = true;
    t2.other = {node, port};
    t2.turn = 0;
    tokens.push_back(t2);
    return static_cast<int>(tokens.size()) - 1;
  };

  size_t next_cross = 0;
  size_t next_cusp = 0;
  int node_counter = 0;

  for (size_t i = 0; i < d.events().size(); ++i) {
    const Event& e = d.events()[i];
    switch (e.type) {
      case EventType::LeftCusp: {
        int a = static_cast<int>(tokens.size());
        Token upper, lower;
        upper.mate = a + 1;
        upper.turn = +2;  // leave west on the upper strand, return on the lower
        lower.mate = a;
        lower.turn = -2;
        tokens.push_back(upper);
        tokens.push_back(lower);
        live.insert(live.begin() + (e.pos - 1), {a, a + 1});
        ++next_cusp;
        break;
      }
      case EventType::Crossing: {
        const CrossRec& c = t.crossings[next_cross++];
        int node = node_counter++;
        int deg = reduce(kDegreeSign * (mu[c.upper] - mu[c.lower]));
        r.crossings_.push_back({node + 1, deg, false, static_cast<int>(i)});
        bind(live[e.pos - 1], node, Port::WU);
        bind(live[e.pos], node, Port::WL);
        live[e.pos - 1] = east_token(node, Port::EU);
        live[e.pos] = east_token(node, Port::EL);
        break;
      }
      case EventType::RightCusp: {
        const CuspRec& cusp = t.cusps[next_cusp++];
        int node = node_counter++;
        int deg = reduce(mu[cusp.upper] - mu[cusp.lower]);
        assert(deg == reduce(1));
        r.crossings_.push_back({node + 1, deg, true, static_cast<int>(i)});
        bind(live[e.pos - 1], node, Port::WU);
        bind(live[e.pos], node, Port::WL);
        // The resolution loop: out east-lower, up through the cap, back in
        // east-upper.
        connect({node, Port::EL}, {node, Port::EU}, +2);
        live.erase(live.begin() + (e.pos - 1), live.begin() + (e.pos + 1));
        break;
      }
    }
  }
  r.build_faces();
  return r;
}

void ResolvedDiagram::build_faces()
{
  // Faces are orbits of "cross the arc, then take the next port clockwise".
  auto cw_next = [](Port p) {
    switch (p) {
      case Port::EU: return Port::EL;
      case Port::EL: return Port::WL;
      case Port::WL: return Port::WU;
      case Port::WU: return Port::EU;
    }
    return Port::EU;
  };
  // Face corners span one quadrant; E and W quadrants turn by ~pi, N and S
  // by ~0, so inner faces accumulate +4 quarter-turns and the outer face -4.
  auto corner_turn = [](Port arrival) {
    return (arrival == Port::EU || arrival == Port::WL) ? 2 : 0;
  };

  size_t slots = adj_.size();
  face_.assign(slots, -1);
  num_faces_ = 0;
  outer_face_ = -1;
  for (size_t s0 = 0; s0 < slots; ++s0) {
    if (face_[s0] != -1) continue;
    int id = num_faces_++;
    int turning = 0;
    size_t s = s0;
    do {
      face_[s] = id;
      int node = static_cast<int>(s / 4);
      Port port = static_cast<Port>(s % 4);
      turning += turn_[s];
      ArcEnd other = adj_[s];
      turning += corner_turn(other.port);
      s = static_cast<size_t>(other.node) * 4 + static_cast<int>(cw_next(other.port));
      (void)node;
      (void)port;
    } while (s != s0);
    if (turning == -4) {
      assert(outer_face_ == -1);
      outer_face_ = id;
    } else {
      assert(turning == 4);
    }
  }
  assert(outer_face_ != -1);
}

}  // namespace legcob
