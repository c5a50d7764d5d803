#include "legcob/dga.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legcob {

namespace {

// Walking the boundary of a candidate disk counterclockwise (disk on the
// left), arrival at a crossing via a given port admits at most two moves:
// passing straight through, or turning through the single quadrant that has
// the arrival port as its inbound edge.  Quadrants E and W are the positive
// ones, so a mid-walk corner is only possible arriving via WU (corner N) or
// EL (corner S); both are negative and contribute a letter.
Port straight_exit(Port in)
{
  switch (in) {
    case Port::WU: return Port::EL;
    case Port::EL: return Port::WU;
    case Port::WL: return Port::EU;
    case Port::EU: return Port::WL;
  }
  return Port::WU;
}

bool corner_exit(Port in, Port& out)
{
  switch (in) {
    case Port::WU: out = Port::EU; return true;  // corner N
    case Port::EL: out = Port::WL; return true;  // corner S
    default: return false;                        // corners E/W are positive
  }
}

struct DiskSearch {
  const ResolvedDiagram& r;
  const DiskSearchOptions& opts;
  long long paths_explored = 0;

  // visit multiplicity per directed arc, indexed by (node, out-port)
  std::vector<int> visits;

  // Spanning tree of the face-adjacency graph rooted at the outer face,
  // used to evaluate the winding number of a closed boundary path around
  // every face.  tree_slot[f] is a directed arc with face f on its left and
  // the parent face on its right.
  std::vector<int> face_order;  // faces in root-first order (outer omitted)
  std::vector<int> tree_parent;
  std::vector<int> tree_slot;
  std::vector<long long> winding;

  std::map<Word, int> found;  // word -> parity
  Word word;
  int word_deg = 0;
  int turn_sum = 0;  // units of pi/2 picked up along arcs
  int target_deg = 0;
  int extra_visits = 0;

  DiskSearch(const ResolvedDiagram& r_, const DiskSearchOptions& o)
      : r(r_), opts(o), visits(r_.crossings().size() * 4, 0)
  {
    build_face_tree();
  }

  int slot(int node, Port port) const { return node * 4 + static_cast<int>(port); }
  int reverse_slot(int s) const
  {
    ArcEnd other = r.neighbor(s / 4, static_cast<Port>(s % 4));
    return slot(other.node, other.port);
  }

  void build_face_tree()
  {
    int nf = r.num_faces();
    tree_parent.assign(nf, -1);
    tree_slot.assign(nf, -1);
    winding.assign(nf, 0);
    std::vector<char> seen(nf, 0);
    std::vector<int> queue{r.outer_face()};
    seen[r.outer_face()] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (int s = 0; s < static_cast<int>(visits.size()); ++s) {
        if (r.face(s / 4, static_cast<Port>(s % 4)) != f) continue;
        int rs = reverse_slot(s);
        int g = r.face(rs / 4, static_cast<Port>(rs % 4));
        if (seen[g]) continue;
        seen[g] = 1;
        tree_parent[g] = f;
        tree_slot[g] = rs;  // face g lies on the left of rs
        face_order.push_back(g);
        queue.push_back(g);
      }
    }
  }

  // Winding conditions for the current closed path to bound an immersed
  // disk: every face is wound nonnegatively (the outer face has winding 0 by
  // definition), and the face immediately left of each traversed arc carries
  // at least as many disk sheets as the arc is traversed.
  bool windings_admissible()
  {
    for (int f : face_order) {
      int s = tree_slot[f];
      winding[f] = winding[tree_parent[f]] + visits[s] - visits[reverse_slot(s)];
      if (winding[f] < 0) return false;
    }
    winding[r.outer_face()] = 0;
    for (size_t s = 0; s < visits.size(); ++s) {
      if (visits[s] == 0) continue;
      if (winding[r.face(static_cast<int>(s) / 4, static_cast<Port>(s % 4))] < visits[s]) return false;
    }
    return true;
  }

  void run(int start, Port out_port, Port close_port)
  {
    word.clear();
    word_deg = 0;
    turn_sum = 0;
    target_deg = r.crossings()[start].degree - 1;
    step(start, out_port, start, close_port);
  }

  // A closed boundary path is a disk boundary only if the total tangent
  // turning is +2pi and it winds no face negatively.  Negative corners turn
  // by ~0 and the positive corner by ~pi, so the arcs must contribute one
  // net left U-turn.
  bool disk_closes()
  {
    if (turn_sum != 2) return false;
    int m = r.degree_modulus();
    if (m == 0) {
      if (word_deg != target_deg) return false;
    } else if (((word_deg - target_deg) % m + m) % m != 0) {
      return false;
    }
    return windings_admissible();
  }

  void step(int node, Port out_port, int start, Port close_port)
  {
    if (++paths_explored > opts.max_partial_paths)
      throw SearchExplosion("disk search exceeded " + std::to_string(opts.max_partial_paths) +
                            " partial paths");
    int s = slot(node, out_port);
    if (visits[s] >= opts.max_arc_multiplicity) return;
    if (visits[s] > 0 && extra_visits >= opts.max_extra_visits) return;
    if (visits[s] > 0) ++extra_visits;
    ++visits[s];
    turn_sum += r.turn(node, out_port);

    ArcEnd next = r.neighbor(node, out_port);

    if (next.node == start && next.port == close_port && disk_closes()) {
      ++found[word];
      // The boundary may instead continue straight through the start.
    }
    // Straight through, no corner.
    step(next.node, straight_exit(next.port), start, close_port);
    // Negative convex corner, if the arrival port admits one.
    Port corner_out;
    if (corner_exit(next.port, corner_out) && static_cast<int>(word.size()) < opts.max_word_length) {
      word.push_back(next.node);
      word_deg += r.crossings()[next.node].degree;
      step(next.node, corner_out, start, close_port);
      word_deg -= r.crossings()[next.node].degree;
      word.pop_back();
    }

    turn_sum -= r.turn(node, out_port);
    --visits[s];
    if (visits[s] > 0) --extra_visits;
  }
};

std::vector<Word> disks_of(const ResolvedDiagram& r, int gen, const DiskSearchOptions& opts)
{
  DiskSearch search(r, opts);
  // Positive corner in the east quadrant: leave via EL, close arriving at EU.
  search.run(gen, Port::EL, Port::EU);
  // Positive corner in the west quadrant: leave via WU, close arriving at WL.
  search.run(gen, Port::WU, Port::WL);

  std::vector<Word> words;
  for (auto& [w, parity] : search.found)
    if (parity & 1) words.push_back(w);
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

Dga build_dga(const ResolvedDiagram& r, const DiskSearchOptions& opts)
{
  Dga g;
  g.degree_modulus = r.degree_modulus();
  const auto& cr = r.crossings();
  g.generators.reserve(cr.size());
  for (auto& c : cr) g.generators.push_back({"a" + std::to_string(c.id), c.degree});
  g.differential.resize(cr.size());

  int n = static_cast<int>(cr.size());
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (!opts.serial)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      g.differential[i] = disks_of(r, i, opts);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return g;
}

std::vector<Word> differential_of_word(const Dga& g, const Word& w)
{
  std::map<Word, int> acc;
  for (size_t i = 0; i < w.size(); ++i) {
    for (const Word& dw : g.differential[w[i]]) {
      Word spliced;
      spliced.reserve(w.size() - 1 + dw.size());
      spliced.insert(spliced.end(), w.begin(), w.begin() + i);
      spliced.insert(spliced.end(), dw.begin(), dw.end());
      spliced.insert(spliced.end(), w.begin() + i + 1, w.end());
      ++acc[spliced];
    }
  }
  std::vector<Word> out;
  for (auto& [word, parity] : acc)
    if (parity & 1) out.push_back(word);
  return out;
}

IdentityReport check_identities(const Dga& g)
{
  IdentityReport rep;
  for (size_t a = 0; a < g.generators.size(); ++a) {
    for (const Word& w : g.differential[a]) {
      if (!g.degrees_equal(g.word_degree(w), g.generators[a].degree - 1)) {
        rep.ok = false;
        rep.violations.push_back({static_cast<int>(a), w, "leibniz"});
      }
    }
    std::map<Word, int> acc;
    for (const Word& w : g.differential[a])
      for (const Word& dw : differential_of_word(g, w)) ++acc[dw];
    for (auto& [word, parity] : acc) {
      if (parity & 1) {
        rep.ok = false;
        rep.violations.push_back({static_cast<int>(a), word, "d-squared"});
      }
    }
  }
  return rep;
}

}  // namespace legcob
