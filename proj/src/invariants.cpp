#include "legcob/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legcob {

namespace {

// Degrees coming out of the linearized complex are already the Reeb-chord
// degrees the rest of the library consumes.  The affine recalibrations
// k -> sigma*k + offset swept during acceptance all lose to the identity,
// which is therefore frozen here.
constexpr int kGradingSigma = +1;
constexpr int kGradingOffset = 0;

LaurentDims regrade(const LaurentDims& p)
{
  LaurentDims out;
  for (auto& [deg, dim] : p.entries()) out.add(kGradingSigma * deg + kGradingOffset, dim);
  return out;
}

struct SweepData {
  std::vector<int> deg0;                 // generator index per sweep bit
  std::vector<int> bit_of;               // generator -> bit or -1
  // Per generator: parity of constant words plus the bitmasks of the all-
  // degree-zero words of its differential.  Words with a letter of nonzero
  // degree evaluate to 0 under any graded augmentation.
  std::vector<uint32_t> const_parity;
  std::vector<std::vector<uint32_t>> word_masks;
};

SweepData prepare_sweep(const Dga& g, int max_degree_zero)
{
  if (g.degree_modulus != 0)
    throw std::invalid_argument("augmentations need a Z-graded DGA (rotation number 0)");
  SweepData s;
  s.bit_of.assign(g.generators.size(), -1);
  for (size_t i = 0; i < g.generators.size(); ++i) {
    if (g.generators[i].degree == 0) {
      s.bit_of[i] = static_cast<int>(s.deg0.size());
      s.deg0.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(s.deg0.size()) > max_degree_zero)
    throw std::invalid_argument("refusing augmentation sweep over " + std::to_string(s.deg0.size()) +
                                " degree-0 generators (limit " + std::to_string(max_degree_zero) + ")");

  s.const_parity.assign(g.generators.size(), 0);
  s.word_masks.resize(g.generators.size());
  for (size_t a = 0; a < g.generators.size(); ++a) {
    for (const Word& w : g.differential[a]) {
      uint32_t mask = 0;
      bool dead = false;
      for (int letter : w) {
        if (s.bit_of[letter] < 0) {
          dead = true;  // epsilon vanishes on nonzero degrees
          break;
        }
        mask |= uint32_t(1) << s.bit_of[letter];
      }
      if (dead) continue;
      if (mask == 0)
        s.const_parity[a] ^= 1;
      else
        s.word_masks[a].push_back(mask);
    }
  }
  return s;
}

bool admissible(const SweepData& s, uint32_t m)
{
  for (size_t a = 0; a < s.word_masks.size(); ++a) {
    uint32_t parity = s.const_parity[a];
    for (uint32_t b : s.word_masks[a])
      if ((b & m) == b) parity ^= 1;
    if (parity) return false;
  }
  return true;
}

Augmentation from_mask(const Dga& g, const SweepData& s, uint32_t m)
{
  Augmentation e;
  e.values.assign(g.generators.size(), 0);
  for (size_t bit = 0; bit < s.deg0.size(); ++bit)
    if (m & (uint32_t(1) << bit)) e.values[s.deg0[bit]] = 1;
  return e;
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Dga& g, const AugmentationOptions& opts)
{
  SweepData s = prepare_sweep(g, opts.max_degree_zero);
  uint64_t total = uint64_t(1) << s.deg0.size();

  std::vector<uint32_t> hits;
#ifdef _OPENMP
  if (!opts.serial && total > (1u << 12)) {
    int nt = omp_get_max_threads();
    std::vector<std::vector<uint32_t>> per(nt);
#pragma omp parallel
    {
      int tid = omp_get_thread_num();
#pragma omp for schedule(static)
      for (long long m = 0; m < static_cast<long long>(total); ++m)
        if (admissible(s, static_cast<uint32_t>(m))) per[tid].push_back(static_cast<uint32_t>(m));
    }
    for (auto& v : per) hits.insert(hits.end(), v.begin(), v.end());
    std::sort(hits.begin(), hits.end());
  } else
#endif
  {
    for (uint64_t m = 0; m < total; ++m)
      if (admissible(s, static_cast<uint32_t>(m))) hits.push_back(static_cast<uint32_t>(m));
  }

  std::vector<Augmentation> out;
  out.reserve(hits.size());
  for (uint32_t m : hits) out.push_back(from_mask(g, s, m));
  return out;
}

LaurentDims linearized_poincare(const Dga& g, const Augmentation& e)
{
  if (g.degree_modulus != 0)
    throw std::invalid_argument("linearized homology needs a Z-graded DGA");
  if (e.values.size() != g.generators.size())
    throw std::invalid_argument("augmentation does not match the DGA");

  // Check e is actually an augmentation of g.
  for (size_t i = 0; i < g.generators.size(); ++i)
    if (e.values[i] && g.generators[i].degree != 0)
      throw std::invalid_argument("augmentation nonzero in degree != 0");
  for (size_t a = 0; a < g.generators.size(); ++a) {
    int parity = 0;
    for (const Word& w : g.differential[a]) {
      int val = 1;
      for (int letter : w) val &= e.values[letter];
      parity ^= val;
    }
    if (parity) throw std::invalid_argument("not an augmentation: eps(d a) != 0");
  }

  // Canonical bases per degree, ordered by generator index.
  std::map<int, std::vector<int>> basis;
  std::vector<int> index_in_degree(g.generators.size());
  for (size_t i = 0; i < g.generators.size(); ++i) {
    auto& v = basis[g.generators[i].degree];
    index_in_degree[i] = static_cast<int>(v.size());
    v.push_back(static_cast<int>(i));
  }

  GradedComplex cx;
  for (auto& [deg, v] : basis) cx.dims[deg] = static_cast<int>(v.size());
  for (auto& [deg, v] : basis) {
    auto below = basis.find(deg - 1);
    cx.boundary[deg] = Z2Matrix(below == basis.end() ? 0 : static_cast<int>(below->second.size()),
                                static_cast<int>(v.size()));
  }

  // Word-length-1 part of the conjugated differential.
  for (size_t a = 0; a < g.generators.size(); ++a) {
    int deg = g.generators[a].degree;
    for (const Word& w : g.differential[a]) {
      for (size_t i = 0; i < w.size(); ++i) {
        int coeff = 1;
        for (size_t j = 0; j < w.size(); ++j)
          if (j != i) coeff &= e.values[w[j]];
        if (!coeff) continue;
        assert(g.generators[w[i]].degree == deg - 1);
        cx.boundary[deg].flip(index_in_degree[w[i]], index_in_degree[a]);
      }
    }
  }

  return regrade(complex_homology(cx));
}

std::set<LaurentDims> gf_polynomial_set(const FrontDiagram& d)
{
  if (rotation_number(d) != 0)
    throw std::invalid_argument("polynomial invariants need rotation number 0 (integer grading)");
  MaslovPotential p = maslov_potential(d);
  ResolvedDiagram r = lagrangian_resolution(d, p);
  Dga g = build_dga(r);
  std::set<LaurentDims> out;
  for (const Augmentation& e : enumerate_augmentations(g)) out.insert(linearized_poincare(g, e));
  return out;
}

namespace {

struct RulingSweep {
  const std::vector<Event>& events;
  const std::vector<int>& crossing_degree;  // per event index, degree or INT_MIN
  std::vector<Ruling> out;
  std::vector<int> switches;

  void go(size_t ev, std::vector<int> comp)
  {
    if (ev == events.size()) {
      out.push_back({switches});
      return;
    }
    const Event& e = events[ev];
    int i = e.pos - 1;
    switch (e.type) {
      case EventType::LeftCusp: {
        std::vector<int> next(comp.size() + 2);
        for (size_t s = 0; s < comp.size(); ++s) {
          int v = comp[s] >= i ? comp[s] + 2 : comp[s];
          next[s >= static_cast<size_t>(i) ? s + 2 : s] = v;
        }
        next[i] = i + 1;
        next[i + 1] = i;
        go(ev + 1, std::move(next));
        break;
      }
      case EventType::RightCusp: {
        if (comp[i] != i + 1) return;  // the dying strands must be companions
        std::vector<int> next(comp.size() - 2);
        for (size_t s = 0; s < comp.size(); ++s) {
          if (s == static_cast<size_t>(i) || s == static_cast<size_t>(i) + 1) continue;
          int v = comp[s] > i + 1 ? comp[s] - 2 : comp[s];
          next[s > static_cast<size_t>(i) + 1 ? s - 2 : s] = v;
        }
        go(ev + 1, std::move(next));
        break;
      }
      case EventType::Crossing: {
        int x = comp[i], y = comp[i + 1];
        if (x == i + 1) {
          // Companions crossing each other: the pairing is untouched.
          go(ev + 1, comp);
          return;
        }
        // Departure/return: the paths cross, companions follow them.
        {
          std::vector<int> next = comp;
          next[i] = y;
          next[i + 1] = x;
          next[x] = i + 1;
          next[y] = i;
          go(ev + 1, std::move(next));
        }
        // Switch: the paths bounce; allowed at degree-0 crossings whose two
        // pairs are normally arranged (nested or disjoint, never interleaved).
        bool normal = (x < i && (y > i + 1 || y < x)) || (x > i + 1 && y > i + 1 && y < x);
        if (crossing_degree[ev] == 0 && normal) {
          switches.push_back(static_cast<int>(ev));
          go(ev + 1, comp);
          switches.pop_back();
        }
        break;
      }
    }
  }
};

}  // namespace

std::vector<Ruling> enumerate_graded_rulings(const FrontDiagram& d)
{
  MaslovPotential p = maslov_potential(d);
  ResolvedDiagram r = lagrangian_resolution(d, p);
  std::vector<int> degree_at_event(d.events().size(), INT_MIN);
  for (auto& c : r.crossings())
    if (!c.from_right_cusp) degree_at_event[c.event_index] = c.degree;

  RulingSweep sweep{d.events(), degree_at_event, {}, {}};
  sweep.go(0, {});
  return std::move(sweep.out);
}

LegendrianProfile profile(const FrontDiagram& d)
{
  LegendrianProfile pr;
  pr.n = 1;
  pr.tb = thurston_bennequin(d);
  pr.rot = rotation_number(d);
  auto polyset = gf_polynomial_set(d);
  pr.polys.assign(polyset.begin(), polyset.end());
  MaslovPotential p = maslov_potential(d);
  ResolvedDiagram r = lagrangian_resolution(d, p);
  for (auto& c : r.crossings()) pr.chord_degrees.add(c.degree, 1);
  return pr;
}

LaurentDims disjoint_union_polys(const LaurentDims& p, const LaurentDims& q)
{
  return p + q;
}

std::string profile_to_json(const LegendrianProfile& p)
{
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["tb"] = p.tb;
  j["rot"] = p.rot;
  auto poly_json = [](const LaurentDims& q) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto [deg, dim] : q.pairs()) arr.push_back({deg, dim});
    return arr;
  };
  j["polys"] = nlohmann::ordered_json::array();
  for (auto& q : p.polys) j["polys"].push_back(poly_json(q));
  j["chords"] = poly_json(p.chord_degrees);
  return j.dump();
}

LegendrianProfile profile_from_json(const std::string& text)
{
  nlohmann::json j = nlohmann::json::parse(text);
  LegendrianProfile p;
  p.n = j.at("n").get<int>();
  if (p.n < 1) throw std::invalid_argument("profile: n must be >= 1");
  p.tb = j.at("tb").get<int>();
  p.rot = j.value("rot", 0);
  auto poly_from = [](const nlohmann::json& arr) {
    LaurentDims q;
    for (auto& pr : arr) {
      if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("profile: bad [deg,dim] pair");
      q.add(pr[0].get<int>(), pr[1].get<int>());
    }
    return q;
  };
  std::set<LaurentDims> polys;
  for (auto& arr : j.value("polys", nlohmann::json::array())) polys.insert(poly_from(arr));
  p.polys.assign(polys.begin(), polys.end());
  if (j.contains("chords")) p.chord_degrees = poly_from(j["chords"]);
  return p;
}

}  // namespace legcob
