#include "legcob/obstruct.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace legcob {

namespace {

const char* kCiteGfExistence =
    "a graded normal ruling (equivalently an augmentation) certifies a linear-at-infinity "
    "generating family";
const char* kCiteGenus = "tb(+) - tb(-) = -chi(L, Lambda+) for connected orientable knot cobordisms";
const char* kCiteConcordance =
    "a gf-compatible concordance induces an isomorphism of generating family cohomologies";
const char* kCiteCobordLes =
    "cobordism long exact sequence ... -> GH^k(f-) -> GH^k(f+) -> H^(k+1)(L, Lambda+) -> ...";
const char* kCiteFilling = "filling isomorphism GH^k(f+) = H^(k+1)(L, Lambda+)";
const char* kCiteDuality =
    "duality long exact sequence ... -> GH^(k-1)(f) -> GH_(n-k)(f) -> H^k(Lambda) -> ...";
const char* kCiteArnold = "chord bound r_i + r_(n-i) >= b_i from the duality sequence";

std::string poly_list(const std::vector<LaurentDims>& polys)
{
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < polys.size(); ++i) {
    if (i) os << "; ";
    os << polys[i].str();
  }
  os << "}";
  return os.str();
}

// Greedy feasibility where some slots (unknown cobordism topology) are free
// nonnegative values.  Tracks the interval of achievable running ranks.
bool les_feasible_with_free(const std::vector<long long>& v, const std::vector<char>& free_slot)
{
  const long long kInf = std::numeric_limits<long long>::max() / 4;
  long long lo = 0, hi = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (free_slot[i]) {
      lo = 0;
      hi = kInf;
      continue;
    }
    long long nlo = v[i] - hi, nhi = v[i] - lo;
    lo = std::max<long long>(nlo, 0);
    hi = nhi;
    if (hi < 0 || lo > hi) return false;
  }
  return lo == 0;
}

}  // namespace

std::string report_to_json(const ObstructionReport& r)
{
  nlohmann::ordered_json j;
  j["verdict"] = r.obstructed ? "obstructed" : "not_obstructed";
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["cite"] = c.cite;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  j["genus"] = r.genus;
  return j.dump();
}

std::optional<int> genus_constraint(int tb_minus, int tb_plus, int n)
{
  if (n != 1)
    throw std::invalid_argument("genus constraint applies to knots (n = 1); use the LES checks directly");
  int diff = tb_plus - tb_minus;
  if (diff < 0 || diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

LaurentDims knot_betti()
{
  LaurentDims b;
  b.add(0, 1);
  b.add(1, 1);
  return b;
}

LaurentDims h_rel_knot_cobordism(int genus)
{
  LaurentDims h;
  if (genus > 0) h.add(1, 2 * genus);
  return h;
}

LesResult cobordism_les_check(const LaurentDims& p_minus, const LaurentDims& p_plus,
                              const LaurentDims& h_rel)
{
  int lo = 0, hi = 0;
  auto widen = [&](const LaurentDims& p, int shift) {
    if (p.empty()) return;
    lo = std::min(lo, p.min_degree() + shift);
    hi = std::max(hi, p.max_degree() + shift);
  };
  widen(p_minus, 0);
  widen(p_plus, 0);
  widen(h_rel, -1);

  std::vector<long long> v;
  for (int k = lo; k <= hi; ++k) {
    v.push_back(p_minus.at(k));
    v.push_back(p_plus.at(k));
    v.push_back(h_rel.at(k + 1));
  }
  return les_feasible(v);
}

LesResult duality_feasible(const LaurentDims& p, int n, const LaurentDims& betti)
{
  int lo = 0, hi = 0;
  auto widen = [&](int a, int b) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  };
  if (!p.empty()) {
    widen(p.min_degree(), p.max_degree() + 1);         // GH^(k-1) support
    widen(n - p.max_degree(), n - p.min_degree());     // GH_(n-k) support
  }
  if (!betti.empty()) widen(betti.min_degree(), betti.max_degree());

  std::vector<long long> v;
  for (int k = lo; k <= hi; ++k) {
    v.push_back(p.at(k - 1));
    v.push_back(p.at(n - k));
    v.push_back(betti.at(k));
  }
  return les_feasible(v);
}

ArnoldResult arnold_check(const LaurentDims& chords, int n, const LaurentDims& betti)
{
  ArnoldResult res;
  for (int i = 0; i <= n; ++i) {
    int margin = chords.at(i) + chords.at(n - i) - betti.at(i);
    res.margins[i] = margin;
    if (margin < 0) res.pass = false;
  }
  return res;
}

namespace {

// LES feasibility for a cobordism between n >= 2 Legendrians, where the
// topology of L is unknown: H^k(L, Lambda+) vanishes for k <= 0 on a
// connected cobordism with nonempty positive end, and is unconstrained for
// 1 <= k <= n+1.
bool higher_dim_les_possible(const LaurentDims& p_minus, const LaurentDims& p_plus, int n)
{
  int lo = 0, hi = n + 2;
  for (const LaurentDims* p : {&p_minus, &p_plus}) {
    if (p->empty()) continue;
    lo = std::min(lo, p->min_degree());
    hi = std::max(hi, p->max_degree());
  }
  std::vector<long long> v;
  std::vector<char> free_slot;
  for (int k = lo; k <= hi; ++k) {
    v.push_back(p_minus.at(k));
    free_slot.push_back(0);
    v.push_back(p_plus.at(k));
    free_slot.push_back(0);
    v.push_back(0);
    free_slot.push_back(k + 1 >= 1 && k + 1 <= n + 1 ? 1 : 0);
  }
  return les_feasible_with_free(v, free_slot);
}

}  // namespace

ObstructionReport obstruct_cobordism(const CobordismQuery& q)
{
  if (q.source.n != q.target.n)
    throw std::invalid_argument("cobordism query mixes Legendrian dimensions " +
                                std::to_string(q.source.n) + " and " + std::to_string(q.target.n));
  if (!q.connected)
    throw std::invalid_argument("only connected orientable cobordisms are implemented");

  ObstructionReport rep;
  auto add = [&](const std::string& name, const char* cite, bool pass, const std::string& detail) {
    rep.checks.push_back({name, cite, pass, detail});
    return pass;
  };

  bool src_gf = add("generating family on negative end", kCiteGfExistence, !q.source.polys.empty(),
                    "polynomial set " + poly_list(q.source.polys));
  bool tgt_gf = add("generating family on positive end", kCiteGfExistence, !q.target.polys.empty(),
                    "polynomial set " + poly_list(q.target.polys));

  if (q.source.n == 1) {
    auto g = genus_constraint(q.source.tb, q.target.tb, 1);
    std::ostringstream gd;
    gd << "tb(+) - tb(-) = " << q.target.tb - q.source.tb;
    if (g)
      gd << " forces genus g = " << *g;
    else
      gd << " admits no nonnegative integer genus";
    add("genus from tb difference", kCiteGenus, g.has_value(), gd.str());

    if (g) {
      rep.genus = {*g};
      if (*g == 0) {
        bool equal_pair = false;
        for (auto& a : q.source.polys)
          for (auto& b : q.target.polys) equal_pair = equal_pair || (a == b);
        add("concordance polynomial match", kCiteConcordance, equal_pair,
            equal_pair ? "matching polynomial on both ends"
                       : "polynomial sets are disjoint, but a concordance is an isomorphism");
      }
      if (src_gf && tgt_gf) {
        bool any = false;
        std::ostringstream det;
        LaurentDims h = h_rel_knot_cobordism(*g);
        for (auto& a : q.source.polys) {
          for (auto& b : q.target.polys) {
            if (cobordism_les_check(a, b, h).feasible) {
              if (!any) det << "feasible for " << a.str() << " -> " << b.str();
              any = true;
            }
          }
        }
        if (!any) det << "no polynomial pair admits an exact sequence at genus " << *g;
        add("cobordism exact sequence", kCiteCobordLes, any, det.str());
      }
    }
  } else if (src_gf && tgt_gf) {
    bool any = false;
    for (auto& a : q.source.polys)
      for (auto& b : q.target.polys) any = any || higher_dim_les_possible(a, b, q.source.n);
    add("cobordism exact sequence (unknown topology)", kCiteCobordLes, any,
        any ? "some polynomial pair admits an exact sequence for some cobordism topology"
            : "no polynomial pair admits an exact sequence for any cobordism topology");
  }

  for (auto& c : rep.checks) rep.obstructed = rep.obstructed || !c.pass;
  if (rep.obstructed) rep.genus.clear();
  return rep;
}

ObstructionReport obstruct_filling(const LegendrianProfile& p)
{
  ObstructionReport rep;
  auto add = [&](const std::string& name, const char* cite, bool pass, const std::string& detail) {
    rep.checks.push_back({name, cite, pass, detail});
    return pass;
  };

  bool gf = add("generating family exists", kCiteGfExistence, !p.polys.empty(),
                "polynomial set " + poly_list(p.polys));

  if (!gf) {
    rep.obstructed = true;
    return rep;
  }

  if (p.n == 1) {
    // A genus-g filling forces GH^*(f) = 2g + t and tb = 2g - 1.
    std::vector<int> genus;
    std::ostringstream det;
    for (auto& poly : p.polys) {
      if (poly.at(1) != 1) continue;
      int twog = poly.at(0);
      if (twog % 2 != 0) continue;
      bool pure = true;
      for (auto& [deg, dim] : poly.entries()) pure = pure && (deg == 0 || deg == 1);
      if (!pure) continue;
      int g = twog / 2;
      if (p.tb != 2 * g - 1) continue;
      genus.push_back(g);
      det << (det.tellp() > 0 ? "; " : "") << poly.str() << " admits genus " << g;
    }
    std::sort(genus.begin(), genus.end());
    genus.erase(std::unique(genus.begin(), genus.end()), genus.end());
    if (genus.empty()) det << "no polynomial has the 2g + t shape with tb = 2g - 1";
    add("filling forces its topology", kCiteFilling, !genus.empty(), det.str());
    rep.genus = genus;
  } else {
    bool ok = false;
    for (auto& poly : p.polys) ok = ok || poly.empty() || poly.min_degree() >= 0;
    add("no negative-degree classes", kCiteFilling, ok,
        ok ? "some polynomial is supported in degrees >= 0"
           : "every polynomial has a class in negative degree, but H^k(L, Lambda+) = 0 for k <= 0");
  }

  for (auto& c : rep.checks) rep.obstructed = rep.obstructed || !c.pass;
  if (rep.obstructed) rep.genus.clear();
  return rep;
}

}  // namespace legcob
