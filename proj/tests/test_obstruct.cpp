#include <doctest.h>

#include "legcob/obstruct.hpp"
#include "oracles.hpp"

using namespace legcob;

namespace {

LaurentDims poly(std::initializer_list<std::pair<int, int>> pairs)
{
  return LaurentDims::from_pairs(std::vector<std::pair<int, int>>(pairs));
}

LegendrianProfile knot_profile(int tb, std::vector<LaurentDims> polys)
{
  LegendrianProfile p;
  p.n = 1;
  p.tb = tb;
  p.polys = std::move(polys);
  return p;
}

const LaurentDims kUnknotPoly = poly({{1, 1}});
const LaurentDims kK1Poly = poly({{0, 2}, {1, 1}});
const LaurentDims kK2Poly = poly({{-2, 1}, {1, 1}, {2, 1}});

}  // namespace

TEST_CASE("genus constraint arithmetic")
{
  CHECK(genus_constraint(1, 1, 1) == 0);
  CHECK(genus_constraint(1, 5, 1) == 2);
  CHECK_FALSE(genus_constraint(2, 1, 1).has_value());
  CHECK_FALSE(genus_constraint(0, 1, 1).has_value());  // odd difference
  CHECK_THROWS_AS(genus_constraint(0, 0, 2), std::invalid_argument);
}

TEST_CASE("genus constraint is defined both ways only on equal tb")
{
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      if (genus_constraint(a, b, 1) && genus_constraint(b, a, 1)) CHECK(a == b);
}

TEST_CASE("relative cohomology tables match the model-surface oracle")
{
  for (int g = 0; g <= 3; ++g) {
    // Connected orientable cobordism between knots: two boundary circles.
    auto cob = oracle::surface_relative_homology(g, 2);
    LaurentDims h = h_rel_knot_cobordism(g);
    CHECK(cob[0] == h.at(0));
    CHECK(cob[1] == h.at(1));
    CHECK(cob[2] == h.at(2));
    // Filling: one boundary circle; GH^k(f) = H^(k+1)(L, Lambda) forces
    // the 2g + t polynomial shape used by obstruct_filling.
    auto fill = oracle::surface_relative_homology(g, 1);
    CHECK(fill[0] == 0);
    CHECK(fill[1] == 2 * g);
    CHECK(fill[2] == 1);
  }
}

TEST_CASE("cobordism LES: identity cylinder is feasible")
{
  CHECK(cobordism_les_check(kK1Poly, kK1Poly, LaurentDims{}).feasible);
}

TEST_CASE("cobordism LES: concordance between different polynomials is not")
{
  CHECK_FALSE(cobordism_les_check(kK1Poly, kK2Poly, LaurentDims{}).feasible);
  CHECK_FALSE(cobordism_les_check(kK2Poly, kK1Poly, LaurentDims{}).feasible);
  // The same holds for the polynomial printed in the reference description
  // of the second knot.
  CHECK_FALSE(cobordism_les_check(kK1Poly, poly({{-1, 1}, {1, 1}, {2, 1}}), LaurentDims{}).feasible);
}

TEST_CASE("cobordism LES agrees with the brute-force rank oracle")
{
  // unknot -> K1 through a genus-1 cobordism, h_rel = 2 in degree 1.
  LaurentDims h = h_rel_knot_cobordism(1);
  auto res = cobordism_les_check(kUnknotPoly, kK1Poly, h);
  std::vector<long long> spliced;
  for (int k = -1; k <= 2; ++k) {
    spliced.push_back(kUnknotPoly.at(k));
    spliced.push_back(kK1Poly.at(k));
    spliced.push_back(h.at(k + 1));
  }
  CHECK(res.feasible == oracle::les_by_bruteforce(spliced));
  CHECK(res.feasible);
}

TEST_CASE("obstruct_cobordism: the two m(5_2) classes in either order")
{
  auto a = knot_profile(1, {kK1Poly});
  auto b = knot_profile(1, {kK2Poly});
  for (auto [src, tgt] : {std::pair{a, b}, std::pair{b, a}}) {
    ObstructionReport rep = obstruct_cobordism({src, tgt, true});
    CHECK(rep.obstructed);
    // Check chain: tb equal -> genus 0 -> concordance polynomial mismatch.
    bool genus_pass = false, concordance_fail = false;
    for (auto& c : rep.checks) {
      if (c.name == "genus from tb difference") genus_pass = c.pass;
      if (c.name == "concordance polynomial match") concordance_fail = !c.pass;
    }
    CHECK(genus_pass);
    CHECK(concordance_fail);
  }
}

TEST_CASE("obstruct_cobordism: reflexivity")
{
  for (auto& p : {kUnknotPoly, kK1Poly, kK2Poly}) {
    auto prof = knot_profile(p == kUnknotPoly ? -1 : 1, {p});
    ObstructionReport rep = obstruct_cobordism({prof, prof, true});
    CHECK_FALSE(rep.obstructed);
    REQUIRE(rep.genus.size() == 1);
    CHECK(rep.genus[0] == 0);
  }
}

TEST_CASE("obstruct_cobordism: tb drop obstructs (asymmetry)")
{
  auto a = knot_profile(2, {kK1Poly});
  auto b = knot_profile(1, {kK1Poly});
  CHECK(obstruct_cobordism({a, b, true}).obstructed);
}

TEST_CASE("obstruct_cobordism: unknot to K1 across genus one")
{
  auto rep = obstruct_cobordism({knot_profile(-1, {kUnknotPoly}), knot_profile(1, {kK1Poly}), true});
  CHECK_FALSE(rep.obstructed);
  REQUIRE(rep.genus.size() == 1);
  CHECK(rep.genus[0] == 1);
}

TEST_CASE("obstruct_cobordism rejects mixed dimensions and disconnected queries")
{
  LegendrianProfile a = knot_profile(0, {kUnknotPoly});
  LegendrianProfile b = a;
  b.n = 2;
  CHECK_THROWS_AS(obstruct_cobordism({a, b, true}), std::invalid_argument);
  CHECK_THROWS_AS(obstruct_cobordism({a, a, false}), std::invalid_argument);
}

TEST_CASE("obstruct_filling on the knot classes")
{
  auto k1 = obstruct_filling(knot_profile(1, {kK1Poly}));
  CHECK_FALSE(k1.obstructed);
  CHECK(k1.genus == std::vector<int>{1});

  auto k2 = obstruct_filling(knot_profile(1, {kK2Poly}));
  CHECK(k2.obstructed);

  auto unknot = obstruct_filling(knot_profile(-1, {kUnknotPoly}));
  CHECK_FALSE(unknot.obstructed);
  CHECK(unknot.genus == std::vector<int>{0});

  // The 2g + t shape alone is not enough: tb must be 2g - 1.
  auto wrong_tb = obstruct_filling(knot_profile(3, {kK1Poly}));
  CHECK(wrong_tb.obstructed);

  // No generating family at all.
  auto empty = obstruct_filling(knot_profile(0, {}));
  CHECK(empty.obstructed);
}

TEST_CASE("obstruct_filling in higher dimensions: negative degrees obstruct")
{
  LegendrianProfile saucer;
  saucer.n = 2;
  saucer.tb = 1;
  saucer.polys = {poly({{2, 1}})};
  saucer.chord_degrees = poly({{2, 1}});
  CHECK_FALSE(obstruct_filling(saucer).obstructed);

  LegendrianProfile twisted;
  twisted.n = 2;
  twisted.tb = 1;
  twisted.polys = {poly({{-1, 2}, {0, 1}, {1, 1}, {2, 3}})};
  twisted.chord_degrees = poly({{-1, 2}, {0, 1}, {1, 1}, {2, 3}});
  CHECK(obstruct_filling(twisted).obstructed);
}

TEST_CASE("higher-dimensional cobordism LES with unknown topology")
{
  LegendrianProfile saucer;
  saucer.n = 2;
  saucer.tb = 1;
  saucer.polys = {poly({{2, 1}})};
  LegendrianProfile twisted = saucer;
  twisted.polys = {poly({{-1, 2}, {0, 1}, {1, 1}, {2, 3}})};

  for (auto [src, tgt] : {std::pair{saucer, twisted}, std::pair{twisted, saucer}})
    CHECK(obstruct_cobordism({src, tgt, true}).obstructed);
  CHECK_FALSE(obstruct_cobordism({saucer, saucer, true}).obstructed);
}

TEST_CASE("duality feasibility across the produced polynomials")
{
  LaurentDims betti = knot_betti();
  CHECK(duality_feasible(kUnknotPoly, 1, betti).feasible);
  CHECK(duality_feasible(kK1Poly, 1, betti).feasible);
  CHECK(duality_feasible(kK2Poly, 1, betti).feasible);
  CHECK(duality_feasible(poly({{-1, 1}, {0, 4}, {1, 2}}), 1, betti).feasible);
  CHECK(duality_feasible(poly({{-1, 1}, {1, 2}}), 1, betti).feasible);
  CHECK(duality_feasible(poly({{-3, 1}, {1, 1}, {3, 1}}), 1, betti).feasible);
}

TEST_CASE("duality feasibility detects impossible dimension patterns")
{
  LaurentDims betti = knot_betti();
  // A class in degree 2 with no partner in degree -2.
  CHECK_FALSE(duality_feasible(poly({{-1, 1}, {1, 1}, {2, 1}}), 1, betti).feasible);
  // More classes below degree -1 than above degree 1.
  CHECK_FALSE(duality_feasible(poly({{-1, 2}, {1, 1}}), 1, betti).feasible);
}

TEST_CASE("duality for the flying-saucer sphere")
{
  LaurentDims sphere;
  sphere.add(0, 1);
  sphere.add(2, 1);
  CHECK(duality_feasible(poly({{2, 1}}), 2, sphere).feasible);
}

TEST_CASE("arnold check on knots and manual surfaces")
{
  auto unknot = arnold_check(poly({{1, 1}}), 1, knot_betti());
  CHECK(unknot.pass);
  CHECK(unknot.margins.at(0) == 0);
  CHECK(unknot.margins.at(1) == 0);

  LaurentDims sphere;
  sphere.add(0, 1);
  sphere.add(2, 1);
  auto lambda1 = arnold_check(poly({{-1, 2}, {0, 1}, {1, 1}, {2, 3}}), 2, sphere);
  CHECK(lambda1.pass);

  auto empty = arnold_check(LaurentDims{}, 1, knot_betti());
  CHECK_FALSE(empty.pass);
  CHECK(empty.margins.at(0) == -1);
}

TEST_CASE("report JSON has the documented schema")
{
  auto rep = obstruct_filling(knot_profile(-1, {kUnknotPoly}));
  std::string j = report_to_json(rep);
  CHECK(j.find("\"verdict\":\"not_obstructed\"") != std::string::npos);
  CHECK(j.find("\"checks\":[{") != std::string::npos);
  CHECK(j.find("\"genus\":[0]") != std::string::npos);
  CHECK(j.rfind("{\"verdict\"", 0) == 0);

  auto rep2 = obstruct_filling(knot_profile(1, {kK2Poly}));
  CHECK(report_to_json(rep2).find("\"verdict\":\"obstructed\"") != std::string::npos);
}
