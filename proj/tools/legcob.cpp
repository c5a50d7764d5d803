// legcob: Legendrian front invariants and Lagrangian cobordism obstructions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "legcob/diagram.hpp"
#include "legcob/dga.hpp"
#include "legcob/invariants.hpp"
#include "legcob/obstruct.hpp"

using namespace legcob;
using nlohmann::ordered_json;

namespace {

struct Inputs {
  std::vector<std::string> files;      // positional front files
  std::vector<std::string> file_flag;  // --file
  std::vector<std::string> knots;      // --knot
  std::vector<std::string> profiles;   // --profile (path or inline json)
  int max_aug_gens = 24;
};

std::string slurp(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Legendrians named on the command line, in documented order: positional
/// front files, --file, --knot, --profile.
std::vector<LegendrianProfile> load_profiles(const Inputs& in)
{
  std::vector<LegendrianProfile> out;
  auto from_diagram = [&](const FrontDiagram& d) { out.push_back(profile(d)); };
  for (auto& f : in.files) from_diagram(parse_front(slurp(f)));
  for (auto& f : in.file_flag) from_diagram(parse_front(slurp(f)));
  for (auto& k : in.knots) from_diagram(builtin(k));
  for (auto& p : in.profiles) {
    std::string text = (!p.empty() && p[0] == '{') ? p : slurp(p);
    out.push_back(profile_from_json(text));
  }
  return out;
}

/// Diagram-backed commands refuse manual profiles.
std::vector<FrontDiagram> load_diagrams(const Inputs& in)
{
  if (!in.profiles.empty())
    throw std::invalid_argument("this subcommand needs a front diagram, not a manual profile");
  std::vector<FrontDiagram> out;
  for (auto& f : in.files) out.push_back(parse_front(slurp(f)));
  for (auto& f : in.file_flag) out.push_back(parse_front(slurp(f)));
  for (auto& k : in.knots) out.push_back(builtin(k));
  return out;
}

void need(size_t got, size_t want, const std::string& cmd)
{
  if (got != want)
    throw std::invalid_argument(cmd + " needs exactly " + std::to_string(want) +
                                " Legendrian input" + (want == 1 ? "" : "s") + ", got " +
                                std::to_string(got));
}

ordered_json poly_json(const LaurentDims& p)
{
  ordered_json arr = ordered_json::array();
  for (auto [deg, dim] : p.pairs()) arr.push_back({deg, dim});
  return arr;
}

Dga dga_of(const FrontDiagram& d)
{
  return build_dga(lagrangian_resolution(d, maslov_potential(d)));
}

void print_report(const ObstructionReport& rep, bool json)
{
  if (json) {
    std::cout << report_to_json(rep) << "\n";
    return;
  }
  std::cout << "verdict: " << (rep.obstructed ? "OBSTRUCTED" : "not obstructed") << "\n";
  for (auto& c : rep.checks) {
    std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
    std::cout << "         " << c.detail << "\n";
    std::cout << "         cite: " << c.cite << "\n";
  }
  if (!rep.genus.empty()) {
    std::cout << "  genus:";
    for (int g : rep.genus) std::cout << " " << g;
    std::cout << "\n";
  }
}

int run(int argc, char** argv)
{
  CLI::App app{"Generating-family invariants of Legendrian fronts and cobordism obstructions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON");

  Inputs in;
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit machine-readable JSON");
    cmd->add_option("fronts", in.files, "front files (one event per line: L/R/X <pos>)");
    cmd->add_option("--file", in.file_flag, "front file");
    cmd->add_option("--knot", in.knots,
                    "builtin diagram: unknot, trefoil, m52_K1, m52_K2, m821, twist(<m>,<word>)");
    cmd->add_option("--profile", in.profiles, "manual Legendrian profile (JSON file or inline)");
    cmd->add_option("--max-aug-gens", in.max_aug_gens,
                    "degree-0 generator limit for the augmentation sweep");
  };

  for (const char* name : {"invariants", "dga", "augs", "rulings", "polys", "profile",
                           "obstruct-cobordism", "obstruct-filling", "duality", "arnold"})
    add_inputs(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();

  if (cmd == "invariants") {
    auto ds = load_diagrams(in);
    need(ds.size(), 1, cmd);
    int tb = thurston_bennequin(ds[0]), rot = rotation_number(ds[0]);
    if (json) {
      ordered_json j;
      j["tb"] = tb;
      j["rot"] = rot;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "tb = " << tb << "\n" << "rot = " << rot << "\n";
    }
  } else if (cmd == "dga") {
    auto ds = load_diagrams(in);
    need(ds.size(), 1, cmd);
    Dga g = dga_of(ds[0]);
    if (json) {
      ordered_json j;
      j["generators"] = ordered_json::array();
      for (size_t i = 0; i < g.generators.size(); ++i) {
        ordered_json gen;
        gen["id"] = g.generators[i].id;
        gen["degree"] = g.generators[i].degree;
        ordered_json dd = ordered_json::array();
        for (auto& w : g.differential[i]) {
          ordered_json word = ordered_json::array();
          for (int x : w) word.push_back(g.generators[x].id);
          dd.push_back(word);
        }
        gen["d"] = dd;
        j["generators"].push_back(gen);
      }
      std::cout << j.dump() << "\n";
    } else {
      for (size_t i = 0; i < g.generators.size(); ++i) {
        std::cout << g.generators[i].id << " (deg " << g.generators[i].degree << "): d = ";
        if (g.differential[i].empty()) std::cout << "0";
        bool first = true;
        for (auto& w : g.differential[i]) {
          if (!first) std::cout << " + ";
          first = false;
          if (w.empty()) std::cout << "1";
          for (size_t k = 0; k < w.size(); ++k) std::cout << (k ? "." : "") << g.generators[w[k]].id;
        }
        std::cout << "\n";
      }
    }
  } else if (cmd == "augs") {
    auto ds = load_diagrams(in);
    need(ds.size(), 1, cmd);
    Dga g = dga_of(ds[0]);
    AugmentationOptions opts;
    opts.max_degree_zero = in.max_aug_gens;
    auto augs = enumerate_augmentations(g, opts);
    if (json) {
      ordered_json j;
      j["count"] = augs.size();
      j["augmentations"] = ordered_json::array();
      for (auto& e : augs) {
        ordered_json ones = ordered_json::array();
        for (size_t i = 0; i < e.values.size(); ++i)
          if (e.values[i]) ones.push_back(g.generators[i].id);
        j["augmentations"].push_back(ones);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << augs.size() << " graded augmentation" << (augs.size() == 1 ? "" : "s") << "\n";
      for (auto& e : augs) {
        std::cout << "  eps = 1 on {";
        bool first = true;
        for (size_t i = 0; i < e.values.size(); ++i)
          if (e.values[i]) {
            std::cout << (first ? "" : ", ") << g.generators[i].id;
            first = false;
          }
        std::cout << "}\n";
      }
    }
  } else if (cmd == "rulings") {
    auto ds = load_diagrams(in);
    need(ds.size(), 1, cmd);
    auto rulings = enumerate_graded_rulings(ds[0]);
    if (json) {
      ordered_json j;
      j["count"] = rulings.size();
      j["rulings"] = ordered_json::array();
      for (auto& r : rulings) {
        ordered_json sw = ordered_json::array();
        for (int s : r.switches) sw.push_back(s + 1);  // 1-based event columns
        j["rulings"].push_back(sw);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << rulings.size() << " graded normal ruling" << (rulings.size() == 1 ? "" : "s")
                << "\n";
      for (auto& r : rulings) {
        std::cout << "  switches at columns:";
        for (int s : r.switches) std::cout << " " << s + 1;
        std::cout << "\n";
      }
    }
  } else if (cmd == "polys") {
    auto ds = load_diagrams(in);
    need(ds.size(), 1, cmd);
    auto polys = gf_polynomial_set(ds[0]);
    if (json) {
      ordered_json j;
      j["polys"] = ordered_json::array();
      for (auto& p : polys) j["polys"].push_back(poly_json(p));
      std::cout << j.dump() << "\n";
    } else {
      for (auto& p : polys) std::cout << p.str() << "\n";
    }
  } else if (cmd == "profile") {
    auto ps = load_profiles(in);
    need(ps.size(), 1, cmd);
    std::cout << profile_to_json(ps[0]) << "\n";
  } else if (cmd == "obstruct-cobordism") {
    auto ps = load_profiles(in);
    need(ps.size(), 2, cmd);
    CobordismQuery q{ps[0], ps[1], true};
    print_report(obstruct_cobordism(q), json);
  } else if (cmd == "obstruct-filling") {
    auto ps = load_profiles(in);
    need(ps.size(), 1, cmd);
    print_report(obstruct_filling(ps[0]), json);
  } else if (cmd == "duality") {
    auto ps = load_profiles(in);
    need(ps.size(), 1, cmd);
    ordered_json results = ordered_json::array();
    for (auto& p : ps[0].polys) {
      LesResult res = duality_feasible(p, ps[0].n, knot_betti());
      if (json) {
        ordered_json r;
        r["poly"] = poly_json(p);
        r["feasible"] = res.feasible;
        r["ranks"] = res.ranks;
        results.push_back(r);
      } else {
        std::cout << p.str() << ": " << (res.feasible ? "feasible" : "INFEASIBLE") << "\n";
      }
    }
    if (json) {
      ordered_json j;
      j["results"] = results;
      std::cout << j.dump() << "\n";
    }
  } else if (cmd == "arnold") {
    auto ps = load_profiles(in);
    need(ps.size(), 1, cmd);
    LaurentDims betti;
    if (ps[0].n == 1) {
      betti = knot_betti();
    } else {
      // Spheres for manual higher-dimensional profiles.
      betti.add(0, 1);
      betti.add(ps[0].n, 1);
    }
    ArnoldResult res = arnold_check(ps[0].chord_degrees, ps[0].n, betti);
    if (json) {
      ordered_json j;
      j["pass"] = res.pass;
      j["margins"] = ordered_json::array();
      for (auto [i, m] : res.margins) j["margins"].push_back({i, m});
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (res.pass ? "pass" : "FAIL") << "\n";
      for (auto [i, m] : res.margins) std::cout << "  degree " << i << ": margin " << m << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  try {
    return run(argc, argv);
  } catch (const SearchExplosion& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
