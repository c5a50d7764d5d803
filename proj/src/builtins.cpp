#include <sstream>

#include "legcob/diagram.hpp"

namespace legcob {

namespace {

FrontDiagram from_word(const std::string& word)
{
  std::vector<Event> events;
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    EventType t = tok[0] == 'L'   ? EventType::LeftCusp
                  : tok[0] == 'R' ? EventType::RightCusp
                                  : EventType::Crossing;
    events.push_back({t, std::stoi(tok.substr(1))});
  }
  return FrontDiagram::from_events(std::move(events));
}

struct TwistSpec {
  long long m = 0;
  std::string word;
};

bool parse_twist(const std::string& name, TwistSpec& spec)
{
  if (name.rfind("twist(", 0) != 0 || name.back() != ')') return false;
  std::string body = name.substr(6, name.size() - 7);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("twist needs (m, word): " + name);
  try {
    spec.m = std::stoll(body.substr(0, comma));
  } catch (...) {
    throw std::invalid_argument("twist: bad m in " + name);
  }
  spec.word = body.substr(comma + 1);
  return true;
}

// Front of the standard negative twist knot: a 4-strand plat whose middle
// strands run through |m+2| half-twist tangles and close through a clasp.
FrontDiagram twist_front(const TwistSpec& spec)
{
  if (spec.m > -3) throw std::invalid_argument("twist knots need m <= -3");
  long long k = -(spec.m + 2);

  // Split the word into tangle names.
  std::vector<std::string> tangles;
  for (size_t i = 0; i < spec.word.size();) {
    if (i + 1 < spec.word.size() && (spec.word[i] == 'Z' || spec.word[i] == 'S') &&
        (spec.word[i + 1] == '+' || spec.word[i + 1] == '-')) {
      tangles.push_back(spec.word.substr(i, 2));
      i += 2;
    } else {
      throw std::invalid_argument("twist word must be over {Z+,Z-,S+,S-}: " + spec.word);
    }
  }
  if (static_cast<long long>(tangles.size()) != k)
    throw std::invalid_argument("twist word length " + std::to_string(tangles.size()) +
                                " does not match |m+2| = " + std::to_string(k));

  std::ostringstream w;
  w << "L1 L1 ";
  for (auto& t : tangles) {
    if (t == "Z+")
      w << "X2 ";
    else if (t == "Z-")
      w << "R2 L2 X2 ";
    else if (t == "S+")
      w << "R2 L2 ";
    else
      w << "L2 R2 ";
  }
  w << "X1 X1 R1 R1";
  return from_word(w.str());
}

}  // namespace

FrontDiagram builtin(const std::string& name)
{
  if (name == "unknot") return from_word("L1 R1");
  if (name == "trefoil") return from_word("L1 L1 X2 X2 X2 R1 R1");
  // The two maximal-tb Legendrian m(5_2) knots.  Both have tb = 1, rot = 0
  // and seven front crossings; they differ only in how the middle clasp is
  // threaded, and are distinguished by their polynomial sets.
  if (name == "m52_K1") return from_word("L1 L1 X2 X2 X1 X1 X2 X2 X2 R1 R1");
  if (name == "m52_K2") return from_word("L1 L1 X2 X2 X1 X3 X2 X2 X2 R1 R1");
  if (name == "m821") return from_word("L1 L1 X2 X2 X2 X1 X1 X2 X2 R1 R1");
  TwistSpec spec;
  if (parse_twist(name, spec)) return twist_front(spec);
  throw std::invalid_argument("unknown builtin diagram: " + name);
}

}  // namespace legcob
