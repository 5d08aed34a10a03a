#include "dalie/toralg/roots.hpp"

#include <algorithm>

namespace dalie::toralg {

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::positive: return "R_tor(>)";
    case RootClass::imaginary: return "R_tor(0)";
    case RootClass::negative: return "R_tor(<)";
  }
  return "?";
}

RootClass classify_root(const liecore::ChevalleyAlgebra& g, const TorRoot& root) {
  if (static_cast<int>(root.fin.size()) != g.rank()) throw Error("root rank mismatch");
  if (root.is_zero()) throw Error("zero is not a root");
  bool pos = std::any_of(root.fin.begin(), root.fin.end(), [](int c) { return c > 0; });
  bool neg = std::any_of(root.fin.begin(), root.fin.end(), [](int c) { return c < 0; });
  if (pos && neg) throw Error("finite part is not a root");
  if (!pos && !neg) {
    if (root.r1 > 0) return RootClass::positive;
    return root.r1 == 0 ? RootClass::imaginary : RootClass::negative;
  }
  liecore::RootVector a = root.fin;
  if (neg)
    for (int& c : a) c = -c;
  if (g.roots().index_of(a) < 0) throw Error("finite part is not a root");
  if (root.r1 > 0 || (root.r1 == 0 && pos)) return RootClass::positive;
  return RootClass::negative;
}

RootClass classify_letter(const liecore::ChevalleyAlgebra& g, const Letter& l) {
  return classify_root(g, letter_root(g, l));
}

}  // namespace dalie::toralg
