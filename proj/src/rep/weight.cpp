#include "dalie/rep/weight.hpp"

#include <sstream>

namespace dalie::rep {

TorWeight TorWeight::affine(const liecore::ChevalleyAlgebra& g, const std::vector<long>& node_values, Rational d1) {
  if (static_cast<int>(node_values.size()) != g.rank() + 1) throw Error("affine weight needs n+1 node values");
  TorWeight w = zero(g.rank());
  w.c1 = node_values[0];
  for (int i = 0; i < g.rank(); ++i) {
    w.fin[i] = node_values[i + 1];
    w.c1 += g.roots().marks[i] * node_values[i + 1];
  }
  w.d1 = d1;
  return w;
}

TorWeight TorWeight::finite(const liecore::FinWeight& w) { return TorWeight{w.coords}; }

Rational TorWeight::h0(const liecore::ChevalleyAlgebra& g) const {
  Rational v = c1;
  for (int i = 0; i < g.rank(); ++i) v -= g.roots().marks[i] * fin[i];
  return v;
}

Rational TorWeight::node(const liecore::ChevalleyAlgebra& g, int i) const {
  if (i < 0 || i > g.rank()) throw Error("node index out of range");
  return i == 0 ? h0(g) : fin[i - 1];
}

Rational TorWeight::eval(const liecore::ChevalleyAlgebra& g, const Letter& l) const {
  using K = Letter::Kind;
  switch (l.kind) {
    case K::c2: return c2;
    case K::d1: return d1;
    case K::d2: return d2;
    case K::c1:
      if (l.r2 == 0) return c1;
      break;
    case K::fin:
      if (l.r1 == 0 && l.r2 == 0 && g.part(l.fin) == liecore::ChevalleyAlgebra::Part::cartan)
        return fin[l.fin - g.cartan_index(0)];
      break;
  }
  throw Error("letter is not in the Cartan subalgebra");
}

TorWeight TorWeight::shifted(const liecore::ChevalleyAlgebra& g, const Letter& l) const {
  TorWeight w = *this;
  auto root = toralg::letter_root(g, l);
  auto vals = g.root_on_coroots(root.fin);
  for (int i = 0; i < g.rank(); ++i) w.fin[i] += vals[i];
  w.d1 += root.r1;
  w.d2 += root.r2;
  return w;
}

TorWeight TorWeight::operator+(const TorWeight& o) const {
  if (fin.size() != o.fin.size()) throw Error("weight rank mismatch");
  TorWeight w = *this;
  for (std::size_t i = 0; i < fin.size(); ++i) w.fin[i] += o.fin[i];
  w.c1 += o.c1;
  w.d1 += o.d1;
  w.c2 += o.c2;
  w.d2 += o.d2;
  return w;
}

TorWeight TorWeight::operator-() const {
  TorWeight w = *this;
  for (auto& v : w.fin) v = -v;
  w.c1 = -c1;
  w.d1 = -d1;
  w.c2 = -c2;
  w.d2 = -d2;
  return w;
}

bool TorWeight::operator<(const TorWeight& o) const {
  auto key = [](const TorWeight& w) {
    std::vector<Rational> k{w.d1, w.c1};
    k.insert(k.end(), w.fin.begin(), w.fin.end());
    k.push_back(w.c2);
    k.push_back(w.d2);
    return k;
  };
  auto a = key(*this), b = key(o);
  // descending d1 first, so the top of a highest-weight module comes first
  if (a[0] != b[0]) return a[0] > b[0];
  return std::lexicographical_compare(a.begin() + 1, a.end(), b.begin() + 1, b.end());
}

std::string TorWeight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < fin.size(); ++i) os << (i ? "," : "") << fin[i].get_str();
  os << "; c1=" << c1.get_str() << ", d1=" << d1.get_str() << ")";
  return os.str();
}

}  // namespace dalie::rep
