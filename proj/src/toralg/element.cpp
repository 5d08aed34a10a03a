#include "dalie/toralg/element.hpp"

#include <algorithm>
#include <sstream>

namespace dalie::toralg {

using liecore::AlgebraPtr;
using liecore::ChevalleyAlgebra;

bool TorRoot::is_zero() const {
  return r1 == 0 && r2 == 0 && std::all_of(fin.begin(), fin.end(), [](int c) { return c == 0; });
}

TorElement::TorElement(AlgebraPtr g, const Letter& l, Rational c) : g_(std::move(g)) { add(l, c); }

Rational TorElement::coefficient(const Letter& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TorElement::add(const Letter& l, const Rational& c) {
  if (dalie::is_zero(c)) return;
  if (l.kind == Letter::Kind::fin && g_ && l.fin >= g_->dim()) throw Error("letter outside the algebra");
  auto [it, inserted] = terms_.emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (dalie::is_zero(it->second)) terms_.erase(it);
  }
}

void TorElement::check_same(const TorElement& o) const {
  if (g_ && o.g_ && g_ != o.g_ && g_->cartan().matrix() != o.g_->cartan().matrix())
    throw Error("toroidal elements over different algebras");
}

TorElement& TorElement::operator+=(const TorElement& o) {
  check_same(o);
  if (!g_) g_ = o.g_;
  for (auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

TorElement& TorElement::operator-=(const TorElement& o) {
  check_same(o);
  if (!g_) g_ = o.g_;
  for (auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

TorElement& TorElement::operator*=(const Rational& c) {
  if (dalie::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

TorElement TorElement::shifted(long dr1, long dr2) const {
  TorElement out(g_);
  for (auto& [key, c] : terms_) {
    Letter l = key;
    if (l.kind == Letter::Kind::fin) {
      l.r1 += dr1;
      l.r2 += dr2;
    } else if (l.kind == Letter::Kind::c1) {
      l.r2 += dr2;
    } else {
      throw Error("cannot shift c2, d1 or d2 by loop powers");
    }
    out.add(l, c);
  }
  return out;
}

std::string letter_name(const ChevalleyAlgebra& g, const Letter& l) {
  auto powers = [&](long r1, long r2) {
    std::string s;
    if (r1 != 0) s += " t1^" + std::to_string(r1);
    if (r2 != 0) s += " t2^" + std::to_string(r2);
    return s;
  };
  switch (l.kind) {
    case Letter::Kind::fin: return g.basis_name(l.fin) + powers(l.r1, l.r2);
    case Letter::Kind::c1: return "c1" + powers(0, l.r2);
    case Letter::Kind::c2: return "c2";
    case Letter::Kind::d1: return "d1";
    case Letter::Kind::d2: return "d2";
  }
  return "?";
}

std::string TorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << c.get_str() << ")*";
    os << (g_ ? letter_name(*g_, l) : std::string("?"));
  }
  return os.str();
}

TorRoot letter_root(const ChevalleyAlgebra& g, const Letter& l) {
  TorRoot r;
  r.fin.assign(g.rank(), 0);
  if (l.kind == Letter::Kind::fin) {
    r.fin = g.root_of(l.fin);
    r.r1 = l.r1;
    r.r2 = l.r2;
  } else if (l.kind == Letter::Kind::c1) {
    r.r2 = l.r2;
  }
  return r;
}

Letter fin_letter(std::size_t basis, long r1, long r2) { return Letter{Letter::Kind::fin, basis, r1, r2}; }
Letter c1_letter(long r2) { return Letter{Letter::Kind::c1, 0, 0, r2}; }
Letter c2_letter() { return Letter{Letter::Kind::c2, 0, 0, 0}; }
Letter d1_letter() { return Letter{Letter::Kind::d1, 0, 0, 0}; }
Letter d2_letter() { return Letter{Letter::Kind::d2, 0, 0, 0}; }

TorElement bracket_letters(const AlgebraPtr& g, const Letter& a, const Letter& b) {
  using K = Letter::Kind;
  TorElement out(g);
  if (a.kind == K::fin && b.kind == K::fin) {
    const long r1 = a.r1 + b.r1, r2 = a.r2 + b.r2;
    for (auto& [idx, c] : g->bracket_basis(a.fin, b.fin).entries()) out.add(fin_letter(idx, r1, r2), c);
    if (r1 == 0) {
      Rational f = g->form_basis(a.fin, b.fin);
      if (!is_zero(f)) {
        out.add(c1_letter(r2), a.r1 * f);
        if (r2 == 0) out.add(c2_letter(), a.r2 * f);
      }
    }
    return out;
  }
  auto derivation = [&](const Letter& d, const Letter& x) -> TorElement {
    TorElement r(g);
    if (x.kind == K::fin) r.add(x, d.kind == K::d1 ? x.r1 : x.r2);
    else if (x.kind == K::c1 && d.kind == K::d2) r.add(x, x.r2);
    return r;
  };
  bool a_der = a.kind == K::d1 || a.kind == K::d2;
  bool b_der = b.kind == K::d1 || b.kind == K::d2;
  if (a_der && b_der) return out;
  if (a_der) return derivation(a, b);
  if (b_der) return derivation(b, a) * Rational(-1);
  // c1 t2^s and c2 are central in g_tor
  return out;
}

TorElement bracket_tor(const TorElement& a, const TorElement& b) {
  auto g = a.algebra() ? a.algebra() : b.algebra();
  if (a.algebra() && b.algebra() && a.algebra()->cartan().matrix() != b.algebra()->cartan().matrix())
    throw Error("bracket of elements over different algebras");
  TorElement out(g);
  for (auto& [la, ca] : a.terms())
    for (auto& [lb, cb] : b.terms()) out += bracket_letters(g, la, lb) * (ca * cb);
  return out;
}

Rational form_aff(const ChevalleyAlgebra& g, const Letter& a, const Letter& b) {
  using K = Letter::Kind;
  for (auto* l : {&a, &b})
    if (l->r2 != 0 || l->kind == K::c2 || l->kind == K::d2) throw Error("the affine form is defined on g^e_aff only");
  if (a.kind == K::fin && b.kind == K::fin) return a.r1 + b.r1 == 0 ? g.form_basis(a.fin, b.fin) : Rational(0);
  if ((a.kind == K::c1 && b.kind == K::d1) || (a.kind == K::d1 && b.kind == K::c1)) return 1;
  return 0;
}

Rational form_aff(const TorElement& a, const TorElement& b) {
  auto g = a.algebra() ? a.algebra() : b.algebra();
  Rational acc = 0;
  for (auto& [la, ca] : a.terms())
    for (auto& [lb, cb] : b.terms()) acc += ca * cb * form_aff(*g, la, lb);
  return acc;
}

namespace {

void check_node(const AlgebraPtr& g, int i) {
  if (i < 0 || i > g->rank()) throw Error("affine node index out of range");
}

}  // namespace

TorElement affine_e(const AlgebraPtr& g, int i, long r2) {
  check_node(g, i);
  if (i == 0) return TorElement(g, fin_letter(g->lowering(g->roots().highest), 1, r2));
  return TorElement(g, fin_letter(g->raising(g->simple_root_index(i - 1)), 0, r2));
}

TorElement affine_f(const AlgebraPtr& g, int i, long r2) {
  check_node(g, i);
  if (i == 0) return TorElement(g, fin_letter(g->raising(g->roots().highest), -1, r2));
  return TorElement(g, fin_letter(g->lowering(g->simple_root_index(i - 1)), 0, r2));
}

TorElement affine_h(const AlgebraPtr& g, int i, long r2) {
  check_node(g, i);
  TorElement out(g);
  if (i == 0) {
    out.add(c1_letter(r2), 1);
    auto htheta = g->theta_coroot();
    for (auto& [idx, c] : htheta.entries()) out.add(fin_letter(idx, 0, r2), -c);
  } else {
    out.add(fin_letter(g->cartan_index(i - 1), 0, r2), 1);
  }
  return out;
}

bool in_affine_cartan(const TorElement& h) {
  for (auto& [l, c] : h.terms()) {
    if (l.kind == Letter::Kind::c1 && l.r2 == 0) continue;
    if (l.kind == Letter::Kind::fin && l.r1 == 0 && l.r2 == 0 &&
        h.algebra()->part(l.fin) == liecore::ChevalleyAlgebra::Part::cartan)
      continue;
    return false;
  }
  return true;
}

namespace {

std::size_t signed_root_basis(const ChevalleyAlgebra& g, const liecore::RootVector& alpha) {
  bool pos = std::any_of(alpha.begin(), alpha.end(), [](int c) { return c > 0; });
  bool neg = std::any_of(alpha.begin(), alpha.end(), [](int c) { return c < 0; });
  if (pos == neg) throw Error("not a nonzero finite root");
  liecore::RootVector a = alpha;
  if (neg)
    for (int& c : a) c = -c;
  int idx = g.roots().index_of(a);
  if (idx < 0) throw Error("not a finite root");
  return pos ? g.raising(idx) : g.lowering(idx);
}

void check_positive(const AffineRealRoot& beta) {
  bool pos = std::any_of(beta.alpha.begin(), beta.alpha.end(), [](int c) { return c > 0; });
  if (beta.r1 < 0 || (beta.r1 == 0 && !pos)) throw Error("root is not in R+_aff");
}

}  // namespace

TorElement root_vector_plus(const AlgebraPtr& g, const AffineRealRoot& beta, long r2) {
  check_positive(beta);
  return TorElement(g, fin_letter(signed_root_basis(*g, beta.alpha), beta.r1, r2));
}

TorElement root_vector_minus(const AlgebraPtr& g, const AffineRealRoot& beta, long r2) {
  check_positive(beta);
  liecore::RootVector neg = beta.alpha;
  for (int& c : neg) c = -c;
  return TorElement(g, fin_letter(signed_root_basis(*g, neg), -beta.r1, r2));
}

TorElement root_coroot(const AlgebraPtr& g, const AffineRealRoot& beta, long r2) {
  return bracket_tor(root_vector_plus(g, beta, r2), root_vector_minus(g, beta));
}

TorElement random_element(const AlgebraPtr& g, std::mt19937_64& rng, int terms, long range) {
  auto pick = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };
  TorElement out(g);
  for (int k = 0; k < terms; ++k) {
    long r1 = pick(2 * range + 1) - range, r2 = pick(2 * range + 1) - range;
    Letter l;
    switch (pick(8)) {
      case 0: l = c1_letter(r2); break;
      case 1: l = c2_letter(); break;
      case 2: l = d1_letter(); break;
      case 3: l = d2_letter(); break;
      default: l = fin_letter(static_cast<std::size_t>(pick(g->dim())), r1, r2);
    }
    out.add(l, Rational(pick(7) - 3));
  }
  return out;
}

}  // namespace dalie::toralg
