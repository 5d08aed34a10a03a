#include "dalie/weyl/weyl_module.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include "json.hpp"
#include <sstream>

namespace dalie::weyl {

using rep::MaybeVector;
using rep::TorWeight;
using toralg::letter_name;

namespace {

using Key = std::vector<long>;
using Monomial = std::vector<Letter>;
using MVec = std::map<std::size_t, Rational>;

enum class Part { minus, cartan, plus };

void axpy(MVec& out, const Rational& c, const MVec& v) {
  for (auto& [i, x] : v) {
    auto& slot = out[i];
    slot += c * x;
    if (slot == 0) out.erase(i);
  }
}

SparseVector to_sparse(const MVec& v) {
  SparseVector s;
  for (auto& [i, c] : v) s.add(i, c);
  return s;
}

MVec from_sparse(const SparseVector& s) {
  MVec v;
  for (auto& [i, c] : s.entries()) v[i] = c;
  return v;
}

std::vector<long> srange(long bound, bool full) {
  std::vector<long> out;
  for (long s = full ? -bound : 0; s <= bound; ++s) out.push_back(s);
  return out;
}

Key unit(int nodes, int i) {
  Key k(static_cast<std::size_t>(nodes), 0);
  k[static_cast<std::size_t>(i)] = 1;
  return k;
}

std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular Cartan system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::vector<long> depth_key(const liecore::ChevalleyAlgebra& g, const TorWeight& lambda, const TorWeight& mu) {
  Rational k0 = lambda.d1 - mu.d1;
  if (!is_integer(k0)) throw Error("weights differ by a non-integral d1");
  const int n = g.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    liecore::RootVector e(n, 0);
    e[i] = 1;
    auto vals = g.root_on_coroots(e);
    for (int j = 0; j < n; ++j) a[j][i] = vals[j];
  }
  auto th = g.root_on_coroots(g.roots().theta());
  std::vector<Rational> b(n);
  for (int j = 0; j < n; ++j) b[j] = lambda.fin[j] - mu.fin[j] + k0 * th[j];
  auto k = solve_square(a, b);
  std::vector<long> out{k0.get_num().get_si()};
  for (auto& x : k) {
    if (!is_integer(x)) throw Error("weights differ by a non-integral root combination");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

long key_height(const std::vector<long>& key) {
  long h = 0;
  for (long k : key) h += k;
  return h;
}

struct WeylModule::Engine {
  liecore::AlgebraPtr g;
  const PolyTuple* pi;
  WeylWindow win;
  long T;
  int nodes;
  TorWeight lambda;

  struct LetterInfo {
    Part part;
    Key shift;  // signed affine root coordinates of the letter
    std::tuple<long, Key, std::size_t, long> order;
  };
  std::map<Letter, LetterInfo> infos;

  std::vector<Monomial> monos;
  std::map<Monomial, std::size_t> mono_ids;
  std::vector<long> mono_degree;  // Σ |t2 exponent|
  std::map<std::pair<Letter, std::size_t>, MVec> memo;

  struct Space {
    EchelonBasis rel;  // N_μ
    EchelonBasis span;  // N_μ, then the chosen basis monomials
    std::vector<long> slot_basis;
    std::size_t rel_dim = 0;
  };
  std::map<Key, Space> spaces;

  std::vector<std::size_t> basis_mono;
  std::vector<Key> basis_key;
  std::vector<TorWeight> basis_weight;

  const LetterInfo& info(const Letter& l) {
    auto it = infos.find(l);
    if (it != infos.end()) return it->second;
    using K = Letter::Kind;
    LetterInfo li;
    li.shift.assign(static_cast<std::size_t>(nodes), 0);
    switch (l.kind) {
      case K::d2: throw Error("d2 does not act on Weyl modules");
      case K::c1:
      case K::c2:
      case K::d1: li.part = Part::cartan; break;
      case K::fin: {
        auto root = g->root_of(l.fin);
        const auto& th = g->roots().theta();
        li.shift[0] = l.r1;
        for (int i = 0; i < g->rank(); ++i) li.shift[i + 1] = root[i] + l.r1 * th[i];
        if (l.r1 < 0) li.part = Part::minus;
        else if (l.r1 > 0) li.part = Part::plus;
        else {
          auto p = g->part(l.fin);
          li.part = p == liecore::ChevalleyAlgebra::Part::raising   ? Part::plus
                    : p == liecore::ChevalleyAlgebra::Part::lowering ? Part::minus
                                                                     : Part::cartan;
        }
        break;
      }
    }
    Key a = li.shift;
    for (auto& x : a) x = x < 0 ? -x : x;
    li.order = {key_height(a), a, l.fin, l.r2};
    return infos.emplace(l, li).first->second;
  }

  bool less(const Letter& a, const Letter& b) { return info(a).order < info(b).order; }

  std::size_t intern(const Monomial& m) {
    auto it = mono_ids.find(m);
    if (it != mono_ids.end()) return it->second;
    long deg = 0;
    for (auto& l : m) deg += l.r2 < 0 ? -l.r2 : l.r2;
    monos.push_back(m);
    mono_degree.push_back(deg);
    return mono_ids.emplace(m, monos.size() - 1).first->second;
  }

  Rational chi(const Letter& l) {
    using K = Letter::Kind;
    auto ps = [&](int node) { return pi->power_sum(node, l.r2 > 0 ? 1 : -1, l.r2 > 0 ? l.r2 : -l.r2); };
    switch (l.kind) {
      case K::c2: return 0;
      case K::d1: return lambda.d1;
      case K::c1: {
        if (l.r2 == 0) return lambda.c1;
        Rational v = ps(0);
        for (int j = 0; j < g->rank(); ++j) v += g->roots().marks[j] * ps(j + 1);
        return v;
      }
      case K::fin: {
        int node = static_cast<int>(l.fin - g->cartan_index(0)) + 1;
        if (l.r2 == 0) return lambda.fin[node - 1];
        return ps(node);
      }
      default: throw Error("letter has no eigenvalue on w");
    }
  }

  MVec act(const Letter& x, std::size_t m) {
    auto key = std::make_pair(x, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Part part = info(x).part;
    MVec out;
    const Monomial mono = monos[m];
    if (mono.empty()) {
      if (part == Part::minus) out[intern({x})] = 1;
      else if (part == Part::cartan) {
        Rational c = chi(x);
        if (c != 0) out[m] = c;
      }
    } else if (part == Part::minus && !less(mono[0], x)) {
      Monomial longer{x};
      longer.insert(longer.end(), mono.begin(), mono.end());
      out[intern(longer)] = 1;
    } else {
      const Letter y = mono[0];
      const std::size_t rest = intern(Monomial(mono.begin() + 1, mono.end()));
      for (auto& [id, c] : act(x, rest)) axpy(out, c, act(y, id));
      const auto br = toralg::bracket_letters(g, x, y);
      for (auto& [z, c] : br.terms()) axpy(out, c, act(z, rest));
    }
    memo.emplace(key, out);
    return out;
  }

  MVec act(const TorElement& e, const MVec& v) {
    MVec out;
    for (auto& [l, c] : e.terms())
      for (auto& [id, x] : v) axpy(out, c * x, act(l, id));
    return out;
  }

  long degree(const MVec& v) const {
    long d = 0;
    for (auto& [id, c] : v) d = std::max(d, mono_degree[id]);
    return d;
  }

  Key shifted(const Key& k, const Key& shift) const {
    Key out = k;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= shift[i];
    return out;
  }

  bool nonnegative(const Key& k) const {
    return std::all_of(k.begin(), k.end(), [](long x) { return x >= 0; });
  }

  bool in_window(const Key& k) const { return nonnegative(k) && k[0] <= win.depth && key_height(k) <= win.height; }

  TorWeight weight_of(const Key& k) const {
    TorWeight w = lambda;
    for (int i = 0; i < g->rank(); ++i) {
      liecore::RootVector e(g->rank(), 0);
      e[i] = 1;
      auto vals = g->root_on_coroots(e);
      for (int j = 0; j < g->rank(); ++j) w.fin[j] -= k[i + 1] * vals[j];
    }
    auto th = g->root_on_coroots(g->roots().theta());
    for (int j = 0; j < g->rank(); ++j) w.fin[j] += k[0] * th[j];
    w.d1 -= k[0];
    return w;
  }

  // Relation space S = U(n⁺) U(h[t2]) R at every key, then N = U(n⁻) S in the window.
  void build_relations() {
    std::map<Key, EchelonBasis> s;
    std::map<Key, std::vector<MVec>> s_vectors;
    std::deque<std::pair<Key, MVec>> queue;
    auto add_s = [&](const Key& k, const MVec& v) {
      if (v.empty()) return;
      if (s[k].insert(to_sparse(v))) {
        s_vectors[k].push_back(v);
        queue.emplace_back(k, v);
      }
    };
    std::vector<Letter> cartan;
    for (long t : srange(T, win.full))
      if (t != 0)
        for (int j = 0; j < g->rank(); ++j) cartan.push_back(toralg::fin_letter(g->cartan_index(j), 0, t));
    std::vector<std::pair<TorElement, Key>> raising, lowering;
    for (long t : srange(T, win.full))
      for (int i = 0; i < nodes; ++i) {
        raising.emplace_back(toralg::affine_e(g, i, t), unit(nodes, i));
        lowering.emplace_back(toralg::affine_f(g, i, t), unit(nodes, i));
      }
    for (int i = 0; i < nodes; ++i) {
      MVec v{{intern({}), 1}};
      auto f = toralg::affine_f(g, i);
      for (long p = 0; p <= pi->degree(i); ++p) v = act(f, v);
      Key k(static_cast<std::size_t>(nodes), 0);
      k[static_cast<std::size_t>(i)] = pi->degree(i) + 1;
      // Cartan closure, capped at t2-degree T
      std::deque<MVec> hq;
      if (s[k].insert(to_sparse(v))) {
        s_vectors[k].push_back(v);
        hq.push_back(v);
      }
      while (!hq.empty()) {
        MVec u = hq.front();
        hq.pop_front();
        for (auto& h : cartan) {
          MVec img;
          for (auto& [id, c] : u) axpy(img, c, act(h, id));
          if (img.empty() || degree(img) > T) continue;
          if (s[k].insert(to_sparse(img))) {
            s_vectors[k].push_back(img);
            hq.push_back(img);
          }
        }
      }
      for (auto& u : s_vectors[k]) queue.emplace_back(k, u);
    }
    // raising closure
    while (!queue.empty()) {
      auto [k, u] = queue.front();
      queue.pop_front();
      for (auto& [e, shift] : raising) {
        Key k2 = k;
        for (std::size_t i = 0; i < k2.size(); ++i) k2[i] -= shift[i];
        if (!nonnegative(k2)) continue;
        add_s(k2, act(e, u));
      }
    }
    // lowering closure inside the window, by increasing height
    std::vector<Key> keys;
    for (auto& [k, sp] : spaces) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return std::make_pair(key_height(a), a) < std::make_pair(key_height(b), b);
    });
    for (auto& k : keys)
      if (s_vectors.count(k))
        for (auto& v : s_vectors[k]) spaces[k].rel.insert(to_sparse(v));
    for (auto& k : keys) {
      for (auto& row : spaces[k].rel.rows()) {
        MVec u = from_sparse(row);
        for (auto& [f, shift] : lowering) {
          Key k2 = k;
          for (std::size_t i = 0; i < k2.size(); ++i) k2[i] += shift[i];
          if (!in_window(k2)) continue;
          MVec img = act(f, u);
          if (!img.empty()) spaces[k2].rel.insert(to_sparse(img));
        }
      }
    }
  }

  std::vector<Letter> minus_letters() {
    std::vector<Letter> out;
    for (long r1 = 0; r1 >= -win.depth; --r1)
      for (std::size_t b = 0; b < g->dim(); ++b)
        for (long t : srange(win.t2_degree, win.full)) {
          Letter l = toralg::fin_letter(b, r1, t);
          auto& li = info(l);
          if (li.part != Part::minus) continue;
          if (in_window(shifted(Key(static_cast<std::size_t>(nodes), 0), li.shift))) out.push_back(l);
        }
    std::sort(out.begin(), out.end(), [&](const Letter& a, const Letter& b) { return less(a, b); });
    return out;
  }

  void build_basis() {
    auto letters = minus_letters();
    std::map<Key, std::vector<Monomial>> candidates;
    Monomial cur;
    std::function<void(std::size_t, const Key&)> rec = [&](std::size_t start, const Key& k) {
      candidates[k].push_back(cur);
      for (std::size_t j = start; j < letters.size(); ++j) {
        Key k2 = shifted(k, info(letters[j]).shift);
        if (!in_window(k2)) continue;
        cur.push_back(letters[j]);
        rec(j, k2);
        cur.pop_back();
      }
    };
    rec(0, Key(static_cast<std::size_t>(nodes), 0));
    std::vector<Key> keys;
    for (auto& [k, sp] : spaces) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return std::make_pair(key_height(a), a) < std::make_pair(key_height(b), b);
    });
    for (auto& k : keys) {
      auto& sp = spaces[k];
      for (auto& row : sp.rel.rows()) {
        sp.span.insert(row);
        sp.slot_basis.push_back(-1);
      }
      sp.rel_dim = sp.rel.rank();
      auto& cands = candidates[k];
      std::vector<std::pair<long, std::size_t>> order;
      for (auto& m : cands) {
        std::size_t id = intern(m);
        order.emplace_back(mono_degree[id], id);
      }
      std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return monos[a.second] < monos[b.second];
      });
      for (auto& [deg, id] : order) {
        if (sp.span.insert(SparseVector::unit(id))) {
          sp.slot_basis.push_back(static_cast<long>(basis_mono.size()));
          basis_mono.push_back(id);
          basis_key.push_back(k);
          basis_weight.push_back(weight_of(k));
        } else {
          sp.slot_basis.push_back(-1);
        }
      }
    }
  }

  MaybeVector reduce(const Key& k, const MVec& v) {
    if (v.empty()) return SparseVector{};
    if (!nonnegative(k)) throw Error("internal: nonzero vector above the top weight");
    if (!in_window(k)) return std::nullopt;
    auto& sp = spaces.at(k);
    auto red = sp.span.reduce(to_sparse(v));
    if (!red.remainder.is_zero()) return std::nullopt;
    SparseVector out;
    const auto combo = red.combination;
    for (auto& [slot, c] : combo.entries()) {
      long b = sp.slot_basis[slot];
      if (b >= 0) out.add(static_cast<std::size_t>(b), c);
    }
    return out;
  }

  std::string monomial_label(std::size_t id) const {
    std::string s;
    for (auto& l : monos[id]) s += letter_name(*g, l) + "·";
    return s + "w";
  }
};

WeylModule::WeylModule(PolyTuple pi, WeylWindow window)
    : rep::WeightModule(pi.algebra()), pi_(std::move(pi)), window_(window) {
  if (window_.depth < 0 || window_.t2_degree < 0 || window_.height < 0) throw Error("window bounds must be >= 0");
  if (!pi_.algebra()->cartan().simply_laced()) throw Error("Weyl modules are implemented for simply-laced types");
  long maxdeg = 0;
  for (int i = 0; i < pi_.nodes(); ++i) maxdeg = std::max(maxdeg, pi_.degree(i));
  relation_degree_ = window_.relation_degree >= 0 ? window_.relation_degree : window_.t2_degree + maxdeg + 2;
  engine_ = std::make_unique<Engine>();
  auto& e = *engine_;
  e.g = pi_.algebra();
  e.pi = &pi_;
  e.win = window_;
  e.T = relation_degree_;
  e.nodes = pi_.nodes();
  e.lambda = pi_.lambda();
  // every key of the window
  std::function<void(Key&, std::size_t)> keys = [&](Key& k, std::size_t i) {
    if (i == k.size()) {
      if (e.in_window(k)) e.spaces[k];
      return;
    }
    for (long v = 0; v <= window_.height; ++v) {
      k[i] = v;
      keys(k, i + 1);
    }
    k[i] = 0;
  };
  Key k(static_cast<std::size_t>(e.nodes), 0);
  keys(k, 0);
  e.build_relations();
  e.build_basis();
  if (e.basis_mono.empty() || e.basis_key[0] != Key(static_cast<std::size_t>(e.nodes), 0))
    throw Error("internal: top vector lies in the relation space");
}

WeylModule::~WeylModule() = default;

std::size_t WeylModule::dim() const { return engine_->basis_mono.size(); }
const TorWeight& WeylModule::weight(std::size_t i) const { return engine_->basis_weight.at(i); }
std::string WeylModule::label(std::size_t i) const { return engine_->monomial_label(engine_->basis_mono.at(i)); }
const std::vector<long>& WeylModule::key(std::size_t i) const { return engine_->basis_key.at(i); }

std::vector<TorElement> WeylModule::generators() const {
  std::vector<TorElement> out;
  const auto& g = algebra();
  for (long t : window_.full ? std::vector<long>{-1, 0, 1} : std::vector<long>{0, 1})
    for (int i = 0; i <= g->rank(); ++i) {
      out.push_back(toralg::affine_e(g, i, t));
      out.push_back(toralg::affine_f(g, i, t));
    }
  return out;
}

std::vector<TorElement> WeylModule::raising_generators() const {
  std::vector<TorElement> out;
  for (int i = 0; i <= algebra()->rank(); ++i) out.push_back(toralg::affine_e(algebra(), i));
  return out;
}

std::string WeylModule::descriptor() const {
  nlohmann::ordered_json j;
  j["kind"] = "weyl";
  j["type"] = algebra()->cartan().label();
  j["pi"] = pi_.to_string();
  j["presentation"] = window_.full ? "full" : "current";
  j["depth"] = window_.depth;
  j["t2_degree"] = window_.t2_degree;
  j["height"] = window_.height;
  j["relation_degree"] = relation_degree_;
  return j.dump();
}

KeyTable WeylModule::key_table() const {
  KeyTable t;
  for (auto& [k, sp] : engine_->spaces) t[k] = 0;
  for (auto& k : engine_->basis_key) ++t[k];
  return t;
}

long WeylModule::max_basis_exponent() const {
  long m = 0;
  for (auto id : engine_->basis_mono)
    for (auto& l : engine_->monos[id]) m = std::max(m, l.r2 < 0 ? -l.r2 : l.r2);
  return m;
}

std::size_t WeylModule::relation_dim(const std::vector<long>& key) const {
  auto it = engine_->spaces.find(key);
  return it == engine_->spaces.end() ? 0 : it->second.rel_dim;
}

MaybeVector WeylModule::word(const std::vector<Letter>& letters) const {
  auto& e = *engine_;
  MVec v{{e.intern({}), 1}};
  Key k(static_cast<std::size_t>(e.nodes), 0);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    MVec next;
    for (auto& [id, c] : v) axpy(next, c, e.act(*it, id));
    v = std::move(next);
    k = e.shifted(k, e.info(*it).shift);
  }
  if (v.empty()) return SparseVector{};
  return e.reduce(k, v);
}

MaybeVector WeylModule::compute(const Letter& l, std::size_t i) const {
  auto& e = *engine_;
  MVec v = e.act(l, e.basis_mono[i]);
  if (v.empty()) return SparseVector{};
  return e.reduce(e.shifted(e.basis_key[i], e.info(l).shift), v);
}

std::shared_ptr<const WeylModule> weyl_module_truncated(const PolyTuple& pi, const WeylWindow& window) {
  return std::make_shared<const WeylModule>(pi, window);
}

std::size_t AffDecomposition::top_multiplicity() const {
  for (auto& [k, m] : multiplicity)
    if (key_height(k) == 0) return m;
  return 0;
}

std::string AffDecomposition::to_json() const {
  nlohmann::ordered_json j;
  j["constituents"] = nlohmann::ordered_json::array();
  for (auto& [k, m] : multiplicity)
    j["constituents"].push_back({{"key", k}, {"weight", weights.at(k).to_string()}, {"multiplicity", m}});
  j["loss"] = loss;
  j["q_reading"] = q_reading;
  j["p_reading"] = p_reading;
  return j.dump();
}

AffDecomposition aff_decomposition(const WeylModule& w) {
  AffDecomposition out;
  const auto& g = *w.algebra();
  const TorWeight lambda = w.tuple().lambda();
  for (auto& sp : rep::highest_weight_vectors(w)) {
    out.loss = out.loss || sp.loss;
    if (sp.vectors.empty()) continue;
    auto k = depth_key(g, lambda, sp.weight);
    out.multiplicity[k] += sp.vectors.size();
    out.weights.emplace(k, sp.weight);
    for (long x : k) out.q_reading = out.q_reading && x >= 0;
    for (int i = 0; i <= g.rank(); ++i) out.p_reading = out.p_reading && lambda.node(g, i) - sp.weight.node(g, i) >= 0;
  }
  return out;
}

}  // namespace dalie::weyl
