#include "dalie/liecore/algebra.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"
#include <set>
#include <sstream>

namespace dalie::liecore {

namespace {

IntMatrix from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (auto [a, b] : edges) m[a][b] = m[b][a] = -1;
  return m;
}

}  // namespace

CartanData CartanData::of_type(char type, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case 'A':
      if (rank < 1) throw Error("type A needs rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (rank < 4) throw Error("type D needs rank >= 4");
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw Error("type E needs rank 6, 7 or 8");
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw Error(std::string("unsupported Cartan type ") + type);
  }
  return CartanData(from_edges(rank, edges), type);
}

CartanData CartanData::from_matrix(IntMatrix m, char type) {
  std::size_t n = m.size();
  if (n == 0) throw Error("invalid Cartan matrix: empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("invalid Cartan matrix: not square");
    if (m[i][i] != 2) throw Error("invalid Cartan matrix: diagonal entry != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) throw Error("invalid Cartan matrix: positive off-diagonal entry");
      if ((m[i][j] == 0) != (m[j][i] == 0)) throw Error("invalid Cartan matrix: a_ij = 0 but a_ji != 0");
    }
  }
  return CartanData(std::move(m), type);
}

CartanData CartanData::from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  if (j.contains("matrix")) return from_matrix(j["matrix"].get<IntMatrix>(), '?');
  std::string t = j.at("type").get<std::string>();
  if (t.size() != 1) throw Error("Cartan type must be a single letter");
  return of_type(t[0], j.at("rank").get<int>());
}

bool CartanData::simply_laced() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (i != j && (matrix_[i][j] < -1 || matrix_[i][j] != matrix_[j][i])) return false;
  return true;
}

std::string CartanData::label() const { return std::string(1, type_) + std::to_string(rank()); }

int RootSystem::index_of(const RootVector& r) const {
  auto it = std::find(positive.begin(), positive.end(), r);
  return it == positive.end() ? -1 : static_cast<int>(it - positive.begin());
}

bool FinWeight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return is_integer(q) && sgn(q) >= 0; });
}

std::string FinWeight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
  os << ")";
  return os.str();
}

FinWeight fin_weight(std::initializer_list<long> values) {
  FinWeight w;
  for (long v : values) w.coords.emplace_back(v);
  return w;
}

namespace {

RootSystem build_roots(const CartanData& data) {
  const int n = data.rank();
  auto pairing = [&](const RootVector& r, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += r[j] * data.entry(j, i);
    return s;
  };
  std::set<RootVector> seen;
  std::vector<RootVector> layer;
  for (int i = 0; i < n; ++i) {
    RootVector r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  std::vector<RootVector> all;
  // Simply-laced: β + α_i is a root iff (β, α_i) = -1.
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<RootVector> next;
    for (auto& r : layer)
      for (int i = 0; i < n; ++i) {
        if (pairing(r, i) != -1) continue;
        RootVector s = r;
        s[i] += 1;
        if (seen.insert(s).second) next.push_back(s);
      }
    layer = std::move(next);
  }
  RootSystem rs;
  rs.positive = all;
  for (auto& r : all) {
    int h = 0;
    for (int c : r) h += c;
    rs.heights.push_back(h);
  }
  rs.highest = all.size() - 1;
  rs.marks = all.back();
  return rs;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(CartanData data) : data_(std::move(data)) {
  if (!data_.simply_laced())
    throw Error("only simply-laced Cartan types are supported, got " + data_.label());
  roots_ = build_roots(data_);
  const std::size_t d = dim();
  table_.assign(d * d, SparseVector{});
  const std::size_t np = num_positive();

  // Signed-root helpers in the E_γ convention.
  auto e_basis = [&](const RootVector& g) -> std::pair<std::size_t, int> {
    bool positive = std::any_of(g.begin(), g.end(), [](int c) { return c > 0; });
    RootVector a = g;
    if (!positive)
      for (int& c : a) c = -c;
    int idx = roots_.index_of(a);
    if (idx < 0) return {d, 0};
    return positive ? std::pair{raising(idx), 1} : std::pair{lowering(idx), -1};
  };

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SparseVector out;
      Part pa = part(a), pb = part(b);
      if (pa == Part::cartan && pb == Part::cartan) {
        // abelian
      } else if (pa == Part::cartan || pb == Part::cartan) {
        bool flip = pb == Part::cartan;
        std::size_t h = flip ? b : a, x = flip ? a : b;
        int i = static_cast<int>(h - 2 * np);
        int val = root_on_coroots(root_of(x))[i];
        out.add(x, flip ? -val : val);
      } else {
        RootVector ra = root_of(a), rb = root_of(b);
        // basis element = sign * E_root
        int sa = pa == Part::raising ? 1 : -1;
        int sb = pb == Part::raising ? 1 : -1;
        RootVector sum(ra.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ra[k] + rb[k];
        bool zero = std::all_of(sum.begin(), sum.end(), [](int c) { return c == 0; });
        if (zero) {
          // [E_α, E_{-α}] = -h_α, with h_{-α} = -h_α
          bool a_pos = pa == Part::raising;
          std::size_t root = a_pos ? a : a - np;
          SparseVector h = coroot(root);
          int sign = -sa * sb * (a_pos ? 1 : -1);
          out.axpy(sign, h);
        } else {
          auto [idx, sc] = e_basis(sum);
          if (idx < d) {
            int eps = epsilon(ra, rb);
            out.add(idx, sa * sb * eps * sc);
          }
        }
      }
      table_[a * d + b] = std::move(out);
    }
}

int ChevalleyAlgebra::epsilon(const RootVector& a, const RootVector& b) const {
  long exponent = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      bool neg = (i == j) || (i < j && data_.entry(i, j) == -1);
      if (neg) exponent += static_cast<long>(a[i]) * b[j];
    }
  return (exponent % 2 == 0) ? 1 : -1;
}

std::size_t ChevalleyAlgebra::simple_root_index(int i) const {
  RootVector r(rank(), 0);
  r[i] = 1;
  return static_cast<std::size_t>(roots_.index_of(r));
}

ChevalleyAlgebra::Part ChevalleyAlgebra::part(std::size_t basis) const {
  if (basis >= dim()) throw Error("basis index out of range");
  if (basis < num_positive()) return Part::raising;
  if (basis < 2 * num_positive()) return Part::lowering;
  return Part::cartan;
}

RootVector ChevalleyAlgebra::root_of(std::size_t basis) const {
  switch (part(basis)) {
    case Part::raising: return roots_.positive[basis];
    case Part::lowering: {
      RootVector r = roots_.positive[basis - num_positive()];
      for (int& c : r) c = -c;
      return r;
    }
    case Part::cartan: return RootVector(rank(), 0);
  }
  return {};
}

std::vector<int> ChevalleyAlgebra::root_on_coroots(const RootVector& r) const {
  std::vector<int> out(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[i] += r[j] * data_.entry(j, i);
  return out;
}

std::string ChevalleyAlgebra::basis_name(std::size_t basis) const {
  auto coords = [&](std::size_t root) {
    std::string s;
    for (int c : roots_.positive[root]) s += std::to_string(c);
    return s;
  };
  switch (part(basis)) {
    case Part::raising: return "x+[" + coords(basis) + "]";
    case Part::lowering: return "x-[" + coords(basis - num_positive()) + "]";
    case Part::cartan: return "h" + std::to_string(basis - 2 * num_positive() + 1);
  }
  return "?";
}

SparseVector ChevalleyAlgebra::coroot(std::size_t root) const {
  SparseVector h;
  const auto& r = roots_.positive.at(root);
  for (int i = 0; i < rank(); ++i) h.add(cartan_index(i), r[i]);
  return h;
}

Rational ChevalleyAlgebra::form_basis(std::size_t a, std::size_t b) const {
  Part pa = part(a), pb = part(b);
  const std::size_t np = num_positive();
  if (pa == Part::cartan && pb == Part::cartan) return data_.entry(static_cast<int>(a - 2 * np), static_cast<int>(b - 2 * np));
  if (pa == Part::raising && pb == Part::lowering && b - np == a) return 1;
  if (pa == Part::lowering && pb == Part::raising && a - np == b) return 1;
  return 0;
}

SparseVector ChevalleyAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (auto& [a, ca] : x.entries())
    for (auto& [b, cb] : y.entries()) out.axpy(ca * cb, bracket_basis(a, b));
  return out;
}

Rational ChevalleyAlgebra::form(const SparseVector& x, const SparseVector& y) const {
  Rational acc = 0;
  for (auto& [a, ca] : x.entries())
    for (auto& [b, cb] : y.entries()) {
      Rational f = form_basis(a, b);
      if (!is_zero(f)) acc += ca * cb * f;
    }
  return acc;
}

AlgebraPtr build_algebra(const CartanData& data) { return std::make_shared<const ChevalleyAlgebra>(data); }

SparseVector bracket_fin(const ChevalleyAlgebra& g, const SparseVector& x, const SparseVector& y) {
  if (x.extent() > g.dim() || y.extent() > g.dim()) throw Error("element does not belong to the algebra");
  return g.bracket(x, y);
}

Rational invariant_form(const ChevalleyAlgebra& g, const SparseVector& x, const SparseVector& y) {
  if (x.extent() > g.dim() || y.extent() > g.dim()) throw Error("element does not belong to the algebra");
  return g.form(x, y);
}

FinWeight dual_dominant_weight(const CartanData& data, const FinWeight& mu) {
  if (static_cast<int>(mu.coords.size()) != data.rank()) throw Error("weight rank mismatch");
  if (!mu.dominant()) throw Error("dual_dominant_weight needs a dominant weight");
  FinWeight w;
  for (auto& c : mu.coords) w.coords.push_back(-c);
  // s_i(w) = w - w(h_i) α_i, with α_i(h_j) = a_ji
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < data.rank(); ++i) {
      if (sgn(w.coords[i]) >= 0) continue;
      Rational c = w.coords[i];
      for (int j = 0; j < data.rank(); ++j) w.coords[j] -= c * data.entry(i, j);
      changed = true;
    }
  }
  return w;
}

mpz_class weyl_dimension(const ChevalleyAlgebra& g, const FinWeight& lambda) {
  Rational num = 1;
  const auto& rs = g.roots();
  for (std::size_t k = 0; k < rs.positive.size(); ++k) {
    Rational pair = 0;
    for (int i = 0; i < g.rank(); ++i) pair += rs.positive[k][i] * (lambda.coords[i] + 1);
    num *= pair / rs.heights[k];
  }
  if (!is_integer(num)) throw Error("Weyl dimension formula produced a non-integer");
  return num.get_num();
}

}  // namespace dalie::liecore
