#include "dalie/rep/module.hpp"

#include <set>
#include <tuple>

#include "json.hpp"

namespace dalie::rep {

MaybeVector WeightModule::act_basis(const Letter& l, std::size_t i) const {
  if (i >= dim()) throw Error("basis index out of range");
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(l, i);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  MaybeVector out = compute(l, i);
  cache_.emplace(key, out);
  return out;
}

MaybeVector act(const WeightModule& m, const Letter& l, const SparseVector& v) {
  SparseVector out;
  for (auto& [i, c] : v.entries()) {
    auto img = m.act_basis(l, i);
    if (!img) return std::nullopt;
    out.axpy(c, *img);
  }
  return out;
}

MaybeVector act(const WeightModule& m, const TorElement& e, const SparseVector& v) {
  SparseVector out;
  for (auto& [l, c] : e.terms()) {
    auto img = act(m, l, v);
    if (!img) return std::nullopt;
    out.axpy(c, *img);
  }
  return out;
}

MaybeVector act_word(const WeightModule& m, const std::vector<TorElement>& factors, const SparseVector& v) {
  MaybeVector cur = v;
  for (auto it = factors.rbegin(); it != factors.rend() && cur; ++it) {
    if (cur->is_zero()) return cur;
    cur = act(m, *it, *cur);
  }
  return cur;
}

std::map<TorWeight, std::vector<std::size_t>> weight_spaces(const WeightModule& m) {
  std::map<TorWeight, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < m.dim(); ++i) out[m.weight(i)].push_back(i);
  return out;
}

namespace {

// Which weight coordinates the generated algebra separates: the finite part
// for the module's own generators (they contain e_i, f_i, hence h_i), d1 and
// d2 only when they are generators themselves.
struct Separation {
  bool fin = false, d1 = false, d2 = false;
};

Separation separation(const std::vector<TorElement>& gens, bool defaults) {
  Separation s;
  s.fin = defaults;
  for (auto& g : gens) {
    if (g.terms().size() != 1) continue;
    auto kind = g.terms().begin()->first.kind;
    s.d1 = s.d1 || kind == Letter::Kind::d1;
    s.d2 = s.d2 || kind == Letter::Kind::d2;
  }
  return s;
}

std::vector<SparseVector> components(const WeightModule& m, const Separation& sep, const SparseVector& v) {
  if (!sep.fin && !sep.d1 && !sep.d2) return {v};
  std::map<std::tuple<std::vector<Rational>, Rational, Rational>, SparseVector> parts;
  for (auto& [i, c] : v.entries()) {
    auto& w = m.weight(i);
    auto key = std::make_tuple(sep.fin ? w.fin : std::vector<Rational>{}, sep.d1 ? Rational(w.d1) : Rational(0),
                               sep.d2 && m.d2_graded() ? Rational(w.d2) : Rational(0));
    parts[key].add(i, c);
  }
  std::vector<SparseVector> out;
  for (auto& [k, p] : parts) out.push_back(p);
  return out;
}

}  // namespace

Closure submodule_closure(const WeightModule& m, const std::vector<SparseVector>& seeds,
                          const std::vector<TorElement>& generators) {
  const auto gens = generators.empty() ? m.generators() : generators;
  const auto sep = separation(gens, generators.empty());
  Closure c;
  EchelonBasis span;
  std::vector<SparseVector> queue;
  auto push = [&](const SparseVector& v) {
    if (v.extent() > m.dim()) throw Error("vector outside the module");
    for (auto& part : components(m, sep, v))
      if (span.insert(part)) queue.push_back(part);
  };
  for (auto& s : seeds) push(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    SparseVector v = queue[head];
    for (auto& g : gens) {
      auto img = act(m, g, v);
      if (!img) {
        c.loss = true;
        continue;
      }
      push(*img);
    }
  }
  c.basis = span.rows();
  return c;
}

bool closure_contains(const Closure& c, const SparseVector& v) {
  EchelonBasis e;
  for (auto& b : c.basis) e.insert(b);
  return e.contains(v);
}

std::vector<HighestWeightSpace> highest_weight_vectors(const WeightModule& m, const std::vector<TorElement>& raising) {
  const auto gens = raising.empty() ? m.raising_generators() : raising;
  std::vector<HighestWeightSpace> out;
  for (auto& [w, idx] : weight_spaces(m)) {
    HighestWeightSpace hw{w, {}, false};
    // rows: one per (generator, target coordinate); columns: local basis
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> rows;
    for (std::size_t col = 0; col < idx.size(); ++col)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        auto img = act(m, gens[gi], SparseVector::unit(idx[col]));
        if (!img) {
          hw.loss = true;
          continue;
        }
        for (auto& [t, c] : img->entries()) rows[{gi, t}].add(col, c);
      }
    std::vector<SparseVector> r;
    for (auto& [k, v] : rows) r.push_back(v);
    for (auto& k : kernel_basis(SparseMatrix::from_rows(idx.size(), r))) {
      SparseVector v;
      for (auto& [col, c] : k.entries()) v.add(idx[col], c);
      hw.vectors.push_back(v);
    }
    if (!hw.vectors.empty()) out.push_back(std::move(hw));
  }
  return out;
}

std::map<TorWeight, std::size_t> character(const WeightModule& m) {
  std::map<TorWeight, std::size_t> out;
  for (auto& [w, idx] : weight_spaces(m)) out[w] = idx.size();
  return out;
}

namespace {

nlohmann::json weight_json(const TorWeight& w) {
  nlohmann::json fin = nlohmann::json::array();
  for (auto& v : w.fin) fin.push_back(v.get_str());
  return {{"fin", fin}, {"c1", w.c1.get_str()}, {"d1", w.d1.get_str()}};
}

}  // namespace

std::string character_json(const WeightModule& m) {
  nlohmann::json j;
  j["module"] = nlohmann::json::parse(m.descriptor());
  j["weights"] = nlohmann::json::array();
  for (auto& [w, d] : character(m)) j["weights"].push_back({{"weight", weight_json(w)}, {"dim", d}});
  j["dim"] = m.dim();
  return j.dump();
}

AxiomReport module_axiom_check(const WeightModule& m, const std::vector<TorElement>& generators) {
  const auto gens = generators.empty() ? m.generators() : generators;
  AxiomReport rep;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      TorElement br = toralg::bracket_tor(gens[a], gens[b]);
      for (std::size_t i = 0; i < m.dim(); ++i) {
        auto e = SparseVector::unit(i);
        auto lhs = act(m, br, e);
        auto ab = act_word(m, {gens[a], gens[b]}, e);
        auto ba = act_word(m, {gens[b], gens[a]}, e);
        if (!lhs || !ab || !ba) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        if (*lhs != *ab - *ba) {
          if (rep.failures++ == 0)
            rep.witness = "[" + gens[a].to_string() + ", " + gens[b].to_string() + "] on " + m.label(i);
        }
      }
    }
  return rep;
}

std::size_t grading_violations(const WeightModule& m, const std::vector<TorElement>& generators) {
  const auto gens = generators.empty() ? m.generators() : generators;
  std::size_t bad = 0;
  for (auto& g : gens)
    for (auto& [l, c] : g.terms())
      for (std::size_t i = 0; i < m.dim(); ++i) {
        auto img = m.act_basis(l, i);
        if (!img) continue;
        TorWeight target = m.weight(i).shifted(*m.algebra(), l);
        if (!m.d2_graded()) target.d2 = m.weight(i).d2;
        for (auto& [j, v] : img->entries())
          if (!(m.weight(j) == target)) ++bad;
      }
  return bad;
}

std::map<std::size_t, SparseVector> operator_matrix(const WeightModule& m, const TorElement& e, bool* loss) {
  std::map<std::size_t, SparseVector> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto img = act(m, e, SparseVector::unit(i));
    if (!img) {
      if (loss) *loss = true;
      continue;
    }
    out.emplace(i, *img);
  }
  return out;
}

std::vector<SparseMatrix> endomorphisms(const WeightModule& m, const std::vector<TorElement>& generators) {
  const auto gens = generators.empty() ? m.generators() : generators;
  // unknowns E[r][c] with weight(r) == weight(c)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (auto& [w, idx] : weight_spaces(m))
    for (auto r : idx)
      for (auto c : idx) {
        var[{r, c}] = vars.size();
        vars.emplace_back(r, c);
      }
  std::vector<std::vector<std::size_t>> col_vars(m.dim());  // variables in column c
  for (std::size_t k = 0; k < vars.size(); ++k) col_vars[vars[k].second].push_back(k);
  std::vector<SparseVector> eqs;
  for (auto& g : gens) {
    auto mat = operator_matrix(m, g);
    // (E G - G E) e_j = 0 for loss-free j with all G e_i (i in weight of j) loss-free
    for (auto& [j, gj] : mat) {
      std::map<std::size_t, SparseVector> rows;  // target row -> equation
      for (auto& [i, c] : gj.entries())
        for (auto k : col_vars[i]) rows[vars[k].first].add(k, c);  // (E G e_j)_row = Σ_i E[row][i] G[i][j]
      bool ok = true;
      for (auto k : col_vars[j]) {
        std::size_t i = vars[k].first;  // E[i][j]
        auto it = mat.find(i);
        if (it == mat.end()) {
          ok = false;
          break;
        }
        for (auto& [row, c] : it->second.entries()) rows[row].add(k, -c);
      }
      if (!ok) continue;
      for (auto& [row, eq] : rows)
        if (!eq.is_zero()) eqs.push_back(eq);
    }
  }
  std::vector<SparseMatrix> out;
  for (auto& k : kernel_basis(SparseMatrix::from_rows(vars.size(), eqs))) {
    SparseMatrix e(m.dim(), m.dim());
    for (auto& [v, c] : k.entries()) e.set(vars[v].first, vars[v].second, c);
    out.push_back(e);
  }
  return out;
}

namespace {

SparseMatrix minus_scalar(const SparseMatrix& a, const Rational& c) {
  SparseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.add(i, i, -c);
  return out;
}

SparseVector flatten(const SparseMatrix& a) {
  SparseVector v;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (auto& [c, x] : a.row(r).entries()) v.add(r * a.cols() + c, x);
  return v;
}

bool is_zero_matrix(const SparseMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a.row(r).is_zero()) return false;
  return true;
}

}  // namespace

bool endomorphism_algebra_is_local(const std::vector<SparseMatrix>& endos, std::size_t dim) {
  if (dim == 0) return false;
  std::vector<SparseMatrix> nil;
  for (auto& e : endos) {
    Rational tr = 0;
    for (std::size_t i = 0; i < dim; ++i) tr += e.at(i, i);
    auto n = minus_scalar(e, tr / static_cast<long>(dim));
    if (!is_zero_matrix(n)) nil.push_back(n);
  }
  // A_1 = span(nil), A_{k+1} = span(nil * A_k); local iff the chain dies
  std::vector<SparseMatrix> layer = nil;
  for (std::size_t step = 0; step <= dim && !layer.empty(); ++step) {
    EchelonBasis span;
    std::vector<SparseMatrix> next;
    for (auto& n : nil)
      for (auto& a : layer) {
        auto p = n.multiply(a);
        if (span.insert(flatten(p))) next.push_back(p);
      }
    layer = std::move(next);
  }
  return layer.empty();
}

}  // namespace dalie::rep
