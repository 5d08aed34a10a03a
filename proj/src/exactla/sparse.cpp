#include "dalie/exactla/sparse.hpp"

namespace dalie {

SparseVector SparseVector::unit(std::size_t index, Rational c) {
  SparseVector v;
  v.add(index, c);
  return v;
}

Rational SparseVector::operator[](std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::add(std::size_t i, const Rational& c) {
  if (dalie::is_zero(c)) return;
  auto [it, inserted] = entries_.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (dalie::is_zero(it->second)) entries_.erase(it);
  }
}

void SparseVector::axpy(const Rational& c, const SparseVector& other) {
  if (dalie::is_zero(c)) return;
  for (auto& [i, v] : other.entries_) add(i, c * v);
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (dalie::is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, v] : entries_) v *= c;
  return *this;
}

std::optional<std::size_t> SparseVector::leading_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first;
}

std::size_t SparseVector::extent() const { return entries_.empty() ? 0 : entries_.rbegin()->first + 1; }

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].extent() > cols) throw Error("row entry outside declared column count");
    m.rows_[r] = rows[r];
  }
  return m;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols_) throw Error("matrix index out of range");
  return rows_[r][c];
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows() || c >= cols_) throw Error("matrix index out of range");
  rows_[r].add(c, value - rows_[r][c]);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows() || c >= cols_) throw Error("matrix index out of range");
  rows_[r].add(c, value);
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
  if (x.extent() > cols_) throw Error("vector length exceeds matrix columns");
  SparseVector out;
  for (std::size_t r = 0; r < rows(); ++r) {
    Rational acc = 0;
    for (auto& [c, v] : rows_[r].entries()) {
      auto it = x.entries().find(c);
      if (it != x.entries().end()) acc += v * it->second;
    }
    out.add(r, acc);
  }
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows()) throw Error("matrix dimension mismatch in product");
  SparseMatrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto& [k, v] : rows_[r].entries()) out.rows_[r].axpy(v, other.rows_[k]);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto& [c, v] : rows_[r].entries()) out.rows_[c].add(r, v);
  return out;
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& v) const {
  Reduction red{v, {}};
  // Pivot columns are zero in every other row, so each pivot coefficient can
  // be read off the input directly.
  std::vector<std::pair<const Row*, Rational>> steps;
  for (auto& [i, c] : v.entries()) {
    auto it = rows_.find(i);
    if (it != rows_.end()) steps.emplace_back(&it->second, c);
  }
  for (auto& [row, c] : steps) {
    red.remainder.axpy(-c, row->vec);
    red.combination.axpy(c, row->combo);
  }
  return red;
}

bool EchelonBasis::insert(const SparseVector& v) {
  std::size_t slot = insertions_++;
  Reduction red = reduce(v);
  if (red.remainder.is_zero()) return false;
  std::size_t pivot = *red.remainder.leading_index();
  Rational inv = 1 / red.remainder[pivot];
  Row row{red.remainder * inv, (SparseVector::unit(slot) - red.combination) * inv};
  for (auto& [p, other] : rows_) {
    Rational c = other.vec[pivot];
    if (is_zero(c)) continue;
    other.vec.axpy(-c, row.vec);
    other.combo.axpy(-c, row.combo);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (auto& [p, r] : rows_) out.push_back(r.vec);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<SparseVector> row_echelon(const SparseMatrix& m) {
  EchelonBasis e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rows();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  EchelonBasis e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  auto pivots = e.pivots();
  auto rows = e.rows();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector k = SparseVector::unit(f);
    for (std::size_t j = 0; j < pivots.size(); ++j) k.add(pivots[j], -rows[j][f]);
    // normalize so the first nonzero entry is 1
    Rational lead = k.entries().begin()->second;
    out.push_back(k * (1 / lead));
  }
  return out;
}

std::pair<std::size_t, std::size_t> intersect_and_quotient_dims(const std::vector<SparseVector>& a,
                                                                const std::vector<SparseVector>& b,
                                                                std::size_t ambient) {
  for (auto* list : {&a, &b})
    for (auto& v : *list)
      if (v.extent() > ambient) throw Error("vector exceeds ambient dimension");
  EchelonBasis ea, eb, sum;
  for (auto& v : a) {
    ea.insert(v);
    sum.insert(v);
  }
  for (auto& v : b) {
    eb.insert(v);
    sum.insert(v);
  }
  std::size_t inter = ea.rank() + eb.rank() - sum.rank();
  return {inter, ea.rank() - inter};
}

std::vector<SparseVector> intersection_basis(const std::vector<SparseVector>& a,
                                             const std::vector<SparseVector>& b) {
  // Zassenhaus-style: a vector of span(a) lies in span(b) iff its remainder
  // modulo b is zero; collect kernel of the combined reduction.
  EchelonBasis eb;
  for (auto& v : b) eb.insert(v);
  EchelonBasis ea_rows;
  for (auto& v : a) ea_rows.insert(v);
  auto basis_a = ea_rows.rows();
  // remainders of basis_a modulo b; linear relations among remainders give
  // intersection vectors.
  EchelonBasis rem;
  std::vector<SparseVector> out;
  EchelonBasis out_span;
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    auto r = eb.reduce(basis_a[i]).remainder;
    auto red = rem.reduce(r);
    if (red.remainder.is_zero()) {
      // basis_a[i] - sum c_k basis_a[k] has zero remainder -> in span(b)
      SparseVector w = basis_a[i];
      for (auto& [k, c] : red.combination.entries()) w.axpy(-c, basis_a[k]);
      if (!w.is_zero() && out_span.insert(w)) out.push_back(w);
    }
    rem.insert(r);
  }
  return out;
}

}  // namespace dalie
