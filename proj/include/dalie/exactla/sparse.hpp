#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dalie/exactla/rational.hpp"

namespace dalie {

/// Sparse vector over Q keyed by basis index. Never stores zeros.
class SparseVector {
 public:
  using Entries = std::map<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index, Rational c = 1);

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Rational operator[](std::size_t i) const;
  void add(std::size_t i, const Rational& c);
  /// this += c * other
  void axpy(const Rational& c, const SparseVector& other);
  SparseVector& operator*=(const Rational& c);
  SparseVector& operator+=(const SparseVector& o) {
    axpy(1, o);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    axpy(-1, o);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

  std::optional<std::size_t> leading_index() const;
  /// Index one past the largest stored index (0 when empty).
  std::size_t extent() const;

 private:
  Entries entries_;
};

/// Row-major sparse matrix with declared dimensions.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  const SparseVector& row(std::size_t r) const { return rows_.at(r); }

  SparseVector multiply(const SparseVector& x) const;
  SparseMatrix multiply(const SparseMatrix& other) const;
  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

/// Incrementally maintained reduced row echelon basis of a subspace.
///
/// Pivots are the smallest index of each row; every pivot column is zero in
/// all other rows. Each row also remembers which combination of inserted
/// vectors produced it, so membership tests can return coordinates.
class EchelonBasis {
 public:
  struct Reduction {
    SparseVector remainder;
    /// coefficients over inserted vectors (by insertion order) such that
    /// input = remainder + sum coeff_k * inserted_k
    SparseVector combination;
  };

  EchelonBasis() = default;

  std::size_t rank() const { return rows_.size(); }

  /// Adds v; returns true when it enlarged the span. Every call consumes an
  /// insertion slot, independent or not.
  bool insert(const SparseVector& v);
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).remainder.is_zero(); }
  std::size_t insertions() const { return insertions_; }

  /// Rows of the reduced echelon form, sorted by pivot.
  std::vector<SparseVector> rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };
  std::map<std::size_t, Row> rows_;  // pivot -> row
  std::size_t insertions_ = 0;
};

std::size_t rank(const SparseMatrix& m);

/// Right null space basis in reduced echelon form: one vector per free column,
/// ordered by that column, with entry 1 at the free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Reduced row echelon form of m (nonzero rows only, sorted by pivot).
std::vector<SparseVector> row_echelon(const SparseMatrix& m);

/// (dim A∩B, dim A/(A∩B)) for spans of the two lists inside Q^ambient.
std::pair<std::size_t, std::size_t> intersect_and_quotient_dims(const std::vector<SparseVector>& a,
                                                                const std::vector<SparseVector>& b,
                                                                std::size_t ambient);

/// Basis of span(a) ∩ span(b).
std::vector<SparseVector> intersection_basis(const std::vector<SparseVector>& a,
                                             const std::vector<SparseVector>& b);

}  // namespace dalie
