// Sparse exact vectors and row-major sparse matrices. Entries are kept sorted
// by index with no explicit zeros; every container knows its field and checks
// inserted scalars against it.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lsc/scalar.h"

namespace lsc {

class SparseVector {
 public:
  SparseVector() : len_(0), field_(Field::rationals()) {}
  SparseVector(std::size_t len, Field f) : len_(len), field_(f) {}

  std::size_t size() const { return len_; }
  Field field() const { return field_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Scalar at(std::size_t i) const;
  void set(std::size_t i, const Scalar& v);        // erases on zero
  void add(std::size_t i, const Scalar& v);        // += at index
  const std::vector<std::pair<std::size_t, Scalar>>& entries() const { return entries_; }
  std::size_t leading_index() const;               // throws on zero vector
  const Scalar& leading_value() const;

  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  SparseVector& operator*=(const Scalar& c);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& c, SparseVector v) { return v *= c; }
  SparseVector operator-() const;
  void add_scaled(const SparseVector& o, const Scalar& c);  // this += c*o

  friend bool operator==(const SparseVector& a, const SparseVector& b);
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

  // single basis vector e_i
  static SparseVector unit(std::size_t len, Field f, std::size_t i);

  std::string str() const;  // debug form "(i: v, ...)"

 private:
  std::size_t len_;
  Field field_;
  std::vector<std::pair<std::size_t, Scalar>> entries_;

  void check(std::size_t i, const Scalar& v) const;
};

class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
  SparseMatrix(std::size_t rows, std::size_t cols, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_zero() const;
  std::size_t nnz() const;

  Scalar entry(std::size_t r, std::size_t c) const { return data_[r].at(c); }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r].set(c, v); }
  void add(std::size_t r, std::size_t c, const Scalar& v) { data_[r].add(c, v); }
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVector v);

  static SparseMatrix identity(std::size_t n, Field f);
  // from dense initializer rows of integers (test/construction convenience)
  static SparseMatrix from_rows(Field f, const std::vector<std::vector<long>>& rows);

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseMatrix pow(std::uint64_t e) const;  // square matrices
  SparseVector apply(const SparseVector& v) const;  // M * v, v indexed by columns

  // submatrix with the given columns (in the given order), all rows
  SparseMatrix select_columns(const std::vector<std::size_t>& cols) const;
  SparseMatrix select_rows(const std::vector<std::size_t>& rows) const;
  // [this | extra] column augmentation
  SparseMatrix augment(const SparseMatrix& right) const;
  static SparseMatrix from_columns(std::size_t len, Field f,
                                   const std::vector<SparseVector>& cols);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  std::string str() const;  // debug dense-ish dump (small matrices)

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<SparseVector> data_;
};

}  // namespace lsc
