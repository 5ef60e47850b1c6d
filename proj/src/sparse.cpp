#include "lsc/sparse.h"

#include <algorithm>

#include "lsc/errors.h"

namespace lsc {

void SparseVector::check(std::size_t i, const Scalar& v) const {
  if (i >= len_) throw DimensionError("index " + std::to_string(i) + " out of range (len " + std::to_string(len_) + ")");
  if (v.field() != field_) throw FieldMismatchError("entry field " + v.field().str() + " in a " + field_.str() + " vector");
}

Scalar SparseVector::at(std::size_t i) const {
  if (i >= len_) throw DimensionError("index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar::zero(field_);
}

void SparseVector::set(std::size_t i, const Scalar& v) {
  check(i, v);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    if (v.is_zero())
      entries_.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    entries_.insert(it, {i, v});
  }
}

void SparseVector::add(std::size_t i, const Scalar& v) {
  check(i, v);
  if (v.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, {i, v});
  }
}

std::size_t SparseVector::leading_index() const {
  if (entries_.empty()) throw DomainError("leading index of zero vector");
  return entries_.front().first;
}

const Scalar& SparseVector::leading_value() const {
  if (entries_.empty()) throw DomainError("leading value of zero vector");
  return entries_.front().second;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  add_scaled(o, Scalar::one(field_));
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  add_scaled(o, -Scalar::one(field_));
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldMismatchError("scaling " + field_.str() + " vector by " + c.field().str());
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

void SparseVector::add_scaled(const SparseVector& o, const Scalar& c) {
  if (o.field_ != field_ || c.field() != field_) throw FieldMismatchError("add_scaled across fields");
  if (o.len_ != len_) throw DimensionError("add_scaled length mismatch");
  if (c.is_zero() || o.entries_.empty()) return;
  std::vector<std::pair<std::size_t, Scalar>> merged;
  merged.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      Scalar v = c * b->second;
      if (!v.is_zero()) merged.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      Scalar v = a->second + c * b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a, ++b;
    }
  }
  entries_ = std::move(merged);
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  return a.len_ == b.len_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

SparseVector SparseVector::unit(std::size_t len, Field f, std::size_t i) {
  SparseVector v(len, f);
  v.set(i, Scalar::one(f));
  return v;
}

std::string SparseVector::str() const {
  std::string s = "(";
  bool first = true;
  for (const auto& [i, v] : entries_) {
    if (!first) s += ", ";
    s += std::to_string(i) + ": " + v.str();
    first = false;
  }
  return s + ")";
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows, SparseVector(cols, f)) {}

bool SparseMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.is_zero()) return false;
  return true;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.nnz();
  return n;
}

void SparseMatrix::set_row(std::size_t r, SparseVector v) {
  if (v.size() != cols_ || v.field() != field_) throw DimensionError("set_row shape/field mismatch");
  data_[r] = std::move(v);
}

SparseMatrix SparseMatrix::identity(std::size_t n, Field f) {
  SparseMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

SparseMatrix SparseMatrix::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), nc, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionError("ragged rows");
    for (std::size_t c = 0; c < nc; ++c)
      if (rows[r][c] != 0) m.set(r, c, Scalar::integer(rows[r][c], f));
  }
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries()) t.data_[c].set(r, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  SparseMatrix out(rows_, o.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector acc(o.cols_, field_);
    for (const auto& [k, v] : data_[r].entries()) acc.add_scaled(o.data_[k], v);
    out.data_[r] = std::move(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] += o.data_[r];
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] -= o.data_[r];
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out = *this;
  for (auto& r : out.data_) r *= c;
  return out;
}

SparseMatrix SparseMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw DimensionError("pow of non-square matrix");
  SparseMatrix r = identity(rows_, field_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.size() != cols_ || v.field() != field_) throw DimensionError("apply shape/field mismatch");
  // column combination: sum_j v_j * col_j ; via rows: out_r = <row_r, v>
  SparseVector out(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    const auto& re = data_[r].entries();
    const auto& ve = v.entries();
    auto a = re.begin();
    auto b = ve.begin();
    while (a != re.end() && b != ve.end()) {
      if (a->first < b->first) ++a;
      else if (b->first < a->first) ++b;
      else { acc += a->second * b->second; ++a; ++b; }
    }
    if (!acc.is_zero()) out.set(r, acc);
  }
  return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  SparseMatrix out(rows_, cols.size(), field_);
  std::vector<std::size_t> place(cols_, SIZE_MAX);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw DimensionError("select_columns index out of range");
    place[cols[k]] = k;
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r].entries())
      if (place[c] != SIZE_MAX) out.set(r, place[c], v);
  return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  SparseMatrix out(rows.size(), cols_, field_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw DimensionError("select_rows index out of range");
    out.data_[k] = data_[rows[k]];
  }
  return out;
}

SparseMatrix SparseMatrix::augment(const SparseMatrix& right) const {
  if (rows_ != right.rows_ || field_ != right.field_) throw DimensionError("augment shape/field mismatch");
  SparseMatrix out(rows_, cols_ + right.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector row(cols_ + right.cols_, field_);
    for (const auto& [c, v] : data_[r].entries()) row.set(c, v);
    for (const auto& [c, v] : right.data_[r].entries()) row.set(cols_ + c, v);
    out.data_[r] = std::move(row);
  }
  return out;
}

SparseMatrix SparseMatrix::from_columns(std::size_t len, Field f,
                                        const std::vector<SparseVector>& cols) {
  SparseMatrix out(len, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != len || cols[c].field() != f)
      throw DimensionError("from_columns shape/field mismatch");
    for (const auto& [r, v] : cols[c].entries()) out.set(r, c, v);
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string SparseMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += " ";
      s += entry(r, c).str();
    }
    s += "]\n";
  }
  return s;
}

}  // namespace lsc
