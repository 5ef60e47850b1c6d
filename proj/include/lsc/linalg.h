// Exact rank / kernel / solve on sparse matrices. Over Q the elimination is
// fraction-free (rows kept integral and primitive, cross-multiplied updates,
// content gcd divided out); over F_p it is ordinary pivoted elimination.
// Pivot rule everywhere: leftmost column, then lowest original row index among
// the sparsest candidate rows. Canonical outputs (kernel bases, particular
// solutions) are derived from the reduced echelon form, so they do not depend
// on the internal scaling.
#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lsc/sparse.h"

namespace lsc {

struct LinalgOptions {
  // optional modular pre-pass for rational ranks: compute rank mod a few
  // large primes and short-circuit when the lower bound meets min(rows, cols)
  bool modular_prepass = false;
  std::vector<std::uint32_t> prepass_primes = {999983, 1000003};
};

std::size_t rank(const SparseMatrix& m, const LinalgOptions& opts = {});

// canonical kernel basis: one vector per free column (ascending), with 1 at
// the free column and the RREF-determined pivot entries; zero matrix of n
// columns yields the n standard basis vectors
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// canonical particular solution of M x = b (free variables set to zero), or
// nullopt when inconsistent
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

// like solve, but an inconsistent system yields a re-verifiable certificate:
// a row functional phi with phi^T M = 0 and phi^T b = value != 0
struct InconsistencyCertificate {
  SparseVector functional;
  Scalar value;
};
std::variant<SparseVector, InconsistencyCertificate> solve_or_certificate(
    const SparseMatrix& m, const SparseVector& b);

// coefficients (constant term first, exactly points.size() of them) of the
// unique polynomial of degree < k through k points with distinct abscissas
std::vector<Scalar> interpolate_polynomial(
    const std::vector<std::pair<Scalar, Scalar>>& points);

// incrementally maintained reduced echelon span of row vectors; used for
// membership tests, span stabilization and reduction modulo a subspace
class RowSpan {
 public:
  RowSpan(std::size_t len, Field f) : len_(len), field_(f) {}

  // reduces v against the span; returns the (possibly zero) residue
  SparseVector reduce(SparseVector v) const;
  // inserts v's residue if nonzero; returns true when the span grew
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return len_; }
  // RREF rows, sorted by pivot column (a canonical basis of the span)
  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  std::size_t len_;
  Field field_;
  std::vector<SparseVector> rows_;      // RREF, pivot value 1, sorted by pivot
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace lsc
