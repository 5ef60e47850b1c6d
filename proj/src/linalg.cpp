#include "lsc/linalg.h"

#include <algorithm>
#include <cassert>
#include <map>

#include "lsc/errors.h"

namespace lsc {

namespace {

using Entries = std::vector<std::pair<std::size_t, Scalar>>;

struct ERow {
  std::size_t orig;  // original row index, for the deterministic pivot rule
  Entries e;         // sorted by column, no zeros
};

// merged = ca*a + cb*b
Entries combine(const Entries& a, const Scalar& ca, const Entries& b, const Scalar& cb) {
  Entries out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      Scalar v = ca * i->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
    } else if (i == a.end() || j->first < i->first) {
      Scalar v = cb * j->second;
      if (!v.is_zero()) out.emplace_back(j->first, std::move(v));
      ++j;
    } else {
      Scalar v = ca * i->second + cb * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

// divide an all-integer rational row by the gcd of its numerators
void content_reduce(Entries& e) {
  mpz_class g = 0;
  for (const auto& [c, v] : e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.rational_value().get_num().get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& [c, v] : e) v = Scalar::from_mpq(v.rational_value() / g);
}

// scale a rational row to integral & primitive
void make_integral(Entries& e) {
  mpz_class l = 1;
  for (const auto& [c, v] : e)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational_value().get_den().get_mpz_t());
  if (l != 1) {
    mpq_class lq(l);
    for (auto& [c, v] : e) v = Scalar::from_mpq(v.rational_value() * lq);
  }
  content_reduce(e);
}

std::size_t nnz_below(const Entries& e, std::size_t wcut) {
  std::size_t n = 0;
  for (const auto& [c, v] : e) {
    if (c >= wcut) break;
    ++n;
  }
  return n;
}

struct EchelonForm {
  std::vector<ERow> pivots;  // pivot columns strictly increasing
  std::vector<ERow> dead;    // rows with no support below wcut (combination log)
};

// columns >= wcut never become pivots and do not count toward row sparsity;
// used to drag an identity block along for inconsistency certificates
EchelonForm echelonize(std::vector<ERow> rows, std::size_t wcut, Field field) {
  const bool fraction_free = field.is_rational();
  EchelonForm out;
  std::map<std::size_t, std::vector<ERow>> buckets;
  auto file_row = [&](ERow&& r) {
    if (r.e.empty()) return;
    if (fraction_free) content_reduce(r.e);
    if (r.e.front().first >= wcut) {
      out.dead.push_back(std::move(r));
      return;
    }
    std::size_t lead = r.e.front().first;
    buckets[lead].push_back(std::move(r));
  };
  for (auto& r : rows) {
    if (fraction_free) make_integral(r.e);
    file_row(std::move(r));
  }

  while (!buckets.empty()) {
    auto it = buckets.begin();
    std::vector<ERow> cand = std::move(it->second);
    buckets.erase(it);
    // pivot choice: sparsest (below wcut), then lowest original index
    std::size_t best = 0;
    for (std::size_t k = 1; k < cand.size(); ++k) {
      std::size_t nb = nnz_below(cand[k].e, wcut), nbest = nnz_below(cand[best].e, wcut);
      if (nb < nbest || (nb == nbest && cand[k].orig < cand[best].orig)) best = k;
    }
    ERow pivot = std::move(cand[best]);
    const Scalar plead = pivot.e.front().second;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (k == best) continue;
      ERow& r = cand[k];
      const Scalar rlead = r.e.front().second;
      ERow next{r.orig, {}};
      if (fraction_free)
        next.e = combine(r.e, plead, pivot.e, -rlead);
      else
        next.e = combine(r.e, Scalar::one(field), pivot.e, -(rlead / plead));
      file_row(std::move(next));
    }
    out.pivots.push_back(std::move(pivot));
  }
  return out;
}

std::vector<ERow> matrix_rows(const SparseMatrix& m) {
  std::vector<ERow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).is_zero()) continue;
    rows.push_back(ERow{r, m.row(r).entries()});
  }
  return rows;
}

// in-place back substitution to RREF (pivot value 1), field arithmetic
void to_rref(std::vector<ERow>& pivots, Field field) {
  for (std::size_t i = pivots.size(); i-- > 0;) {
    Entries& row = pivots[i].e;
    const Scalar pv = row.front().second;
    if (!pv.is_one())
      for (auto& [c, v] : row) v /= pv;
    const std::size_t pcol = row.front().first;
    for (std::size_t j = 0; j < i; ++j) {
      Entries& up = pivots[j].e;
      auto it = std::lower_bound(up.begin(), up.end(), pcol,
                                 [](const auto& e, std::size_t k) { return e.first < k; });
      if (it == up.end() || it->first != pcol) continue;
      Scalar factor = it->second;
      up = combine(up, Scalar::one(field), row, -factor);
    }
  }
}

std::optional<std::size_t> modular_rank(const SparseMatrix& m, std::uint32_t p) {
  Field fp = Field::prime(p);
  SparseMatrix mp(m.rows(), m.cols(), fp);
  mpz_class pz(static_cast<unsigned long>(p));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r).entries()) {
      const mpq_class& q = v.rational_value();
      mpz_class den = q.get_den() % pz;
      if (den == 0) return std::nullopt;  // prime of bad reduction
      mpz_class num = q.get_num() % pz;
      if (num < 0) num += pz;
      Scalar s = Scalar::integer(num.get_si(), fp) / Scalar::integer(den.get_si(), fp);
      if (!s.is_zero()) mp.set(r, c, s);
    }
  }
  return rank(mp);
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const LinalgOptions& opts) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (opts.modular_prepass && m.field().is_rational()) {
    const std::size_t upper = std::min(m.rows(), m.cols());
    for (std::uint32_t p : opts.prepass_primes) {
      auto r = modular_rank(m, p);
      if (r && *r == upper) return upper;  // lower bound met the upper bound
    }
  }
  return echelonize(matrix_rows(m), m.cols(), m.field()).pivots.size();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const std::size_t n = m.cols();
  EchelonForm ech = echelonize(matrix_rows(m), n, m.field());
  to_rref(ech.pivots, m.field());
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : ech.pivots) is_pivot[r.e.front().first] = true;

  std::vector<SparseVector> basis;
  basis.reserve(n - ech.pivots.size());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v(n, m.field());
    v.set(f, Scalar::one(m.field()));
    for (const auto& r : ech.pivots) {
      auto it = std::lower_bound(r.e.begin(), r.e.end(), f,
                                 [](const auto& e, std::size_t k) { return e.first < k; });
      if (it != r.e.end() && it->first == f) v.set(r.e.front().first, -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::variant<SparseVector, InconsistencyCertificate> solve_impl(const SparseMatrix& m,
                                                                const SparseVector& b,
                                                                bool want_certificate) {
  if (b.size() != m.rows() || b.field() != m.field())
    throw DimensionError("solve: rhs shape/field mismatch");
  const std::size_t n = m.cols();
  const std::size_t bcol = n;          // rhs column
  const std::size_t wcut = n + 1;      // identity block beyond
  std::vector<ERow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Entries e = m.row(r).entries();
    Scalar bv = b.at(r);
    if (!bv.is_zero()) e.emplace_back(bcol, bv);
    if (want_certificate) e.emplace_back(wcut + r, Scalar::one(m.field()));
    if (!e.empty()) rows.push_back(ERow{r, std::move(e)});
  }
  EchelonForm ech = echelonize(std::move(rows), wcut, m.field());

  // inconsistent iff some pivot sits in the rhs column
  for (auto& p : ech.pivots) {
    if (p.e.front().first != bcol) continue;
    if (!want_certificate)
      return InconsistencyCertificate{SparseVector(m.rows(), m.field()), p.e.front().second};
    SparseVector phi(m.rows(), m.field());
    for (const auto& [c, v] : p.e)
      if (c >= wcut) phi.set(c - wcut, v);
    return InconsistencyCertificate{std::move(phi), p.e.front().second};
  }

  to_rref(ech.pivots, m.field());
  SparseVector x(n, m.field());
  for (const auto& r : ech.pivots) {
    auto it = std::lower_bound(r.e.begin(), r.e.end(), bcol,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.e.end() && it->first == bcol) x.set(r.e.front().first, it->second);
  }
  return x;
}

}  // namespace

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  auto r = solve_impl(m, b, false);
  if (std::holds_alternative<SparseVector>(r)) return std::get<SparseVector>(std::move(r));
  return std::nullopt;
}

std::variant<SparseVector, InconsistencyCertificate> solve_or_certificate(
    const SparseMatrix& m, const SparseVector& b) {
  return solve_impl(m, b, true);
}

std::vector<Scalar> interpolate_polynomial(
    const std::vector<std::pair<Scalar, Scalar>>& points) {
  if (points.empty()) throw ParameterError("interpolation needs at least one point");
  const std::size_t k = points.size();
  const Field f = points.front().first.field();
  for (const auto& [x, y] : points)
    if (x.field() != f || y.field() != f) throw FieldMismatchError("interpolation points mix fields");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first)
        throw ParameterError("interpolation abscissas must be distinct");
  if (!f.is_rational() && k > f.characteristic())
    throw ParameterError("more interpolation points than field elements");

  SparseMatrix vand(k, k, f);
  SparseVector rhs(k, f);
  for (std::size_t i = 0; i < k; ++i) {
    Scalar pw = Scalar::one(f);
    for (std::size_t j = 0; j < k; ++j) {
      vand.set(i, j, pw);
      pw *= points[i].first;
    }
    rhs.set(i, points[i].second);
  }
  auto sol = solve(vand, rhs);
  assert(sol.has_value());  // Vandermonde with distinct abscissas is invertible
  std::vector<Scalar> coeffs(k, Scalar::zero(f));
  for (const auto& [j, v] : sol->entries()) coeffs[j] = v;
  return coeffs;
}

SparseVector RowSpan::reduce(SparseVector v) const {
  if (v.size() != len_ || v.field() != field_) throw DimensionError("RowSpan::reduce shape/field mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v.at(pivot_cols_[i]);
    if (!c.is_zero()) v.add_scaled(rows_[i], -c);
  }
  return v;
}

bool RowSpan::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const std::size_t pcol = v.leading_index();
  Scalar lead = v.leading_value();
  if (!lead.is_one()) v *= lead.inverse();
  // clear the new pivot column from existing rows to stay in RREF
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i].at(pcol);
    if (!c.is_zero()) rows_[i].add_scaled(v, -c);
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pcol);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, pcol);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

}  // namespace lsc
