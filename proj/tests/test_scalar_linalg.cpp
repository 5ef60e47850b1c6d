#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsc/errors.h"
#include "lsc/linalg.h"
#include "lsc/scalar.h"
#include "lsc/sparse.h"
#include "oracles.h"

using namespace lsc;

namespace {

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar out = Scalar::zero(a.field());
  for (const auto& [i, v] : a.entries()) out = out + v * b.at(i);
  return out;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                           Field f) {
  std::uniform_int_distribution<int> val(-4, 4), pct(0, 99);
  SparseMatrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < 35) {
        const int v = val(rng);
        if (v != 0) m.set(r, c, Scalar::integer(v, f));
      }
  return m;
}

}  // namespace

TEST_CASE("rational scalars are exact and reduced") {
  const Field q = Field::rationals();
  const Scalar third = Scalar::rational(1, 3), sixth = Scalar::rational(1, 6);
  CHECK(third + sixth == Scalar::rational(1, 2));
  CHECK((third * sixth).str() == "1/18");
  CHECK(Scalar::rational(-6, 4).str() == "-3/2");
  CHECK(Scalar::parse("-3/2", q) == Scalar::rational(-3, 2));
  CHECK(Scalar::parse("7", q) == Scalar::integer(7, q));
  CHECK(Scalar::rational(2, 3).inverse() == Scalar::rational(3, 2));
  CHECK(Scalar::rational(-2, 1).pow(5) == Scalar::integer(-32, q));
  CHECK(Scalar::integer(0, q).is_zero());
  CHECK((Scalar::integer(5, q) / Scalar::integer(-10, q)).str() == "-1/2");
  CHECK_THROWS_AS(Scalar::integer(1, q).inverse() / Scalar::zero(q), DomainError);
}

TEST_CASE("prime field scalars wrap mod p") {
  const Field f5 = Field::prime(5);
  CHECK(Scalar::residue(2, 5) + Scalar::residue(4, 5) == Scalar::residue(1, 5));
  CHECK(Scalar::residue(2, 5).inverse() == Scalar::residue(3, 5));
  CHECK(Scalar::residue(2, 5) * Scalar::residue(4, 5) == Scalar::residue(3, 5));
  CHECK(Scalar::parse("7", f5) == Scalar::residue(2, 5));
  CHECK(Scalar::residue(2, 5).str() == "2 mod 5");
  for (long a = 1; a < 5; ++a)  // Fermat
    CHECK(Scalar::residue(a, 5).pow(5) == Scalar::residue(a, 5));
  CHECK(Scalar::integer(-1, f5) == Scalar::residue(4, 5));
}

TEST_CASE("field guards") {
  CHECK_THROWS_AS(Field::prime(2), ParameterError);
  CHECK_THROWS_AS(Field::prime(9), ParameterError);
  CHECK_THROWS_AS(Field::prime(1), ParameterError);
  CHECK_THROWS_AS(Scalar::integer(1, Field::rationals()) + Scalar::residue(1, 5),
                  FieldMismatchError);
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("Fp:7") == Field::prime(7));
  CHECK_THROWS_AS(Field::parse("F7"), ParseError);
}

TEST_CASE("sparse vectors never store zeros") {
  const Field q = Field::rationals();
  SparseVector v(6, q);
  v.set(2, Scalar::integer(3, q));
  v.set(4, Scalar::integer(-1, q));
  CHECK(v.nnz() == 2);
  v.add(2, Scalar::integer(-3, q));  // cancels
  CHECK(v.nnz() == 1);
  CHECK(v.at(2).is_zero());
  CHECK(v.leading_index() == 4);

  SparseVector w = SparseVector::unit(6, q, 0);
  w.add_scaled(v, Scalar::integer(2, q));
  CHECK(w.at(4) == Scalar::integer(-2, q));
  CHECK((v + w) - w == v);
  CHECK((Scalar::integer(0, q) * v).nnz() == 0);
  CHECK(-v + v == SparseVector(6, q));
}

TEST_CASE("sparse matrix arithmetic agrees with hand values") {
  const Field q = Field::rationals();
  const SparseMatrix a = SparseMatrix::from_rows(q, {{1, 2}, {3, 4}});
  const SparseMatrix b = SparseMatrix::from_rows(q, {{0, 1}, {1, 0}});
  CHECK(a * b == SparseMatrix::from_rows(q, {{2, 1}, {4, 3}}));
  CHECK(a + b - b == a);
  CHECK(a.transpose() == SparseMatrix::from_rows(q, {{1, 3}, {2, 4}}));
  CHECK(SparseMatrix::from_rows(q, {{0, 1}, {0, 0}}).pow(2).is_zero());
  CHECK(SparseMatrix::identity(3, q).pow(7) == SparseMatrix::identity(3, q));

  SparseVector x(2, q);
  x.set(0, Scalar::integer(1, q));
  x.set(1, Scalar::integer(-1, q));
  const SparseVector ax = a.apply(x);
  CHECK(ax.at(0) == Scalar::integer(-1, q));
  CHECK(ax.at(1) == Scalar::integer(-1, q));

  const SparseMatrix aug = a.augment(b);
  CHECK(aug.cols() == 4);
  CHECK(aug.entry(0, 3) == Scalar::integer(1, q));
  CHECK(aug.select_columns({3, 0}) ==
        SparseMatrix::from_rows(q, {{1, 1}, {0, 3}}));
  const SparseMatrix cols = SparseMatrix::from_columns(2, q, {x, ax});
  CHECK(cols.entry(1, 0) == Scalar::integer(-1, q));
  CHECK(cols.entry(0, 1) == Scalar::integer(-1, q));
}

TEST_CASE("rank on frozen examples") {
  const Field q = Field::rationals();
  CHECK(rank(SparseMatrix::identity(8, q)) == 8);
  CHECK(rank(SparseMatrix(240, 64, q)) == 0);
  CHECK(rank(SparseMatrix::from_rows(q, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(SparseMatrix::from_rows(Field::prime(3), {{1, 2}, {2, 4}})) == 1);
  // det [[1,2],[2,1]] = -3: full rank except in characteristic 3
  CHECK(rank(SparseMatrix::from_rows(q, {{1, 2}, {2, 1}})) == 2);
  CHECK(rank(SparseMatrix::from_rows(Field::prime(3), {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(SparseMatrix::from_rows(Field::prime(5), {{1, 2}, {2, 1}})) == 2);
}

TEST_CASE("kernel basis is canonical") {
  const Field q = Field::rationals();
  const std::vector<SparseVector> all = kernel_basis(SparseMatrix(3, 3, q));
  REQUIRE(all.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(all[i] == SparseVector::unit(3, q, i));

  CHECK(kernel_basis(SparseMatrix::identity(5, q)).empty());

  const std::vector<SparseVector> k =
      kernel_basis(SparseMatrix::from_rows(q, {{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].at(0) == Scalar::integer(-2, q));
  CHECK(k[0].at(1) == Scalar::integer(1, q));
}

TEST_CASE("solve returns the canonical particular solution") {
  const Field q = Field::rationals();
  SparseVector b(2, q);
  b.set(0, Scalar::integer(5, q));
  b.set(1, Scalar::rational(1, 2));
  const auto sol = solve(SparseMatrix::identity(2, q), b);
  REQUIRE(sol.has_value());
  CHECK(*sol == b);

  CHECK_FALSE(solve(SparseMatrix(2, 2, q), b).has_value());

  // one equation, two unknowns: free variable pinned to zero
  const SparseMatrix m = SparseMatrix::from_rows(q, {{1, 1}});
  SparseVector rhs(1, q);
  rhs.set(0, Scalar::integer(3, q));
  const auto under = solve(m, rhs);
  REQUIRE(under.has_value());
  CHECK(under->at(0) == Scalar::integer(3, q));
  CHECK(under->at(1).is_zero());
}

TEST_CASE("inconsistency certificates re-verify") {
  const Field q = Field::rationals();
  const SparseMatrix m = SparseMatrix::from_rows(q, {{1, 2}, {2, 4}, {0, 0}});
  SparseVector b(3, q);
  b.set(0, Scalar::integer(1, q));
  b.set(1, Scalar::integer(3, q));  // not twice the first entry
  const auto res = solve_or_certificate(m, b);
  REQUIRE(std::holds_alternative<InconsistencyCertificate>(res));
  const auto& cert = std::get<InconsistencyCertificate>(res);
  CHECK(m.transpose().apply(cert.functional).nnz() == 0);
  CHECK(dot(cert.functional, b) == cert.value);
  CHECK_FALSE(cert.value.is_zero());

  SparseVector b2(3, q);
  b2.set(0, Scalar::integer(1, q));
  b2.set(1, Scalar::integer(2, q));
  const auto ok = solve_or_certificate(m, b2);
  REQUIRE(std::holds_alternative<SparseVector>(ok));
  CHECK(m.apply(std::get<SparseVector>(ok)) == b2);
}

TEST_CASE("polynomial interpolation") {
  const Field q = Field::rationals();
  const Scalar c = Scalar::rational(7, 3);
  const auto constant = interpolate_polynomial(
      {{Scalar::integer(0, q), c}, {Scalar::integer(1, q), c}});
  REQUIRE(constant.size() == 2);
  CHECK(constant[0] == c);
  CHECK(constant[1].is_zero());

  // squares mod 5
  const Field f5 = Field::prime(5);
  std::vector<std::pair<Scalar, Scalar>> pts;
  for (long x = 0; x < 5; ++x)
    pts.emplace_back(Scalar::residue(x, 5), Scalar::residue(x * x, 5));
  const auto sq = interpolate_polynomial(pts);
  REQUIRE(sq.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(sq[i] == (i == 2 ? Scalar::residue(1, 5) : Scalar::zero(f5)));

  // l^2 + 1 over Q
  const auto quad = interpolate_polynomial({{Scalar::integer(0, q), Scalar::integer(1, q)},
                                            {Scalar::integer(1, q), Scalar::integer(2, q)},
                                            {Scalar::integer(2, q), Scalar::integer(5, q)}});
  REQUIRE(quad.size() == 3);
  CHECK(quad[0] == Scalar::integer(1, q));
  CHECK(quad[1].is_zero());
  CHECK(quad[2] == Scalar::integer(1, q));

  CHECK_THROWS_AS(interpolate_polynomial({{Scalar::integer(0, q), c},
                                          {Scalar::integer(0, q), c}}),
                  ParameterError);
}

TEST_CASE("rank + nullity = columns, against the dense oracle") {
  std::mt19937 rng(0xbeefu);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (const Field f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      const SparseMatrix m = random_matrix(rng, rows, cols, f);
      const std::size_t r = rank(m);
      CHECK(r == oracles::dense_rank(m));
      const auto ker = kernel_basis(m);
      CHECK(r + ker.size() == cols);
      for (const SparseVector& v : ker) CHECK(m.apply(v).nnz() == 0);
    }
  }
}

TEST_CASE("modular prepass changes nothing") {
  std::mt19937 rng(0xfeedu);
  LinalgOptions fast;
  fast.modular_prepass = true;
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix m = random_matrix(rng, 9, 9, Field::rationals());
    CHECK(rank(m) == rank(m, fast));
  }
}

TEST_CASE("rank over Q bounds rank mod p") {
  std::mt19937 rng(0x5ca1eu);
  std::uniform_int_distribution<int> val(-4, 4), pct(0, 99);
  for (int trial = 0; trial < 30; ++trial) {
    SparseMatrix mq(7, 7, Field::rationals());
    SparseMatrix m3(7, 7, Field::prime(3));
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        if (pct(rng) < 40) {
          const int v = val(rng);
          if (v == 0) continue;
          mq.set(r, c, Scalar::integer(v, Field::rationals()));
          if (v % 3 != 0) m3.set(r, c, Scalar::integer(v, Field::prime(3)));
        }
    CHECK(rank(m3) <= rank(mq));
  }
}

TEST_CASE("row spans reduce and test membership") {
  const Field q = Field::rationals();
  RowSpan span(4, q);
  SparseVector a(4, q), b(4, q);
  a.set(0, Scalar::integer(1, q));
  a.set(1, Scalar::integer(2, q));
  b.set(1, Scalar::integer(1, q));
  CHECK(span.insert(a));
  CHECK(span.insert(b));
  CHECK(span.dim() == 2);
  CHECK_FALSE(span.insert(a + b));  // dependent
  CHECK(span.contains(a));

  SparseVector c = SparseVector::unit(4, q, 2) + a;
  const SparseVector residue = span.reduce(c);
  CHECK(residue == SparseVector::unit(4, q, 2));
  CHECK_FALSE(span.contains(c));
}
