#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lsc/cohomology.h"
#include "lsc/errors.h"
#include "lsc/superalgebra.h"
#include "oracles.h"

using namespace lsc;

namespace {

// x even, y odd, [y,y] = 2x; center = span{x}
SuperAlgebra tiny_super(Field f = Field::rationals()) {
  ConstantsMap c;
  SparseVector v(2, f);
  v.set(0, Scalar::integer(2, f));
  c[{1, 1}] = std::move(v);
  return SuperAlgebra(f, {{"x", Parity::even}, {"y", Parity::odd}}, c);
}

SparseVector random_cochain(std::mt19937& rng, const CochainSpace& space) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  SparseVector v(space.dim(), space.field());
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (pct(rng) < 30) {
      const int x = val(rng);
      if (x != 0) v.set(i, Scalar::integer(x, space.field()));
    }
  return v;
}

// dim of (span of rows) intersected with the coordinate subspace `inside`:
// dim K - rank of the rows with those coordinates dropped
std::size_t coordinate_intersection_dim(const std::vector<SparseVector>& rows,
                                        const std::vector<bool>& inside, Field f) {
  if (rows.empty()) return 0;
  SparseMatrix outside(rows.size(), rows.front().size(), f);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].entries())
      if (!inside[c]) outside.set(r, c, v);
  return rows.size() - rank(outside);
}

}  // namespace

TEST_CASE("cochain bases are ordered and sized as documented") {
  const GModule m = GModule::adjoint(solvable_model_filiform(3, 2));
  const CochainSpace c0(m, 0), c1(m, 1), c2(m, 2);
  CHECK(c0.dim() == 8);
  CHECK(c1.dim() == 64);
  CHECK(c2.dim() == 240);
  CHECK(c2.columns_of_parity(Parity::even).size() == 132);
  CHECK(c2.columns_of_parity(Parity::odd).size() == 108);

  CHECK(c0.element_name(0) == "1 -> X1");
  CHECK(c0.tuple_base({}, {}) == 0);
  // first tuple of C^2 is the lexicographically least even pair
  CHECK(c2.element_name(0) == "X1^X2 -> X1");
  CHECK(c2.element(0).even_args == std::vector<std::size_t>{0, 1});
  CHECK(c2.element(0).parity == Parity::even);

  const std::size_t mixed = c2.tuple_base({0}, {6});
  CHECK(c2.element_name(mixed) == "X1^Y1 -> X1");
  CHECK(c2.element_name(mixed + 7) == "X1^Y1 -> Y2");
  const std::size_t diag = c2.tuple_base({}, {6, 6});
  CHECK(c2.element_name(diag + 1) == "Y1·Y1 -> X2");
  CHECK(c2.element(diag).odd_args == std::vector<std::size_t>{6, 6});

  // even-even pairs come first, mixed next, odd-odd last
  CHECK(mixed >= 15 * 8);
  CHECK(diag >= 15 * 8 + 12 * 8);
}

TEST_CASE("cochain names for the distinguished family classes") {
  const GModule m = GModule::adjoint(solvable_model_filiform(4, 3, Field::prime(3)));
  const CochainSpace c2(m, 2);
  // (X1, Y3) -> Y1 and (X1, X4) -> X2
  CHECK(c2.element_name(c2.tuple_base({0}, {9}) + 7) == "X1^Y3 -> Y1");
  CHECK(c2.element_name(c2.tuple_base({0, 3}, {}) + 1) == "X1^X4 -> X2");
}

TEST_CASE("locate_tuple canonicalizes with signs") {
  const GModule m = GModule::adjoint(solvable_model_filiform(3, 2));
  const CochainSpace c2(m, 2);

  const auto swapped = c2.locate_tuple({1, 0}, {});
  REQUIRE(swapped.has_value());
  CHECK(swapped->first == c2.tuple_base({0, 1}, {}));
  CHECK(swapped->second == Scalar::integer(-1, m.algebra().field()));

  CHECK_FALSE(c2.locate_tuple({0, 0}, {}).has_value());

  const auto odd = c2.locate_tuple({}, {7, 6});
  REQUIRE(odd.has_value());
  CHECK(odd->first == c2.tuple_base({}, {6, 7}));
  CHECK(odd->second == Scalar::one(m.algebra().field()));

  const auto in_order = c2.locate_tuple({0, 2}, {});
  REQUIRE(in_order.has_value());
  CHECK(in_order->second == Scalar::one(m.algebra().field()));
}

TEST_CASE("the differential squares to zero and preserves parity") {
  std::vector<GModule> modules;
  modules.push_back(GModule::adjoint(tiny_super()));
  modules.push_back(GModule::adjoint(solvable_model_filiform(3, 2)));
  modules.push_back(GModule::adjoint(solvable_model_filiform(3, 2, Field::prime(3))));
  modules.push_back(restrict_to_subalgebra(solvable_model_filiform(3, 2), {0, 1, 2, 6, 7}).ambient);

  for (const GModule& m : modules) {
    for (std::size_t q = 0; q + 1 <= 3; ++q) {
      const SparseMatrix dq = differential_matrix(m, q);
      const SparseMatrix dq1 = differential_matrix(m, q + 1);
      CHECK((dq1 * dq).is_zero());
    }
    const CochainSpace dom(m, 1), codom(m, 2);
    const SparseMatrix d1 = differential_matrix(m, 1);
    for (std::size_t r = 0; r < d1.rows(); ++r)
      for (const auto& [c, v] : d1.row(r).entries())
        CHECK(codom.element(r).parity == dom.element(c).parity);
  }
}

TEST_CASE("degree-zero differential is minus the action") {
  const GModule m = GModule::adjoint(tiny_super());
  const SparseMatrix d0 = differential_matrix(m, 0);
  CHECK(d0.rows() == 4);
  CHECK(d0.cols() == 2);
  // (dc)(g) = -rho(g)c: only [y,y] = 2x contributes, at the cochain y -> x
  const CochainSpace c1(m, 1);
  const std::size_t y_to_x = c1.tuple_base({}, {1});
  CHECK(c1.element_name(y_to_x) == "y -> x");
  SparseMatrix expected(4, 2, m.algebra().field());
  expected.set(y_to_x, 1, Scalar::integer(-2, m.algebra().field()));
  CHECK(d0 == expected);
}

TEST_CASE("degree-zero cohomology is the invariant submodule") {
  const CohomologyResult tiny = cohomology(GModule::adjoint(tiny_super()), 0);
  CHECK(tiny.cohomology == ParityDims{1, 0});

  const CohomologyResult sl = cohomology(GModule::adjoint(solvable_model_filiform(3, 2)), 0);
  CHECK(sl.cohomology == ParityDims{0, 0});

  const CohomologyResult abelian = cohomology(GModule::adjoint(model_filiform(2, 1)), 0);
  CHECK(abelian.cohomology == ParityDims{2, 1});
  CHECK(abelian.coboundaries == ParityDims{0, 0});
}

TEST_CASE("outer derivations of the tiny superalgebra") {
  const CohomologyResult h1 = cohomology(GModule::adjoint(tiny_super()), 1);
  CHECK(h1.cohomology == ParityDims{1, 0});
  CHECK(h1.cochains == ParityDims{2, 2});
}

TEST_CASE("frozen second cohomology of solvable filiform instances") {
  CohomologyOptions opts;
  opts.representatives = true;

  const GModule q_mod = GModule::adjoint(solvable_model_filiform(4, 3));
  const CohomologyResult over_q = cohomology(q_mod, 2, opts);
  CHECK(over_q.cohomology == ParityDims{0, 0});
  CHECK(over_q.representatives[0].empty());
  CHECK(over_q.representatives[1].empty());

  const GModule f3_mod = GModule::adjoint(solvable_model_filiform(4, 3, Field::prime(3)));
  const CohomologyResult over_f3 = cohomology(f3_mod, 2, opts);
  CHECK(over_f3.cohomology == ParityDims{2, 0});
  CHECK(over_f3.cocycles.even - over_f3.coboundaries.even == 2);
  REQUIRE(over_f3.representatives[0].size() == 2);
  for (const SparseVector& rep : over_f3.representatives[0]) {
    CHECK(is_cocycle(f3_mod, 2, rep));
    CHECK_FALSE(is_coboundary(f3_mod, 2, rep).has_value());
  }

  // the same dimension count drops back to zero away from the congruence
  const GModule off = GModule::adjoint(solvable_model_filiform(3, 2, Field::prime(3)));
  CHECK(cohomology(off, 2).cohomology == ParityDims{0, 0});
}

TEST_CASE("rank-nullity bookkeeping inside one degree") {
  const GModule m = GModule::adjoint(solvable_model_filiform(3, 2));
  const CohomologyResult r = cohomology(m, 2);
  CHECK(r.q == 2);
  CHECK(r.cochains == ParityDims{132, 108});
  CHECK(r.cocycles.even <= r.cochains.even);
  CHECK(r.coboundaries.even <= r.cocycles.even);
  CHECK(r.cohomology.even == r.cocycles.even - r.coboundaries.even);
  CHECK(r.cohomology.odd == r.cocycles.odd - r.coboundaries.odd);

  // cocycles + rank(d_2) = cochains, per parity
  const SparseMatrix d2 = differential_matrix(m, 2);
  const CochainSpace c2(m, 2);
  const std::size_t rank_even = rank(d2.select_columns(c2.columns_of_parity(Parity::even)));
  CHECK(r.cocycles.even + rank_even == r.cochains.even);
}

TEST_CASE("coboundary witnesses reproduce the image") {
  std::mt19937 rng(7u);
  for (const Field f : {Field::rationals(), Field::prime(3)}) {
    const GModule m = GModule::adjoint(solvable_model_filiform(3, 2, f));
    const CochainSpace c1(m, 1);
    const SparseMatrix d1 = differential_matrix(m, 1);
    for (int trial = 0; trial < 5; ++trial) {
      const SparseVector df = d1.apply(random_cochain(rng, c1));
      CHECK(is_cocycle(m, 2, df));
      const auto witness = is_coboundary(m, 2, df);
      REQUIRE(witness.has_value());
      CHECK(d1.apply(*witness) == df);
    }

    // a cochain that is not a cocycle is rejected
    const CochainSpace c2(m, 2);
    bool found = false;
    for (std::size_t i = 0; i < c2.dim() && !found; ++i) {
      const SparseVector e = SparseVector::unit(c2.dim(), f, i);
      if (!is_cocycle(m, 2, e)) {
        CHECK_THROWS_AS(is_coboundary(m, 2, e), DomainError);
        found = true;
      }
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(is_coboundary(GModule::adjoint(tiny_super()), 0,
                                SparseVector(2, Field::rationals())),
                  ParameterError);
}

TEST_CASE("weight blocks refine the direct computation") {
  const SuperAlgebra g = solvable_model_filiform(4, 2, Field::prime(3));
  const GModule m = GModule::adjoint(g);
  const auto blocks = weight_blocks(m, 2, family_grading(g));
  const CohomologyResult direct = cohomology(m, 2);

  ParityDims cochains, cocycles, coboundaries, cohomology_sum;
  for (const auto& b : blocks) {
    cochains.even += b.cochains.even;
    cochains.odd += b.cochains.odd;
    cocycles.even += b.cocycles.even;
    cocycles.odd += b.cocycles.odd;
    coboundaries.even += b.coboundaries.even;
    coboundaries.odd += b.coboundaries.odd;
    cohomology_sum.even += b.cohomology.even;
    cohomology_sum.odd += b.cohomology.odd;
  }
  CHECK(cochains == direct.cochains);
  CHECK(cocycles == direct.cocycles);
  CHECK(coboundaries == direct.coboundaries);
  CHECK(cohomology_sum == direct.cohomology);

  // blocks arrive in ascending weight order
  for (std::size_t i = 1; i < blocks.size(); ++i)
    CHECK(blocks[i - 1].weight < blocks[i].weight);
}

TEST_CASE("nonzero modular cohomology sits in the expected weight") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  CohomologyOptions opts;
  opts.representatives = true;
  const auto blocks = weight_blocks(GModule::adjoint(g), 2, family_grading(g), 0, opts);
  std::size_t nonzero_blocks = 0;
  for (const auto& b : blocks)
    if (b.cohomology.total() != 0) {
      ++nonzero_blocks;
      CHECK(b.weight == -3);
      CHECK(b.cohomology == ParityDims{2, 0});
      CHECK(b.representatives[0].size() == 2);
    }
  CHECK(nonzero_blocks == 1);
}

TEST_CASE("incompatible weights are rejected") {
  const SuperAlgebra g = solvable_model_filiform(3, 2);
  const GModule m = GModule::adjoint(g);
  // constant weights are not additive over the chain brackets
  std::vector<std::int64_t> w(g.dim(), 1);
  CHECK_THROWS_AS(weight_blocks(m, 2, w, w), DomainError);
}

TEST_CASE("modular dimension dominates the rational one") {
  const std::size_t dim_q =
      cohomology(GModule::adjoint(solvable_model_filiform(4, 3)), 2).cohomology.total();
  const std::size_t dim_f3 =
      cohomology(GModule::adjoint(solvable_model_filiform(4, 3, Field::prime(3))), 2)
          .cohomology.total();
  CHECK(dim_q == 0);
  CHECK(dim_f3 == 2);
  CHECK(dim_f3 >= dim_q);
}

TEST_CASE("factorization over the torus matches the direct computation") {
  const SuperAlgebra g = solvable_model_filiform(3, 2);
  for (std::size_t q = 1; q <= 2; ++q) {
    const HochschildSerreCheck chk =
        hochschild_serre_check(g, {0, 1, 2, 6, 7}, {3, 4, 5}, q);
    CHECK(chk.match);
    CHECK(chk.direct == chk.reconstructed);
    CHECK(chk.direct == ParityDims{0, 0});
    CHECK(chk.invariant_dims.size() == q + 1);
  }

  CHECK_THROWS_AS(hochschild_serre_check(g, {0, 1, 2, 3, 6, 7}, {3, 4, 5}, 1),
                  ParameterError);
  CHECK_THROWS_AS(hochschild_serre_check(g, {0, 1, 2, 6}, {3, 4, 5}, 1),
                  ParameterError);
  CHECK_THROWS_AS(hochschild_serre_check(g, {1, 2, 6, 7}, {0, 3, 4, 5}, 1),
                  DiagonalityError);
}

TEST_CASE("factorization over a prime field compares torus weights mod p") {
  // eigenvalues of ad T_i wrap mod p, so the invariant subcomplex is graded
  // by residues; the nilradical of SL(4,3) is indices 0-3 and 7-9
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const std::vector<std::size_t> nil = {0, 1, 2, 3, 7, 8, 9};
  const std::vector<std::size_t> torus = {4, 5, 6};

  const HochschildSerreCheck chk1 = hochschild_serre_check(g, nil, torus, 1);
  CHECK(chk1.match);
  CHECK(chk1.direct == ParityDims{0, 0});

  const HochschildSerreCheck chk2 = hochschild_serre_check(g, nil, torus, 2);
  CHECK(chk2.match);
  CHECK(chk2.direct == ParityDims{2, 0});
  CHECK(chk2.reconstructed == ParityDims{2, 0});
  // both classes are torus-invariant 2-cochains of the nilpotent part
  CHECK(chk2.invariant_dims[2] == ParityDims{2, 0});
  CHECK(chk2.invariant_dims[1] == ParityDims{0, 0});
  CHECK(chk2.invariant_dims[0] == ParityDims{0, 0});
}

TEST_CASE("cocycle split by argument type agrees with a rank oracle") {
  for (const Field f : {Field::rationals(), Field::prime(3)}) {
    const GModule m = GModule::adjoint(solvable_model_filiform(3, 2, f));
    const CochainSpace c2(m, 2);
    const SparseMatrix d2 = differential_matrix(m, 2);
    for (const Parity p : {Parity::even, Parity::odd}) {
      const AbcSplit split = abc_split(m, p);
      CHECK(split.parity == p);

      const std::vector<std::size_t> cols = c2.columns_of_parity(p);
      const std::vector<SparseVector> ker = kernel_basis(d2.select_columns(cols));
      CHECK(split.z == ker.size());

      // selected-coordinate membership masks for the three argument shapes
      auto mask = [&](std::size_t evens) {
        std::vector<bool> in(cols.size(), false);
        for (std::size_t j = 0; j < cols.size(); ++j)
          in[j] = c2.element(cols[j]).even_args.size() == evens;
        return in;
      };
      CHECK(split.a == coordinate_intersection_dim(ker, mask(2), f));
      CHECK(split.b == coordinate_intersection_dim(ker, mask(1), f));
      CHECK(split.c == coordinate_intersection_dim(ker, mask(0), f));
      CHECK(split.additive == (split.a + split.b + split.c == split.z));

      // frozen values: some 2-cocycles genuinely mix argument types here
      if (p == Parity::even) {
        CHECK(split.a == 15);
        CHECK(split.b == 6);
        CHECK(split.c == 0);
        CHECK(split.z == 34);
      } else {
        CHECK(split.a == 10);
        CHECK(split.b == 7);
        CHECK(split.c == 0);
        CHECK(split.z == 22);
      }
      CHECK_FALSE(split.additive);
    }
  }
}
