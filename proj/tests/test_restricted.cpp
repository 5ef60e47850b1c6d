#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lsc/errors.h"
#include "lsc/restricted.h"
#include "lsc/superalgebra.h"
#include "oracles.h"

using namespace lsc;

namespace {

SparseVector unit(const SuperAlgebra& g, std::size_t i) {
  return SparseVector::unit(g.dim(), g.field(), i);
}

SparseVector vec_of(const SparseMatrix& m) {
  SparseVector out(m.rows() * m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r).entries()) out.set(r * m.cols() + c, v);
  return out;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar out = Scalar::zero(a.field());
  for (const auto& [i, v] : a.entries()) out = out + v * b.at(i);
  return out;
}

// x even, y odd, [y,y] = coeff * x
SuperAlgebra line_pair(std::uint32_t p, long coeff) {
  const Field f = Field::prime(p);
  ConstantsMap c;
  SparseVector v(2, f);
  v.set(0, Scalar::integer(coeff, f));
  c[{1, 1}] = std::move(v);
  return SuperAlgebra(f, {{"x", Parity::even}, {"y", Parity::odd}}, c);
}

SparseVector random_even(std::mt19937& rng, const SuperAlgebra& g) {
  std::uniform_int_distribution<long> val(0, g.field().characteristic() - 1);
  SparseVector v(g.dim(), g.field());
  for (std::size_t i = 0; i < g.even_dim(); ++i)
    v.set(i, Scalar::integer(val(rng), g.field()));
  return v;
}

}  // namespace

TEST_CASE("the boundary instance carries its unique p-map") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const RestrictednessResult res = p_map_exists(g);
  REQUIRE(std::holds_alternative<PMap>(res));
  const PMap& pm = std::get<PMap>(res);
  CHECK(pm.p == 3);
  CHECK(pm.unique);
  REQUIRE(pm.images.size() == 7);
  for (std::size_t j = 0; j < 4; ++j) CHECK(pm.images[j].is_zero());  // X_j
  for (std::size_t j = 4; j < 7; ++j) CHECK(pm.images[j] == unit(g, j));  // T_i
  CHECK(verify_sr1(g, pm));

  PMap corrupted = pm;
  corrupted.images[4] = Scalar::integer(2, g.field()) * unit(g, 4);
  CHECK_FALSE(verify_sr1(g, corrupted));
}

TEST_CASE("abelian algebras are restricted but not uniquely") {
  const Field f3 = Field::prime(3);
  const SuperAlgebra g(f3,
                       {{"a", Parity::even}, {"b", Parity::even}, {"y", Parity::odd}},
                       {});
  const RestrictednessResult res = p_map_exists(g);
  REQUIRE(std::holds_alternative<PMap>(res));
  const PMap& pm = std::get<PMap>(res);
  CHECK_FALSE(pm.unique);
  for (const SparseVector& img : pm.images) CHECK(img.is_zero());
  CHECK(verify_sr1(g, pm));
  CHECK(two_p_map(g, pm, unit(g, 2)).is_zero());
}

TEST_CASE("obstruction witnesses re-verify against the raw ad system") {
  for (const auto& [n, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {6, 3}, {4, 4}}) {
    const SuperAlgebra g = solvable_model_filiform(n, m, Field::prime(3));
    const RestrictednessResult res = p_map_exists(g);
    REQUIRE(std::holds_alternative<ObstructionWitness>(res));
    const ObstructionWitness& w = std::get<ObstructionWitness>(res);
    CHECK(w.basis_index == 0);  // already the chain generator has no p-image

    // functional kills every column of the system ...
    for (std::size_t j = 0; j < g.even_dim(); ++j)
      CHECK(dot(w.functional, vec_of(g.ad(j))).is_zero());
    // ... but not the p-th power of the obstructed generator
    const Scalar v = dot(w.functional, vec_of(g.ad(w.basis_index).pow(3)));
    CHECK(v == w.value);
    CHECK_FALSE(v.is_zero());

    REQUIRE(w.probes.size() == 4);
    for (const std::string& probe : w.probes)
      CHECK(probe.find("must equal") != std::string::npos);
  }

  // the odd chain is what obstructs SL(4,4): the Y1 probe lands on Y4
  const SuperAlgebra g44 = solvable_model_filiform(4, 4, Field::prime(3));
  const RestrictednessResult res44 = p_map_exists(g44);
  const ObstructionWitness& w44 = std::get<ObstructionWitness>(res44);
  bool y_probe = false;
  for (const std::string& probe : w44.probes)
    if (probe.find("(Y1) = Y4") != std::string::npos) y_probe = true;
  CHECK(y_probe);
}

TEST_CASE("additivity corrections by interpolation") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const std::size_t x1 = 0, t1 = 4, t2 = 5;

  const auto commuting = sr3_coefficients(g, unit(g, t1), unit(g, t2));
  REQUIRE(commuting.size() == 2);
  CHECK(commuting[0].is_zero());
  CHECK(commuting[1].is_zero());

  const auto self = sr3_coefficients(g, unit(g, x1), unit(g, x1));
  for (const SparseVector& s : self) CHECK(s.is_zero());

  // (ad(l X1 + T1))^2 (X1) = X1, constant in l => s_1 = X1, s_2 = 0
  const auto mixed = sr3_coefficients(g, unit(g, x1), unit(g, t1));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == unit(g, x1));
  CHECK(mixed[1].is_zero());

  std::mt19937 rng(41u);
  for (int trial = 0; trial < 10; ++trial) {
    const SparseVector a = random_even(rng, g), b = random_even(rng, g);
    CHECK(sr3_coefficients(g, a, b) == oracles::sr3_symbolic(g, a, b));
  }
}

TEST_CASE("verified p-maps satisfy the addition axiom") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const PMap pm = std::get<PMap>(p_map_exists(g));
  CHECK(verify_sr3(g, pm, unit(g, 4), unit(g, 5)));
  CHECK(verify_sr3(g, pm, unit(g, 0), unit(g, 0)));
  CHECK(verify_sr3(g, pm, unit(g, 0), unit(g, 4)));

  std::mt19937 rng(43u);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(verify_sr3(g, pm, random_even(rng, g), random_even(rng, g)));
}

TEST_CASE("extension to arbitrary even elements is p-semilinear") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const PMap pm = std::get<PMap>(p_map_exists(g));
  const Scalar two = Scalar::integer(2, g.field());

  // scaling: (2 T1)^[3] = 2^3 T1^[3] = 2 T1
  CHECK(p_map_extend(g, pm, two * unit(g, 4)) == two * unit(g, 4));
  // addition with correction: (X1 + T1)^[3] = X1 + T1
  const SparseVector mixed = unit(g, 0) + unit(g, 4);
  CHECK(p_map_extend(g, pm, mixed) == mixed);

  // the defining identity ad_{x^[p]} = (ad x)^p holds for extended arguments
  std::mt19937 rng(47u);
  for (int trial = 0; trial < 5; ++trial) {
    const SparseVector x = random_even(rng, g);
    CHECK(g.ad(p_map_extend(g, pm, x)) == g.ad(x).pow(3));
  }
  CHECK(p_map_extend(g, pm, SparseVector(g.dim(), g.field())).is_zero());
  CHECK_THROWS_AS(p_map_extend(g, pm, unit(g, 7)), DomainError);  // odd argument
}

TEST_CASE("squaring the odd part through the p-map") {
  const SuperAlgebra g = solvable_model_filiform(4, 3, Field::prime(3));
  const PMap pm = std::get<PMap>(p_map_exists(g));
  for (std::size_t j = 7; j < 10; ++j)  // [Y_i, Y_j] = 0 in the family
    CHECK(two_p_map(g, pm, unit(g, j)).is_zero());
  CHECK(two_p_map(g, pm, SparseVector(g.dim(), g.field())).is_zero());
  CHECK_THROWS_AS(two_p_map(g, pm, unit(g, 0)), DomainError);  // even argument

  // [y,y] = 2x and x^[5] = 3x gives y -> (y^2)^[5] = x^[5] = 3x
  const SuperAlgebra doubled = line_pair(5, 2);
  PMap manual;
  manual.p = 5;
  manual.unique = false;
  SparseVector img(2, doubled.field());
  img.set(0, Scalar::integer(3, doubled.field()));
  manual.images = {img};
  CHECK(verify_sr1(doubled, manual));
  CHECK(two_p_map(doubled, manual, SparseVector::unit(2, doubled.field(), 1)) == img);

  // with [y,y] = x instead, y^2 = 3x and (3x)^[5] = 3^5 x^[5] = 4x
  const SuperAlgebra single = line_pair(5, 1);
  const SparseVector sq = two_p_map(single, manual, SparseVector::unit(2, single.field(), 1));
  SparseVector expected(2, single.field());
  expected.set(0, Scalar::integer(4, single.field()));
  CHECK(sq == expected);
}

TEST_CASE("torus powers close up by Fermat") {
  const SuperAlgebra g = solvable_model_filiform(3, 2, Field::prime(3));
  CHECK(g.ad(3).pow(3) == g.ad(3));
  CHECK(g.ad(4).pow(3) == g.ad(4));
  CHECK(g.ad(5).pow(3) == g.ad(5));
}

TEST_CASE("scan across the family matches the closed-form boundary") {
  const auto scan3 = theorem_boundary_scan(3, 2, 5, 1, 4);
  REQUIRE(scan3.size() == 16);
  for (const BoundaryScanEntry& e : scan3) {
    CHECK(e.expected == (e.m <= 3 && e.n <= 4));
    CHECK(e.restricted == e.expected);
    if (e.restricted) {
      CHECK(e.matches_known_form);
      CHECK(e.unique);
    }
  }
  // rows arrive ordered by (n, m)
  CHECK(scan3.front().n == 2);
  CHECK(scan3.front().m == 1);
  CHECK(scan3.back().n == 5);
  CHECK(scan3.back().m == 4);

  const auto scan5 = theorem_boundary_scan(5, 6, 7, 5, 6);
  REQUIRE(scan5.size() == 4);
  CHECK(scan5[0].restricted);        // (6,5)
  CHECK_FALSE(scan5[1].restricted);  // (6,6): m > p
  CHECK_FALSE(scan5[2].restricted);  // (7,5): n > p+1
  CHECK_FALSE(scan5[3].restricted);  // (7,6)
}

TEST_CASE("rational algebras are rejected") {
  const SuperAlgebra g = solvable_model_filiform(3, 2);
  CHECK_THROWS_AS(p_map_exists(g), FieldMismatchError);

  const SuperAlgebra g3 = solvable_model_filiform(3, 2, Field::prime(3));
  PMap pm5;
  pm5.p = 5;
  pm5.images.assign(6, SparseVector(8, Field::prime(3)));
  CHECK_THROWS_AS(verify_sr1(g3, pm5), FieldMismatchError);
}
