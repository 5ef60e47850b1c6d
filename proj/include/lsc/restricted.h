// p-th power structures on the even part of a Lie superalgebra over F_p:
// existence/uniqueness of the p-map, its axioms (ad_{x^[p]} = (ad x)^p and
// the additivity correction coefficients), the induced squaring map on the
// odd part, and the parameter scan over the solvable filiform family.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lsc/sparse.h"
#include "lsc/superalgebra.h"

namespace lsc {

// p-th power map on the even part, by its basis images
struct PMap {
  std::uint32_t p = 0;
  std::vector<SparseVector> images;  // image of each even basis vector, an even element
  bool unique = false;               // the linear systems had zero-dimensional kernels
};

// certificate that no even f satisfies ad_f = (ad e_j)^p: a functional
// vanishing on every column of the vectorized ad-system but not on the
// right-hand side
struct ObstructionWitness {
  std::size_t basis_index = 0;       // even basis vector with no p-image
  SparseVector functional;           // over vectorized matrix entries (row*dim + col)
  Scalar value;                      // functional applied to vec((ad e_j)^p); nonzero
  std::vector<std::string> probes;   // bracket replays for family instances
};

using RestrictednessResult = std::variant<PMap, ObstructionWitness>;

// solves ad_f = (ad e_j)^p for f in the even part, for every even basis
// vector e_j in order; the first inconsistent system yields the witness
RestrictednessResult p_map_exists(const SuperAlgebra& g);

// exact matrix check ad_{e_j^[p]} = (ad e_j)^p for all even basis j
bool verify_sr1(const SuperAlgebra& g, const PMap& pmap);

// s_1..s_{p-1} defined by (ad_{la+b})^{p-1}(a) = sum_i i s_i(a,b) l^{i-1},
// found by evaluating at l = 0..p-2 and interpolating (degree <= p-2)
std::vector<SparseVector> sr3_coefficients(const SuperAlgebra& g, const SparseVector& a,
                                           const SparseVector& b);

// (a+b)^[p] = a^[p] + b^[p] + sum_i s_i(a,b), compared through ad images
// (the p-map is determined up to the center)
bool verify_sr3(const SuperAlgebra& g, const PMap& pmap, const SparseVector& a,
                const SparseVector& b);

// extends the basis images to an arbitrary even element: strips one basis
// term at a time using semilinearity and the s_i correction terms
SparseVector p_map_extend(const SuperAlgebra& g, const PMap& pmap, const SparseVector& x);

// odd part squaring composed with the p-map: y -> (y^2)^[p], y^2 = [y,y]/2
SparseVector two_p_map(const SuperAlgebra& g, const PMap& pmap, const SparseVector& y);

struct BoundaryScanEntry {
  std::uint32_t n = 0, m = 0;
  bool restricted = false;
  bool expected = false;             // the closed form m <= p and n <= p+1
  bool matches_known_form = false;   // restricted rows: T_i -> T_i, X_j -> 0
  bool unique = false;
};

// runs p_map_exists on the solvable filiform family over F_p across the grid,
// rows ordered by (n, m) ascending
std::vector<BoundaryScanEntry> theorem_boundary_scan(std::uint32_t p, std::uint32_t n_min,
                                                     std::uint32_t n_max, std::uint32_t m_min,
                                                     std::uint32_t m_max);

}  // namespace lsc
