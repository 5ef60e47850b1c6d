// Chevalley-Eilenberg cochain complexes and cohomology for Lie superalgebras.
//
// C^q(g; M) = sum over q0+q1=q of Hom(Lambda^{q0} g_even (x) S^{q1} g_odd, M),
// with the basis ordered by q1 ascending, then argument tuples
// lexicographically (even arguments as strictly increasing index tuples, odd
// arguments as non-decreasing multisets), then module target. A basis cochain
// sends its argument tuple to the target vector and kills every other tuple;
// its parity is q1 + parity(target).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsc/linalg.h"
#include "lsc/superalgebra.h"

namespace lsc {

struct CochainBasisElement {
  std::vector<std::size_t> even_args;  // strictly increasing algebra indices
  std::vector<std::size_t> odd_args;   // non-decreasing algebra indices
  std::size_t target;                  // module basis index
  Parity parity;
};

// self-contained (copies names/parities, not the module)
class CochainSpace {
 public:
  CochainSpace(const GModule& m, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return elements_.size(); }
  std::size_t module_dim() const { return module_dim_; }
  Field field() const { return field_; }
  const CochainBasisElement& element(std::size_t i) const { return elements_[i]; }

  // base index of the tuple (its target-0 column); arguments must be canonical
  std::size_t tuple_base(const std::vector<std::size_t>& even_args,
                         const std::vector<std::size_t>& odd_args) const;
  // canonicalize an argument list: sorts the even arguments (sign of the
  // permutation; nullopt on a repeated even argument) and the odd ones (no
  // sign); returns the tuple base index and the sign
  std::optional<std::pair<std::size_t, Scalar>> locate_tuple(
      std::vector<std::size_t> even_args, std::vector<std::size_t> odd_args) const;

  std::vector<std::size_t> columns_of_parity(Parity p) const;
  std::string element_name(std::size_t i) const;  // "X1^X2·Y1 -> X3", "1 -> X1"

 private:
  std::size_t degree_;
  Field field_;
  std::size_t module_dim_;
  std::vector<CochainBasisElement> elements_;
  std::vector<std::string> algebra_names_, module_labels_;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t>
      tuple_base_;
};

// matrix of d: C^q -> C^{q+1} in the bases above (rows = C^{q+1} coordinates)
SparseMatrix differential_matrix(const GModule& m, std::size_t q);

struct ParityDims {
  std::size_t even = 0, odd = 0;
  std::size_t total() const { return even + odd; }
  friend bool operator==(const ParityDims&, const ParityDims&) = default;
};

struct CohomologyOptions {
  bool representatives = false;
  LinalgOptions linalg{};
};

struct CohomologyResult {
  std::size_t q = 0;
  ParityDims cochains, cocycles, coboundaries, cohomology;
  // representatives[parity]: coordinate vectors in C^q spanning H^q, reduced
  // against the coboundary space (filled only when requested)
  std::array<std::vector<SparseVector>, 2> representatives;
};

CohomologyResult cohomology(const GModule& m, std::size_t q,
                            const CohomologyOptions& opts = {});

bool is_cocycle(const GModule& m, std::size_t q, const SparseVector& coords);

// a witness f in C^{q-1} with df = coords when coords is a coboundary
// (q >= 1); requires coords to be a cocycle (DomainError otherwise)
std::optional<SparseVector> is_coboundary(const GModule& m, std::size_t q,
                                          const SparseVector& coords);

// weight-graded refinement: with integer weights on the algebra and module
// bases (additive over brackets and actions), a basis cochain has weight
// wt(target) - sum wt(args) and d preserves the weight (checked; DomainError
// if some entry couples different weights). Results are per nonempty block,
// ascending in weight; block dims sum to the direct computation's.
struct WeightBlockResult {
  std::int64_t weight = 0;
  ParityDims cochains, cocycles, coboundaries, cohomology;
  std::array<std::vector<SparseVector>, 2> representatives;  // coords in full C^q
};

std::vector<WeightBlockResult> weight_blocks(const GModule& m, std::size_t q,
                                             const std::vector<std::int64_t>& algebra_weights,
                                             const std::vector<std::int64_t>& module_weights,
                                             const CohomologyOptions& opts = {});

// convenience for modules whose basis matches the algebra's (adjoint, or the
// ambient algebra over a subalgebra with equal dimension): one grading
// character weights both sides
std::vector<WeightBlockResult> weight_blocks(const GModule& m, std::size_t q,
                                             const WeightGrading& grading,
                                             std::size_t character = 0,
                                             const CohomologyOptions& opts = {});

// dims of H^q of the subcomplex of cochains of weight zero under every
// character (several integer characters given per basis vector); over F_p
// the characters are eigenvalue residues, so weights compare mod p
struct InvariantDims {
  std::size_t q = 0;
  ParityDims cochains, cohomology;
};

InvariantDims invariant_cohomology(
    const GModule& m, std::size_t q,
    const std::vector<std::vector<std::int64_t>>& algebra_weights,
    const std::vector<std::vector<std::int64_t>>& module_weights,
    const CohomologyOptions& opts = {});

// factorization check for a solvable algebra r = nilradical + torus:
// H^q(r; r) should match sum_{a+b=q} C(|torus|, a) * dim H^b(n; r)^torus,
// the torus acting diagonally. Throws DiagonalityError/ClosureError if the
// given split does not qualify.
struct HochschildSerreCheck {
  std::size_t q = 0;
  ParityDims direct;                              // H^q(r; r)
  ParityDims reconstructed;                       // torus-invariant rebuild
  std::vector<ParityDims> invariant_dims;         // dim H^b(n; r)^t, b = 0..q
  bool match = false;
};

HochschildSerreCheck hochschild_serre_check(const SuperAlgebra& r,
                                            const std::vector<std::size_t>& nilradical_indices,
                                            const std::vector<std::size_t>& torus_indices,
                                            std::size_t q,
                                            const CohomologyOptions& opts = {});

// split of the 2-cocycle space by argument type: dims of the intersections of
// Z^2_p with the spans of the Hom(Lambda^2 g_even, M) / Hom(g_even (x) g_odd, M)
// / Hom(S^2 g_odd, M) coordinate blocks; additive reports whether the three
// intersections exhaust Z^2_p
struct AbcSplit {
  Parity parity = Parity::even;
  std::size_t a = 0, b = 0, c = 0;
  std::size_t z = 0;  // dim Z^2_p
  bool additive = false;
};

AbcSplit abc_split(const GModule& m, Parity parity, const CohomologyOptions& opts = {});

}  // namespace lsc
