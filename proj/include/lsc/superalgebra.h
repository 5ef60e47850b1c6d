// Finite-dimensional Lie superalgebras by structure constants, the four
// built-in solvable/nilpotent families, and structural invariants (central
// sequences, characteristic sequence, torus weights).
//
// Basis convention everywhere: even basis vectors first, then odd ones.
// Structure constants are stored for one orientation only, keyed by
// (i, j) with i < j (i <= j when both vectors are odd); the other orientation
// follows from super-antisymmetry [x,y] = -(-1)^{|x||y|} [y,x].
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsc/linalg.h"
#include "lsc/sparse.h"

namespace lsc {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

struct BasisVector {
  std::string name;
  Parity parity;
};

using BracketKey = std::pair<std::uint32_t, std::uint32_t>;
using ConstantsMap = std::map<BracketKey, SparseVector>;

struct FamilyTag {
  enum class Kind { filiform, solvable_filiform, nilpotent, solvable_nilpotent };
  Kind kind;
  std::vector<std::uint32_t> ns;  // filiform kinds: {n}; nilpotent kinds: block sizes
  std::vector<std::uint32_t> ms;  // filiform kinds: {m}; nilpotent kinds: odd block sizes
  std::string str() const;        // "L(3,2)", "SL(4,3)", "N(3,2|2,1)", "SN(2|)"
};

struct JacobiViolation {
  std::uint32_t i, j, k;       // basis triple, i <= j <= k
  SparseVector residual;       // nonzero Jacobi sum at that triple
};

struct ValidationReport {
  bool parity_ok = true;
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  std::optional<BracketKey> parity_violation;
  std::optional<BracketKey> antisymmetry_violation;
  std::optional<JacobiViolation> jacobi_violation;
  bool ok() const { return parity_ok && antisymmetry_ok && jacobi_ok; }
  std::string describe(const std::vector<BasisVector>& basis) const;
};

class SuperAlgebra {
 public:
  // basis must list even vectors first; raw constants may use either
  // orientation of each pair (but not both). Does not run validate().
  SuperAlgebra(Field field, std::vector<BasisVector> basis, const ConstantsMap& raw,
               std::optional<FamilyTag> family = {});

  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const { return even_dim_; }
  std::size_t odd_dim() const { return basis_.size() - even_dim_; }
  const BasisVector& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::optional<FamilyTag>& family() const { return family_; }
  const ConstantsMap& constants() const { return constants_; }

  SparseVector bracket(std::size_t i, std::size_t j) const;
  SparseVector bracket(const SparseVector& a, const SparseVector& b) const;
  SparseMatrix ad(std::size_t i) const;             // ad(e_i) as a dim x dim matrix
  SparseMatrix ad(const SparseVector& a) const;

  ValidationReport validate() const;

  std::string descriptor() const;  // family tag or a content hash

 private:
  Field field_;
  std::vector<BasisVector> basis_;
  std::size_t even_dim_;
  ConstantsMap constants_;
  std::optional<FamilyTag> family_;
};

// families ------------------------------------------------------------------

// L(n, m): X_1..X_n even, Y_1..Y_m odd; [X_1, X_i] = X_{i+1} (2 <= i < n),
// [X_1, Y_j] = Y_{j+1} (1 <= j < m). Requires n >= 2, m >= 1.
SuperAlgebra model_filiform(std::uint32_t n, std::uint32_t m,
                            Field field = Field::rationals());

// SL(n, m): L(n, m) extended by a diagonal torus T_1, T_2, T_3 with
// [T_1, X_i] = i X_i, [T_1, Y_j] = j Y_j, [T_2, X_i] = X_i (i >= 2),
// [T_3, Y_j] = Y_j. Basis order X_1..X_n, T_1, T_2, T_3, Y_1..Y_m.
SuperAlgebra solvable_model_filiform(std::uint32_t n, std::uint32_t m,
                                     Field field = Field::rationals());

// N(ns | ms): even chains x_1..x_{N+1} (N = sum ns) hung off the generator
// x_1, odd chains y_1..y_M (M = sum ms); ms may be empty.
SuperAlgebra model_nilpotent(const std::vector<std::uint32_t>& ns,
                             const std::vector<std::uint32_t>& ms,
                             Field field = Field::rationals());

// SN(ns | ms): N(ns | ms) extended by the diagonal torus t_1..t_{k+1},
// tp_1..tp_p acting by index weight (t_1) and per-block indicators.
SuperAlgebra solvable_model_nilpotent(const std::vector<std::uint32_t>& ns,
                                      const std::vector<std::uint32_t>& ms,
                                      Field field = Field::rationals());

// Change of base field: reduce a rational algebra's constants mod p. The
// target must equal the current field (copy) or be F_p with the algebra
// rational; a denominator divisible by p is a DomainError, and lifting
// F_p back to Q (or to another prime) is refused.
SuperAlgebra with_field(const SuperAlgebra& g, Field target);

// modules -------------------------------------------------------------------

// Z2-graded module over a superalgebra, given by one action matrix per
// algebra basis vector. Module basis convention matches the algebra's:
// indices 0..even_dim-1 are even. The constructor checks parity respect and
// the graded module axiom
//   rho(x) rho(y) - (-1)^{|x||y|} rho(y) rho(x) = rho([x,y]).
class GModule {
 public:
  // labels name the module basis in printed cochains; defaults to m0, m1, ...
  GModule(SuperAlgebra algebra, std::size_t even_dim, std::size_t odd_dim,
          std::vector<SparseMatrix> actions, std::vector<std::string> labels = {});

  static GModule adjoint(const SuperAlgebra& g);

  const SuperAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return even_dim_ + odd_dim_; }
  std::size_t even_dim() const { return even_dim_; }
  std::size_t odd_dim() const { return odd_dim_; }
  Parity parity_of(std::size_t module_index) const {
    return module_index < even_dim_ ? Parity::even : Parity::odd;
  }
  bool is_adjoint() const { return adjoint_; }
  const SparseMatrix& action(std::size_t alg_index) const { return actions_[alg_index]; }
  SparseVector act(std::size_t alg_index, const SparseVector& v) const {
    return actions_[alg_index].apply(v);
  }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  SuperAlgebra algebra_;
  std::size_t even_dim_, odd_dim_;
  std::vector<SparseMatrix> actions_;
  std::vector<std::string> labels_;
  bool adjoint_ = false;
};

// the subalgebra spanned by the given basis indices (ascending; must be
// bracket-closed) together with the ambient algebra as a module over it
struct SubalgebraModule {
  SuperAlgebra sub;
  GModule ambient;  // module basis = full ambient basis, algebra = sub
};
SubalgebraModule restrict_to_subalgebra(const SuperAlgebra& g,
                                        std::vector<std::size_t> indices);

// invariants ----------------------------------------------------------------

struct CentralSequences {
  std::uint32_t nilindex;                      // least k with C^k(g) = 0
  std::pair<std::uint32_t, std::uint32_t> s_nilindex;  // same for C^k(g_even), C^k(g_odd)
  std::vector<std::size_t> dims_g, dims_even, dims_odd;  // dim C^k chains, k = 0,1,...
};
// nullopt when g is not nilpotent (the descending sequence stabilizes nonzero)
std::optional<CentralSequences> central_sequences(const SuperAlgebra& g);

struct CharacteristicSequence {
  std::vector<std::size_t> even_part, odd_part;  // non-increasing Jordan types
  std::string str() const;                       // "(3,1|3)"
  friend bool operator==(const CharacteristicSequence&, const CharacteristicSequence&) = default;
};
// maximal (lexicographically, per part) Jordan type of ad x on each parity
// part, over even candidates x outside the derived subalgebra of the even
// part: all such basis vectors, trial_budget random small combinations, and
// one generic combination. Requires a nilpotent algebra.
CharacteristicSequence characteristic_sequence(const SuperAlgebra& g,
                                               std::uint32_t trial_budget = 32);

struct WeightGrading {
  // one integer weight vector per basis vector; weights[k][c] is the weight
  // of basis vector k under character c
  std::vector<std::vector<std::int64_t>> weights;
  bool additive = false;  // weight(result) = weight(i) + weight(j) on all constants
  std::size_t characters() const { return weights.empty() ? 0 : weights.front().size(); }
};

// weights of the basis under commuting diagonally-acting even elements;
// eigenvalues must be integers over Q and are lifted to [0, p) over F_p
// (in which case additivity as integers can honestly fail)
WeightGrading torus_weights(const SuperAlgebra& g, const std::vector<SparseVector>& torus);

// finest Z-grading compatible with the bracket support, found by solving
// weight(i) + weight(j) = weight(k) over Q and scaling to primitive integer
// characters; always additive
WeightGrading canonical_grading(const SuperAlgebra& g);

// the family Z-grading deg X_r = r, deg T = 0, deg Y_s = n + s (and its
// N/SN analogue); only for algebras carrying a family tag
WeightGrading family_grading(const SuperAlgebra& g);

// convenience: spans and membership
RowSpan span_of(const std::vector<SparseVector>& vectors, std::size_t len, Field f);

}  // namespace lsc
