#include "lsc/superalgebra.h"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <random>
#include <set>

#include "lsc/errors.h"

namespace lsc {

namespace {

std::string join_u32(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// super-antisymmetry sign when swapping a bracket's arguments
Scalar swap_sign(Parity a, Parity b, Field f) {
  return (a == Parity::odd && b == Parity::odd) ? Scalar::one(f) : -Scalar::one(f);
}

std::uint64_t fnv64(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string FamilyTag::str() const {
  switch (kind) {
    case Kind::filiform:
      return "L(" + std::to_string(ns[0]) + "," + std::to_string(ms[0]) + ")";
    case Kind::solvable_filiform:
      return "SL(" + std::to_string(ns[0]) + "," + std::to_string(ms[0]) + ")";
    case Kind::nilpotent:
      return "N(" + join_u32(ns) + "|" + join_u32(ms) + ")";
    case Kind::solvable_nilpotent:
      return "SN(" + join_u32(ns) + "|" + join_u32(ms) + ")";
  }
  return "?";
}

std::string ValidationReport::describe(const std::vector<BasisVector>& basis) const {
  if (ok()) return "valid";
  std::string s;
  if (!parity_ok && parity_violation)
    s += "bracket [" + basis[parity_violation->first].name + "," +
         basis[parity_violation->second].name + "] violates parity; ";
  if (!antisymmetry_ok && antisymmetry_violation)
    s += "bracket [" + basis[antisymmetry_violation->first].name + "," +
         basis[antisymmetry_violation->second].name + "] violates super-antisymmetry; ";
  if (!jacobi_ok && jacobi_violation)
    s += "graded Jacobi identity fails at (" + basis[jacobi_violation->i].name + "," +
         basis[jacobi_violation->j].name + "," + basis[jacobi_violation->k].name + "); ";
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

SuperAlgebra::SuperAlgebra(Field field, std::vector<BasisVector> basis,
                           const ConstantsMap& raw, std::optional<FamilyTag> family)
    : field_(field), basis_(std::move(basis)), family_(std::move(family)) {
  even_dim_ = 0;
  bool seen_odd = false;
  std::set<std::string> names;
  for (const auto& b : basis_) {
    if (b.parity == Parity::even) {
      if (seen_odd) throw ParameterError("basis must list even vectors before odd ones");
      ++even_dim_;
    } else {
      seen_odd = true;
    }
    if (!names.insert(b.name).second)
      throw ParameterError("duplicate basis name '" + b.name + "'");
  }

  const std::size_t d = basis_.size();
  for (const auto& [key, value] : raw) {
    auto [i, j] = key;
    if (i >= d || j >= d) throw DimensionError("bracket key out of range");
    if (value.size() != d) throw DimensionError("bracket value has wrong length");
    if (value.field() != field_) throw FieldMismatchError("bracket value over the wrong field");
    if (value.is_zero()) continue;

    BracketKey ckey = key;
    SparseVector cval = value;
    if (i > j) {
      ckey = {j, i};
      cval = swap_sign(parity(i), parity(j), field_) * cval;
    }
    auto [it, inserted] = constants_.emplace(ckey, cval);
    if (!inserted) {
      const bool consistent = it->second == cval;
      throw OrientationConflictError(
          "both orientations of [" + basis_[ckey.first].name + "," +
          basis_[ckey.second].name + "] were given" +
          (consistent ? " (consistently; still give only one)" : " and they disagree"));
    }
  }
}

std::optional<std::size_t> SuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

SparseVector SuperAlgebra::bracket(std::size_t i, std::size_t j) const {
  const bool swapped = i > j;
  auto it = constants_.find(swapped ? BracketKey{static_cast<std::uint32_t>(j),
                                                 static_cast<std::uint32_t>(i)}
                                    : BracketKey{static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j)});
  if (it == constants_.end()) return SparseVector(dim(), field_);
  if (!swapped) return it->second;
  return swap_sign(parity(i), parity(j), field_) * it->second;
}

SparseVector SuperAlgebra::bracket(const SparseVector& a, const SparseVector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionError("bracket argument length mismatch");
  SparseVector out(dim(), field_);
  for (const auto& [i, av] : a.entries())
    for (const auto& [j, bv] : b.entries())
      out.add_scaled(bracket(i, j), av * bv);
  return out;
}

SparseMatrix SuperAlgebra::ad(std::size_t i) const {
  SparseMatrix m(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j) {
    const SparseVector br = bracket(i, j);
    for (const auto& [k, v] : br.entries()) m.set(k, j, v);
  }
  return m;
}

SparseMatrix SuperAlgebra::ad(const SparseVector& a) const {
  SparseMatrix m(dim(), dim(), field_);
  for (const auto& [i, c] : a.entries()) m = m + ad(i).scaled(c);
  return m;
}

ValidationReport SuperAlgebra::validate() const {
  ValidationReport rep;

  for (const auto& [key, value] : constants_) {
    const Parity want =
        parity(key.first) == parity(key.second) ? Parity::even : Parity::odd;
    for (const auto& [k, v] : value.entries()) {
      if (parity(k) != want) {
        rep.parity_ok = false;
        rep.parity_violation = key;
        break;
      }
    }
    if (!rep.parity_ok) break;
  }

  for (const auto& [key, value] : constants_) {
    if (key.first == key.second && parity(key.first) == Parity::even && !value.is_zero()) {
      rep.antisymmetry_ok = false;
      rep.antisymmetry_violation = key;
      break;
    }
  }

  // graded Jacobi over basis triples i <= j <= k:
  //   (-1)^{|k||i|} [e_i,[e_j,e_k]] + (-1)^{|i||j|} [e_j,[e_k,e_i]]
  // + (-1)^{|j||k|} [e_k,[e_i,e_j]] = 0
  const std::size_t d = dim();
  auto sgn = [&](std::size_t a, std::size_t b) {
    return (parity(a) == Parity::odd && parity(b) == Parity::odd) ? -Scalar::one(field_)
                                                                  : Scalar::one(field_);
  };
  auto bracket_iv = [&](std::size_t i, const SparseVector& v) {
    SparseVector out(d, field_);
    for (const auto& [t, c] : v.entries()) out.add_scaled(bracket(i, t), c);
    return out;
  };
  for (std::size_t i = 0; i < d && rep.jacobi_ok; ++i)
    for (std::size_t j = i; j < d && rep.jacobi_ok; ++j)
      for (std::size_t k = j; k < d; ++k) {
        SparseVector sum(d, field_);
        sum.add_scaled(bracket_iv(i, bracket(j, k)), sgn(k, i));
        sum.add_scaled(bracket_iv(j, bracket(k, i)), sgn(i, j));
        sum.add_scaled(bracket_iv(k, bracket(i, j)), sgn(j, k));
        if (!sum.is_zero()) {
          rep.jacobi_ok = false;
          rep.jacobi_violation = JacobiViolation{static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j),
                                                 static_cast<std::uint32_t>(k), sum};
          break;
        }
      }
  return rep;
}

std::string SuperAlgebra::descriptor() const {
  if (family_) return family_->str();
  std::uint64_t h = fnv64(field_.str());
  for (const auto& [key, value] : constants_) {
    h = fnv64("[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]", h);
    for (const auto& [k, v] : value.entries())
      h = fnv64(std::to_string(k) + ":" + v.str(), h);
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("file:") + buf;
}

// families -------------------------------------------------------------------

namespace {

std::vector<BasisVector> xy_basis(std::uint32_t n, std::uint32_t m, bool torus) {
  std::vector<BasisVector> basis;
  for (std::uint32_t i = 1; i <= n; ++i) basis.push_back({"X" + std::to_string(i), Parity::even});
  if (torus)
    for (std::uint32_t t = 1; t <= 3; ++t) basis.push_back({"T" + std::to_string(t), Parity::even});
  for (std::uint32_t j = 1; j <= m; ++j) basis.push_back({"Y" + std::to_string(j), Parity::odd});
  return basis;
}

void require_filiform_params(std::uint32_t n, std::uint32_t m) {
  if (n < 2) throw ParameterError("filiform families need n >= 2 (got n=" + std::to_string(n) + ")");
  if (m < 1) throw ParameterError("filiform families need m >= 1 (got m=" + std::to_string(m) + ")");
}

}  // namespace

SuperAlgebra model_filiform(std::uint32_t n, std::uint32_t m, Field field) {
  require_filiform_params(n, m);
  const std::size_t d = n + m;
  ConstantsMap c;
  auto unit = [&](std::size_t k) { return SparseVector::unit(d, field, k); };
  for (std::uint32_t i = 2; i + 1 <= n; ++i)  // [X1, Xi] = X_{i+1}
    c[{0, i - 1}] = unit(i);
  for (std::uint32_t j = 1; j + 1 <= m; ++j)  // [X1, Yj] = Y_{j+1}
    c[{0, n + j - 1}] = unit(n + j);
  return SuperAlgebra(field, xy_basis(n, m, false), c,
                      FamilyTag{FamilyTag::Kind::filiform, {n}, {m}});
}

SuperAlgebra solvable_model_filiform(std::uint32_t n, std::uint32_t m, Field field) {
  require_filiform_params(n, m);
  const std::size_t d = n + 3 + m;
  const std::size_t t1 = n, t2 = n + 1, t3 = n + 2;
  auto xi = [&](std::uint32_t i) { return static_cast<std::size_t>(i - 1); };
  auto yj = [&](std::uint32_t j) { return static_cast<std::size_t>(n + 3 + j - 1); };
  ConstantsMap c;
  auto unit = [&](std::size_t k) { return SparseVector::unit(d, field, k); };
  auto scaled_unit = [&](std::size_t k, long v) {
    SparseVector u(d, field);
    u.set(k, Scalar::integer(v, field));
    return u;
  };
  for (std::uint32_t i = 2; i + 1 <= n; ++i) c[{xi(1), xi(i)}] = unit(xi(i + 1));
  for (std::uint32_t j = 1; j + 1 <= m; ++j) c[{xi(1), yj(j)}] = unit(yj(j + 1));
  for (std::uint32_t i = 1; i <= n; ++i) {  // [T1, Xi] = i Xi
    SparseVector v = scaled_unit(xi(i), i);
    if (!v.is_zero()) c[{xi(i), t1}] = -v;  // stored orientation has lower index first
  }
  for (std::uint32_t j = 1; j <= m; ++j) {  // [T1, Yj] = j Yj
    SparseVector v = scaled_unit(yj(j), j);
    if (!v.is_zero()) c[{t1, yj(j)}] = v;
  }
  for (std::uint32_t i = 2; i <= n; ++i) c[{xi(i), t2}] = -unit(xi(i));  // [T2, Xi] = Xi
  for (std::uint32_t j = 1; j <= m; ++j) c[{t3, yj(j)}] = unit(yj(j));   // [T3, Yj] = Yj
  return SuperAlgebra(field, xy_basis(n, m, true), c,
                      FamilyTag{FamilyTag::Kind::solvable_filiform, {n}, {m}});
}

namespace {

void require_nilpotent_params(const std::vector<std::uint32_t>& ns,
                              const std::vector<std::uint32_t>& ms) {
  if (ns.empty()) throw ParameterError("nilpotent families need at least one even block");
  for (std::uint32_t v : ns)
    if (v < 1) throw ParameterError("even block sizes must be positive");
  for (std::uint32_t v : ms)
    if (v < 1) throw ParameterError("odd block sizes must be positive");
}

struct NilpotentLayout {
  std::uint32_t N, M;                 // sum ns, sum ms
  std::vector<std::uint32_t> nb, mb;  // block offsets B_j, C_j (prefix sums)
};

NilpotentLayout nilpotent_layout(const std::vector<std::uint32_t>& ns,
                                 const std::vector<std::uint32_t>& ms) {
  NilpotentLayout l{0, 0, {0}, {0}};
  for (std::uint32_t v : ns) l.nb.push_back(l.N += v);
  for (std::uint32_t v : ms) l.mb.push_back(l.M += v);
  return l;
}

}  // namespace

SuperAlgebra model_nilpotent(const std::vector<std::uint32_t>& ns,
                             const std::vector<std::uint32_t>& ms, Field field) {
  require_nilpotent_params(ns, ms);
  const NilpotentLayout l = nilpotent_layout(ns, ms);
  const std::size_t even = l.N + 1, d = even + l.M;
  std::vector<BasisVector> basis;
  for (std::uint32_t i = 1; i <= even; ++i) basis.push_back({"x" + std::to_string(i), Parity::even});
  for (std::uint32_t j = 1; j <= l.M; ++j) basis.push_back({"y" + std::to_string(j), Parity::odd});
  auto xi = [&](std::uint32_t i) { return static_cast<std::size_t>(i - 1); };
  auto yj = [&](std::uint32_t j) { return static_cast<std::size_t>(even + j - 1); };
  ConstantsMap c;
  auto unit = [&](std::size_t k) { return SparseVector::unit(d, field, k); };
  for (std::uint32_t j = 2; j <= ns[0]; ++j) c[{xi(1), xi(j)}] = unit(xi(j + 1));
  for (std::size_t j = 1; j < ns.size(); ++j)
    for (std::uint32_t i = 2; i <= ns[j]; ++i)
      c[{xi(1), xi(l.nb[j] + i)}] = unit(xi(l.nb[j] + i + 1));
  if (!ms.empty()) {
    for (std::uint32_t j = 1; j + 1 <= ms[0]; ++j) c[{xi(1), yj(j)}] = unit(yj(j + 1));
    for (std::size_t j = 1; j < ms.size(); ++j)
      for (std::uint32_t i = 1; i + 1 <= ms[j]; ++i)
        c[{xi(1), yj(l.mb[j] + i)}] = unit(yj(l.mb[j] + i + 1));
  }
  return SuperAlgebra(field, std::move(basis), c,
                      FamilyTag{FamilyTag::Kind::nilpotent, ns, ms});
}

SuperAlgebra solvable_model_nilpotent(const std::vector<std::uint32_t>& ns,
                                      const std::vector<std::uint32_t>& ms, Field field) {
  require_nilpotent_params(ns, ms);
  const NilpotentLayout l = nilpotent_layout(ns, ms);
  const std::uint32_t k = static_cast<std::uint32_t>(ns.size());
  const std::uint32_t p = static_cast<std::uint32_t>(ms.size());
  const std::size_t nx = l.N + 1;
  const std::size_t even = nx + (k + 1) + p, d = even + l.M;

  std::vector<BasisVector> basis;
  for (std::uint32_t i = 1; i <= nx; ++i) basis.push_back({"x" + std::to_string(i), Parity::even});
  for (std::uint32_t a = 1; a <= k + 1; ++a) basis.push_back({"t" + std::to_string(a), Parity::even});
  for (std::uint32_t b = 1; b <= p; ++b) basis.push_back({"tp" + std::to_string(b), Parity::even});
  for (std::uint32_t j = 1; j <= l.M; ++j) basis.push_back({"y" + std::to_string(j), Parity::odd});

  auto xi = [&](std::uint32_t i) { return static_cast<std::size_t>(i - 1); };
  auto ta = [&](std::uint32_t a) { return static_cast<std::size_t>(nx + a - 1); };
  auto tpb = [&](std::uint32_t b) { return static_cast<std::size_t>(nx + k + 1 + b - 1); };
  auto yj = [&](std::uint32_t j) { return static_cast<std::size_t>(even + j - 1); };

  ConstantsMap c;
  auto unit = [&](std::size_t u) { return SparseVector::unit(d, field, u); };
  auto add = [&](std::size_t a, std::size_t b, SparseVector v) {
    // insert with canonical (lower, higher) orientation, applying the swap sign
    if (v.is_zero()) return;
    if (a > b) {
      c[{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a)}] = -v;  // all even/odd-mixed pairs here
    } else {
      c[{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}] = std::move(v);
    }
  };

  // chains from the generator x_1
  for (std::uint32_t j = 2; j <= ns[0]; ++j) add(xi(1), xi(j), unit(xi(j + 1)));
  for (std::size_t j = 1; j < ns.size(); ++j)
    for (std::uint32_t i = 2; i <= ns[j]; ++i)
      add(xi(1), xi(l.nb[j] + i), unit(xi(l.nb[j] + i + 1)));
  if (!ms.empty()) {
    for (std::uint32_t j = 1; j + 1 <= ms[0]; ++j) add(xi(1), yj(j), unit(yj(j + 1)));
    for (std::size_t j = 1; j < ms.size(); ++j)
      for (std::uint32_t i = 1; i + 1 <= ms[j]; ++i)
        add(xi(1), yj(l.mb[j] + i), unit(yj(l.mb[j] + i + 1)));
  }
  // t_1 weights every chain vector by its index
  for (std::uint32_t i = 1; i <= nx; ++i) {
    SparseVector v(d, field);
    v.set(xi(i), Scalar::integer(i, field));
    add(ta(1), xi(i), std::move(v));
  }
  for (std::uint32_t j = 1; j <= l.M; ++j) {
    SparseVector v(d, field);
    v.set(yj(j), Scalar::integer(j, field));
    add(ta(1), yj(j), std::move(v));
  }
  // per-block counting tori
  for (std::uint32_t i = 2; i <= ns[0] + 1; ++i) add(ta(2), xi(i), unit(xi(i)));
  for (std::size_t j = 1; j < ns.size(); ++j)
    for (std::uint32_t i = 2; i <= ns[j] + 1; ++i)
      add(ta(static_cast<std::uint32_t>(j) + 2), xi(l.nb[j] + i), unit(xi(l.nb[j] + i)));
  if (!ms.empty()) {
    for (std::uint32_t i = 1; i <= ms[0]; ++i) add(tpb(1), yj(i), unit(yj(i)));
    for (std::size_t j = 1; j < ms.size(); ++j)
      for (std::uint32_t i = 1; i <= ms[j]; ++i)
        add(tpb(static_cast<std::uint32_t>(j) + 1), yj(l.mb[j] + i), unit(yj(l.mb[j] + i)));
  }
  return SuperAlgebra(field, std::move(basis), c,
                      FamilyTag{FamilyTag::Kind::solvable_nilpotent, ns, ms});
}

// modules --------------------------------------------------------------------

GModule::GModule(SuperAlgebra algebra, std::size_t even_dim, std::size_t odd_dim,
                 std::vector<SparseMatrix> actions, std::vector<std::string> labels)
    : algebra_(std::move(algebra)), even_dim_(even_dim), odd_dim_(odd_dim),
      actions_(std::move(actions)), labels_(std::move(labels)) {
  const std::size_t d = even_dim_ + odd_dim_;
  if (labels_.empty())
    for (std::size_t i = 0; i < d; ++i) labels_.push_back("m" + std::to_string(i));
  if (labels_.size() != d) throw DimensionError("module needs one label per basis vector");
  if (actions_.size() != algebra_.dim())
    throw DimensionError("module needs one action per algebra basis vector");
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    const SparseMatrix& m = actions_[i];
    if (m.rows() != d || m.cols() != d || m.field() != algebra_.field())
      throw DimensionError("action matrix shape/field mismatch");
    // parity respect: an action of parity s maps parity c to parity c + s
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [c, v] : m.row(r).entries()) {
        const bool flips = algebra_.parity(i) == Parity::odd;
        const bool ok = flips ? (parity_of(r) != parity_of(c)) : (parity_of(r) == parity_of(c));
        if (!ok)
          throw DomainError("action of " + algebra_.basis(i).name + " does not respect parity");
      }
  }
  // graded module axiom on all basis pairs
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t j = i; j < actions_.size(); ++j) {
      const bool both_odd =
          algebra_.parity(i) == Parity::odd && algebra_.parity(j) == Parity::odd;
      SparseMatrix lhs = actions_[i] * actions_[j];
      SparseMatrix ji = actions_[j] * actions_[i];
      lhs = both_odd ? lhs + ji : lhs - ji;
      SparseMatrix rhs(d, d, algebra_.field());
      const SparseVector br = algebra_.bracket(i, j);
      for (const auto& [t, c] : br.entries()) rhs = rhs + actions_[t].scaled(c);
      if (lhs != rhs)
        throw DomainError("module axiom fails on (" + algebra_.basis(i).name + "," +
                          algebra_.basis(j).name + ")");
    }
}

GModule GModule::adjoint(const SuperAlgebra& g) {
  std::vector<SparseMatrix> actions;
  actions.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) actions.push_back(g.ad(i));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.dim(); ++i) labels.push_back(g.basis(i).name);
  GModule m(g, g.even_dim(), g.odd_dim(), std::move(actions), std::move(labels));
  m.adjoint_ = true;
  return m;
}

SubalgebraModule restrict_to_subalgebra(const SuperAlgebra& g,
                                        std::vector<std::size_t> indices) {
  if (indices.empty()) throw ParameterError("subalgebra needs at least one basis vector");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.back() >= g.dim()) throw DimensionError("subalgebra index out of range");

  std::vector<std::size_t> place(g.dim(), SIZE_MAX);
  for (std::size_t s = 0; s < indices.size(); ++s) place[indices[s]] = s;

  std::vector<BasisVector> basis;
  std::size_t even = 0;
  for (std::size_t idx : indices) {
    basis.push_back(g.basis(idx));
    if (g.parity(idx) == Parity::even) ++even;
  }

  ConstantsMap c;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a; b < indices.size(); ++b) {
      SparseVector v = g.bracket(indices[a], indices[b]);
      if (v.is_zero()) continue;
      SparseVector sub(indices.size(), g.field());
      for (const auto& [k, x] : v.entries()) {
        if (place[k] == SIZE_MAX)
          throw ClosureError("subset is not a subalgebra: [" + g.basis(indices[a]).name +
                             "," + g.basis(indices[b]).name + "] leaves it (component " +
                             g.basis(k).name + ")");
        sub.set(place[k], x);
      }
      c[{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}] = std::move(sub);
    }

  std::optional<FamilyTag> tag;
  if (indices.size() == g.dim()) tag = g.family();
  SuperAlgebra sub(g.field(), std::move(basis), c, tag);

  std::vector<SparseMatrix> actions;
  actions.reserve(indices.size());
  for (std::size_t idx : indices) actions.push_back(g.ad(idx));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.dim(); ++i) labels.push_back(g.basis(i).name);
  GModule ambient(sub, g.even_dim(), g.odd_dim(), std::move(actions), std::move(labels));
  return SubalgebraModule{std::move(sub), std::move(ambient)};
}

// invariants -----------------------------------------------------------------

RowSpan span_of(const std::vector<SparseVector>& vectors, std::size_t len, Field f) {
  RowSpan s(len, f);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

namespace {

// span of brackets [left_i, right_j] over all pairs of span basis vectors
RowSpan bracket_span(const SuperAlgebra& g, const RowSpan& left, const RowSpan& right) {
  RowSpan out(g.dim(), g.field());
  for (const auto& l : left.rows())
    for (const auto& r : right.rows()) out.insert(g.bracket(l, r));
  return out;
}

RowSpan unit_span(const SuperAlgebra& g, std::size_t from, std::size_t to) {
  RowSpan s(g.dim(), g.field());
  for (std::size_t i = from; i < to; ++i)
    s.insert(SparseVector::unit(g.dim(), g.field(), i));
  return s;
}

}  // namespace

std::optional<CentralSequences> central_sequences(const SuperAlgebra& g) {
  CentralSequences out{};
  const RowSpan whole = unit_span(g, 0, g.dim());
  const RowSpan evens = unit_span(g, 0, g.even_dim());

  // C^{k+1}(g) = [C^k(g), g]
  RowSpan cur = whole;
  out.dims_g.push_back(cur.dim());
  bool nilpotent = false;
  for (std::uint32_t k = 1;; ++k) {
    RowSpan next = bracket_span(g, cur, whole);
    out.dims_g.push_back(next.dim());
    if (next.dim() == 0) {
      out.nilindex = k;
      nilpotent = true;
      break;
    }
    if (next.dim() == cur.dim()) break;  // stabilized nonzero
    cur = std::move(next);
  }
  if (!nilpotent) return std::nullopt;

  auto parity_chain = [&](std::size_t from, std::size_t to,
                          std::vector<std::size_t>& dims) -> std::uint32_t {
    RowSpan c = unit_span(g, from, to);
    dims.push_back(c.dim());
    if (c.dim() == 0) return 0;
    for (std::uint32_t k = 1;; ++k) {
      RowSpan next = bracket_span(g, evens, c);  // C^{k+1} = [g_even, C^k]
      dims.push_back(next.dim());
      if (next.dim() == 0) return k;
      c = std::move(next);
    }
  };
  out.s_nilindex.first = parity_chain(0, g.even_dim(), out.dims_even);
  out.s_nilindex.second = parity_chain(g.even_dim(), g.dim(), out.dims_odd);
  return out;
}

std::string CharacteristicSequence::str() const {
  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "(" + join(even_part) + "|" + join(odd_part) + ")";
}

namespace {

// Jordan type of a nilpotent operator from ranks of its powers: the number of
// blocks of size >= t is rank(A^{t-1}) - rank(A^t)
std::vector<std::size_t> jordan_type(const SparseMatrix& a) {
  std::vector<std::size_t> ranks{a.rows()};  // rank of A^0
  SparseMatrix power = a;
  while (ranks.back() != 0) {
    ranks.push_back(rank(power));
    if (ranks.size() > a.rows() + 2) throw DomainError("operator is not nilpotent");
    if (ranks.back() != 0) power = power * a;
  }
  std::vector<std::size_t> type;
  for (std::size_t t = ranks.size() - 1; t >= 1; --t) {
    const std::size_t ge_t = ranks[t - 1] - ranks[t];
    const std::size_t ge_t1 = t < ranks.size() - 1 ? ranks[t] - ranks[t + 1] : 0;
    for (std::size_t c = ge_t1; c < ge_t; ++c) type.push_back(t);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

SparseMatrix corner(const SparseMatrix& m, std::size_t from, std::size_t to) {
  std::vector<std::size_t> idx;
  for (std::size_t i = from; i < to; ++i) idx.push_back(i);
  return m.select_rows(idx).select_columns(idx);
}

}  // namespace

CharacteristicSequence characteristic_sequence(const SuperAlgebra& g,
                                               std::uint32_t trial_budget) {
  if (!central_sequences(g))
    throw DomainError("characteristic sequence requires a nilpotent algebra");
  const std::size_t d = g.dim(), de = g.even_dim();

  // derived subalgebra of the even part
  RowSpan derived(d, g.field());
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = i + 1; j < de; ++j) derived.insert(g.bracket(i, j));

  std::vector<SparseVector> candidates;
  for (std::size_t i = 0; i < de; ++i) {
    SparseVector e = SparseVector::unit(d, g.field(), i);
    if (!derived.contains(e)) candidates.push_back(std::move(e));
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::uint32_t t = 0; t < trial_budget; ++t) {
    SparseVector v(d, g.field());
    for (std::size_t i = 0; i < de; ++i) {
      int c = coeff(rng);
      if (c != 0) v.set(i, Scalar::integer(c, g.field()));
    }
    if (!v.is_zero() && !derived.contains(v)) candidates.push_back(std::move(v));
  }
  {
    SparseVector v(d, g.field());
    for (std::size_t i = 0; i < de; ++i)
      v.set(i, Scalar::integer(static_cast<long>(i + 1), g.field()));
    if (!v.is_zero() && !derived.contains(v)) candidates.push_back(std::move(v));
  }
  if (candidates.empty())
    throw DomainError("no even candidates outside the derived subalgebra");

  CharacteristicSequence best;
  for (const SparseVector& x : candidates) {
    SparseMatrix a = g.ad(x);
    std::vector<std::size_t> even_type = jordan_type(corner(a, 0, de));
    std::vector<std::size_t> odd_type = jordan_type(corner(a, de, d));
    if (even_type > best.even_part) best.even_part = std::move(even_type);
    if (odd_type > best.odd_part) best.odd_part = std::move(odd_type);
  }
  return best;
}

WeightGrading torus_weights(const SuperAlgebra& g, const std::vector<SparseVector>& torus) {
  const std::size_t d = g.dim();
  for (std::size_t a = 0; a < torus.size(); ++a)
    for (std::size_t b = a + 1; b < torus.size(); ++b)
      if (!g.bracket(torus[a], torus[b]).is_zero())
        throw DomainError("torus generators do not commute");

  WeightGrading out;
  out.weights.assign(d, std::vector<std::int64_t>(torus.size(), 0));
  for (std::size_t a = 0; a < torus.size(); ++a) {
    SparseMatrix m = g.ad(torus[a]);
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [c, v] : m.row(r).entries())
        if (r != c)
          throw DiagonalityError("torus generator " + std::to_string(a + 1) +
                                 " does not act diagonally: component " + g.basis(r).name +
                                 " appears in its action on " + g.basis(c).name);
    for (std::size_t k = 0; k < d; ++k) {
      Scalar ev = m.entry(k, k);
      if (g.field().is_rational() && !ev.is_integer())
        throw DomainError("non-integer torus weight " + ev.str());
      out.weights[k][a] = static_cast<std::int64_t>(ev.integer_value().get_si());
    }
  }

  out.additive = true;
  for (const auto& [key, value] : g.constants())
    for (const auto& [k, v] : value.entries())
      for (std::size_t a = 0; a < torus.size(); ++a)
        if (out.weights[k][a] != out.weights[key.first][a] + out.weights[key.second][a])
          out.additive = false;
  return out;
}

WeightGrading canonical_grading(const SuperAlgebra& g) {
  // support-based: solve weight(i) + weight(j) = weight(k) over Q
  const std::size_t d = g.dim();
  const Field q = Field::rationals();
  std::vector<SparseVector> rows;
  for (const auto& [key, value] : g.constants())
    for (const auto& [k, v] : value.entries()) {
      SparseVector row(d, q);
      row.add(key.first, Scalar::one(q));
      row.add(key.second, Scalar::one(q));
      row.add(k, -Scalar::one(q));
      if (!row.is_zero()) rows.push_back(std::move(row));
    }
  SparseMatrix m(rows.size(), d, q);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);

  WeightGrading out;
  out.additive = true;
  std::vector<SparseVector> kernel = kernel_basis(m);
  out.weights.assign(d, std::vector<std::int64_t>(kernel.size(), 0));
  for (std::size_t c = 0; c < kernel.size(); ++c) {
    // scale to a primitive integer vector with positive leading entry
    mpz_class lcm = 1;
    for (const auto& [i, v] : kernel[c].entries())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.rational_value().get_den().get_mpz_t());
    mpz_class gcd = 0;
    std::vector<std::pair<std::size_t, mpz_class>> ints;
    for (const auto& [i, v] : kernel[c].entries()) {
      mpz_class n = v.rational_value().get_num() * (lcm / v.rational_value().get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
      ints.emplace_back(i, std::move(n));
    }
    if (gcd == 0) gcd = 1;
    if (!ints.empty() && ints.front().second < 0) gcd = -gcd;
    for (auto& [i, n] : ints) out.weights[i][c] = static_cast<std::int64_t>(mpz_class(n / gcd).get_si());
  }
  return out;
}

WeightGrading family_grading(const SuperAlgebra& g) {
  if (!g.family()) throw DomainError("family grading needs a family-constructed algebra");
  const FamilyTag& tag = *g.family();
  WeightGrading out;
  out.additive = true;
  out.weights.assign(g.dim(), std::vector<std::int64_t>(1, 0));
  using K = FamilyTag::Kind;
  if (tag.kind == K::filiform || tag.kind == K::solvable_filiform) {
    const std::uint32_t n = tag.ns[0], m = tag.ms[0];
    const std::size_t tcount = tag.kind == K::solvable_filiform ? 3 : 0;
    for (std::uint32_t i = 1; i <= n; ++i) out.weights[i - 1][0] = i;
    for (std::uint32_t j = 1; j <= m; ++j) out.weights[n + tcount + j - 1][0] = n + j;
  } else {
    std::uint32_t N = 0, M = 0;
    for (std::uint32_t v : tag.ns) N += v;
    for (std::uint32_t v : tag.ms) M += v;
    const std::size_t nx = N + 1;
    const std::size_t tcount =
        tag.kind == K::solvable_nilpotent ? tag.ns.size() + 1 + tag.ms.size() : 0;
    for (std::uint32_t i = 1; i <= nx; ++i) out.weights[i - 1][0] = i;
    for (std::uint32_t j = 1; j <= M; ++j) out.weights[nx + tcount + j - 1][0] = nx + j;
  }
  return out;
}

SuperAlgebra with_field(const SuperAlgebra& g, Field target) {
  if (g.field() == target)
    return SuperAlgebra(target, g.basis(), g.constants(), g.family());
  if (!g.field().is_rational() || target.is_rational())
    throw DomainError("cannot change field " + g.field().str() + " -> " + target.str() +
                      " (only Q -> Fp reduction is defined)");
  const std::uint32_t p = target.characteristic();
  ConstantsMap reduced;
  for (const auto& [key, vec] : g.constants()) {
    SparseVector rv(vec.size(), target);
    for (const auto& [idx, c] : vec.entries()) {
      const mpq_class& q = c.rational_value();
      const unsigned long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
      const unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
      if (den == 0)
        throw DomainError("constant " + c.str() + " has denominator divisible by " +
                          std::to_string(p));
      const Scalar r = Scalar::residue(static_cast<long>(num), p) /
                       Scalar::residue(static_cast<long>(den), p);
      if (!r.is_zero()) rv.set(idx, r);
    }
    if (rv.nnz() > 0) reduced.emplace(key, std::move(rv));
  }
  return SuperAlgebra(target, g.basis(), reduced, g.family());
}

}  // namespace lsc
