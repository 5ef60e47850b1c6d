#include "lsc/restricted.h"

#include <algorithm>

#include "lsc/errors.h"
#include "lsc/linalg.h"

namespace lsc {

namespace {

void require_prime_field(const SuperAlgebra& g) {
  if (g.field().is_rational())
    throw FieldMismatchError("p-th power structures need a prime field");
}

void require_even_support(const SuperAlgebra& g, const SparseVector& v, const char* what) {
  if (v.size() != g.dim()) throw DimensionError("element length mismatch");
  for (const auto& [i, x] : v.entries())
    if (g.parity(i) != Parity::even) throw DomainError(std::string(what) + " must be even");
}

// columns are vec(ad e_i) for the even basis; rows are matrix slots r*dim + c
SparseMatrix ad_system(const SuperAlgebra& g) {
  const std::size_t d = g.dim();
  SparseMatrix sys(d * d, g.even_dim(), g.field());
  for (std::size_t i = 0; i < g.even_dim(); ++i) {
    const SparseMatrix a = g.ad(i);
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [c, v] : a.row(r).entries()) sys.set(r * d + c, i, v);
  }
  return sys;
}

SparseVector vectorize(const SparseMatrix& m) {
  SparseVector out(m.rows() * m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r).entries()) out.set(r * m.cols() + c, v);
  return out;
}

std::string format_element(const SuperAlgebra& g, const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [i, x] : v.entries()) {
    if (!s.empty()) s += " + ";
    if (!x.is_one()) s += x.str() + "·";
    s += g.basis(i).name;
  }
  return s;
}

std::vector<std::string> family_probes(const SuperAlgebra& g, std::size_t j,
                                       const SparseMatrix& ad_j_p, std::uint32_t p) {
  std::vector<std::string> out;
  if (!g.family() || g.family()->kind != FamilyTag::Kind::solvable_filiform) return out;
  for (const char* name : {"T1", "X1", "X2", "Y1"}) {
    auto idx = g.index_of(name);
    if (!idx) continue;
    SparseVector image = ad_j_p.apply(SparseVector::unit(g.dim(), g.field(), *idx));
    out.push_back("[f," + std::string(name) + "] must equal ((ad " + g.basis(j).name +
                  ")^" + std::to_string(p) + ")(" + name + ") = " + format_element(g, image));
  }
  return out;
}

}  // namespace

RestrictednessResult p_map_exists(const SuperAlgebra& g) {
  require_prime_field(g);
  const std::uint32_t p = g.field().characteristic();
  const SparseMatrix sys = ad_system(g);
  const bool unique = kernel_basis(sys).empty();

  PMap pmap;
  pmap.p = p;
  pmap.unique = unique;
  for (std::size_t j = 0; j < g.even_dim(); ++j) {
    const SparseMatrix target = g.ad(j).pow(p);
    auto outcome = solve_or_certificate(sys, vectorize(target));
    if (auto* cert = std::get_if<InconsistencyCertificate>(&outcome)) {
      ObstructionWitness w;
      w.basis_index = j;
      w.functional = std::move(cert->functional);
      w.value = std::move(cert->value);
      w.probes = family_probes(g, j, target, p);
      return w;
    }
    const SparseVector& sol = std::get<SparseVector>(outcome);
    SparseVector image(g.dim(), g.field());
    for (const auto& [i, v] : sol.entries()) image.set(i, v);
    pmap.images.push_back(std::move(image));
  }
  return pmap;
}

bool verify_sr1(const SuperAlgebra& g, const PMap& pmap) {
  require_prime_field(g);
  if (pmap.p != g.field().characteristic())
    throw FieldMismatchError("p-map prime differs from the field characteristic");
  if (pmap.images.size() != g.even_dim()) throw DimensionError("one image per even basis vector");
  for (std::size_t j = 0; j < g.even_dim(); ++j) {
    for (const auto& [i, v] : pmap.images[j].entries())
      if (g.parity(i) != Parity::even) return false;
    if (g.ad(pmap.images[j]) != g.ad(j).pow(pmap.p)) return false;
  }
  return true;
}

std::vector<SparseVector> sr3_coefficients(const SuperAlgebra& g, const SparseVector& a,
                                           const SparseVector& b) {
  require_prime_field(g);
  require_even_support(g, a, "sr3 argument a");
  require_even_support(g, b, "sr3 argument b");
  const std::uint32_t p = g.field().characteristic();
  const Field f = g.field();

  // (ad_{la+b})^{p-1}(a) has degree <= p-2 in l ([a,a] = 0 kills the top term)
  std::vector<SparseVector> values;
  std::vector<Scalar> points;
  for (std::uint32_t l = 0; l + 1 <= p - 1; ++l) {
    SparseVector x = b;
    x.add_scaled(a, Scalar::integer(l, f));
    SparseVector w = a;
    for (std::uint32_t k = 0; k + 1 < p; ++k) w = g.bracket(x, w);
    values.push_back(std::move(w));
    points.push_back(Scalar::integer(l, f));
  }

  // interpolate each coordinate; coefficient of l^{i-1} equals i * s_i
  std::vector<SparseVector> s(p - 1, SparseVector(g.dim(), f));
  for (std::size_t k = 0; k < g.dim(); ++k) {
    bool any = false;
    for (const SparseVector& v : values)
      if (!v.at(k).is_zero()) any = true;
    if (!any) continue;
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (std::size_t i = 0; i < values.size(); ++i) pts.emplace_back(points[i], values[i].at(k));
    const std::vector<Scalar> coeffs = interpolate_polynomial(pts);
    for (std::size_t i = 1; i <= coeffs.size(); ++i) {
      const Scalar si = coeffs[i - 1] / Scalar::integer(static_cast<long>(i), f);
      if (!si.is_zero()) s[i - 1].set(k, si);
    }
  }
  return s;
}

SparseVector p_map_extend(const SuperAlgebra& g, const PMap& pmap, const SparseVector& x) {
  require_prime_field(g);
  require_even_support(g, x, "p-map argument");
  if (x.is_zero()) return SparseVector(g.dim(), g.field());

  const auto& [i, alpha] = x.entries().front();
  SparseVector head(g.dim(), g.field());
  head.set(i, alpha);
  SparseVector rest = x;
  rest.set(i, Scalar::zero(g.field()));

  SparseVector out = alpha.pow(pmap.p) * pmap.images[i];  // (alpha e_i)^[p], semilinearity
  if (rest.is_zero()) return out;
  out += p_map_extend(g, pmap, rest);
  for (const SparseVector& si : sr3_coefficients(g, head, rest)) out += si;
  return out;
}

bool verify_sr3(const SuperAlgebra& g, const PMap& pmap, const SparseVector& a,
                const SparseVector& b) {
  require_even_support(g, a, "sr3 argument a");
  require_even_support(g, b, "sr3 argument b");
  SparseVector lhs = p_map_extend(g, pmap, a + b);
  SparseVector rhs = p_map_extend(g, pmap, a) + p_map_extend(g, pmap, b);
  for (const SparseVector& si : sr3_coefficients(g, a, b)) rhs += si;
  return g.ad(lhs) == g.ad(rhs);
}

SparseVector two_p_map(const SuperAlgebra& g, const PMap& pmap, const SparseVector& y) {
  require_prime_field(g);
  if (y.size() != g.dim()) throw DimensionError("element length mismatch");
  for (const auto& [i, x] : y.entries())
    if (g.parity(i) != Parity::odd) throw DomainError("squaring argument must be odd");
  SparseVector sq = Scalar::integer(2, g.field()).inverse() * g.bracket(y, y);
  return p_map_extend(g, pmap, sq);
}

std::vector<BoundaryScanEntry> theorem_boundary_scan(std::uint32_t p, std::uint32_t n_min,
                                                     std::uint32_t n_max, std::uint32_t m_min,
                                                     std::uint32_t m_max) {
  const Field f = Field::prime(p);
  std::vector<BoundaryScanEntry> table;
  for (std::uint32_t n = n_min; n <= n_max; ++n)
    for (std::uint32_t m = m_min; m <= m_max; ++m) {
      const SuperAlgebra g = solvable_model_filiform(n, m, f);
      BoundaryScanEntry e;
      e.n = n;
      e.m = m;
      e.expected = m <= p && n <= p + 1;
      auto outcome = p_map_exists(g);
      if (auto* pmap = std::get_if<PMap>(&outcome)) {
        e.restricted = true;
        e.unique = pmap->unique;
        e.matches_known_form = true;
        for (std::uint32_t j = 0; j < n && e.matches_known_form; ++j)
          if (!pmap->images[j].is_zero()) e.matches_known_form = false;
        for (std::uint32_t t = 0; t < 3 && e.matches_known_form; ++t)
          if (pmap->images[n + t] != SparseVector::unit(g.dim(), f, n + t))
            e.matches_known_form = false;
      }
      table.push_back(e);
    }
  return table;
}

}  // namespace lsc
