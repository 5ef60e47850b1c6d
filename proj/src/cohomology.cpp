#include "lsc/cohomology.h"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "lsc/errors.h"

namespace lsc {

namespace {

// strictly increasing k-subsets of {0..n-1}, lexicographic
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    fn(c);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (c[i] != i + n - k) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        i = SIZE_MAX;
        break;
      }
    }
    if (i != SIZE_MAX) break;
  }
}

// non-decreasing k-multisets from {lo..hi-1}, lexicographic
template <typename Fn>
void for_each_multiset(std::size_t lo, std::size_t hi, std::size_t k, Fn fn) {
  if (k == 0) {
    fn(std::vector<std::size_t>{});
    return;
  }
  if (hi <= lo) return;
  std::vector<std::size_t> c(k, lo);
  for (;;) {
    fn(c);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (c[i] + 1 < hi) {
        const std::size_t v = c[i] + 1;
        for (std::size_t j = i; j < k; ++j) c[j] = v;
        i = SIZE_MAX;
        break;
      }
    }
    if (i != SIZE_MAX) break;
  }
}

std::vector<std::size_t> erase_at(const std::vector<std::size_t>& v, std::size_t i) {
  std::vector<std::size_t> out;
  out.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

std::vector<std::size_t> erase_at2(const std::vector<std::size_t>& v, std::size_t i,
                                   std::size_t j) {
  std::vector<std::size_t> out;
  out.reserve(v.size() - 2);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i && k != j) out.push_back(v[k]);
  return out;
}

std::size_t thread_count() {
  const char* e = std::getenv("LSC_THREADS");
  if (!e) return 1;
  const long v = std::strtol(e, nullptr, 10);
  return v > 1 ? static_cast<std::size_t>(v) : 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CochainSpace::CochainSpace(const GModule& m, std::size_t degree)
    : degree_(degree), field_(m.algebra().field()), module_dim_(m.dim()) {
  const SuperAlgebra& g = m.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) algebra_names_.push_back(g.basis(i).name);
  module_labels_ = m.labels();
  std::vector<Parity> mod_parity(m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t) mod_parity[t] = m.parity_of(t);

  const std::size_t de = g.even_dim(), d = g.dim();
  for (std::size_t q1 = 0; q1 <= degree; ++q1) {
    const std::size_t q0 = degree - q1;
    for_each_combination(de, q0, [&](const std::vector<std::size_t>& evens) {
      for_each_multiset(de, d, q1, [&](const std::vector<std::size_t>& odds) {
        tuple_base_[{evens, odds}] = elements_.size();
        for (std::size_t t = 0; t < module_dim_; ++t) {
          const bool odd = (q1 + (mod_parity[t] == Parity::odd ? 1 : 0)) % 2 == 1;
          elements_.push_back({evens, odds, t, odd ? Parity::odd : Parity::even});
        }
      });
    });
  }
}

std::size_t CochainSpace::tuple_base(const std::vector<std::size_t>& even_args,
                                     const std::vector<std::size_t>& odd_args) const {
  auto it = tuple_base_.find({even_args, odd_args});
  if (it == tuple_base_.end()) throw DomainError("no such cochain argument tuple");
  return it->second;
}

std::optional<std::pair<std::size_t, Scalar>> CochainSpace::locate_tuple(
    std::vector<std::size_t> even_args, std::vector<std::size_t> odd_args) const {
  if (even_args.size() + odd_args.size() != degree_)
    throw DimensionError("argument count does not match the cochain degree");
  Scalar sign = Scalar::one(field_);
  for (std::size_t i = 1; i < even_args.size(); ++i)
    for (std::size_t j = i; j > 0 && even_args[j - 1] >= even_args[j]; --j) {
      if (even_args[j - 1] == even_args[j]) return std::nullopt;
      std::swap(even_args[j - 1], even_args[j]);
      sign = -sign;
    }
  std::sort(odd_args.begin(), odd_args.end());
  return std::make_pair(tuple_base(even_args, odd_args), sign);
}

std::vector<std::size_t> CochainSpace::columns_of_parity(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].parity == p) out.push_back(i);
  return out;
}

std::string CochainSpace::element_name(std::size_t i) const {
  const CochainBasisElement& e = elements_[i];
  std::string s;
  for (std::size_t a : e.even_args) {
    if (!s.empty()) s += "^";
    s += algebra_names_[a];
  }
  bool first_odd = true;
  for (std::size_t a : e.odd_args) {
    if (!s.empty()) s += first_odd ? "^" : "·";
    first_odd = false;
    s += algebra_names_[a];
  }
  if (s.empty()) s = "1";
  return s + " -> " + module_labels_[e.target];
}

SparseMatrix differential_matrix(const GModule& m, std::size_t q) {
  const CochainSpace dom(m, q), cod(m, q + 1);
  const SuperAlgebra& g = m.algebra();
  const Field f = g.field();
  const std::size_t md = m.dim();
  const Scalar one = Scalar::one(f);
  SparseMatrix out(cod.dim(), dom.dim(), f);

  for (std::size_t rb = 0; rb < cod.dim(); rb += md) {
    const CochainBasisElement& row = cod.element(rb);
    const std::vector<std::size_t>& G = row.even_args;
    const std::vector<std::size_t>& H = row.odd_args;
    const std::size_t q0 = G.size();

    // a bracket component lands in the first even/odd argument slot; the
    // target index passes through untouched
    auto bracket_term = [&](const SparseVector& br, bool into_even,
                            std::vector<std::size_t> evens, std::vector<std::size_t> odds,
                            const Scalar& base) {
      for (const auto& [k, cv] : br.entries()) {
        std::vector<std::size_t> e2 = evens, o2 = odds;
        if (into_even)
          e2.insert(e2.begin(), k);
        else
          o2.insert(o2.begin(), k);
        auto loc = dom.locate_tuple(std::move(e2), std::move(o2));
        if (!loc) continue;  // repeated even argument
        const Scalar coeff = base * cv * loc->second;
        for (std::size_t a = 0; a < md; ++a) out.add(rb + a, loc->first + a, coeff);
      }
    };

    for (std::size_t s = 0; s + 1 < q0; ++s)  // [g_s, g_t], sign (-1)^{s+t-1} (1-based)
      for (std::size_t t = s + 1; t < q0; ++t) {
        SparseVector br = g.bracket(G[s], G[t]);
        if (br.is_zero()) continue;
        bracket_term(br, true, erase_at2(G, s, t), H, (s + t + 1) % 2 ? -one : one);
      }
    for (std::size_t s = 0; s < q0; ++s)  // [g_s, h_t], sign (-1)^{s-1} (1-based)
      for (std::size_t t = 0; t < H.size(); ++t) {
        SparseVector br = g.bracket(G[s], H[t]);
        if (br.is_zero()) continue;
        bracket_term(br, false, erase_at(G, s), erase_at(H, t), s % 2 ? -one : one);
      }
    for (std::size_t s = 0; s + 1 < H.size(); ++s)  // [h_s, h_t], sign +1
      for (std::size_t t = s + 1; t < H.size(); ++t) {
        SparseVector br = g.bracket(H[s], H[t]);
        if (br.is_zero()) continue;
        bracket_term(br, true, G, erase_at2(H, s, t), one);
      }

    auto action_term = [&](std::size_t gen, const std::vector<std::size_t>& evens,
                           const std::vector<std::size_t>& odds, const Scalar& base) {
      const std::size_t cb = dom.tuple_base(evens, odds);
      const SparseMatrix& rho = m.action(gen);
      for (std::size_t r = 0; r < rho.rows(); ++r)
        for (const auto& [a, v] : rho.row(r).entries()) out.add(rb + r, cb + a, base * v);
    };
    for (std::size_t s = 0; s < q0; ++s)  // rho(g_s), sign (-1)^s (1-based)
      action_term(G[s], erase_at(G, s), H, (s + 1) % 2 ? -one : one);
    const Scalar odd_base = q0 % 2 ? one : -one;  // rho(h_s), sign (-1)^{q0-1}
    for (std::size_t s = 0; s < H.size(); ++s)
      action_term(H[s], G, erase_at(H, s), odd_base);
  }
  return out;
}

namespace {

// scatter a vector over selected columns back to full coordinates
SparseVector scatter(const SparseVector& v, const std::vector<std::size_t>& cols,
                     std::size_t full_len) {
  SparseVector out(full_len, v.field());
  for (const auto& [i, x] : v.entries()) out.set(cols[i], x);
  return out;
}

// representatives of Z/B: kernel vectors of d restricted to `cols`, reduced
// against the span of the given coboundary columns
std::vector<SparseVector> representatives_of(const SparseMatrix& d_sub,
                                             const std::vector<std::size_t>& cols,
                                             std::size_t full_len, Field f,
                                             const std::vector<SparseVector>& coboundaries) {
  RowSpan image(full_len, f);
  for (const SparseVector& b : coboundaries) image.insert(b);
  RowSpan reps(full_len, f);
  for (const SparseVector& k : kernel_basis(d_sub)) reps.insert(image.reduce(scatter(k, cols, full_len)));
  return reps.rows();
}

// columns of a row-major matrix, restricted to the selected column set
std::vector<SparseVector> selected_columns_of(const SparseMatrix& m,
                                              const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> pos(m.cols(), SIZE_MAX);
  for (std::size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = i;
  std::vector<SparseVector> out(cols.size(), SparseVector(m.rows(), m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r).entries())
      if (pos[c] != SIZE_MAX) out[pos[c]].set(r, v);
  return out;
}

}  // namespace

CohomologyResult cohomology(const GModule& m, std::size_t q, const CohomologyOptions& opts) {
  CohomologyResult res;
  res.q = q;
  const CochainSpace dom(m, q);
  const SparseMatrix d_q = differential_matrix(m, q);
  std::optional<CochainSpace> prev;
  std::optional<SparseMatrix> d_prev;
  if (q >= 1) {
    prev.emplace(m, q - 1);
    d_prev = differential_matrix(m, q - 1);
  }

  for (Parity p : {Parity::even, Parity::odd}) {
    const std::vector<std::size_t> cols = dom.columns_of_parity(p);
    const SparseMatrix d_sub = d_q.select_columns(cols);
    const std::size_t z = cols.size() - rank(d_sub, opts.linalg);
    std::size_t b = 0;
    std::vector<std::size_t> pcols;
    if (q >= 1) {
      pcols = prev->columns_of_parity(p);
      b = rank(d_prev->select_columns(pcols), opts.linalg);
    }
    ParityDims& cochains = res.cochains;
    auto put = [&](ParityDims& dst, std::size_t v) {
      (p == Parity::even ? dst.even : dst.odd) = v;
    };
    put(cochains, cols.size());
    put(res.cocycles, z);
    put(res.coboundaries, b);
    put(res.cohomology, z - b);

    if (opts.representatives) {
      std::vector<SparseVector> cob;
      if (q >= 1) cob = selected_columns_of(*d_prev, pcols);
      auto reps = representatives_of(d_sub, cols, dom.dim(), m.algebra().field(), cob);
      assert(reps.size() == z - b);
      res.representatives[p == Parity::even ? 0 : 1] = std::move(reps);
    }
  }
  return res;
}

bool is_cocycle(const GModule& m, std::size_t q, const SparseVector& coords) {
  const SparseMatrix d_q = differential_matrix(m, q);
  if (coords.size() != d_q.cols()) throw DimensionError("cochain coordinate length mismatch");
  return d_q.apply(coords).is_zero();
}

std::optional<SparseVector> is_coboundary(const GModule& m, std::size_t q,
                                          const SparseVector& coords) {
  if (q == 0) throw ParameterError("coboundaries start at degree 1");
  if (!is_cocycle(m, q, coords)) throw DomainError("not a cocycle");
  const SparseMatrix d_prev = differential_matrix(m, q - 1);
  return solve(d_prev, coords);
}

namespace {

std::vector<std::int64_t> multi_weights(const CochainSpace& space,
                                        const std::vector<std::vector<std::int64_t>>& aw,
                                        const std::vector<std::vector<std::int64_t>>& mw,
                                        std::size_t character) {
  std::vector<std::int64_t> out(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const CochainBasisElement& e = space.element(i);
    std::int64_t w = mw[e.target][character];
    for (std::size_t a : e.even_args) w -= aw[a][character];
    for (std::size_t a : e.odd_args) w -= aw[a][character];
    out[i] = w;
  }
  return out;
}

void check_coupling(const SparseMatrix& d, const std::vector<std::vector<std::int64_t>>& row_w,
                    const std::vector<std::vector<std::int64_t>>& col_w) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (const auto& [c, v] : d.row(r).entries())
      if (row_w[r] != col_w[c])
        throw DomainError("the given weights do not block-diagonalize the differential");
}

std::vector<std::vector<std::int64_t>> per_index(const std::vector<std::int64_t>& single) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(single.size());
  for (std::int64_t v : single) out.push_back({v});
  return out;
}

std::vector<std::vector<std::int64_t>> column_weight_vectors(
    const CochainSpace& space, const std::vector<std::vector<std::int64_t>>& aw,
    const std::vector<std::vector<std::int64_t>>& mw, std::size_t chars) {
  std::vector<std::vector<std::int64_t>> out(space.dim(), std::vector<std::int64_t>(chars));
  for (std::size_t ch = 0; ch < chars; ++ch) {
    auto w = multi_weights(space, aw, mw, ch);
    for (std::size_t i = 0; i < space.dim(); ++i) out[i][ch] = w[i];
  }
  return out;
}

// over F_p the character values are eigenvalue residues, so cochain weights
// only grade the complex modulo p
void reduce_weights(std::vector<std::vector<std::int64_t>>& w, const Field& f) {
  if (f.is_rational()) return;
  const std::int64_t p = f.p;
  for (auto& row : w)
    for (std::int64_t& v : row) v = ((v % p) + p) % p;
}

}  // namespace

std::vector<WeightBlockResult> weight_blocks(const GModule& m, std::size_t q,
                                             const std::vector<std::int64_t>& algebra_weights,
                                             const std::vector<std::int64_t>& module_weights,
                                             const CohomologyOptions& opts) {
  if (algebra_weights.size() != m.algebra().dim() || module_weights.size() != m.dim())
    throw DimensionError("one weight per algebra/module basis vector required");
  const auto aw = per_index(algebra_weights);
  const auto mw = per_index(module_weights);

  const CochainSpace dom(m, q), cod(m, q + 1);
  const SparseMatrix d_q = differential_matrix(m, q);
  std::optional<CochainSpace> prev;
  std::optional<SparseMatrix> d_prev;
  if (q >= 1) {
    prev.emplace(m, q - 1);
    d_prev = differential_matrix(m, q - 1);
  }

  const auto col_w = column_weight_vectors(dom, aw, mw, 1);
  const auto row_w = column_weight_vectors(cod, aw, mw, 1);
  check_coupling(d_q, row_w, col_w);
  std::vector<std::vector<std::int64_t>> prev_w;
  if (q >= 1) {
    prev_w = column_weight_vectors(*prev, aw, mw, 1);
    check_coupling(*d_prev, col_w, prev_w);
  }

  std::map<std::int64_t, std::array<std::vector<std::size_t>, 2>> blocks;  // weight -> cols per parity
  for (std::size_t i = 0; i < dom.dim(); ++i)
    blocks[col_w[i][0]][dom.element(i).parity == Parity::even ? 0 : 1].push_back(i);
  std::map<std::int64_t, std::array<std::vector<std::size_t>, 2>> prev_blocks;
  if (q >= 1)
    for (std::size_t i = 0; i < prev->dim(); ++i)
      prev_blocks[prev_w[i][0]][prev->element(i).parity == Parity::even ? 0 : 1].push_back(i);

  std::vector<std::int64_t> weights;
  for (const auto& [w, cols] : blocks) weights.push_back(w);
  std::vector<WeightBlockResult> results(weights.size());

  auto run_block = [&](std::size_t bi) {
    const std::int64_t w = weights[bi];
    WeightBlockResult res;
    res.weight = w;
    for (Parity p : {Parity::even, Parity::odd}) {
      const std::size_t pi = p == Parity::even ? 0 : 1;
      const std::vector<std::size_t>& cols = blocks.at(w)[pi];
      const SparseMatrix d_sub = d_q.select_columns(cols);
      const std::size_t z = cols.size() - rank(d_sub, opts.linalg);
      std::size_t b = 0;
      std::vector<std::size_t> pcols;
      if (q >= 1) {
        auto it = prev_blocks.find(w);
        if (it != prev_blocks.end()) pcols = it->second[pi];
        if (!pcols.empty()) b = rank(d_prev->select_columns(pcols), opts.linalg);
      }
      auto put = [&](ParityDims& dst, std::size_t v) {
        (p == Parity::even ? dst.even : dst.odd) = v;
      };
      put(res.cochains, cols.size());
      put(res.cocycles, z);
      put(res.coboundaries, b);
      put(res.cohomology, z - b);
      if (opts.representatives) {
        std::vector<SparseVector> cob;
        if (!pcols.empty()) cob = selected_columns_of(*d_prev, pcols);
        auto reps = representatives_of(d_sub, cols, dom.dim(), m.algebra().field(), cob);
        assert(reps.size() == z - b);
        res.representatives[pi] = std::move(reps);
      }
    }
    results[bi] = std::move(res);
  };

  const std::size_t threads = std::min(thread_count(), weights.size() ? weights.size() : 1);
  if (threads <= 1) {
    for (std::size_t i = 0; i < weights.size(); ++i) run_block(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= weights.size()) return;
          run_block(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  return results;
}

std::vector<WeightBlockResult> weight_blocks(const GModule& m, std::size_t q,
                                             const WeightGrading& grading, std::size_t character,
                                             const CohomologyOptions& opts) {
  if (m.dim() != m.algebra().dim())
    throw DimensionError("grading-based blocks need module dim equal to algebra dim");
  if (character >= grading.characters()) throw ParameterError("no such grading character");
  std::vector<std::int64_t> w(m.algebra().dim());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = grading.weights[i][character];
  return weight_blocks(m, q, w, w, opts);
}

InvariantDims invariant_cohomology(const GModule& m, std::size_t q,
                                   const std::vector<std::vector<std::int64_t>>& algebra_weights,
                                   const std::vector<std::vector<std::int64_t>>& module_weights,
                                   const CohomologyOptions& opts) {
  if (algebra_weights.size() != m.algebra().dim() || module_weights.size() != m.dim())
    throw DimensionError("one weight vector per algebra/module basis vector required");
  const std::size_t chars =
      algebra_weights.empty() ? (module_weights.empty() ? 0 : module_weights[0].size())
                              : algebra_weights[0].size();

  const CochainSpace dom(m, q), cod(m, q + 1);
  const SparseMatrix d_q = differential_matrix(m, q);
  std::optional<CochainSpace> prev;
  std::optional<SparseMatrix> d_prev;
  if (q >= 1) {
    prev.emplace(m, q - 1);
    d_prev = differential_matrix(m, q - 1);
  }

  auto col_w = column_weight_vectors(dom, algebra_weights, module_weights, chars);
  auto row_w = column_weight_vectors(cod, algebra_weights, module_weights, chars);
  reduce_weights(col_w, m.algebra().field());
  reduce_weights(row_w, m.algebra().field());
  check_coupling(d_q, row_w, col_w);
  std::vector<std::vector<std::int64_t>> prev_w;
  if (q >= 1) {
    prev_w = column_weight_vectors(*prev, algebra_weights, module_weights, chars);
    reduce_weights(prev_w, m.algebra().field());
    check_coupling(*d_prev, col_w, prev_w);
  }

  const std::vector<std::int64_t> zero(chars, 0);
  InvariantDims res;
  res.q = q;
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < dom.dim(); ++i)
      if (col_w[i] == zero && dom.element(i).parity == p) cols.push_back(i);
    const std::size_t z = cols.size() - rank(d_q.select_columns(cols), opts.linalg);
    std::size_t b = 0;
    if (q >= 1) {
      std::vector<std::size_t> pcols;
      for (std::size_t i = 0; i < prev->dim(); ++i)
        if (prev_w[i] == zero && prev->element(i).parity == p) pcols.push_back(i);
      b = rank(d_prev->select_columns(pcols), opts.linalg);
    }
    (p == Parity::even ? res.cochains.even : res.cochains.odd) = cols.size();
    (p == Parity::even ? res.cohomology.even : res.cohomology.odd) = z - b;
  }
  return res;
}

HochschildSerreCheck hochschild_serre_check(const SuperAlgebra& r,
                                            const std::vector<std::size_t>& nilradical_indices,
                                            const std::vector<std::size_t>& torus_indices,
                                            std::size_t q, const CohomologyOptions& opts) {
  std::set<std::size_t> seen(nilradical_indices.begin(), nilradical_indices.end());
  for (std::size_t t : torus_indices)
    if (!seen.insert(t).second)
      throw ParameterError("nilradical and torus indices must be disjoint");
  if (seen.size() != r.dim())
    throw ParameterError("nilradical and torus indices must cover the whole algebra");

  HochschildSerreCheck out;
  out.q = q;
  out.direct = cohomology(GModule::adjoint(r), q, opts).cohomology;

  SubalgebraModule s = restrict_to_subalgebra(r, nilradical_indices);
  const std::size_t chars = torus_indices.size();

  std::vector<std::vector<std::int64_t>> mod_w(r.dim(), std::vector<std::int64_t>(chars, 0));
  for (std::size_t a = 0; a < chars; ++a) {
    const SparseMatrix ad_t = r.ad(torus_indices[a]);
    for (std::size_t row = 0; row < r.dim(); ++row)
      for (const auto& [c, v] : ad_t.row(row).entries())
        if (row != c)
          throw DiagonalityError("torus generator " + r.basis(torus_indices[a]).name +
                                 " does not act diagonally");
    for (std::size_t k = 0; k < r.dim(); ++k) {
      const Scalar ev = ad_t.entry(k, k);
      if (r.field().is_rational() && !ev.is_integer())
        throw DomainError("non-integer torus weight " + ev.str());
      mod_w[k][a] = static_cast<std::int64_t>(ev.integer_value().get_si());
    }
  }
  std::vector<std::vector<std::int64_t>> alg_w;
  alg_w.reserve(nilradical_indices.size());
  std::vector<std::size_t> sorted_n = nilradical_indices;
  std::sort(sorted_n.begin(), sorted_n.end());
  for (std::size_t idx : sorted_n) alg_w.push_back(mod_w[idx]);

  out.invariant_dims.resize(q + 1);
  for (std::size_t b = 0; b <= q; ++b)
    out.invariant_dims[b] =
        invariant_cohomology(s.ambient, b, alg_w, mod_w, opts).cohomology;

  for (std::size_t a = 0; a <= q; ++a) {
    const std::uint64_t coeff = binomial(chars, a);
    if (coeff == 0) continue;
    out.reconstructed.even += coeff * out.invariant_dims[q - a].even;
    out.reconstructed.odd += coeff * out.invariant_dims[q - a].odd;
  }
  out.match = out.reconstructed == out.direct;
  return out;
}

AbcSplit abc_split(const GModule& m, Parity parity, const CohomologyOptions& opts) {
  const CochainSpace dom(m, 2);
  const SparseMatrix d2 = differential_matrix(m, 2);
  std::array<std::vector<std::size_t>, 3> by_q1;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < dom.dim(); ++i) {
    if (dom.element(i).parity != parity) continue;
    by_q1[dom.element(i).odd_args.size()].push_back(i);
    all.push_back(i);
  }
  auto zdim = [&](const std::vector<std::size_t>& cols) {
    return cols.size() - rank(d2.select_columns(cols), opts.linalg);
  };
  AbcSplit res;
  res.parity = parity;
  res.a = zdim(by_q1[0]);
  res.b = zdim(by_q1[1]);
  res.c = zdim(by_q1[2]);
  res.z = zdim(all);
  res.additive = res.a + res.b + res.c == res.z;
  return res;
}

}  // namespace lsc
