#include "a2ext/linalg.hpp"

#include <numeric>
#include <string>

namespace a2ext {

namespace {

// Below this many rows the OpenMP region costs more than it saves.
constexpr std::size_t kParallelRowThreshold = 64;

template <ExactField F>
RrefResult<F> eliminate(KMatrix<F> m, std::size_t pivot_cols, const std::vector<std::size_t>& order, bool parallel) {
  const F& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  const std::size_t candidates = order.empty() ? pivot_cols : order.size();
  for (std::size_t step = 0; step < candidates && r < rows; ++step) {
    const std::size_t c = order.empty() ? step : order[step];
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr == rows) continue;
    m.swap_rows(r, pr);
    {
      auto* prow = m.row(r);
      if (!f.is_one(prow[c])) {
        const auto inv = f.inv(prow[c]);
        for (std::size_t j = 0; j < cols; ++j)
          if (!f.is_zero(prow[j])) prow[j] = f.mul(prow[j], inv);
      }
    }
    nz.clear();
    {
      const auto* prow = m.row(r);
      for (std::size_t j = 0; j < cols; ++j)
        if (!f.is_zero(prow[j])) nz.push_back(j);
    }
    const auto* prow = m.row(r);
    const long long n_rows = static_cast<long long>(rows);
    const long long pivot_row = static_cast<long long>(r);
#pragma omp parallel for schedule(static) if (parallel && rows >= kParallelRowThreshold)
    for (long long i = 0; i < n_rows; ++i) {
      if (i == pivot_row) continue;
      auto* row = m.row(static_cast<std::size_t>(i));
      if (f.is_zero(row[c])) continue;
      const auto factor = row[c];
      for (std::size_t j : nz) row[j] = f.sub_mul(row[j], factor, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

// ---------------------------------------------------------------------------
// KMatrix

template <ExactField F>
KMatrix<F> KMatrix<F>::transpose() const {
  KMatrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

template <ExactField F>
bool KMatrix<F>::is_zero() const {
  for (const auto& e : data_)
    if (!field_->is_zero(e)) return false;
  return true;
}

template <ExactField F>
KMatrix<F> KMatrix<F>::operator*(const KMatrix& other) const {
  if (cols_ != other.rows_) throw LinalgError(LinalgError::Kind::DimensionMismatch, "matrix product shape mismatch");
  KMatrix out(*field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (field_->is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other.at(k, j);
        if (!field_->is_zero(b)) out.at(i, j) = field_->add(out.at(i, j), field_->mul(a, b));
      }
    }
  return out;
}

template <ExactField F>
std::vector<typename F::Elem> KMatrix<F>::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw LinalgError(LinalgError::Kind::DimensionMismatch, "apply: vector length");
  std::vector<Elem> out(rows_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_->is_zero(at(i, j)) && !field_->is_zero(v[j])) out[i] = field_->add(out[i], field_->mul(at(i, j), v[j]));
  return out;
}

template <ExactField F>
std::vector<typename F::Elem> KMatrix<F>::apply_left(const std::vector<Elem>& v) const {
  if (v.size() != rows_) throw LinalgError(LinalgError::Kind::DimensionMismatch, "apply_left: vector length");
  std::vector<Elem> out(cols_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field_->is_zero(v[i])) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_->is_zero(at(i, j))) out[j] = field_->add(out[j], field_->mul(v[i], at(i, j)));
  }
  return out;
}

template <ExactField F>
KMatrix<F> KMatrix<F>::row_slice(std::size_t first, std::size_t count) const {
  KMatrix out(*field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
  return out;
}

template <ExactField F>
void KMatrix<F>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

// ---------------------------------------------------------------------------
// Elimination

template <ExactField F>
RrefResult<F> rref(KMatrix<F> m) {
  const auto cols = m.cols();
  return eliminate(std::move(m), cols, {}, true);
}

template <ExactField F>
RrefResult<F> rref_serial(KMatrix<F> m) {
  const auto cols = m.cols();
  return eliminate(std::move(m), cols, {}, false);
}

template <ExactField F>
RrefResult<F> rref_partial(KMatrix<F> m, std::size_t pivot_cols, const std::vector<std::size_t>& column_order,
                           bool parallel) {
  return eliminate(std::move(m), pivot_cols, column_order, parallel);
}

template <ExactField F>
std::size_t rank(const KMatrix<F>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

// ---------------------------------------------------------------------------
// Subspaces

template <ExactField F>
Subspace<F> Subspace<F>::row_span(const KMatrix<F>& rows) {
  auto res = rref(rows);
  auto basis = res.reduced.row_slice(0, res.pivots.size());
  return Subspace(std::move(basis), std::move(res.pivots));
}

template <ExactField F>
std::vector<typename F::Elem> Subspace<F>::reduce(std::vector<Elem> v) const {
  if (v.size() != ambient()) throw LinalgError(LinalgError::Kind::DimensionMismatch, "subspace: vector length");
  const F& f = basis_.field();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const auto c = v[pivots_[k]];
    if (f.is_zero(c)) continue;
    const auto* row = basis_.row(k);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!f.is_zero(row[j])) v[j] = f.sub_mul(v[j], c, row[j]);
  }
  return v;
}

template <ExactField F>
bool Subspace<F>::contains(const std::vector<Elem>& v) const {
  const F& f = basis_.field();
  auto r = reduce(v);
  for (const auto& x : r)
    if (!f.is_zero(x)) return false;
  return true;
}

template <ExactField F>
Subspace<F> kernel(const KMatrix<F>& m) {
  const F& f = m.field();
  const auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  KMatrix<F> basis(f, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis.at(k, fc) = f.one();
    for (std::size_t p = 0; p < res.pivots.size(); ++p) basis.at(k, res.pivots[p]) = f.neg(res.reduced.at(p, fc));
  }
  return Subspace<F>::row_span(basis);
}

template <ExactField F>
std::optional<std::vector<typename F::Elem>> solve(const KMatrix<F>& m, const std::vector<typename F::Elem>& b) {
  const F& f = m.field();
  if (b.size() != m.rows()) throw LinalgError(LinalgError::Kind::DimensionMismatch, "solve: right-hand side length");
  KMatrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto res = rref_partial(std::move(aug), m.cols(), {}, true);
  for (std::size_t i = res.pivots.size(); i < m.rows(); ++i)
    if (!f.is_zero(res.reduced.at(i, m.cols()))) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols(), f.zero());
  for (std::size_t k = 0; k < res.pivots.size(); ++k) x[res.pivots[k]] = res.reduced.at(k, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Quotients

template <ExactField F>
QuotientCoordinates<F>::QuotientCoordinates(const Subspace<F>& sub, const Subspace<F>& total)
    : complement_(total.basis().field(), 0, total.ambient()),
      stacked_t_(total.basis().field(), total.ambient(), 0),
      sub_dim_(sub.dim()) {
  const F& f = total.basis().field();
  const std::size_t n = total.ambient();
  if (sub.ambient() != n) throw LinalgError(LinalgError::Kind::DimensionMismatch, "quotient: ambient mismatch");
  for (std::size_t i = 0; i < sub.dim(); ++i)
    if (!total.contains(sub.basis().row_vector(i)))
      throw LinalgError(LinalgError::Kind::DimensionMismatch, "quotient: subspace not contained");

  std::vector<std::vector<typename F::Elem>> chosen;
  Subspace<F> acc = sub;
  for (std::size_t i = 0; i < total.dim(); ++i) {
    auto t = total.basis().row_vector(i);
    if (acc.contains(t)) continue;
    chosen.push_back(t);
    KMatrix<F> rows(f, acc.dim() + 1, n);
    for (std::size_t r = 0; r < acc.dim(); ++r)
      for (std::size_t j = 0; j < n; ++j) rows.at(r, j) = acc.basis().at(r, j);
    for (std::size_t j = 0; j < n; ++j) rows.at(acc.dim(), j) = t[j];
    acc = Subspace<F>::row_span(rows);
  }
  complement_ = KMatrix<F>(f, chosen.size(), n);
  for (std::size_t r = 0; r < chosen.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) complement_.at(r, j) = chosen[r][j];
  stacked_t_ = KMatrix<F>(f, n, sub_dim_ + chosen.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < sub_dim_; ++r) stacked_t_.at(j, r) = sub.basis().at(r, j);
    for (std::size_t r = 0; r < chosen.size(); ++r) stacked_t_.at(j, sub_dim_ + r) = chosen[r][j];
  }
}

template <ExactField F>
std::vector<typename F::Elem> QuotientCoordinates<F>::coordinates(const std::vector<Elem>& v) const {
  auto x = solve(stacked_t_, v);
  if (!x) throw LinalgError(LinalgError::Kind::NoSolution, "quotient: vector outside the total space");
  return {x->begin() + static_cast<std::ptrdiff_t>(sub_dim_), x->end()};
}

// ---------------------------------------------------------------------------
// Sparse

template <ExactField F>
std::size_t SparseMatrix<F>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

template <ExactField F>
KMatrix<F> SparseMatrix<F>::to_dense() const {
  KMatrix<F> d(*field_, rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i]) d.at(i, c) = v;
  return d;
}

template <ExactField F>
BlockedSolver<F>::BlockedSolver(const SparseMatrix<F>& a, PivotOrder order)
    : field_(&a.field()), rows_(a.rows()), cols_(a.cols()) {
  const F& f = a.field();
  auto structure = BlockStructure::of(a);
  zero_cols_ = std::move(structure.zero_cols);
  const std::size_t nb = structure.blocks.size();
  std::vector<std::optional<Factor>> factors(nb);

#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < static_cast<long long>(nb); ++b) {
    const auto& blk = structure.blocks[static_cast<std::size_t>(b)];
    const std::size_t nv = blk.rows.size(), ne = blk.cols.size();
    // local equation index of each global column
    std::vector<std::pair<std::uint32_t, std::uint32_t>> col_local(ne);
    for (std::size_t k = 0; k < ne; ++k) col_local[k] = {blk.cols[k], static_cast<std::uint32_t>(k)};
    auto local_col = [&](std::uint32_t c) {
      auto it = std::lower_bound(col_local.begin(), col_local.end(), std::make_pair(c, std::uint32_t{0}));
      return it->second;
    };
    KMatrix<F> m(f, ne, nv + ne);
    for (std::size_t v = 0; v < nv; ++v)
      for (const auto& [c, val] : a.row(blk.rows[v])) m.at(local_col(c), v) = val;
    for (std::size_t e = 0; e < ne; ++e) m.at(e, nv + e) = f.one();
    std::vector<std::size_t> col_order(nv);
    std::iota(col_order.begin(), col_order.end(), std::size_t{0});
    if (order == PivotOrder::Reverse) std::reverse(col_order.begin(), col_order.end());
    auto res = rref_partial(std::move(m), nv, col_order, false);
    Factor fac{blk.rows, blk.cols, KMatrix<F>(f, ne, ne), std::move(res.pivots)};
    for (std::size_t i = 0; i < ne; ++i)
      for (std::size_t j = 0; j < ne; ++j) fac.transform.at(i, j) = res.reduced.at(i, nv + j);
    factors[static_cast<std::size_t>(b)] = std::move(fac);
  }
  factors_.reserve(nb);
  for (auto& fac : factors) {
    rank_ += fac->pivot_vars.size();
    factors_.push_back(std::move(*fac));
  }
}

template <ExactField F>
std::optional<std::vector<typename F::Elem>> BlockedSolver<F>::solve(const std::vector<Elem>& b) const {
  const F& f = *field_;
  if (b.size() != cols_) throw LinalgError(LinalgError::Kind::DimensionMismatch, "blocked solve: right-hand side length");
  for (auto c : zero_cols_)
    if (!f.is_zero(b[c])) return std::nullopt;
  std::vector<Elem> x(rows_, f.zero());
  std::vector<Elem> local;
  for (const auto& fac : factors_) {
    const std::size_t ne = fac.eqs.size();
    local.assign(ne, f.zero());
    bool any = false;
    for (std::size_t e = 0; e < ne; ++e) {
      local[e] = b[fac.eqs[e]];
      any = any || !f.is_zero(local[e]);
    }
    if (!any) continue;
    const auto t = fac.transform.apply(local);
    for (std::size_t k = fac.pivot_vars.size(); k < ne; ++k)
      if (!f.is_zero(t[k])) return std::nullopt;
    for (std::size_t k = 0; k < fac.pivot_vars.size(); ++k) x[fac.vars[fac.pivot_vars[k]]] = t[k];
  }
  return x;
}

template <ExactField F>
std::size_t blocked_rank(const SparseMatrix<F>& a) {
  const F& f = a.field();
  const auto structure = BlockStructure::of(a);
  std::size_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long long b = 0; b < static_cast<long long>(structure.blocks.size()); ++b) {
    const auto& blk = structure.blocks[static_cast<std::size_t>(b)];
    KMatrix<F> m(f, blk.rows.size(), blk.cols.size());
    for (std::size_t r = 0; r < blk.rows.size(); ++r) {
      std::size_t k = 0;
      for (const auto& [c, val] : a.row(blk.rows[r])) {
        while (blk.cols[k] != c) ++k;
        m.at(r, k) = val;
      }
    }
    total += rref_partial(std::move(m), blk.cols.size(), {}, false).pivots.size();
  }
  return total;
}

// ---------------------------------------------------------------------------

#define A2EXT_INSTANTIATE_LINALG(F)                                                                          \
  template class KMatrix<F>;                                                                                 \
  template class Subspace<F>;                                                                                \
  template class QuotientCoordinates<F>;                                                                     \
  template class SparseMatrix<F>;                                                                            \
  template class BlockedSolver<F>;                                                                           \
  template RrefResult<F> rref<F>(KMatrix<F>);                                                                \
  template RrefResult<F> rref_serial<F>(KMatrix<F>);                                                         \
  template RrefResult<F> rref_partial<F>(KMatrix<F>, std::size_t, const std::vector<std::size_t>&, bool);     \
  template std::size_t rank<F>(const KMatrix<F>&);                                                           \
  template Subspace<F> kernel<F>(const KMatrix<F>&);                                                         \
  template std::optional<std::vector<F::Elem>> solve<F>(const KMatrix<F>&, const std::vector<F::Elem>&);     \
  template std::size_t blocked_rank<F>(const SparseMatrix<F>&);

A2EXT_INSTANTIATE_LINALG(PrimeField)
A2EXT_INSTANTIATE_LINALG(CyclotomicField)

}  // namespace a2ext
