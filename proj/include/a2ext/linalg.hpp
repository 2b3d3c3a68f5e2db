#pragma once

// Exact linear algebra over an ExactField.
//
// Dense KMatrix with reduced row echelon form (an OpenMP kernel and a
// serial reference that must agree bit for bit), kernels, canonical
// solving and subspace bookkeeping. SparseMatrix + BlockedSolver handle
// the large flattened module maps: they split the matrix into connected
// blocks and run dense elimination per block.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "a2ext/scalars.hpp"

namespace a2ext {

class LinalgError : public std::runtime_error {
 public:
  enum class Kind { NoSolution, DimensionMismatch };
  LinalgError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

template <ExactField F>
class KMatrix {
 public:
  using Elem = typename F::Elem;

  KMatrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static KMatrix identity(const F& field, std::size_t n) {
    KMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem* row(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::vector<Elem> row_vector(std::size_t i) const { return {row(i), row(i) + cols_}; }

  KMatrix transpose() const;
  bool is_zero() const;
  KMatrix operator*(const KMatrix& other) const;
  /// M * v for a column vector v of length cols().
  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  /// v * M for a row vector v of length rows().
  std::vector<Elem> apply_left(const std::vector<Elem>& v) const;

  /// Rows [first, first+count) as a new matrix.
  KMatrix row_slice(std::size_t first, std::size_t count) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_->equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

 private:
  const F* field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

template <ExactField F>
struct RrefResult {
  KMatrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

/// Reduced row echelon form: leftmost pivot, topmost candidate row.
/// Row updates inside each pivot step run under OpenMP.
template <ExactField F>
RrefResult<F> rref(KMatrix<F> m);

/// Same algorithm without threads; the reference for rref.
template <ExactField F>
RrefResult<F> rref_serial(KMatrix<F> m);

/// Eliminates only within columns [0, pivot_cols); the remaining columns ride
/// along (used for transform tracking). `column_order` lists the candidate
/// pivot columns in search order; empty means 0..pivot_cols-1.
template <ExactField F>
RrefResult<F> rref_partial(KMatrix<F> m, std::size_t pivot_cols, const std::vector<std::size_t>& column_order,
                           bool parallel);

template <ExactField F>
std::size_t rank(const KMatrix<F>& m);

/// Row space in reduced echelon form.
template <ExactField F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace(const F& field, std::size_t ambient) : basis_(field, 0, ambient) {}
  /// Span of the rows of `rows`.
  static Subspace row_span(const KMatrix<F>& rows);

  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const KMatrix<F>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  std::vector<Elem> reduce(std::vector<Elem> v) const;
  bool contains(const std::vector<Elem>& v) const;

 private:
  Subspace(KMatrix<F> basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  KMatrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : M x = 0}, basis one vector per free column, in echelon form.
template <ExactField F>
Subspace<F> kernel(const KMatrix<F>& m);

/// Canonical solution of M x = b (free variables zero), or nullopt.
/// Throws LinalgError(DimensionMismatch) if b has the wrong length.
template <ExactField F>
std::optional<std::vector<typename F::Elem>> solve(const KMatrix<F>& m, const std::vector<typename F::Elem>& b);

template <ExactField F>
bool membership(const Subspace<F>& s, const std::vector<typename F::Elem>& v) {
  return s.contains(v);
}

/// Coordinates on T/S for S contained in T: a fixed complement basis of S in
/// T and the map v -> coordinates of v along that complement.
template <ExactField F>
class QuotientCoordinates {
 public:
  using Elem = typename F::Elem;

  /// Throws LinalgError(DimensionMismatch) when S is not contained in T.
  QuotientCoordinates(const Subspace<F>& sub, const Subspace<F>& total);

  std::size_t dim() const noexcept { return complement_.rows(); }
  /// Complement vectors; representatives of a basis of T/S.
  const KMatrix<F>& representatives() const noexcept { return complement_; }
  /// Throws LinalgError(NoSolution) when v is not in T.
  std::vector<Elem> coordinates(const std::vector<Elem>& v) const;

 private:
  KMatrix<F> complement_;
  KMatrix<F> stacked_t_;  // columns = sub basis then complement
  std::size_t sub_dim_;
};

// ---------------------------------------------------------------------------
// Sparse matrices and the blocked solver
// ---------------------------------------------------------------------------

template <ExactField F>
class SparseMatrix {
 public:
  using Elem = typename F::Elem;
  using Entry = std::pair<std::uint32_t, Elem>;

  SparseMatrix(const F& field, std::size_t rows, std::size_t cols) : field_(&field), cols_(cols), rows_(rows) {}

  const F& field() const { return *field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const;

  /// Entries must be appended in increasing column order per row.
  void push(std::size_t row, std::uint32_t col, Elem value) { rows_[row].emplace_back(col, std::move(value)); }
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

  KMatrix<F> to_dense() const;

 private:
  const F* field_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

/// Connected components of the bipartite row/column incidence graph.
struct BlockStructure {
  struct Block {
    std::vector<std::uint32_t> rows, cols;
  };
  std::vector<Block> blocks;   // ordered by smallest row
  std::vector<std::uint32_t> zero_cols;

  template <class SparseM>
  static BlockStructure of(const SparseM& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::uint32_t> parent(nr + nc);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<std::uint32_t>(i);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> used(nr + nc, false);
    for (std::size_t i = 0; i < nr; ++i) {
      for (const auto& e : m.row(i)) {
        const auto a = find(static_cast<std::uint32_t>(i));
        const auto b = find(static_cast<std::uint32_t>(nr + e.first));
        used[i] = used[nr + e.first] = true;
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    BlockStructure out;
    std::vector<std::int64_t> block_of(nr + nc, -1);
    for (std::size_t i = 0; i < nr; ++i) {
      if (!used[i]) continue;
      const auto root = find(static_cast<std::uint32_t>(i));
      if (block_of[root] < 0) {
        block_of[root] = static_cast<std::int64_t>(out.blocks.size());
        out.blocks.emplace_back();
      }
      out.blocks[static_cast<std::size_t>(block_of[root])].rows.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      if (!used[nr + c]) {
        out.zero_cols.push_back(static_cast<std::uint32_t>(c));
        continue;
      }
      const auto root = find(static_cast<std::uint32_t>(nr + c));
      out.blocks[static_cast<std::size_t>(block_of[root])].cols.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
};

enum class PivotOrder { Natural, Reverse };

/// Solves x * A = b for row vectors x, many right-hand sides, one
/// factorization. With PivotOrder::Natural the answer equals the canonical
/// solution of the transposed system (free variables zero, leftmost pivots);
/// PivotOrder::Reverse prefers the last variables and gives another valid
/// solution when the kernel is nontrivial.
template <ExactField F>
class BlockedSolver {
 public:
  using Elem = typename F::Elem;

  explicit BlockedSolver(const SparseMatrix<F>& a, PivotOrder order = PivotOrder::Natural);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t variables() const noexcept { return rows_; }
  std::size_t equations() const noexcept { return cols_; }
  std::size_t block_count() const noexcept { return factors_.size(); }

  std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const;

 private:
  struct Factor {
    std::vector<std::uint32_t> vars, eqs;
    KMatrix<F> transform;                  // U with U * A_block^T = R
    std::vector<std::size_t> pivot_vars;   // local variable index per pivot row
  };

  const F* field_;
  std::size_t rows_, cols_, rank_ = 0;
  std::vector<Factor> factors_;
  std::vector<std::uint32_t> zero_cols_;
};

/// Rank of a sparse matrix via its block decomposition.
template <ExactField F>
std::size_t blocked_rank(const SparseMatrix<F>& a);

}  // namespace a2ext
