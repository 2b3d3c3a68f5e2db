#pragma once

// Free complexes over R and the three explicit resolutions of k:
//
//   build_resolution_N2    banded complex with P_n = R^(n+1), N = 2
//   build_P_complex        P_n spanned by Phi(a1,a2,a3), a1+a2+a3 = n
//   build_minimal_segment  R^12 -> R^7 -> R^5 -> R^2 -> R
//
// Matrices act on row vectors: a map R^m -> R^n is an m x n matrix and the
// composite P_n -> P_(n-1) -> P_(n-2) is the product d_n * d_(n-1).

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "a2ext/linalg.hpp"
#include "a2ext/qalgebra.hpp"

namespace a2ext {

class ResolutionError : public std::runtime_error {
 public:
  enum class Kind { WrongMode, Shape, OutOfRange };
  ResolutionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Matrix with entries in R.
template <ExactField F>
class RMatrix {
 public:
  RMatrix(const Algebra<F>& alg, std::size_t rows, std::size_t cols)
      : alg_(&alg), rows_(rows), cols_(cols), data_(rows * cols, alg.zero()) {}

  const Algebra<F>& algebra() const { return *alg_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Element<F>& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element<F>& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RMatrix operator*(const RMatrix& other) const;
  RMatrix operator+(const RMatrix& other) const;
  RMatrix operator-(const RMatrix& other) const;
  bool is_zero() const;
  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Entrywise augmentation, a rows x cols k-matrix.
  KMatrix<F> augmentation() const;
  /// The k-linear map R^rows -> R^cols, x -> x * M, as a (rows*dim) x (cols*dim)
  /// matrix acting on row vectors; row (i, u) holds e_u * M[i][*].
  SparseMatrix<F> flatten() const;

 private:
  const Algebra<F>* alg_;
  std::size_t rows_, cols_;
  std::vector<Element<F>> data_;
};

enum class ComplexKind { N2, PComplex, MinimalSegment, Custom };

template <ExactField F>
class FreeComplex {
 public:
  FreeComplex(std::shared_ptr<const Algebra<F>> alg, ComplexKind kind, std::string name,
              std::vector<std::vector<std::string>> labels, std::vector<RMatrix<F>> differentials);

  const Algebra<F>& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra<F>>& algebra_ptr() const { return alg_; }
  ComplexKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  /// Highest n with a stored differential d_n.
  unsigned top_degree() const noexcept { return static_cast<unsigned>(diffs_.size()); }
  std::size_t rank(unsigned n) const { return labels_.at(n).size(); }
  std::vector<std::size_t> ranks() const;
  const std::vector<std::string>& labels(unsigned n) const { return labels_.at(n); }
  /// d_n : P_n -> P_(n-1), n >= 1.
  const RMatrix<F>& d(unsigned n) const;
  /// Returns a copy with one entry of d_n replaced (mutation fixtures).
  FreeComplex with_entry(unsigned n, std::size_t row, std::size_t col, Element<F> value) const;

 private:
  std::shared_ptr<const Algebra<F>> alg_;
  ComplexKind kind_;
  std::string name_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<RMatrix<F>> diffs_;
};

// ---------------------------------------------------------------------------
// sigma / tau and generators of P

unsigned sigma(unsigned N, unsigned a);
unsigned tau(unsigned N, unsigned a);

using GeneratorIndex = std::array<unsigned, 3>;

/// All (a1,a2,a3) with a1+a2+a3 = n in lexicographic order.
std::vector<GeneratorIndex> p_generators(unsigned n);
std::string generator_label(const GeneratorIndex& g);

// ---------------------------------------------------------------------------
// Builders. All throw ResolutionError(WrongMode) on an unsuitable algebra.

template <ExactField F>
FreeComplex<F> build_resolution_N2(std::shared_ptr<const Algebra<F>> alg, unsigned n_max);

/// Full mode includes the dtilde_2 components; Graded mode omits them.
template <ExactField F>
FreeComplex<F> build_P_complex(std::shared_ptr<const Algebra<F>> alg, unsigned n_max);

template <ExactField F>
FreeComplex<F> build_minimal_segment(std::shared_ptr<const Algebra<F>> alg);

/// The auxiliary elements of the minimal segment and its comparison maps.
template <ExactField F>
struct SegmentElements {
  Element<F> Dbar;  // Dbar * y = [x1^(N-1), x2^(N-1)]_c
  Element<F> X1;    // X1 * x2^2 = x2^(N-1) x1^(N-3)
  Element<F> X2;    // X2 * x1^2 = x1^(N-1) x2^(N-3)
  Element<F> r2a;   // -(q12 + qbar q12) x1x2 + qbar q12^2 x2x1
  Element<F> r4b;   // qbar q21^2 x1x2 - (q21 + qbar q21) x2x1
};

template <ExactField F>
SegmentElements<F> segment_elements(const Algebra<F>& alg);

/// The coefficient D of the dtilde_2 component of Phi(a1,a2,a3), computed by
/// canonical right division by y; zero when the component is absent.
template <ExactField F>
Element<F> dtilde_coefficient(const Algebra<F>& alg, const GeneratorIndex& g);

// ---------------------------------------------------------------------------
// Verification

struct ComplexFailure {
  unsigned degree;  // d_degree * d_(degree-1) != 0
  std::size_t row, col;
  std::string residue;
};

struct ComplexReport {
  std::vector<unsigned> checked;  // degrees n with d_n d_(n-1) examined
  std::vector<ComplexFailure> failures;
  bool ok() const { return failures.empty(); }
};

template <ExactField F>
ComplexReport verify_complex(const FreeComplex<F>& c);

struct ExactnessRow {
  unsigned degree;
  std::size_t kernel_dim;
  std::size_t image_dim;  // rank of d_(degree+1); unset at the boundary
  bool boundary;
  bool ok;
};

struct ExactnessReport {
  std::vector<ExactnessRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.ok) return false;
    return true;
  }
};

/// Degree 0 compares ker(augmentation) with im d_1; degrees 1..n_max-1 compare
/// ker d_n with im d_(n+1); degree n_max is reported as an unchecked boundary.
template <ExactField F>
ExactnessReport verify_exactness(const FreeComplex<F>& c, unsigned n_max);

/// True when every differential entry lies in the augmentation ideal.
template <ExactField F>
bool is_minimal(const FreeComplex<F>& c);

/// Positions (degree, row, col) of entries with nonzero augmentation.
template <ExactField F>
std::vector<std::array<std::size_t, 3>> scalar_entries(const FreeComplex<F>& c);

struct DtildeCase {
  GeneratorIndex generator;
  int parity_case;        // 1..4
  bool matches;           // generic division agrees with the closed form modulo ker(. y)
  bool expansions_ok;     // case 4: k- and l-expansions reproduce the bracket
  std::string details;
};

template <ExactField F>
std::vector<DtildeCase> verify_dtilde_cases(const Algebra<F>& alg, unsigned n_max);

}  // namespace a2ext
