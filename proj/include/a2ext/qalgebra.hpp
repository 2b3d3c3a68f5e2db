#pragma once

// The Nichols algebra R of type A2 at a primitive N-th root of unity qbar.
//
// For odd N >= 3 the basis is the PBW family x1^a y^b x2^c (0 <= a,b,c < N)
// with y = x1 x2 - q12 x2 x1, indexed lexicographically as (a*N + b)*N + c.
// Graded mode drops the y-correction from x2 x1 and gives Gr R.
// N = 2 uses its own presentation (x1^2 = x2^2 = 0, x1x2x1x2 + x2x1x2x1 = 0)
// on the eight alternating words.
//
// All products go through a dim x dim structure table computed once.

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a2ext/linalg.hpp"
#include "a2ext/scalars.hpp"

namespace a2ext {

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { InvalidBraiding, WrongMode, OutOfRange, NotDivisible, Parse, Mismatch };
  AlgebraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class AlgebraMode { Full, Graded };

template <ExactField F>
struct BraidingParams {
  unsigned N = 3;
  typename F::Elem qbar;
  typename F::Elem q12;
  std::optional<typename F::Elem> q21;  // derived from qbar*q12*q21 = 1 when absent
  AlgebraMode mode = AlgebraMode::Full;
};

/// qbar = z^(L/N), q12 = z^q12_exp. Throws AlgebraError(InvalidBraiding) when N does not divide L.
template <ExactField F>
BraidingParams<F> standard_params(const F& field, unsigned N, long long q12_exp, AlgebraMode mode = AlgebraMode::Full);

template <ExactField F>
class Algebra;

template <ExactField F>
class Element {
 public:
  using Elem = typename F::Elem;
  using Term = std::pair<std::uint32_t, Elem>;

  /// The zero element, usable before an algebra is known.
  Element() = default;
  /// Terms sorted by basis index with nonzero coefficients.
  Element(const Algebra<F>* alg, std::vector<Term> terms) : alg_(alg), terms_(std::move(terms)) {}

  const Algebra<F>* algebra() const noexcept { return alg_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Elem coeff(std::size_t index) const;
  std::string str() const;

  Element scaled(const Elem& c) const;

  friend Element operator+(const Element& a, const Element& b) { return combine(a, b, false); }
  friend Element operator-(const Element& a, const Element& b) { return combine(a, b, true); }
  Element operator-() const;
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  friend Element operator*(const Element& a, const Element& b) { return product_of(a, b); }
  friend Element operator*(const Elem& c, const Element& a) { return a.scaled(c); }
  friend bool operator==(const Element& a, const Element& b) { return equal(a, b); }

 private:
  static Element combine(const Element& a, const Element& b, bool subtract);
  static Element product_of(const Element& a, const Element& b);
  static bool equal(const Element& a, const Element& b);
  const Algebra<F>* alg_ = nullptr;
  std::vector<Term> terms_;
};

template <ExactField F>
class Algebra {
 public:
  using Elem = typename F::Elem;
  using Term = typename Element<F>::Term;

  /// Throws AlgebraError(InvalidBraiding) if qbar*q12*q21 != 1, order(qbar) != N,
  /// N is neither 2 nor odd >= 3, or Graded mode is asked for at N = 2.
  static std::shared_ptr<const Algebra> make(std::shared_ptr<const F> field, const BraidingParams<F>& params);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const F& field() const noexcept { return *field_; }
  const std::shared_ptr<const F>& field_ptr() const noexcept { return field_; }
  unsigned N() const noexcept { return N_; }
  bool is_n2() const noexcept { return N_ == 2; }
  AlgebraMode mode() const noexcept { return mode_; }
  std::size_t dim() const noexcept { return dim_; }
  const Elem& qbar() const noexcept { return qbar_; }
  const Elem& q12() const noexcept { return q12_; }
  const Elem& q21() const noexcept { return q21_; }

  // Basis ----------------------------------------------------------------
  std::size_t index(unsigned a, unsigned b, unsigned c) const;
  std::array<unsigned, 3> exponents(std::size_t idx) const;
  /// N = 2 only: index of an alternating word such as "121".
  std::size_t word_index(std::string_view word) const;
  std::string basis_label(std::size_t idx) const;

  // Elements -------------------------------------------------------------
  Element<F> zero() const { return Element<F>(this, {}); }
  Element<F> one() const { return scalar(field_->one()); }
  Element<F> scalar(const Elem& c) const;
  Element<F> integer(long long n) const { return scalar(field_->from_int(n)); }
  Element<F> basis(std::size_t idx) const;
  Element<F> monomial(unsigned a, unsigned b, unsigned c) const { return basis(index(a, b, c)); }
  Element<F> x1() const;
  Element<F> x2() const;
  Element<F> y() const;
  Element<F> from_vector(const std::vector<Elem>& coords) const;
  std::vector<Elem> to_vector(const Element<F>& u) const;

  Element<F> multiply(const Element<F>& u, const Element<F>& v) const;
  Element<F> power(const Element<F>& u, unsigned e) const;
  /// x1^m x2^n - q12^(mn) x2^n x1^m. Throws OutOfRange unless 1 <= m,n <= N-1.
  Element<F> braided_commutator(unsigned m, unsigned n) const;
  Elem augmentation(const Element<F>& u) const;

  /// Products of basis elements, e_i * e_j, as sorted terms.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// Row u holds the coordinates of e_u * m.
  KMatrix<F> right_mult_matrix(const Element<F>& m) const;
  SparseMatrix<F> right_mult_sparse(const Element<F>& m) const;

  // Reverse PBW basis x2^c y^b x1^a (Full and Graded modes) ---------------
  Element<F> reverse_monomial(unsigned a, unsigned b, unsigned c) const;
  /// Coefficients along the reverse basis, keyed by the (a,b,c) index.
  std::vector<Term> to_reverse_basis(const Element<F>& u) const;
  Element<F> from_reverse_basis(const std::vector<Term>& coeffs) const;
  /// Rank of the reverse-to-PBW change of basis matrix.
  std::size_t reverse_basis_rank() const;

  /// Canonical X with X * m = w: free coordinates zero, lexicographic
  /// pivot preference. Throws AlgebraError(NotDivisible).
  Element<F> right_divide(const Element<F>& w, const Element<F>& m) const;
  std::optional<Element<F>> try_right_divide(const Element<F>& w, const Element<F>& m) const;

  // Text -----------------------------------------------------------------
  /// Grammar: sums of products of integers, z (the field's primitive root),
  /// x1, x2, y and parenthesised subexpressions, with ^k powers and /
  /// by nonzero scalars. Throws AlgebraError(Parse).
  Element<F> parse(std::string_view text) const;
  std::string format(const Element<F>& u) const;
  std::string format_scalar(const Elem& c) const;

 private:
  Algebra(std::shared_ptr<const F> field, const BraidingParams<F>& params);
  void build_pbw_table();
  void build_n2_table();
  const BlockedSolver<F>& reverse_solver() const;

  std::shared_ptr<const F> field_;
  unsigned N_;
  AlgebraMode mode_;
  std::size_t dim_;
  Elem qbar_, q12_, q21_;
  std::vector<std::vector<Term>> table_;
  std::vector<std::string> words_;  // N = 2 basis words

  mutable std::once_flag reverse_once_;
  mutable std::unique_ptr<BlockedSolver<F>> reverse_solver_;
};

}  // namespace a2ext
