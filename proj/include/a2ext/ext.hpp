#pragma once

// Ext_R(k, k) from a free resolution: the cochain complex Hom_R(P, k),
// classes modulo coboundaries, chain-map lifts and Yoneda products.
//
// Hom_R(P_n, k) = k^(rank P_n). The induced map out of degree n is
// E_n = augmentation(d_(n+1)), a rank_(n+1) x rank_n matrix acting on
// column vectors.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "a2ext/linalg.hpp"
#include "a2ext/resolution.hpp"

namespace a2ext {

class ExtError : public std::runtime_error {
 public:
  enum class Kind { InsufficientData, LiftFailure, OutOfRange, Mismatch };
  ExtError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// X * Y for X in degree m, Y in degree n.
///   LeftThenRight: lift X through n steps, then apply Y.
///   RightThenLeft: lift Y through m steps, then apply X.
enum class Convention { LeftThenRight, RightThenLeft };

inline const char* convention_name(Convention c) { return c == Convention::LeftThenRight ? "left" : "right"; }
inline Convention opposite(Convention c) {
  return c == Convention::LeftThenRight ? Convention::RightThenLeft : Convention::LeftThenRight;
}

template <ExactField F>
struct CochainComplex {
  std::vector<std::size_t> dims;  // rank P_0 .. rank P_top
  std::vector<KMatrix<F>> maps;   // maps[n] = E_n, n = 0 .. top-1

  bool composes_to_zero() const;
  bool all_zero() const;
};

template <ExactField F>
CochainComplex<F> hom_complex(const FreeComplex<F>& c);

/// dim H^n for n = 0..n_max. Needs n_max < number of induced maps.
template <ExactField F>
std::vector<std::size_t> ext_dimensions(const CochainComplex<F>& h, unsigned n_max);

template <ExactField F>
struct ExtClass {
  unsigned degree = 0;
  std::vector<typename F::Elem> rep;  // functional on P_degree
};

template <ExactField F>
struct ChainMapLift {
  unsigned source_degree = 0;
  std::vector<RMatrix<F>> steps;  // steps[i] : P_(m+i) -> Q_i
};

template <ExactField F>
class ExtEngine {
 public:
  using Elem = typename F::Elem;
  using Class = ExtClass<F>;

  explicit ExtEngine(std::shared_ptr<const FreeComplex<F>> complex);

  const FreeComplex<F>& complex() const { return *complex_; }
  const Algebra<F>& algebra() const { return complex_->algebra(); }
  const F& field() const { return complex_->algebra().field(); }
  const CochainComplex<F>& cochains() const { return hom_; }

  /// dim Ext^n; needs d_(n+1).
  std::size_t dimension(unsigned n) const;
  /// Image of E_(n-1) inside k^(rank P_n).
  const Subspace<F>& coboundaries(unsigned n) const;
  /// Kernel of E_n; needs d_(n+1).
  const Subspace<F>& cocycles(unsigned n) const;

  /// Cocycles whose classes form a basis of Ext^n, echelonized so that a
  /// minimal complex yields the unit functionals in order.
  std::vector<Class> basis(unsigned n) const;
  Class unit(unsigned n, std::size_t i) const;
  Class zero(unsigned n) const;
  Class add(const Class& a, const Class& b) const;
  Class scaled(const Class& a, const Elem& c) const;

  bool is_cocycle(const Class& c) const;
  bool is_zero(const Class& c) const;
  bool equal(const Class& a, const Class& b) const;
  /// Coordinates along basis(n).
  std::vector<Elem> coordinates(const Class& c) const;

  /// Chain map P_(m+i) -> P_i over the cocycle phi, i = 0..steps.
  /// Throws ExtError(LiftFailure) when a step has no solution.
  ChainMapLift<F> lift(const Class& phi, unsigned steps, PivotOrder order = PivotOrder::Natural) const;
  /// Same with a different source complex over the same algebra: phi is a
  /// cocycle on source_m and the maps land in this engine's complex.
  ChainMapLift<F> lift_from(const FreeComplex<F>& source, const Class& phi, unsigned steps,
                            PivotOrder order = PivotOrder::Natural) const;
  /// psi (on this complex in degree n = steps) composed with the lift; the
  /// result lives on the lift's source in degree m + n.
  Class compose(const Class& psi, const ChainMapLift<F>& f) const;

  Class product(const Class& x, const Class& y, Convention conv, PivotOrder order = PivotOrder::Natural) const;

 private:
  const BlockedSolver<F>& solver(unsigned i, PivotOrder order) const;
  const QuotientCoordinates<F>& quotient(unsigned n) const;

  std::shared_ptr<const FreeComplex<F>> complex_;
  CochainComplex<F> hom_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<unsigned, int>, std::unique_ptr<BlockedSolver<F>>> solvers_;
  mutable std::map<unsigned, std::unique_ptr<Subspace<F>>> coboundaries_, cocycles_;
  mutable std::map<unsigned, std::unique_ptr<QuotientCoordinates<F>>> quotients_;
};

}  // namespace a2ext
