#pragma once

// Verifications on top of the Ext engine: the presentation relations,
// the explicit comparison maps of the minimal segment, E2 bookkeeping,
// generation in degrees 1 and 2, growth and product properties.

#include <cstdint>
#include <string>
#include <vector>

#include "a2ext/check.hpp"
#include "a2ext/ext.hpp"

namespace a2ext {

template <ExactField F>
struct NamedClass {
  std::string name;
  ExtClass<F> cls;
};

/// Degree 1: a1, a2. Degree 2: b (N = 2) or b1, c1, by, c2, b2 (minimal
/// segment, the functionals dual to the five generators of P_2).
template <ExactField F>
std::vector<NamedClass<F>> standard_generators(const ExtEngine<F>& e);

/// lhs_coeff * l1 l2 = rhs_coeff * r1 r2, or = 0 when r1 is empty.
template <ExactField F>
struct Relation {
  std::string text;
  typename F::Elem lhs_coeff;
  std::string l1, l2;
  typename F::Elem rhs_coeff;
  std::string r1, r2;
};

/// The relation list for the algebra's N (N = 2, N = 3 or N > 3).
template <ExactField F>
std::vector<Relation<F>> relation_table(const Algebra<F>& alg);

struct RelationVerdict {
  std::string text;
  bool holds = false;           // under the requested convention
  bool tried_opposite = false;
  bool holds_opposite = false;  // meaningful when tried_opposite
};

/// Evaluates every relation on the standard generators of e (the N = 2
/// resolution or the minimal segment).
template <ExactField F>
std::vector<RelationVerdict> verify_relations(const ExtEngine<F>& e, Convention conv);

std::vector<Check> relation_checks(const std::vector<RelationVerdict>& verdicts, Convention conv);

/// Commutative squares for the comparison maps lifting the generators:
/// f/g on the minimal segment (N >= 3) and f/g/h on the N = 2 resolution,
/// plus the four auxiliary identities for N >= 3.
template <ExactField F>
std::vector<Check> verify_appendix_maps(std::shared_ptr<const Algebra<F>> alg);

/// Number of monomials u1^i uy^j w1 / u1^i uy^j wy (q odd) or
/// u1^i uy^j (w1 wy)^k (q even) in bidegree (p, q).
unsigned e2_dimension(unsigned p, unsigned q);

/// sum_{p+q=n} e2_dimension(p, q) for n = 0..n_max.
std::vector<std::size_t> e2_column_sums(unsigned n_max);

std::vector<Check> e2_column_check(const std::vector<std::size_t>& ext_dims);

/// One check per degree 1..n_max: products of basis classes of degrees 1
/// and 2 span Ext^n. Needs the complex through degree n_max + 1.
template <ExactField F>
std::vector<Check> k2_spanning_check(const ExtEngine<F>& e, unsigned n_max);

/// Polynomial growth degree + 1 of the even and odd subsequences, from
/// exact finite differences. Throws ExtError(InsufficientData) below 5 terms.
unsigned complexity_estimate(const std::vector<std::size_t>& dims);

/// Classes of the minimal segment transported to p through a comparison
/// map p -> segment over the identity of k, in degrees 1 and 2.
template <ExactField F>
std::vector<NamedClass<F>> transported_generators(const ExtEngine<F>& p, const ExtEngine<F>& segment);

/// N > 3: a1, a2, c1, c2 and c1 a2 square to zero; b1, by, b2 have
/// nonzero m-th powers for 2m <= n_max. Computed on p.
template <ExactField F>
std::vector<Check> nilpotency_checks(const ExtEngine<F>& p, const ExtEngine<F>& segment, unsigned n_max,
                                     Convention conv);

/// (XY)Z = X(YZ) for random classes of degree 1 or 2, each a random
/// combination of basis classes plus a random coboundary.
template <ExactField F>
Check associativity_fuzz(const ExtEngine<F>& e, unsigned cases, std::uint64_t seed, Convention conv);

/// For every ordered pair (x, y) of degree <= 2 basis classes, y composed
/// with the canonical lift of x and with the reversed-pivot lift of x give
/// the same class. This covers the products of both conventions.
template <ExactField F>
Check lift_independence(const ExtEngine<F>& e);

}  // namespace a2ext
