#include "a2ext/ext.hpp"

namespace a2ext {

template <ExactField F>
bool CochainComplex<F>::composes_to_zero() const {
  for (std::size_t n = 1; n < maps.size(); ++n)
    if (!(maps[n] * maps[n - 1]).is_zero()) return false;
  return true;
}

template <ExactField F>
bool CochainComplex<F>::all_zero() const {
  for (const auto& m : maps)
    if (!m.is_zero()) return false;
  return true;
}

template <ExactField F>
CochainComplex<F> hom_complex(const FreeComplex<F>& c) {
  CochainComplex<F> h;
  h.dims = c.ranks();
  for (unsigned n = 1; n <= c.top_degree(); ++n) h.maps.push_back(c.d(n).augmentation());
  return h;
}

template <ExactField F>
std::vector<std::size_t> ext_dimensions(const CochainComplex<F>& h, unsigned n_max) {
  if (n_max >= h.maps.size())
    throw ExtError(ExtError::Kind::OutOfRange, "Ext^" + std::to_string(n_max) + " needs d_" + std::to_string(n_max + 1));
  std::vector<std::size_t> ranks(n_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (long long n = 0; n <= static_cast<long long>(n_max); ++n) ranks[static_cast<std::size_t>(n)] = rank(h.maps[static_cast<std::size_t>(n)]);
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(h.dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return out;
}

// ---------------------------------------------------------------------------

template <ExactField F>
ExtEngine<F>::ExtEngine(std::shared_ptr<const FreeComplex<F>> complex)
    : complex_(std::move(complex)), hom_(hom_complex(*complex_)) {}

template <ExactField F>
std::size_t ExtEngine<F>::dimension(unsigned n) const {
  return quotient(n).dim();
}

template <ExactField F>
const Subspace<F>& ExtEngine<F>::coboundaries(unsigned n) const {
  std::lock_guard lock(mu_);
  auto& slot = coboundaries_[n];
  if (!slot) {
    if (n > complex_->top_degree()) throw ExtError(ExtError::Kind::OutOfRange, "degree beyond the complex");
    if (n == 0)
      slot = std::make_unique<Subspace<F>>(field(), hom_.dims[0]);
    else
      slot = std::make_unique<Subspace<F>>(Subspace<F>::row_span(hom_.maps[n - 1].transpose()));
  }
  return *slot;
}

template <ExactField F>
const Subspace<F>& ExtEngine<F>::cocycles(unsigned n) const {
  std::lock_guard lock(mu_);
  auto& slot = cocycles_[n];
  if (!slot) {
    if (n >= hom_.maps.size())
      throw ExtError(ExtError::Kind::OutOfRange, "cocycles in degree " + std::to_string(n) + " need d_" + std::to_string(n + 1));
    slot = std::make_unique<Subspace<F>>(kernel(hom_.maps[n]));
  }
  return *slot;
}

template <ExactField F>
const QuotientCoordinates<F>& ExtEngine<F>::quotient(unsigned n) const {
  const auto& cob = coboundaries(n);
  const auto& coc = cocycles(n);
  std::lock_guard lock(mu_);
  auto& slot = quotients_[n];
  if (!slot) slot = std::make_unique<QuotientCoordinates<F>>(cob, coc);
  return *slot;
}

template <ExactField F>
std::vector<ExtClass<F>> ExtEngine<F>::basis(unsigned n) const {
  const auto& q = quotient(n);
  std::vector<Class> out;
  for (std::size_t i = 0; i < q.dim(); ++i) out.push_back({n, q.representatives().row_vector(i)});
  return out;
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::unit(unsigned n, std::size_t i) const {
  auto c = zero(n);
  c.rep.at(i) = field().one();
  return c;
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::zero(unsigned n) const {
  return {n, std::vector<Elem>(complex_->rank(n), field().zero())};
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::add(const Class& a, const Class& b) const {
  if (a.degree != b.degree) throw ExtError(ExtError::Kind::Mismatch, "adding classes of different degrees");
  Class out = a;
  for (std::size_t k = 0; k < out.rep.size(); ++k) out.rep[k] = field().add(out.rep[k], b.rep[k]);
  return out;
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::scaled(const Class& a, const Elem& c) const {
  Class out = a;
  for (auto& v : out.rep) v = field().mul(v, c);
  return out;
}

template <ExactField F>
bool ExtEngine<F>::is_cocycle(const Class& c) const {
  if (c.degree >= hom_.maps.size()) throw ExtError(ExtError::Kind::OutOfRange, "cocycle test needs the next differential");
  const auto img = hom_.maps[c.degree].apply(c.rep);
  for (const auto& v : img)
    if (!field().is_zero(v)) return false;
  return true;
}

template <ExactField F>
bool ExtEngine<F>::is_zero(const Class& c) const {
  return coboundaries(c.degree).contains(c.rep);
}

template <ExactField F>
bool ExtEngine<F>::equal(const Class& a, const Class& b) const {
  if (a.degree != b.degree) return false;
  return is_zero(add(a, scaled(b, field().neg(field().one()))));
}

template <ExactField F>
std::vector<typename F::Elem> ExtEngine<F>::coordinates(const Class& c) const {
  return quotient(c.degree).coordinates(c.rep);
}

template <ExactField F>
const BlockedSolver<F>& ExtEngine<F>::solver(unsigned i, PivotOrder order) const {
  const auto key = std::make_pair(i, static_cast<int>(order));
  {
    std::lock_guard lock(mu_);
    auto it = solvers_.find(key);
    if (it != solvers_.end()) return *it->second;
  }
  auto s = std::make_unique<BlockedSolver<F>>(complex_->d(i).flatten(), order);
  std::lock_guard lock(mu_);
  auto& slot = solvers_[key];
  if (!slot) slot = std::move(s);
  return *slot;
}

template <ExactField F>
ChainMapLift<F> ExtEngine<F>::lift(const Class& phi, unsigned steps, PivotOrder order) const {
  return lift_from(*complex_, phi, steps, order);
}

template <ExactField F>
ChainMapLift<F> ExtEngine<F>::lift_from(const FreeComplex<F>& source, const Class& phi, unsigned steps,
                                        PivotOrder order) const {
  const auto& A = algebra();
  const std::size_t dim = A.dim();
  const unsigned m = phi.degree;
  if (m + steps > source.top_degree() || steps > complex_->top_degree())
    throw ExtError(ExtError::Kind::OutOfRange, "lift needs more differentials than built");
  if (phi.rep.size() != source.rank(m)) throw ExtError(ExtError::Kind::Mismatch, "cocycle length does not match rank");

  ChainMapLift<F> out;
  out.source_degree = m;
  RMatrix<F> f0(A, source.rank(m), complex_->rank(0));
  for (std::size_t r = 0; r < phi.rep.size(); ++r) f0.at(r, 0) = A.scalar(phi.rep[r]);
  out.steps.push_back(std::move(f0));

  for (unsigned i = 1; i <= steps; ++i) {
    const auto rhs = source.d(m + i) * out.steps.back();
    const auto& sol = solver(i, order);
    const std::size_t ri = complex_->rank(i), rprev = complex_->rank(i - 1);
    RMatrix<F> fi(A, rhs.rows(), ri);
    std::vector<std::string> failures;
#pragma omp parallel for schedule(dynamic)
    for (long long rr = 0; rr < static_cast<long long>(rhs.rows()); ++rr) {
      const auto r = static_cast<std::size_t>(rr);
      std::vector<Elem> b(rprev * dim, field().zero());
      for (std::size_t j = 0; j < rprev; ++j)
        for (const auto& [k, v] : rhs.at(r, j).terms()) b[j * dim + k] = v;
      auto x = sol.solve(b);
      if (!x) {
#pragma omp critical
        failures.push_back("row " + std::to_string(r));
        continue;
      }
      for (std::size_t j = 0; j < ri; ++j)
        fi.at(r, j) = A.from_vector(std::vector<Elem>(x->begin() + static_cast<std::ptrdiff_t>(j * dim),
                                                      x->begin() + static_cast<std::ptrdiff_t>((j + 1) * dim)));
    }
    if (!failures.empty())
      throw ExtError(ExtError::Kind::LiftFailure, "no lift at step " + std::to_string(i) + " (" + failures.front() +
                                                      "); the target complex is not exact there");
    out.steps.push_back(std::move(fi));
  }
  return out;
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::compose(const Class& psi, const ChainMapLift<F>& f) const {
  const unsigned n = psi.degree;
  if (n >= f.steps.size()) throw ExtError(ExtError::Kind::OutOfRange, "lift is too short for this composition");
  const auto& Fn = f.steps[n];
  if (Fn.cols() != psi.rep.size()) throw ExtError(ExtError::Kind::Mismatch, "composition shape mismatch");
  Class out{f.source_degree + n, std::vector<Elem>(Fn.rows(), field().zero())};
  for (std::size_t r = 0; r < Fn.rows(); ++r)
    for (std::size_t j = 0; j < Fn.cols(); ++j) {
      const auto e = algebra().augmentation(Fn.at(r, j));
      if (!field().is_zero(e)) out.rep[r] = field().add(out.rep[r], field().mul(e, psi.rep[j]));
    }
  return out;
}

template <ExactField F>
ExtClass<F> ExtEngine<F>::product(const Class& x, const Class& y, Convention conv, PivotOrder order) const {
  if (conv == Convention::LeftThenRight) return compose(y, lift(x, y.degree, order));
  return compose(x, lift(y, x.degree, order));
}

#define A2EXT_INSTANTIATE_EXT(F)                                                               \
  template struct CochainComplex<F>;                                                           \
  template CochainComplex<F> hom_complex<F>(const FreeComplex<F>&);                            \
  template std::vector<std::size_t> ext_dimensions<F>(const CochainComplex<F>&, unsigned);     \
  template class ExtEngine<F>;

A2EXT_INSTANTIATE_EXT(PrimeField)
A2EXT_INSTANTIATE_EXT(CyclotomicField)

}  // namespace a2ext
