#include "a2ext/resolution.hpp"

#include <algorithm>
#include <map>

namespace a2ext {

namespace {

template <ExactField F>
std::vector<typename Element<F>::Term> normalize_terms(const F& f, std::vector<typename Element<F>::Term> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<typename Element<F>::Term> out;
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = f.add(out.back().second, t.second);
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [&](const auto& t) { return f.is_zero(t.second); });
  return out;
}

[[noreturn]] void wrong_mode(const std::string& msg) { throw ResolutionError(ResolutionError::Kind::WrongMode, msg); }

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RMatrix

template <ExactField F>
RMatrix<F> RMatrix<F>::operator*(const RMatrix& other) const {
  if (cols_ != other.rows_) throw ResolutionError(ResolutionError::Kind::Shape, "R-matrix product shape mismatch");
  RMatrix out(*alg_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += alg_->multiply(a, b);
      }
    }
  return out;
}

template <ExactField F>
RMatrix<F> RMatrix<F>::operator+(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ResolutionError(ResolutionError::Kind::Shape, "R-matrix sum shape");
  RMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
  return out;
}

template <ExactField F>
RMatrix<F> RMatrix<F>::operator-(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ResolutionError(ResolutionError::Kind::Shape, "R-matrix difference shape");
  RMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

template <ExactField F>
bool RMatrix<F>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& e) { return e.is_zero(); });
}

template <ExactField F>
KMatrix<F> RMatrix<F>::augmentation() const {
  KMatrix<F> out(alg_->field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = alg_->augmentation(at(i, j));
  return out;
}

template <ExactField F>
SparseMatrix<F> RMatrix<F>::flatten() const {
  const F& f = alg_->field();
  const std::size_t dim = alg_->dim();
  SparseMatrix<F> out(f, rows_ * dim, cols_ * dim);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t u = 0; u < dim; ++u) {
      const std::size_t row = i * dim + u;
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& e = at(i, j);
        if (e.is_zero()) continue;
        std::vector<typename Element<F>::Term> raw;
        for (const auto& [t, c] : e.terms())
          for (const auto& [k, v] : alg_->product(u, t)) raw.emplace_back(k, f.mul(c, v));
        for (auto& [k, v] : normalize_terms(f, std::move(raw)))
          out.push(row, static_cast<std::uint32_t>(j * dim + k), std::move(v));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FreeComplex

template <ExactField F>
FreeComplex<F>::FreeComplex(std::shared_ptr<const Algebra<F>> alg, ComplexKind kind, std::string name,
                            std::vector<std::vector<std::string>> labels, std::vector<RMatrix<F>> differentials)
    : alg_(std::move(alg)), kind_(kind), name_(std::move(name)), labels_(std::move(labels)), diffs_(std::move(differentials)) {
  if (labels_.size() != diffs_.size() + 1) throw ResolutionError(ResolutionError::Kind::Shape, "label/differential count");
  for (unsigned n = 1; n <= diffs_.size(); ++n) {
    const auto& m = diffs_[n - 1];
    if (m.rows() != labels_[n].size() || m.cols() != labels_[n - 1].size())
      throw ResolutionError(ResolutionError::Kind::Shape, "differential d_" + std::to_string(n) + " has the wrong shape");
  }
}

template <ExactField F>
std::vector<std::size_t> FreeComplex<F>::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& l : labels_) out.push_back(l.size());
  return out;
}

template <ExactField F>
const RMatrix<F>& FreeComplex<F>::d(unsigned n) const {
  if (n < 1 || n > diffs_.size())
    throw ResolutionError(ResolutionError::Kind::OutOfRange, "no differential d_" + std::to_string(n) + " in " + name_);
  return diffs_[n - 1];
}

template <ExactField F>
FreeComplex<F> FreeComplex<F>::with_entry(unsigned n, std::size_t row, std::size_t col, Element<F> value) const {
  FreeComplex copy(*this);
  auto& m = copy.diffs_.at(n - 1);
  if (row >= m.rows() || col >= m.cols()) throw ResolutionError(ResolutionError::Kind::OutOfRange, "entry out of range");
  m.at(row, col) = std::move(value);
  return copy;
}

// ---------------------------------------------------------------------------

unsigned sigma(unsigned N, unsigned a) { return a % 2 ? 1 : N - 1; }

unsigned tau(unsigned N, unsigned a) { return a % 2 ? (a - 1) / 2 * N + 1 : a / 2 * N; }

std::vector<GeneratorIndex> p_generators(unsigned n) {
  std::vector<GeneratorIndex> out;
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; a + b <= n; ++b) out.push_back({a, b, n - a - b});
  return out;
}

std::string generator_label(const GeneratorIndex& g) {
  return "Phi(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

// ---------------------------------------------------------------------------
// N = 2

template <ExactField F>
FreeComplex<F> build_resolution_N2(std::shared_ptr<const Algebra<F>> alg, unsigned n_max) {
  if (!alg->is_n2()) wrong_mode("the banded resolution needs the N = 2 algebra");
  const auto& A = *alg;
  const auto x1 = A.x1(), x2 = A.x2();
  const auto w212 = A.basis(A.word_index("212"));
  const auto w121 = A.basis(A.word_index("121"));
  std::vector<std::vector<std::string>> labels{{"e1"}};
  std::vector<RMatrix<F>> diffs;
  for (unsigned n = 1; n <= n_max; ++n) {
    labels.push_back(numbered_labels("e", n + 1));
    RMatrix<F> d(A, n + 1, n);
    d.at(0, 0) = x1;
    d.at(n, n - 1) = x2;
    const unsigned m = n / 2;
    for (unsigned i = 1; i < n; ++i) {
      Element<F> left, right;
      if (n % 2) {
        if (i <= m) {
          left = w212;
          right = x1;
        } else {
          left = x2;
          right = w121;
        }
      } else if (i < m) {
        left = w212;
        right = x1;
      } else if (i == m) {
        left = w212;
        right = w121;
      } else {
        left = x2;
        right = w121;
      }
      d.at(i, i - 1) = left;
      d.at(i, i) = right;
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex<F>(alg, ComplexKind::N2, "N2 resolution", std::move(labels), std::move(diffs));
}

// ---------------------------------------------------------------------------
// P complex

namespace {

template <ExactField F>
typename F::Elem dtilde_scalar(const Algebra<F>& A, const GeneratorIndex& g) {
  const F& f = A.field();
  const unsigned N = A.N();
  const long long t1 = tau(N, g[0] - 1), s3 = sigma(N, g[2]), t2 = tau(N, g[1]);
  auto c = f.mul(f.pow(A.q21(), t1), f.mul(f.pow(A.q12(), s3 * t1), f.pow(A.q21(), -s3 * t2)));
  return f.neg(c);
}

bool has_dtilde(const GeneratorIndex& g) { return g[1] % 2 == 0 && g[0] > 0 && g[2] > 0; }

}  // namespace

template <ExactField F>
Element<F> dtilde_coefficient(const Algebra<F>& A, const GeneratorIndex& g) {
  if (A.is_n2()) wrong_mode("dtilde needs N >= 3");
  if (A.mode() == AlgebraMode::Graded || !has_dtilde(g)) return A.zero();
  const unsigned N = A.N();
  const auto w = A.braided_commutator(sigma(N, g[0]), sigma(N, g[2])).scaled(dtilde_scalar(A, g));
  return A.right_divide(w, A.y());
}

template <ExactField F>
FreeComplex<F> build_P_complex(std::shared_ptr<const Algebra<F>> alg, unsigned n_max) {
  if (alg->is_n2()) wrong_mode("the complex P needs N >= 3");
  const auto& A = *alg;
  const F& f = A.field();
  const unsigned N = A.N();
  const bool full = A.mode() == AlgebraMode::Full;
  const auto x1 = A.x1(), x2 = A.x2(), y = A.y();

  // y-quotients of the unscaled brackets, one per parity pattern of (a1, a3)
  std::map<std::pair<unsigned, unsigned>, Element<F>> dbase;
  std::unique_ptr<BlockedSolver<F>> ysolver;
  auto base_quotient = [&](unsigned s1, unsigned s3) -> const Element<F>& {
    auto key = std::make_pair(s1, s3);
    auto it = dbase.find(key);
    if (it != dbase.end()) return it->second;
    if (!ysolver) ysolver = std::make_unique<BlockedSolver<F>>(A.right_mult_sparse(y));
    auto x = ysolver->solve(A.to_vector(A.braided_commutator(s1, s3)));
    if (!x) throw AlgebraError(AlgebraError::Kind::NotDivisible, "y does not divide a dtilde bracket");
    return dbase.emplace(key, A.from_vector(*x)).first->second;
  };

  std::vector<std::vector<std::string>> labels;
  labels.push_back({generator_label({0, 0, 0})});
  std::vector<RMatrix<F>> diffs;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto src = p_generators(n);
    const auto tgt = p_generators(n - 1);
    std::map<GeneratorIndex, std::size_t> ti;
    for (std::size_t k = 0; k < tgt.size(); ++k) ti[tgt[k]] = k;
    std::vector<std::string> lab;
    for (const auto& g : src) lab.push_back(generator_label(g));
    labels.push_back(std::move(lab));

    RMatrix<F> d(A, src.size(), tgt.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      const auto [a1, a2, a3] = src[i];
      if (a1 > 0) d.at(i, ti.at({a1 - 1, a2, a3})) += A.power(x1, sigma(N, a1));
      if (a2 > 0) {
        auto c = f.pow(A.q21(), -static_cast<long long>(sigma(N, a2)) * tau(N, a1));
        if (a1 % 2) c = f.neg(c);
        d.at(i, ti.at({a1, a2 - 1, a3})) += A.power(y, sigma(N, a2)).scaled(c);
      }
      if (a3 > 0) {
        const long long s3 = sigma(N, a3);
        auto c = f.mul(f.pow(A.q12(), s3 * tau(N, a1)), f.pow(A.q21(), -s3 * tau(N, a2)));
        if ((a1 + a2) % 2) c = f.neg(c);
        d.at(i, ti.at({a1, a2, a3 - 1})) += A.power(x2, sigma(N, a3)).scaled(c);
      }
      if (full && has_dtilde(src[i])) {
        const auto& base = base_quotient(sigma(N, a1), sigma(N, a3));
        d.at(i, ti.at({a1 - 1, a2 + 1, a3 - 1})) += base.scaled(dtilde_scalar(A, src[i]));
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex<F>(alg, ComplexKind::PComplex, full ? "P complex" : "P complex (graded)", std::move(labels),
                        std::move(diffs));
}

// ---------------------------------------------------------------------------
// Minimal segment

template <ExactField F>
SegmentElements<F> segment_elements(const Algebra<F>& A) {
  if (A.is_n2() || A.mode() != AlgebraMode::Full) wrong_mode("the minimal segment needs N >= 3 in full mode");
  const F& f = A.field();
  const unsigned N = A.N();
  const auto x1 = A.x1(), x2 = A.x2();
  const auto x1x2 = x1 * x2, x2x1 = x2 * x1;
  const auto& qb = A.qbar();
  const auto& q12 = A.q12();
  const auto& q21 = A.q21();
  SegmentElements<F> s;
  s.Dbar = A.right_divide(A.braided_commutator(N - 1, N - 1), A.y());
  s.X1 = A.right_divide(A.power(x2, N - 1) * A.power(x1, N - 3), A.power(x2, 2));
  s.X2 = A.right_divide(A.power(x1, N - 1) * A.power(x2, N - 3), A.power(x1, 2));
  s.r2a = x1x2.scaled(f.neg(f.add(q12, f.mul(qb, q12)))) + x2x1.scaled(f.mul(qb, f.mul(q12, q12)));
  s.r4b = x1x2.scaled(f.mul(qb, f.mul(q21, q21))) - x2x1.scaled(f.add(q21, f.mul(qb, q21)));
  return s;
}

template <ExactField F>
FreeComplex<F> build_minimal_segment(std::shared_ptr<const Algebra<F>> alg) {
  const auto& A = *alg;
  const auto s = segment_elements(A);
  const F& f = A.field();
  const long long N = A.N();
  const auto& qb = A.qbar();
  const auto& q12 = A.q12();
  const auto& q21 = A.q21();
  auto p12 = [&](long long e) { return f.pow(q12, e); };
  auto p21 = [&](long long e) { return f.pow(q21, e); };
  const auto x1 = A.x1(), x2 = A.x2(), y = A.y();
  auto X = [&](long long e) { return A.power(x1, static_cast<unsigned>(e)); };
  auto Z = [&](long long e) { return A.power(x2, static_cast<unsigned>(e)); };
  const auto yx1 = A.power(y, N - 1) * x1;
  const auto yx2 = A.power(y, N - 1) * x2;
  const auto x1x2 = x1 * x2, x2x1 = x2 * x1;
  const Element<F> z = A.zero();

  auto fill = [&](std::size_t rows, std::size_t cols, const std::vector<std::vector<Element<F>>>& entries) {
    RMatrix<F> m(A, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = 0; j < entries[i].size(); ++j) m.at(i, j) = entries[i][j];
    return m;
  };

  auto d1 = fill(2, 1, {{x1}, {x2}});
  auto d2 = fill(5, 2, {{X(N - 1), z}, {s.r2a, X(2)}, {yx2.scaled(f.neg(q12)), yx1}, {Z(2), s.r4b}, {z, Z(N - 1)}});
  auto d3 = fill(7, 5,
                 {{x1, z, z, z, z},
                  {x2.scaled(p12(N)), X(N - 2), z, z, z},
                  {z, z, x2, A.power(y, N - 1).scaled(f.mul(q12, p21(N - 1))), z},
                  {z, x2, z, x1, z},
                  {z, A.power(y, N - 1).scaled(f.neg(p21(1 - N))), x1, z, z},
                  {z, z, z, Z(N - 2).scaled(p12(N)), x1},
                  {z, z, z, z, x2}});

  const auto c1 = p12(1 + N);
  const auto bar = p12(-N * N + 2 * N);
  const auto xa = X(N - 1).scaled(p12(-N * N + N));
  const std::vector<std::vector<Element<F>>> top = {
      // A1 | A2
      {X(N - 1), z, z, z, z, z, z},
      {x1x2.scaled(f.neg(f.add(c1, f.mul(qb, c1)))) + x2x1.scaled(f.mul(qb, p12(2 + N))), X(2), z, z, z, z, z},
      {yx2.scaled(f.neg(c1)), yx1, z, z, xa, z, z},
      {Z(2).scaled(p12(N)), s.r4b, z, X(N - 1).scaled(p21(N)), z, z, z},
      {z, Z(N - 1), z, s.Dbar.scaled(f.neg(bar)), z, xa, z},
      // A3 | A4
      {z, z, X(2), yx1.scaled(f.neg(f.mul(f.inv(qb), p12(N)))), s.r2a, z, z},
      {z, z, yx1, z, yx2.scaled(f.neg(q12)), z, z},
      {z, z, s.r4b, yx2.scaled(p21(N - 1)), Z(2), z, z},
      {z, z, z, Z(N - 1).scaled(p12(2 * N)), z, s.r2a, X(2)},
      {z, z, Z(N - 1).scaled(p12(N * N)), z, z, yx2.scaled(f.neg(q12)), yx1},
      {z, z, z, z, z, Z(2), s.r4b},
      {z, z, z, z, z, z, Z(N - 1)}};
  auto d4 = fill(12, 7, top);

  std::vector<std::vector<std::string>> labels{{"e1"}, numbered_labels("e", 2), numbered_labels("e", 5),
                                               numbered_labels("e", 7), numbered_labels("e", 12)};
  return FreeComplex<F>(alg, ComplexKind::MinimalSegment, "minimal segment", std::move(labels),
                        {std::move(d1), std::move(d2), std::move(d3), std::move(d4)});
}

// ---------------------------------------------------------------------------
// Verification

template <ExactField F>
ComplexReport verify_complex(const FreeComplex<F>& c) {
  ComplexReport rep;
  for (unsigned n = 2; n <= c.top_degree(); ++n) {
    rep.checked.push_back(n);
    const auto prod = c.d(n) * c.d(n - 1);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (!prod.at(i, j).is_zero()) rep.failures.push_back({n, i, j, prod.at(i, j).str()});
  }
  return rep;
}

template <ExactField F>
ExactnessReport verify_exactness(const FreeComplex<F>& c, unsigned n_max) {
  if (n_max > c.top_degree())
    throw ResolutionError(ResolutionError::Kind::OutOfRange, "exactness degree beyond the built complex");
  const std::size_t dim = c.algebra().dim();
  std::vector<std::size_t> ranks(n_max + 1, 0);  // ranks[n] = rank of flattened d_n
  std::vector<long long> todo;
  for (unsigned n = 1; n <= n_max; ++n) todo.push_back(n);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(todo.size()); ++k) {
    const auto n = static_cast<unsigned>(todo[static_cast<std::size_t>(k)]);
    ranks[n] = blocked_rank(c.d(n).flatten());
  }
  ExactnessReport rep;
  const std::size_t r0 = c.rank(0);
  if (n_max >= 1) {
    rep.rows.push_back({0, r0 * dim - r0, ranks[1], false, r0 * dim - r0 == ranks[1]});
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::size_t ker = c.rank(n) * dim - ranks[n];
    if (n < n_max)
      rep.rows.push_back({n, ker, ranks[n + 1], false, ker == ranks[n + 1]});
    else
      rep.rows.push_back({n, ker, 0, true, true});
  }
  return rep;
}

template <ExactField F>
bool is_minimal(const FreeComplex<F>& c) {
  return scalar_entries(c).empty();
}

template <ExactField F>
std::vector<std::array<std::size_t, 3>> scalar_entries(const FreeComplex<F>& c) {
  const F& f = c.algebra().field();
  std::vector<std::array<std::size_t, 3>> out;
  for (unsigned n = 1; n <= c.top_degree(); ++n) {
    const auto& d = c.d(n);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!f.is_zero(c.algebra().augmentation(d.at(i, j)))) out.push_back({n, i, j});
  }
  return out;
}

template <ExactField F>
std::vector<DtildeCase> verify_dtilde_cases(const Algebra<F>& A, unsigned n_max) {
  if (A.is_n2() || A.mode() != AlgebraMode::Full) wrong_mode("dtilde cases need N >= 3 in full mode");
  const F& f = A.field();
  const long long N = A.N();
  const auto& qb = A.qbar();
  auto p12 = [&](long long e) { return f.pow(A.q12(), e); };
  auto p21 = [&](long long e) { return f.pow(A.q21(), e); };
  const auto x1 = A.x1(), x2 = A.x2(), y = A.y();

  // [x1^(N-1), x2^(N-1)]_c in the k-form (PBW) and l-form (reverse basis)
  const auto bracket = A.braided_commutator(N - 1, N - 1);
  const auto rev = A.to_reverse_basis(bracket);
  Element<F> K = A.zero(), Lf = A.zero();
  bool shape_ok = true;
  for (const auto& [idx, c] : bracket.terms()) {
    const auto [a, b, e] = A.exponents(idx);
    if (!(a == e && a + b + 1 == A.N() && b >= 1)) shape_ok = false;
  }
  for (const auto& [idx, c] : rev) {
    const auto [a, b, e] = A.exponents(idx);
    if (!(a == e && a + b + 1 == A.N() && b >= 1)) shape_ok = false;
  }
  for (long long i = 1; i < N; ++i) {
    const long long t = N - 1 - i;
    const auto ki = f.mul(bracket.coeff(A.index(t, i, t)), p21(-i * t));
    K += (A.power(y, i - 1) * A.power(x1, t) * A.power(x2, t)).scaled(ki);
    typename F::Elem li = f.zero();
    for (const auto& [idx, c] : rev)
      if (idx == A.index(t, i, t)) li = f.mul(c, p21(i * t));
    Lf += (A.power(y, i - 1) * A.power(x2, t) * A.power(x1, t)).scaled(li);
  }
  const bool expansions = shape_ok && K * y == bracket && Lf * y == bracket;

  std::vector<DtildeCase> out;
  for (unsigned n = 2; n <= n_max; ++n) {
    for (const auto& g : p_generators(n)) {
      if (!has_dtilde(g)) continue;
      const auto [a1, a2, a3] = g;
      const long long h = a2 / 2;
      const auto D = dtilde_coefficient(A, g);
      DtildeCase dc{g, 0, false, true, {}};
      Element<F> cf, cf_alt;
      if (a1 % 2 && a3 % 2) {
        dc.parity_case = 1;
        cf = A.scalar(f.neg(p21(-h * N)));
      } else if (a1 % 2) {
        dc.parity_case = 2;
        const long long u = (a1 - 1) / 2 * N;
        auto c = f.mul(f.mul(p12((N - 1) * u), p21(-(N - 1) * h * N)), f.mul(qb, f.mul(p21(-(N - 2)), p21(u))));
        cf = A.power(x2, N - 2).scaled(c);
      } else if (a3 % 2) {
        dc.parity_case = 3;
        cf = A.power(x1, N - 2).scaled(p21(-h * N));
      } else {
        dc.parity_case = 4;
        const long long u = (a1 - 2) / 2 * N + 1;
        auto c = f.neg(f.mul(f.mul(p12((N - 1) * u), p21(-(N - 1) * h * N)), p21(u)));
        cf = K.scaled(c);
        cf_alt = Lf.scaled(c);
        dc.expansions_ok = expansions;
      }
      dc.matches = ((D - cf) * y).is_zero();
      if (dc.parity_case == 4) dc.matches = dc.matches && ((D - cf_alt) * y).is_zero();
      if (!dc.matches) dc.details = "generic " + D.str() + " vs closed form " + cf.str();
      out.push_back(std::move(dc));
    }
  }
  return out;
}

#define A2EXT_INSTANTIATE_RESOLUTION(F)                                                             \
  template class RMatrix<F>;                                                                        \
  template class FreeComplex<F>;                                                                    \
  template FreeComplex<F> build_resolution_N2<F>(std::shared_ptr<const Algebra<F>>, unsigned);      \
  template FreeComplex<F> build_P_complex<F>(std::shared_ptr<const Algebra<F>>, unsigned);          \
  template FreeComplex<F> build_minimal_segment<F>(std::shared_ptr<const Algebra<F>>);              \
  template SegmentElements<F> segment_elements<F>(const Algebra<F>&);                               \
  template Element<F> dtilde_coefficient<F>(const Algebra<F>&, const GeneratorIndex&);              \
  template ComplexReport verify_complex<F>(const FreeComplex<F>&);                                  \
  template ExactnessReport verify_exactness<F>(const FreeComplex<F>&, unsigned);                    \
  template bool is_minimal<F>(const FreeComplex<F>&);                                               \
  template std::vector<std::array<std::size_t, 3>> scalar_entries<F>(const FreeComplex<F>&);        \
  template std::vector<DtildeCase> verify_dtilde_cases<F>(const Algebra<F>&, unsigned);

A2EXT_INSTANTIATE_RESOLUTION(PrimeField)
A2EXT_INSTANTIATE_RESOLUTION(CyclotomicField)

}  // namespace a2ext
