#include "a2ext/qalgebra.hpp"

#include <algorithm>

namespace a2ext {

namespace {

// Sorts by index, sums duplicates, drops zeros.
template <ExactField F>
std::vector<typename Element<F>::Term> normalize(const F& f, std::vector<typename Element<F>::Term> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<typename Element<F>::Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = f.add(out.back().second, t.second);
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [&](const auto& t) { return f.is_zero(t.second); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

template <ExactField F>
typename F::Elem Element<F>::coeff(std::size_t index) const {
  for (const auto& [i, c] : terms_)
    if (i == index) return c;
  if (!alg_) throw AlgebraError(AlgebraError::Kind::Mismatch, "coefficient of a detached zero element");
  return alg_->field().zero();
}

template <ExactField F>
std::string Element<F>::str() const {
  return alg_ ? alg_->format(*this) : "0";
}

template <ExactField F>
Element<F> Element<F>::scaled(const Elem& c) const {
  if (!alg_ || terms_.empty()) return *this;
  const F& f = alg_->field();
  if (f.is_zero(c)) return Element(alg_, {});
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [i, v] : terms_) out.emplace_back(i, f.mul(c, v));
  return Element(alg_, std::move(out));
}

template <ExactField F>
Element<F> Element<F>::operator-() const {
  if (!alg_) return *this;
  const F& f = alg_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [i, v] : terms_) out.emplace_back(i, f.neg(v));
  return Element(alg_, std::move(out));
}

template <ExactField F>
Element<F> Element<F>::combine(const Element& a, const Element& b, bool subtract) {
  const Algebra<F>* alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) return Element();
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
    throw AlgebraError(AlgebraError::Kind::Mismatch, "elements of different algebras");
  const F& f = alg->field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.emplace_back(b.terms_[j].first, subtract ? f.neg(b.terms_[j].second) : b.terms_[j].second);
      ++j;
    } else {
      auto v = subtract ? f.sub(a.terms_[i].second, b.terms_[j].second) : f.add(a.terms_[i].second, b.terms_[j].second);
      if (!f.is_zero(v)) out.emplace_back(a.terms_[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return Element(alg, std::move(out));
}

template <ExactField F>
Element<F> Element<F>::product_of(const Element& a, const Element& b) {
  if (!a.alg_ || !b.alg_) return Element(a.alg_ ? a.alg_ : b.alg_, {});
  if (a.alg_ != b.alg_) throw AlgebraError(AlgebraError::Kind::Mismatch, "elements of different algebras");
  return a.alg_->multiply(a, b);
}

template <ExactField F>
bool Element<F>::equal(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  const F& f = (a.alg_ ? a.alg_ : b.alg_)->field();
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].first != b.terms_[k].first || !f.equal(a.terms_[k].second, b.terms_[k].second)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Construction

template <ExactField F>
BraidingParams<F> standard_params(const F& field, unsigned N, long long q12_exp, AlgebraMode mode) {
  BraidingParams<F> p;
  p.N = N;
  p.mode = mode;
  try {
    p.qbar = field.root_of_unity(N);
  } catch (const FieldError&) {
    throw AlgebraError(AlgebraError::Kind::InvalidBraiding,
                       "root order " + std::to_string(field.root_order()) + " is not divisible by N = " +
                           std::to_string(N) + "; choose L as a multiple of N (for example L = " +
                           std::to_string(N % 2 ? 2 * N * N : 4) + ")");
  }
  p.q12 = field.pow(field.root_of_unity(field.root_order()), q12_exp);
  return p;
}

template <ExactField F>
std::shared_ptr<const Algebra<F>> Algebra<F>::make(std::shared_ptr<const F> field, const BraidingParams<F>& params) {
  return std::shared_ptr<const Algebra>(new Algebra(std::move(field), params));
}

template <ExactField F>
Algebra<F>::Algebra(std::shared_ptr<const F> field, const BraidingParams<F>& params)
    : field_(std::move(field)), N_(params.N), mode_(params.mode) {
  const F& f = *field_;
  auto bad = [](const std::string& msg) { throw AlgebraError(AlgebraError::Kind::InvalidBraiding, msg); };
  if (N_ < 2 || (N_ > 2 && N_ % 2 == 0)) bad("N must be 2 or an odd integer >= 3, got " + std::to_string(N_));
  if (f.is_zero(params.qbar)) bad("qbar must be nonzero");
  if (f.order(params.qbar) != N_) bad("qbar does not have order N = " + std::to_string(N_));
  if (f.is_zero(params.q12)) bad("q12 must be nonzero");
  if (N_ == 2 && mode_ == AlgebraMode::Graded) bad("graded mode is not defined for N = 2");
  qbar_ = params.qbar;
  q12_ = params.q12;
  q21_ = f.inv(f.mul(qbar_, q12_));
  if (params.q21 && !f.equal(*params.q21, q21_)) bad("q12 * q21 * qbar != 1");

  if (N_ == 2) {
    words_ = {"", "1", "2", "12", "21", "121", "212", "1212"};
    dim_ = words_.size();
    build_n2_table();
  } else {
    dim_ = static_cast<std::size_t>(N_) * N_ * N_;
    build_pbw_table();
  }
}

template <ExactField F>
void Algebra<F>::build_n2_table() {
  const F& f = *field_;
  table_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::string& a = words_[i];
      const std::string& b = words_[j];
      if (!a.empty() && !b.empty() && a.back() == b.front()) continue;
      const std::string w = a + b;
      if (w.size() <= 3) {
        table_[i * dim_ + j] = {{static_cast<std::uint32_t>(word_index(w)), f.one()}};
      } else if (w.size() == 4) {
        // x2x1x2x1 = -x1x2x1x2
        table_[i * dim_ + j] = {{7u, w.front() == '1' ? f.one() : f.neg(f.one())}};
      }
    }
  }
}

template <ExactField F>
void Algebra<F>::build_pbw_table() {
  const F& f = *field_;
  const unsigned N = N_;
  const bool graded = mode_ == AlgebraMode::Graded;
  const Elem q12_inv = f.inv(q12_);
  const Elem one = f.one();

  // gen[g*dim + m] = e_m * generator g, g = 0 (x1), 1 (y), 2 (x2)
  std::vector<std::vector<Term>> gen(3 * dim_);
  std::vector<char> done(3 * dim_, 0);

  auto apply = [&](auto& self, const std::vector<Term>& terms, int g, const Elem& scale,
                   std::vector<Term>& raw) -> void {
    for (const auto& [m, c] : terms) {
      const auto& img = self(self, m, g);
      const Elem cs = f.mul(c, scale);
      for (const auto& [k, v] : img) raw.emplace_back(k, f.mul(cs, v));
    }
  };

  auto gen_mult = [&](auto& self, std::size_t m, int g) -> const std::vector<Term>& {
    const std::size_t key = static_cast<std::size_t>(g) * dim_ + m;
    if (done[key]) return gen[key];
    const auto [a, b, c] = exponents(m);
    std::vector<Term> raw;
    if (g == 2) {
      if (c + 1 < N) raw.emplace_back(static_cast<std::uint32_t>(index(a, b, c + 1)), one);
    } else if (g == 1) {
      if (c > 0) {
        // (m' x2) y = q21 (m' y) x2
        const auto t = self(self, index(a, b, c - 1), 1);
        apply(self, t, 2, q21_, raw);
      } else if (b + 1 < N) {
        raw.emplace_back(static_cast<std::uint32_t>(index(a, b + 1, 0)), one);
      }
    } else {
      if (c > 0) {
        // (m' x2) x1 = q12^-1 (m' x1) x2 - q12^-1 m' y
        const std::size_t mp = index(a, b, c - 1);
        const auto t = self(self, mp, 0);
        apply(self, t, 2, q12_inv, raw);
        if (!graded) {
          for (const auto& [k, v] : self(self, mp, 1)) raw.emplace_back(k, f.neg(f.mul(q12_inv, v)));
        }
      } else if (b > 0) {
        // (m' y) x1 = q21 (m' x1) y
        const auto t = self(self, index(a, b - 1, 0), 0);
        apply(self, t, 1, q21_, raw);
      } else if (a + 1 < N) {
        raw.emplace_back(static_cast<std::uint32_t>(index(a + 1, 0, 0)), one);
      }
    }
    gen[key] = normalize(f, std::move(raw));
    done[key] = 1;
    return gen[key];
  };

  for (int g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < dim_; ++m) gen_mult(gen_mult, m, g);

  table_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto [a, b, c] = exponents(j);
      if (j == 0) {
        table_[i * dim_] = {{static_cast<std::uint32_t>(i), one}};
        continue;
      }
      std::size_t prev;
      int g;
      if (c > 0) {
        prev = index(a, b, c - 1);
        g = 2;
      } else if (b > 0) {
        prev = index(a, b - 1, 0);
        g = 1;
      } else {
        prev = index(a - 1, 0, 0);
        g = 0;
      }
      std::vector<Term> raw;
      for (const auto& [m, cm] : table_[i * dim_ + prev]) {
        for (const auto& [k, v] : gen[static_cast<std::size_t>(g) * dim_ + m])
          raw.emplace_back(k, f.is_one(v) ? cm : f.mul(cm, v));
      }
      table_[i * dim_ + j] = normalize(f, std::move(raw));
    }
  }
}

// ---------------------------------------------------------------------------
// Basis

template <ExactField F>
std::size_t Algebra<F>::index(unsigned a, unsigned b, unsigned c) const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "PBW exponents are not used for N = 2");
  if (a >= N_ || b >= N_ || c >= N_) throw AlgebraError(AlgebraError::Kind::OutOfRange, "PBW exponent out of range");
  return (static_cast<std::size_t>(a) * N_ + b) * N_ + c;
}

template <ExactField F>
std::array<unsigned, 3> Algebra<F>::exponents(std::size_t idx) const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "PBW exponents are not used for N = 2");
  const auto n = static_cast<std::size_t>(N_);
  return {static_cast<unsigned>(idx / (n * n)), static_cast<unsigned>((idx / n) % n), static_cast<unsigned>(idx % n)};
}

template <ExactField F>
std::size_t Algebra<F>::word_index(std::string_view word) const {
  if (!is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "words index the N = 2 basis only");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] == word) return i;
  throw AlgebraError(AlgebraError::Kind::OutOfRange, "not a basis word: '" + std::string(word) + "'");
}

template <ExactField F>
std::string Algebra<F>::basis_label(std::size_t idx) const {
  if (idx >= dim_) throw AlgebraError(AlgebraError::Kind::OutOfRange, "basis index out of range");
  std::string out;
  auto add = [&](const char* name, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  if (is_n2()) {
    for (char ch : words_[idx]) add(ch == '1' ? "x1" : "x2", 1);
  } else {
    const auto [a, b, c] = exponents(idx);
    add("x1", a);
    add("y", b);
    add("x2", c);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Elements

template <ExactField F>
Element<F> Algebra<F>::scalar(const Elem& c) const {
  if (field_->is_zero(c)) return zero();
  return Element<F>(this, {{0u, c}});
}

template <ExactField F>
Element<F> Algebra<F>::basis(std::size_t idx) const {
  if (idx >= dim_) throw AlgebraError(AlgebraError::Kind::OutOfRange, "basis index out of range");
  return Element<F>(this, {{static_cast<std::uint32_t>(idx), field_->one()}});
}

template <ExactField F>
Element<F> Algebra<F>::x1() const {
  return is_n2() ? basis(word_index("1")) : monomial(1, 0, 0);
}

template <ExactField F>
Element<F> Algebra<F>::x2() const {
  return is_n2() ? basis(word_index("2")) : monomial(0, 0, 1);
}

template <ExactField F>
Element<F> Algebra<F>::y() const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "y is not a basis element for N = 2");
  return monomial(0, 1, 0);
}

template <ExactField F>
Element<F> Algebra<F>::from_vector(const std::vector<Elem>& coords) const {
  if (coords.size() != dim_) throw AlgebraError(AlgebraError::Kind::Mismatch, "coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!field_->is_zero(coords[i])) terms.emplace_back(static_cast<std::uint32_t>(i), coords[i]);
  return Element<F>(this, std::move(terms));
}

template <ExactField F>
std::vector<typename F::Elem> Algebra<F>::to_vector(const Element<F>& u) const {
  std::vector<Elem> v(dim_, field_->zero());
  for (const auto& [i, c] : u.terms()) v[i] = c;
  return v;
}

template <ExactField F>
Element<F> Algebra<F>::multiply(const Element<F>& u, const Element<F>& v) const {
  const F& f = *field_;
  std::vector<Term> raw;
  for (const auto& [i, a] : u.terms()) {
    for (const auto& [j, b] : v.terms()) {
      const auto& img = table_[i * dim_ + j];
      if (img.empty()) continue;
      const Elem ab = f.mul(a, b);
      for (const auto& [k, c] : img) raw.emplace_back(k, f.is_one(c) ? ab : f.mul(ab, c));
    }
  }
  return Element<F>(this, normalize(f, std::move(raw)));
}

template <ExactField F>
Element<F> Algebra<F>::power(const Element<F>& u, unsigned e) const {
  Element<F> r = one();
  for (unsigned k = 0; k < e; ++k) r = multiply(r, u);
  return r;
}

template <ExactField F>
Element<F> Algebra<F>::braided_commutator(unsigned m, unsigned n) const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "braided commutators need N >= 3");
  if (m < 1 || n < 1 || m >= N_ || n >= N_)
    throw AlgebraError(AlgebraError::Kind::OutOfRange, "braided commutator exponents must lie in [1, N-1]");
  const auto xm = power(x1(), m);
  const auto xn = power(x2(), n);
  const auto c = field_->pow(q12_, static_cast<long long>(m) * n);
  return multiply(xm, xn) - multiply(xn, xm).scaled(c);
}

template <ExactField F>
typename F::Elem Algebra<F>::augmentation(const Element<F>& u) const {
  for (const auto& [i, c] : u.terms())
    if (i == 0) return c;
  return field_->zero();
}

template <ExactField F>
SparseMatrix<F> Algebra<F>::right_mult_sparse(const Element<F>& m) const {
  const F& f = *field_;
  SparseMatrix<F> out(f, dim_, dim_);
  for (std::size_t u = 0; u < dim_; ++u) {
    std::vector<Term> raw;
    for (const auto& [j, b] : m.terms())
      for (const auto& [k, c] : table_[u * dim_ + j]) raw.emplace_back(k, f.mul(b, c));
    for (auto& [k, c] : normalize(f, std::move(raw))) out.push(u, k, std::move(c));
  }
  return out;
}

template <ExactField F>
KMatrix<F> Algebra<F>::right_mult_matrix(const Element<F>& m) const {
  return right_mult_sparse(m).to_dense();
}

// ---------------------------------------------------------------------------
// Reverse basis

template <ExactField F>
Element<F> Algebra<F>::reverse_monomial(unsigned a, unsigned b, unsigned c) const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "reverse PBW basis needs N >= 3");
  if (a >= N_ || b >= N_ || c >= N_) throw AlgebraError(AlgebraError::Kind::OutOfRange, "PBW exponent out of range");
  return multiply(multiply(power(x2(), c), power(y(), b)), power(x1(), a));
}

template <ExactField F>
const BlockedSolver<F>& Algebra<F>::reverse_solver() const {
  std::call_once(reverse_once_, [this] {
    SparseMatrix<F> conv(*field_, dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const auto [a, b, c] = exponents(r);
      const auto m = reverse_monomial(a, b, c);
      for (const auto& [k, v] : m.terms()) conv.push(r, k, v);
    }
    reverse_solver_ = std::make_unique<BlockedSolver<F>>(conv);
  });
  return *reverse_solver_;
}

template <ExactField F>
std::size_t Algebra<F>::reverse_basis_rank() const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "reverse PBW basis needs N >= 3");
  return reverse_solver().rank();
}

template <ExactField F>
std::vector<typename Algebra<F>::Term> Algebra<F>::to_reverse_basis(const Element<F>& u) const {
  if (is_n2()) throw AlgebraError(AlgebraError::Kind::WrongMode, "reverse PBW basis needs N >= 3");
  auto x = reverse_solver().solve(to_vector(u));
  if (!x) throw AlgebraError(AlgebraError::Kind::Mismatch, "reverse monomials do not span R");
  std::vector<Term> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!field_->is_zero((*x)[i])) out.emplace_back(static_cast<std::uint32_t>(i), (*x)[i]);
  return out;
}

template <ExactField F>
Element<F> Algebra<F>::from_reverse_basis(const std::vector<Term>& coeffs) const {
  Element<F> out = zero();
  for (const auto& [i, c] : coeffs) {
    const auto [a, b, e] = exponents(i);
    out += reverse_monomial(a, b, e).scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division

template <ExactField F>
std::optional<Element<F>> Algebra<F>::try_right_divide(const Element<F>& w, const Element<F>& m) const {
  if (m.is_zero()) throw AlgebraError(AlgebraError::Kind::NotDivisible, "division by zero element");
  BlockedSolver<F> solver(right_mult_sparse(m));
  auto x = solver.solve(to_vector(w));
  if (!x) return std::nullopt;
  return from_vector(*x);
}

template <ExactField F>
Element<F> Algebra<F>::right_divide(const Element<F>& w, const Element<F>& m) const {
  auto x = try_right_divide(w, m);
  if (!x) throw AlgebraError(AlgebraError::Kind::NotDivisible, "'" + m.str() + "' is not a right divisor of '" + w.str() + "'");
  return *x;
}

// ---------------------------------------------------------------------------
// Printing

template <ExactField F>
std::string Algebra<F>::format_scalar(const Elem& c) const {
  const F& f = *field_;
  if (f.is_zero(c)) return "0";
  bool negative = false;
  const int k = f.zeta_log(c, &negative);
  if (k >= 0) {
    std::string base = k == 0 ? "1" : (k == 1 ? "z" : "z^" + std::to_string(k));
    return negative ? "-" + base : base;
  }
  std::string s = f.to_string(c);
  if (s.find(' ') != std::string::npos) s = "(" + s + ")";
  return s;
}

template <ExactField F>
std::string Algebra<F>::format(const Element<F>& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : u.terms()) {
    const std::string cs = format_scalar(c);
    const std::string label = basis_label(i);
    std::string piece;
    if (label == "1")
      piece = cs;
    else if (cs == "1")
      piece = label;
    else if (cs == "-1")
      piece = "-" + label;
    else
      piece = cs + " * " + label;
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

#define A2EXT_INSTANTIATE_QALGEBRA(F)                                                  \
  template class Element<F>;                                                           \
  template class Algebra<F>;                                                           \
  template BraidingParams<F> standard_params<F>(const F&, unsigned, long long, AlgebraMode);

A2EXT_INSTANTIATE_QALGEBRA(PrimeField)
A2EXT_INSTANTIATE_QALGEBRA(CyclotomicField)

}  // namespace a2ext
