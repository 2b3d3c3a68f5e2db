#pragma once

// Exact scalar fields containing a primitive L-th root of unity.
//
// Two interchangeable implementations share one duck-typed interface
// (see the ExactField concept at the bottom of this header):
//
//   PrimeField       F_p with p = 1 (mod L), elements are residues
//   CyclotomicField  Q(z) = Q[x]/(Phi_L), elements are rational vectors
//
// Field objects are immutable after construction and can be shared
// between threads. Elements are plain values without a back pointer to
// their field; Scalar<F> pairs the two for readable formulas.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace a2ext {

enum class FieldMode { Cyclotomic, PrimeField };

struct FieldSpec {
  FieldMode mode = FieldMode::PrimeField;
  unsigned root_order = 1;  // L
  std::uint64_t prime = 0;  // PrimeField mode only

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class FieldError : public std::runtime_error {
 public:
  enum class Kind { InvalidSpec, NotDivisor, ZeroElement, NotTorsion, DivisionByZero, Parse };

  FieldError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Parses "cyclotomic:L" or "fp:p:L". Throws FieldError(InvalidSpec).
FieldSpec parse_field_spec(std::string_view text);
std::string format_field_spec(const FieldSpec& spec);

/// Throws FieldError(InvalidSpec) when the spec violates its invariants.
void validate_field_spec(const FieldSpec& spec);

/// Non-fatal remarks about a valid spec (small characteristic etc).
std::vector<std::string> field_warnings(const FieldSpec& spec);

/// Smallest prime p > lower_bound with p = 1 (mod L).
std::uint64_t smallest_prime_1_mod(unsigned L, std::uint64_t lower_bound);

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Prime field
// ---------------------------------------------------------------------------

struct FpElem {
  std::uint32_t v = 0;
  friend bool operator==(FpElem, FpElem) = default;
};

class PrimeField {
 public:
  using Elem = FpElem;

  explicit PrimeField(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned root_order() const noexcept { return spec_.root_order; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  Elem from_int(long long n) const noexcept;
  Elem from_rational(long long num, long long den) const;

  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a.v} + b.v;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return {a.v >= b.v ? a.v - b.v : static_cast<std::uint32_t>(std::uint64_t{a.v} + p_ - b.v)};
  }
  Elem neg(Elem a) const noexcept { return {a.v == 0 ? 0 : p_ - a.v}; }
  Elem mul(Elem a, Elem b) const noexcept {
    return {static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)};
  }
  /// a - b*c, the elimination kernel's inner operation.
  Elem sub_mul(Elem a, Elem b, Elem c) const noexcept { return sub(a, mul(b, c)); }

  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;

  bool is_zero(Elem a) const noexcept { return a.v == 0; }
  bool is_one(Elem a) const noexcept { return a.v == 1; }
  bool equal(Elem a, Elem b) const noexcept { return a.v == b.v; }

  /// Primitive L-th root of unity g^((p-1)/L), g the least primitive root mod p.
  Elem zeta() const noexcept { return zeta_; }
  Elem root_of_unity(unsigned d) const;
  unsigned order(Elem a) const;

  /// z^k for k in [0, L) if a = +-z^k; returns -1 otherwise. Sign reported in *negative.
  int zeta_log(Elem a, bool* negative) const;

  std::string to_string(Elem a) const;

 private:
  FieldSpec spec_;
  std::uint32_t p_;
  Elem zeta_;
  std::vector<Elem> zeta_powers_;  // z^0 .. z^(L-1)
};

// ---------------------------------------------------------------------------
// Cyclotomic field Q(z), z a primitive L-th root of unity
// ---------------------------------------------------------------------------

struct CycElem {
  std::vector<mpq_class> c;  // length deg(Phi_L), canonical
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.c == b.c; }
};

/// Integer coefficients of the L-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(unsigned L);

class CyclotomicField {
 public:
  using Elem = CycElem;

  explicit CyclotomicField(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned root_order() const noexcept { return spec_.root_order; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }
  const std::vector<long long>& modulus() const noexcept { return phi_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_rational(long long num, long long den) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem sub_mul(const Elem& a, const Elem& b, const Elem& c) const { return sub(a, mul(b, c)); }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long e) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a.c == b.c; }

  Elem zeta() const;
  Elem root_of_unity(unsigned d) const;
  unsigned order(const Elem& a) const;
  int zeta_log(const Elem& a, bool* negative) const;

  std::string to_string(const Elem& a) const;

 private:
  Elem reduce(std::vector<mpq_class> poly) const;

  FieldSpec spec_;
  std::vector<long long> phi_;
  std::vector<Elem> zeta_powers_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, long long n) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.from_int(n) } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub_mul(a, a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.pow(a, n) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.root_of_unity(1u) } -> std::convertible_to<typename F::Elem>;
  { f.order(a) } -> std::same_as<unsigned>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<CyclotomicField>);

/// A field element bundled with its field, for writing coefficient formulas.
/// The field must outlive the scalar.
template <ExactField F>
class Scalar {
 public:
  using Elem = typename F::Elem;

  Scalar(const F& field, Elem value) : field_(&field), value_(std::move(value)) {}

  const F& field() const { return *field_; }
  const Elem& value() const { return value_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->add(a.value_, b.value_)}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->sub(a.value_, b.value_)}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->mul(a.value_, b.value_)}; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return {*a.field_, a.field_->mul(a.value_, a.field_->inv(b.value_))};
  }
  friend Scalar operator-(const Scalar& a) { return {*a.field_, a.field_->neg(a.value_)}; }
  friend Scalar operator*(long long n, const Scalar& a) { return {*a.field_, a.field_->mul(a.field_->from_int(n), a.value_)}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.field_->equal(a.value_, b.value_); }

  Scalar pow(long long e) const { return {*field_, field_->pow(value_, e)}; }
  bool is_zero() const { return field_->is_zero(value_); }
  std::string str() const { return field_->to_string(value_); }

 private:
  const F* field_;
  Elem value_;
};

template <ExactField F>
Scalar<F> pow(const Scalar<F>& s, long long e) {
  return s.pow(e);
}

}  // namespace a2ext
