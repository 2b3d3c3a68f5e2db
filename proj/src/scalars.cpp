#include "a2ext/scalars.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace a2ext {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;
constexpr unsigned kMaxRootOrder = 1000;

[[noreturn]] void invalid(const std::string& msg) { throw FieldError(FieldError::Kind::InvalidSpec, msg); }

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    invalid(std::string("field spec: bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Polynomials over Z, constant term first.
using IntPoly = std::vector<long long>;

IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

// Polynomials over Q, constant term first, no trailing zeros (zero = empty).
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    mpq_class c = a[i + b.size() - 1] / lead;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mulpoly(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly subpoly(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t smallest_prime_1_mod(unsigned L, std::uint64_t lower_bound) {
  if (L == 0) invalid("root order must be positive");
  std::uint64_t p = lower_bound + 1;
  std::uint64_t r = p % L;
  if (r != 1 % L) p += (L + 1 - r) % L;
  for (; p <= kMaxPrime; p += L)
    if (p > 2 && is_prime(p)) return p;
  invalid("no prime = 1 mod L below 2^32");
}

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec spec;
  auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("field spec must be cyclotomic:L or fp:p:L, got '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (kind == "cyclotomic") {
    spec.mode = FieldMode::Cyclotomic;
    spec.root_order = static_cast<unsigned>(parse_uint(rest, "root order"));
  } else if (kind == "fp") {
    auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) invalid("fp spec must be fp:p:L");
    spec.mode = FieldMode::PrimeField;
    spec.prime = parse_uint(rest.substr(0, c2), "prime");
    spec.root_order = static_cast<unsigned>(parse_uint(rest.substr(c2 + 1), "root order"));
  } else {
    invalid("unknown field kind '" + std::string(kind) + "'");
  }
  validate_field_spec(spec);
  return spec;
}

std::string format_field_spec(const FieldSpec& spec) {
  if (spec.mode == FieldMode::Cyclotomic) return "cyclotomic:" + std::to_string(spec.root_order);
  return "fp:" + std::to_string(spec.prime) + ":" + std::to_string(spec.root_order);
}

void validate_field_spec(const FieldSpec& spec) {
  if (spec.root_order == 0) invalid("root order L must be >= 1");
  if (spec.root_order > kMaxRootOrder) invalid("root order L too large (max 1000)");
  if (spec.mode == FieldMode::PrimeField) {
    const auto p = spec.prime;
    if (p > kMaxPrime) invalid("prime must be below 2^32");
    if (!is_prime(p)) invalid(std::to_string(p) + " is not prime");
    if (p == 2) invalid("characteristic 2 is not supported");
    if (p % spec.root_order != 1 % spec.root_order)
      invalid(std::to_string(p) + " is not 1 mod " + std::to_string(spec.root_order));
    if (p <= spec.root_order) invalid("prime must exceed the root order");
  }
}

std::vector<std::string> field_warnings(const FieldSpec& spec) {
  std::vector<std::string> out;
  if (spec.mode == FieldMode::PrimeField && spec.prime < 1000)
    out.push_back("small characteristic " + std::to_string(spec.prime) +
                  ": results are only cross-checked against characteristic 0 by cyclotomic runs");
  return out;
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(const FieldSpec& spec) : spec_(spec) {
  if (spec.mode != FieldMode::PrimeField) invalid("PrimeField needs an fp spec");
  validate_field_spec(spec);
  p_ = static_cast<std::uint32_t>(spec.prime);
  const std::uint64_t group = p_ - 1;
  const auto factors = prime_factors(group);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool primitive = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint64_t q) { return powmod(g, group / q, p_) != 1; });
    if (primitive) break;
  }
  zeta_ = {static_cast<std::uint32_t>(powmod(g, group / spec.root_order, p_))};
  zeta_powers_.reserve(spec.root_order);
  Elem z = one();
  for (unsigned k = 0; k < spec.root_order; ++k) {
    zeta_powers_.push_back(z);
    z = mul(z, zeta_);
  }
}

PrimeField::Elem PrimeField::from_int(long long n) const noexcept {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

PrimeField::Elem PrimeField::from_rational(long long num, long long den) const {
  return mul(from_int(num), inv(from_int(den)));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a.v == 0) throw FieldError(FieldError::Kind::DivisionByZero, "inverse of zero");
  return {static_cast<std::uint32_t>(powmod(a.v, p_ - 2, p_))};
}

PrimeField::Elem PrimeField::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return {static_cast<std::uint32_t>(powmod(a.v, static_cast<std::uint64_t>(e), p_))};
}

PrimeField::Elem PrimeField::root_of_unity(unsigned d) const {
  if (d == 0 || spec_.root_order % d != 0)
    throw FieldError(FieldError::Kind::NotDivisor,
                     std::to_string(d) + " does not divide " + std::to_string(spec_.root_order));
  return zeta_powers_[(spec_.root_order / d) % spec_.root_order];
}

unsigned PrimeField::order(Elem a) const {
  if (a.v == 0) throw FieldError(FieldError::Kind::ZeroElement, "order of zero");
  std::uint64_t m = p_ - 1;
  for (auto q : prime_factors(p_ - 1))
    while (m % q == 0 && powmod(a.v, m / q, p_) == 1) m /= q;
  return static_cast<unsigned>(m);
}

int PrimeField::zeta_log(Elem a, bool* negative) const {
  for (unsigned k = 0; k < zeta_powers_.size(); ++k) {
    if (zeta_powers_[k] == a) {
      *negative = false;
      return static_cast<int>(k);
    }
  }
  const Elem na = neg(a);
  for (unsigned k = 0; k < zeta_powers_.size(); ++k) {
    if (zeta_powers_[k] == na) {
      *negative = true;
      return static_cast<int>(k);
    }
  }
  return -1;
}

std::string PrimeField::to_string(Elem a) const { return std::to_string(a.v); }

// ---------------------------------------------------------------------------

std::vector<long long> cyclotomic_polynomial(unsigned L) {
  if (L == 0) invalid("cyclotomic polynomial of order 0");
  IntPoly num(L + 1, 0);
  num[0] = -1;
  num[L] = 1;
  for (unsigned d = 1; d < L; ++d)
    if (L % d == 0) num = exact_divide(num, cyclotomic_polynomial(d));
  return num;
}

CyclotomicField::CyclotomicField(const FieldSpec& spec) : spec_(spec) {
  if (spec.mode != FieldMode::Cyclotomic) invalid("CyclotomicField needs a cyclotomic spec");
  validate_field_spec(spec);
  phi_ = cyclotomic_polynomial(spec.root_order);
  Elem z = one();
  const Elem gen = zeta();
  for (unsigned k = 0; k < spec.root_order; ++k) {
    zeta_powers_.push_back(z);
    z = mul(z, gen);
  }
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<mpq_class> poly) const {
  const std::size_t d = degree();
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    mpq_class c = poly[i];
    // x^i = x^(i-d) * x^d, and x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})
    for (std::size_t j = 0; j < d; ++j)
      if (phi_[j] != 0) poly[i - d + j] -= c * static_cast<long>(phi_[j]);
    poly[i] = 0;
  }
  poly.resize(d, 0);
  return Elem{std::move(poly)};
}

CyclotomicField::Elem CyclotomicField::zero() const { return Elem{std::vector<mpq_class>(degree(), 0)}; }

CyclotomicField::Elem CyclotomicField::one() const { return from_int(1); }

CyclotomicField::Elem CyclotomicField::from_int(long long n) const {
  Elem e = zero();
  if (degree() > 0) e.c[0] = mpq_class(static_cast<long>(n));
  return e;
}

CyclotomicField::Elem CyclotomicField::from_rational(long long num, long long den) const {
  if (den == 0) throw FieldError(FieldError::Kind::DivisionByZero, "zero denominator");
  Elem e = zero();
  e.c[0] = mpq_class(static_cast<long>(num), static_cast<long>(den));
  e.c[0].canonicalize();
  return e;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  const std::size_t d = degree();
  std::vector<mpq_class> prod(d == 0 ? 0 : 2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c[j] != 0) prod[i + j] += a.c[i] * b.c[j];
  }
  return reduce(std::move(prod));
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw FieldError(FieldError::Kind::DivisionByZero, "inverse of zero");
  // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
  QPoly r0;
  for (long long v : phi_) r0.emplace_back(static_cast<long>(v));
  QPoly r1(a.c.begin(), a.c.end());
  trim(r0);
  trim(r1);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = subpoly(s0, mulpoly(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return reduce(std::move(s1));
}

CyclotomicField::Elem CyclotomicField::pow(const Elem& a, long long e) const {
  Elem base = e < 0 ? inv(a) : a;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return r;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](const mpq_class& x) { return x == 0; });
}

bool CyclotomicField::is_one(const Elem& a) const { return a == one(); }

CyclotomicField::Elem CyclotomicField::zeta() const {
  std::vector<mpq_class> x(2, 0);
  x[1] = 1;
  return reduce(std::move(x));
}

CyclotomicField::Elem CyclotomicField::root_of_unity(unsigned d) const {
  if (d == 0 || spec_.root_order % d != 0)
    throw FieldError(FieldError::Kind::NotDivisor,
                     std::to_string(d) + " does not divide " + std::to_string(spec_.root_order));
  return zeta_powers_[(spec_.root_order / d) % spec_.root_order];
}

unsigned CyclotomicField::order(const Elem& a) const {
  if (is_zero(a)) throw FieldError(FieldError::Kind::ZeroElement, "order of zero");
  // The roots of unity in Q(z_L) are +-z^k, so any torsion order divides 2L.
  const unsigned bound = 2 * spec_.root_order;
  Elem x = a;
  for (unsigned m = 1; m <= bound; ++m) {
    if (is_one(x)) return m;
    x = mul(x, a);
  }
  throw FieldError(FieldError::Kind::NotTorsion, "element is not a root of unity");
}

int CyclotomicField::zeta_log(const Elem& a, bool* negative) const {
  const Elem na = neg(a);
  for (unsigned k = 0; k < zeta_powers_.size(); ++k) {
    if (zeta_powers_[k] == a) {
      *negative = false;
      return static_cast<int>(k);
    }
    if (zeta_powers_[k] == na) {
      *negative = true;
      return static_cast<int>(k);
    }
  }
  return -1;
}

std::string CyclotomicField::to_string(const Elem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const mpq_class& q = a.c[i];
    if (q == 0) continue;
    const bool negative = q < 0;
    mpq_class mag = negative ? mpq_class(-q) : q;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace a2ext
