#include <doctest.h>

#include "a2ext/scalars.hpp"

using namespace a2ext;

TEST_SUITE("scalars") {

TEST_CASE("field spec parsing and validation") {
  CHECK(parse_field_spec("cyclotomic:9") == FieldSpec{FieldMode::Cyclotomic, 9, 0});
  CHECK(parse_field_spec("fp:7:3") == FieldSpec{FieldMode::PrimeField, 3, 7});
  CHECK(format_field_spec(parse_field_spec("fp:7:3")) == "fp:7:3");
  CHECK_THROWS_AS(parse_field_spec("cyc:3"), FieldError);
  CHECK_THROWS_AS(parse_field_spec("fp:7"), FieldError);
  // 8 is not prime; 4 does not divide 7 - 1
  CHECK_THROWS_AS(validate_field_spec(FieldSpec{FieldMode::PrimeField, 2, 8}), FieldError);
  CHECK_THROWS_AS(validate_field_spec(FieldSpec{FieldMode::PrimeField, 4, 7}), FieldError);
  CHECK_NOTHROW(validate_field_spec(FieldSpec{FieldMode::PrimeField, 6, 7}));
}

TEST_CASE("smallest prime congruent to 1") {
  // brute force over the integers above the bound
  for (unsigned L : {4u, 18u, 50u}) {
    std::uint64_t expect = 1000001;
    while (!(expect % L == 1 && is_prime(expect))) ++expect;
    CHECK(smallest_prime_1_mod(L, 1000000) == expect);
  }
  CHECK(is_prime(1000081));
  CHECK_FALSE(is_prime(1000083 * 3));
  CHECK(smallest_prime_1_mod(3, 3) == 7);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(FieldSpec{FieldMode::PrimeField, 6, 7});
  CHECK(f.characteristic() == 7);
  CHECK(f.add(f.from_int(5), f.from_int(4)) == f.from_int(2));
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.mul(f.from_rational(1, 2), f.from_int(2)) == f.one());
  for (long long a = 1; a < 7; ++a) CHECK(f.mul(f.from_int(a), f.inv(f.from_int(a))) == f.one());
  CHECK_THROWS_AS(f.inv(f.zero()), FieldError);
  CHECK(f.order(f.zeta()) == 6);
  CHECK(f.pow(f.zeta(), 6) == f.one());
  CHECK(f.order(f.root_of_unity(3)) == 3);
  // 3 is the least primitive root mod 7, so zeta = 3^1
  CHECK(f.zeta() == f.from_int(3));
  bool neg = false;
  CHECK(f.zeta_log(f.pow(f.zeta(), 4), &neg) == 4);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  // Phi_18(x) = Phi_9(-x) = x^6 - x^3 + 1
  CHECK(cyclotomic_polynomial(18) == std::vector<long long>{1, 0, 0, -1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field arithmetic") {
  CyclotomicField f(FieldSpec{FieldMode::Cyclotomic, 3, 0});
  const auto z = f.zeta();
  // z^2 = -1 - z in Q(zeta_3)
  CHECK(f.mul(z, z) == f.sub(f.neg(f.one()), z));
  CHECK(f.pow(z, 3) == f.one());
  CHECK(f.order(z) == 3);
  CHECK(f.mul(z, f.inv(z)) == f.one());
  const auto w = f.add(f.from_rational(2, 3), z);
  CHECK(f.mul(w, f.inv(w)) == f.one());
  CHECK(f.pow(w, -2) == f.inv(f.mul(w, w)));

  CyclotomicField g(FieldSpec{FieldMode::Cyclotomic, 18, 0});
  CHECK(g.order(g.zeta()) == 18);
  CHECK(g.order(g.root_of_unity(3)) == 3);
  CHECK(g.pow(g.zeta(), 9) == g.neg(g.one()));
  bool neg = false;
  CHECK(g.zeta_log(g.neg(g.pow(g.zeta(), 2)), &neg) >= 0);
  CHECK_THROWS_AS(g.root_of_unity(4), FieldError);
}

}
