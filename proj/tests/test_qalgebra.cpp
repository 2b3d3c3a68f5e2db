#include <doctest.h>

#include <random>

#include "a2ext/qalgebra.hpp"

using namespace a2ext;

namespace {

template <class F>
std::shared_ptr<const Algebra<F>> make_algebra(const std::string& spec, unsigned N, long long q12_exp,
                                               AlgebraMode mode = AlgebraMode::Full) {
  auto f = std::make_shared<const F>(parse_field_spec(spec));
  return Algebra<F>::make(f, standard_params(*f, N, q12_exp, mode));
}

template <class F>
Element<F> random_element(const Algebra<F>& A, std::mt19937_64& rng) {
  std::vector<typename F::Elem> v(A.dim(), A.field().zero());
  std::uniform_int_distribution<long long> d(-3, 3);
  for (auto& c : v) c = A.field().from_int(d(rng));
  return A.from_vector(v);
}

}  // namespace

TEST_SUITE("qalgebra") {

TEST_CASE("defining relations hold for N = 3") {
  auto A = make_algebra<PrimeField>("fp:1000081:18", 3, 1);
  const auto& f = A->field();
  CHECK(A->dim() == 27);
  const auto x1 = A->x1(), x2 = A->x2(), y = A->y();
  CHECK(A->power(x1, 3).is_zero());
  CHECK(A->power(x2, 3).is_zero());
  CHECK(A->power(y, 3).is_zero());
  CHECK_FALSE(A->power(y, 2).is_zero());
  // y = x1 x2 - q12 x2 x1
  CHECK(y == x1 * x2 - A->q12() * (x2 * x1));
  // q21 x1 y = y x1 and x2 y = q21 y x2
  CHECK(A->q21() * (x1 * y) == y * x1);
  CHECK(x2 * y == A->q21() * (y * x2));
  CHECK(f.mul(f.mul(A->qbar(), A->q12()), A->q21()) == f.one());
  CHECK(f.order(A->qbar()) == 3);
  CHECK(A->augmentation(A->integer(5) + x1) == f.from_int(5));
}

TEST_CASE("multiplication is associative") {
  auto A = make_algebra<PrimeField>("fp:1000081:18", 3, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(*A, rng), b = random_element(*A, rng), c = random_element(*A, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  auto G = make_algebra<PrimeField>("fp:1000081:18", 3, 1, AlgebraMode::Graded);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_element(*G, rng), b = random_element(*G, rng), c = random_element(*G, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("PBW monomials and the reverse ordering") {
  for (unsigned N : {3u, 5u}) {
    const unsigned L = 2 * N * N;
    auto A = make_algebra<PrimeField>("fp:" + std::to_string(smallest_prime_1_mod(L, 1000000)) + ":" + std::to_string(L), N, 1);
    CHECK(A->dim() == N * N * N);
    CHECK(A->reverse_basis_rank() == A->dim());
    CHECK(A->power(A->x1(), 2) * A->y() * A->x2() == A->monomial(2, 1, 1));
  }
  auto A = make_algebra<PrimeField>("fp:1000081:18", 3, 1);
  // x1 x2 = q12 x2 x1 + y along the reverse basis
  const auto coeffs = A->to_reverse_basis(A->x1() * A->x2());
  REQUIRE(coeffs.size() == 2);
  CHECK(A->from_reverse_basis(coeffs) == A->x1() * A->x2());
  CHECK(A->reverse_monomial(1, 0, 1) == A->x2() * A->x1());
}

TEST_CASE("graded mode drops the y correction") {
  auto G = make_algebra<PrimeField>("fp:1000081:18", 3, 1, AlgebraMode::Graded);
  CHECK(G->x1() * G->x2() == G->q12() * (G->x2() * G->x1()));
  CHECK(G->dim() == 27);
}

TEST_CASE("N = 2 relations") {
  auto A = make_algebra<PrimeField>("fp:1000033:4", 2, 1);
  CHECK(A->dim() == 8);
  CHECK(A->power(A->x1(), 2).is_zero());
  CHECK(A->power(A->x2(), 2).is_zero());
  CHECK(A->parse("x1 x2 x1 x2 + x2 x1 x2 x1").is_zero());
  CHECK_FALSE(A->parse("x1 x2 x1 x2").is_zero());
  CHECK(A->parse("x1 x2 x1 x2 x1").is_zero());
  CHECK_THROWS_AS(A->y(), AlgebraError);
  CHECK_THROWS_AS(make_algebra<PrimeField>("fp:1000033:4", 2, 1, AlgebraMode::Graded), AlgebraError);
}

TEST_CASE("right division") {
  auto A = make_algebra<PrimeField>("fp:1000081:18", 3, 1);
  const auto w = A->parse("(x1 + 2 x2) y");
  const auto X = A->right_divide(w, A->y());
  CHECK(X * A->y() == w);
  CHECK_FALSE(A->try_right_divide(A->one(), A->x1()));
  CHECK_THROWS_AS(A->right_divide(A->one(), A->x1()), AlgebraError);
  // [x1^2, x2^2]_c is right divisible by y
  const auto b = A->braided_commutator(2, 2);
  CHECK(A->right_divide(b, A->y()) * A->y() == b);
  CHECK_THROWS_AS(A->braided_commutator(3, 1), AlgebraError);
}

TEST_CASE("parser and formatter") {
  auto A = make_algebra<CyclotomicField>("cyclotomic:18", 3, 1);
  const auto u = A->parse("z^2 * x1^2 y x2 - 3/2 y^2 + 7");
  CHECK(A->parse(A->format(u)) == u);
  CHECK(A->parse("x2 x1") == A->parse("z^-1 x1 x2 - z^-1 y"));
  CHECK(A->parse("(x1 + x2)^2") == A->parse("x1^2 + x1 x2 + x2 x1 + x2^2"));
  CHECK(A->parse("0").is_zero());
  CHECK_THROWS_AS(A->parse("x1 +"), AlgebraError);
  CHECK_THROWS_AS(A->parse("x3"), AlgebraError);
  CHECK_THROWS_AS(A->parse("1 / x1"), AlgebraError);
  CHECK_THROWS_AS(A->parse("1/0"), std::exception);
}

TEST_CASE("bad braiding is rejected") {
  auto f = std::make_shared<const PrimeField>(parse_field_spec("fp:13:4"));
  CHECK_THROWS_AS(standard_params(*f, 3, 1), AlgebraError);
  // qbar = z has order 4, which is neither 2 nor odd
  CHECK_THROWS_AS(Algebra<PrimeField>::make(f, standard_params(*f, 4, 1)), AlgebraError);
}

}
