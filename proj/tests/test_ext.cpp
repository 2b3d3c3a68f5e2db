#include <doctest.h>

#include "a2ext/ext_checks.hpp"

using namespace a2ext;

namespace {

std::shared_ptr<const Algebra<PrimeField>> algebra(unsigned N, AlgebraMode mode = AlgebraMode::Full) {
  const unsigned L = N == 2 ? 4 : 2 * N * N;
  auto f = std::make_shared<const PrimeField>(FieldSpec{FieldMode::PrimeField, L, smallest_prime_1_mod(L, 1000000)});
  return Algebra<PrimeField>::make(f, standard_params(*f, N, 1, mode));
}

template <class Builder>
ExtEngine<PrimeField> engine(Builder build) {
  return ExtEngine<PrimeField>(std::make_shared<const FreeComplex<PrimeField>>(build()));
}

// (3n^2+8n+5)/8 for odd n, (3n^2+10n+8)/8 for even n, evaluated by hand
const std::vector<std::size_t> kDimsN3{1, 2, 5, 7, 12, 15, 22, 26, 35};

}  // namespace

TEST_SUITE("ext") {

TEST_CASE("dimensions from the complex P") {
  auto A = algebra(3);
  auto e = engine([&] { return build_P_complex(A, 7); });
  const auto dims = ext_dimensions(e.cochains(), 6);
  CHECK(dims == std::vector<std::size_t>(kDimsN3.begin(), kDimsN3.begin() + 7));
  for (unsigned n = 0; n <= 6; ++n) CHECK(e.dimension(n) == dims[n]);
  CHECK_THROWS_AS(ext_dimensions(e.cochains(), 7), ExtError);

  auto G = algebra(3, AlgebraMode::Graded);
  auto g = engine([&] { return build_P_complex(G, 7); });
  CHECK(g.cochains().all_zero());
  for (unsigned n = 0; n <= 6; ++n) CHECK(g.dimension(n) == (n + 1) * (n + 2) / 2);

  auto B = algebra(2);
  auto b = engine([&] { return build_resolution_N2(B, 7); });
  for (unsigned n = 0; n <= 6; ++n) CHECK(b.dimension(n) == n + 1);
}

TEST_CASE("class arithmetic") {
  auto A = algebra(3);
  auto e = engine([&] { return build_minimal_segment(A); });
  const auto& f = A->field();
  const auto a1 = e.unit(1, 0);
  CHECK(e.is_cocycle(a1));
  CHECK_FALSE(e.is_zero(a1));
  CHECK(e.is_zero(e.zero(2)));
  CHECK(e.equal(e.add(a1, e.zero(1)), a1));
  CHECK(e.is_zero(e.add(a1, e.scaled(a1, f.neg(f.one())))));
  CHECK(e.coordinates(a1).size() == 2);
  CHECK_THROWS_AS(e.add(a1, e.zero(2)), ExtError);
}

TEST_CASE("lifts are chain maps and products have the right degree") {
  auto A = algebra(3);
  const auto p = std::make_shared<const FreeComplex<PrimeField>>(build_P_complex(A, 6));
  ExtEngine<PrimeField> e(p);
  for (const auto& phi : e.basis(2)) {
    const auto lift = e.lift(phi, 3);
    REQUIRE(lift.steps.size() == 4);
    for (unsigned i = 1; i <= 3; ++i) CHECK(lift.steps[i] * p->d(i) == p->d(2 + i) * lift.steps[i - 1]);
  }
  const auto one = e.unit(0, 0);
  for (const auto& x : e.basis(2)) {
    CHECK(e.equal(e.product(one, x, Convention::LeftThenRight), x));
    CHECK(e.equal(e.product(x, one, Convention::LeftThenRight), x));
    CHECK(e.product(x, e.basis(1)[0], Convention::LeftThenRight).degree == 3);
  }
  CHECK_THROWS_AS(e.lift(e.unit(4, 0), 3), ExtError);
}

TEST_CASE("relations and their convention") {
  for (unsigned N : {2u, 3u}) {
    auto A = algebra(N);
    auto e = N == 2 ? engine([&] { return build_resolution_N2(A, 6); }) : engine([&] { return build_minimal_segment(A); });
    const auto left = verify_relations(e, Convention::LeftThenRight);
    CHECK(left.size() == relation_table(*A).size());
    for (const auto& v : left) {
      INFO(v.text);
      CHECK(v.holds);
    }
    CHECK(all_pass(relation_checks(left, Convention::LeftThenRight)));
    if (N == 3) {
      const auto right = verify_relations(e, Convention::RightThenLeft);
      std::size_t fails = 0;
      for (const auto& v : right) fails += !v.holds;
      CHECK(fails > 0);
    }
  }
  CHECK(standard_generators(engine([&] { return build_minimal_segment(algebra(5)); })).size() == 7);
}

TEST_CASE("E2 bookkeeping") {
  std::vector<unsigned> first;
  for (unsigned q = 0; q < 8; ++q) first.push_back(e2_dimension(0, q));
  CHECK(first == std::vector<unsigned>{1, 1, 3, 2, 5, 3, 7, 4});
  CHECK(e2_column_sums(8) == kDimsN3);
  CHECK(all_pass(e2_column_check(kDimsN3)));
  auto wrong = kDimsN3;
  wrong[4] += 1;
  CHECK_FALSE(all_pass(e2_column_check(wrong)));
}

TEST_CASE("complexity from finite differences") {
  CHECK(complexity_estimate({1, 2, 3, 4, 5, 6}) == 2);
  CHECK(complexity_estimate({4, 4, 4, 4, 4}) == 1);
  CHECK(complexity_estimate(kDimsN3) == 3);
  std::vector<std::size_t> cubic;
  for (std::size_t n = 0; n < 12; ++n) cubic.push_back(n * n * n + 1);
  CHECK(complexity_estimate(cubic) == 4);
  CHECK_THROWS_AS(complexity_estimate({1, 2, 3, 4}), ExtError);
}

TEST_CASE("products are associative and independent of the lift") {
  auto A = algebra(3);
  auto p = engine([&] { return build_P_complex(A, 6); });
  CHECK(associativity_fuzz(p, 40, 99, Convention::LeftThenRight).status == Status::Pass);
  CHECK(associativity_fuzz(p, 40, 99, Convention::RightThenLeft).status == Status::Pass);
  auto s = engine([&] { return build_minimal_segment(A); });
  CHECK(lift_independence(s).status == Status::Pass);
  CHECK(all_pass(k2_spanning_check(p, 5)));
}

TEST_CASE("nilpotency for N = 5") {
  auto A = algebra(5);
  auto p = engine([&] { return build_P_complex(A, 7); });
  auto s = engine([&] { return build_minimal_segment(A); });
  const auto checks = nilpotency_checks(p, s, 6, Convention::LeftThenRight);
  CHECK(checks.size() >= 6);
  CHECK(all_pass(checks));
}

}
