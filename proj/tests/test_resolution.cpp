#include <doctest.h>

#include "a2ext/resolution.hpp"

using namespace a2ext;

namespace {

std::shared_ptr<const Algebra<PrimeField>> algebra(unsigned N, long long q12_exp = 1,
                                                   AlgebraMode mode = AlgebraMode::Full) {
  const unsigned L = N == 2 ? 4 : 2 * N * N;
  auto f = std::make_shared<const PrimeField>(FieldSpec{FieldMode::PrimeField, L, smallest_prime_1_mod(L, 1000000)});
  return Algebra<PrimeField>::make(f, standard_params(*f, N, q12_exp, mode));
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("sigma, tau and generators") {
  CHECK(sigma(5, 1) == 1);
  CHECK(sigma(5, 2) == 4);
  // tau(a) = sum of sigma(1..a): 0, 1, N, N+1, 2N
  CHECK(tau(5, 0) == 0);
  CHECK(tau(5, 1) == 1);
  CHECK(tau(5, 2) == 5);
  CHECK(tau(5, 3) == 6);
  CHECK(tau(5, 4) == 10);
  for (unsigned a = 1; a < 9; ++a) CHECK(tau(7, a) == tau(7, a - 1) + sigma(7, a));
  CHECK(p_generators(2).size() == 6);
  CHECK(p_generators(0).size() == 1);
  CHECK(generator_label({1, 0, 2}) == "Phi(1,0,2)");
}

TEST_CASE("the complex P is a resolution") {
  for (unsigned N : {3u, 5u}) {
    auto A = algebra(N);
    const auto p = build_P_complex(A, 5);
    for (unsigned n = 0; n <= 5; ++n) CHECK(p.rank(n) == (n + 1) * (n + 2) / 2);
    CHECK(verify_complex(p).ok());
    const auto ex = verify_exactness(p, 5);
    CHECK(ex.ok());
    CHECK(ex.rows.back().boundary);
    CHECK_FALSE(is_minimal(p));
    CHECK_FALSE(scalar_entries(p).empty());
  }
  auto G = algebra(3, 1, AlgebraMode::Graded);
  const auto g = build_P_complex(G, 5);
  CHECK(verify_complex(g).ok());
  CHECK(verify_exactness(g, 5).ok());
  CHECK(is_minimal(g));
}

TEST_CASE("N = 2 resolution") {
  auto A = algebra(2);
  const auto c = build_resolution_N2(A, 8);
  for (unsigned n = 0; n <= 8; ++n) CHECK(c.rank(n) == n + 1);
  CHECK(verify_complex(c).ok());
  const auto ex = verify_exactness(c, 8);
  CHECK(ex.ok());
  for (const auto& row : ex.rows)
    if (row.degree > 0 && !row.boundary) CHECK(row.kernel_dim == (row.degree % 2 ? 4 * row.degree + 5 : 4 * row.degree + 7));
  CHECK(is_minimal(c));
  CHECK_THROWS_AS(build_P_complex(A, 3), ResolutionError);
}

TEST_CASE("minimal segment") {
  for (unsigned N : {3u, 5u, 7u}) {
    auto A = algebra(N, 2);
    const auto s = build_minimal_segment(A);
    CHECK(s.ranks() == std::vector<std::size_t>{1, 2, 5, 7, 12});
    CHECK(verify_complex(s).ok());
    CHECK(verify_exactness(s, 4).ok());
    CHECK(is_minimal(s));
    const auto e = segment_elements(*A);
    CHECK(e.X1 * A->power(A->x2(), 2) == A->power(A->x2(), N - 1) * A->power(A->x1(), N - 3));
    CHECK(e.X2 * A->power(A->x1(), 2) == A->power(A->x1(), N - 1) * A->power(A->x2(), N - 3));
    CHECK(e.Dbar * A->y() == A->braided_commutator(N - 1, N - 1));
  }
}

TEST_CASE("a mutated differential is detected") {
  auto A = algebra(3);
  const auto p = build_P_complex(A, 4);
  const auto bad = p.with_entry(2, 0, 0, p.d(2).at(0, 0) + A->x1());
  CHECK(verify_complex(p).ok());
  CHECK_FALSE(verify_complex(bad).ok());
  CHECK_FALSE(verify_exactness(bad, 4).ok());
}

TEST_CASE("right division cases") {
  auto A = algebra(3);
  const auto cases = verify_dtilde_cases(*A, 8);
  CHECK_FALSE(cases.empty());
  bool seen[5] = {};
  for (const auto& c : cases) {
    CHECK(c.matches);
    if (c.parity_case == 4) CHECK(c.expansions_ok);
    seen[c.parity_case] = true;
  }
  for (int k = 1; k <= 4; ++k) CHECK(seen[k]);
  // Phi(1,0,1): D y = -[x1, x2]_c = -y
  CHECK(dtilde_coefficient(*A, {1, 0, 1}) * A->y() == -A->y());
  CHECK(dtilde_coefficient(*A, {1, 1, 1}).is_zero());
}

}
