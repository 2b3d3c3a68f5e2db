#include <doctest.h>

#include <random>

#include "a2ext/linalg.hpp"

using namespace a2ext;

namespace {

const PrimeField& fp() {
  static const PrimeField f(FieldSpec{FieldMode::PrimeField, 4, 101});
  return f;
}

KMatrix<PrimeField> from_rows(const std::vector<std::vector<long long>>& rows) {
  KMatrix<PrimeField> m(fp(), rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = fp().from_int(rows[i][j]);
  return m;
}

KMatrix<PrimeField> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, unsigned rank_cap) {
  // product of r x k and k x c random factors has rank <= k
  std::uniform_int_distribution<long long> d(0, 100);
  KMatrix<PrimeField> a(fp(), r, rank_cap), b(fp(), rank_cap, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rank_cap; ++j) a.at(i, j) = fp().from_int(d(rng));
  for (std::size_t i = 0; i < rank_cap; ++i)
    for (std::size_t j = 0; j < c; ++j) b.at(i, j) = fp().from_int(d(rng));
  return a * b;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref of a hand example") {
  // row 2 = 2 * row 1; the reduced form is [1 0 -1; 0 1 2; 0 0 0]
  auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 2}});
  auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == from_rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  CHECK(rank(m) == 2);
}

TEST_CASE("parallel and serial elimination agree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 5 + t, c = 8 + 2 * t;
    auto m = random_matrix(rng, r, c, 3 + t % 5);
    auto a = rref(m), b = rref_serial(m);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
    CHECK(a.pivots.size() == std::min<std::size_t>(3 + t % 5, r));
  }
}

TEST_CASE("kernel and solve") {
  std::mt19937_64 rng(11);
  auto m = random_matrix(rng, 6, 9, 4);
  auto k = kernel(m);
  CHECK(k.dim() == 9 - 4);
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (const auto& v : m.apply(k.basis().row_vector(i))) CHECK(fp().is_zero(v));

  std::vector<FpElem> x(9);
  for (std::size_t j = 0; j < 9; ++j) x[j] = fp().from_int(static_cast<long long>(j * j + 1));
  const auto b = m.apply(x);
  auto sol = solve(m, b);
  REQUIRE(sol);
  CHECK(m.apply(*sol) == b);

  auto bad = b;
  bad[0] = fp().add(bad[0], fp().one());
  // a rank-4 image in F^6 misses most vectors; this one is off by e_0
  if (!Subspace<PrimeField>::row_span(m.transpose()).contains(bad)) CHECK_FALSE(solve(m, bad));
  CHECK_THROWS_AS(solve(m, std::vector<FpElem>(5)), LinalgError);
}

TEST_CASE("subspaces and quotient coordinates") {
  auto total = Subspace<PrimeField>::row_span(from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  auto sub = Subspace<PrimeField>::row_span(from_rows({{1, 1, 0, 0}, {2, 2, 0, 0}}));
  CHECK(total.dim() == 3);
  CHECK(sub.dim() == 1);
  CHECK(total.contains(from_rows({{3, 4, 5, 0}}).row_vector(0)));
  CHECK_FALSE(total.contains(from_rows({{0, 0, 0, 1}}).row_vector(0)));

  QuotientCoordinates<PrimeField> q(sub, total);
  CHECK(q.dim() == 2);
  // vectors differing by an element of sub share coordinates
  const auto u = from_rows({{1, 2, 3, 0}}).row_vector(0);
  const auto v = from_rows({{4, 5, 3, 0}}).row_vector(0);
  CHECK(q.coordinates(u) == q.coordinates(v));
  CHECK_FALSE(q.coordinates(u) == q.coordinates(from_rows({{1, 2, 4, 0}}).row_vector(0)));
  CHECK_THROWS_AS(q.coordinates(from_rows({{0, 0, 0, 1}}).row_vector(0)), LinalgError);
  CHECK_THROWS_AS((QuotientCoordinates<PrimeField>(total, sub)), LinalgError);
}

TEST_CASE("blocked solver matches dense solving") {
  std::mt19937_64 rng(3);
  // two independent blocks plus a zero column
  auto a = random_matrix(rng, 4, 5, 3), b = random_matrix(rng, 3, 4, 2);
  SparseMatrix<PrimeField> s(fp(), 7, 10);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (!fp().is_zero(a.at(i, j))) s.push(i, static_cast<std::uint32_t>(j), a.at(i, j));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!fp().is_zero(b.at(i, j))) s.push(4 + i, static_cast<std::uint32_t>(6 + j), b.at(i, j));
  const auto dense = s.to_dense();
  CHECK(blocked_rank(s) == rank(dense));
  CHECK(blocked_rank(s) == 5);

  for (auto order : {PivotOrder::Natural, PivotOrder::Reverse}) {
    BlockedSolver<PrimeField> solver(s, order);
    CHECK(solver.rank() == 5);
    CHECK(solver.block_count() >= 2);
    // x * A = rhs with rhs in the row space
    std::vector<FpElem> x(7);
    for (std::size_t i = 0; i < 7; ++i) x[i] = fp().from_int(static_cast<long long>(3 * i + 2));
    const auto rhs = dense.apply_left(x);
    auto sol = solver.solve(rhs);
    REQUIRE(sol);
    CHECK(dense.apply_left(*sol) == rhs);
    auto off = rhs;
    off[5] = fp().one();  // column 5 is identically zero
    CHECK_FALSE(solver.solve(off));
  }
}

}
