// Times rref (OpenMP row updates) against rref_serial on random dense
// matrices over F_p and on a flattened differential, and checks they agree.

#include <chrono>
#include <iostream>
#include <random>

#include <omp.h>

#include <CLI11.hpp>

#include "a2ext/resolution.hpp"

using namespace a2ext;

namespace {

template <class Fn>
double time_ms(Fn fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

bool compare(const std::string& label, const KMatrix<PrimeField>& m, int reps) {
  RrefResult<PrimeField> par{m, {}}, ser{m, {}};
  const double tp = time_ms([&] { par = rref(m); }, reps);
  const double ts = time_ms([&] { ser = rref_serial(m); }, reps);
  std::cout << label << "  " << m.rows() << "x" << m.cols() << "  rank " << par.pivots.size() << "  parallel "
            << tp << " ms  serial " << ts << " ms  speedup " << ts / tp
            << (par.reduced == ser.reduced && par.pivots == ser.pivots ? "  agree" : "  MISMATCH") << "\n";
  return par.reduced == ser.reduced && par.pivots == ser.pivots;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rref vs rref_serial"};
  std::size_t size = 400;
  int reps = 3;
  app.add_option("--size", size, "dense matrix size");
  app.add_option("--reps", reps, "repetitions per timing");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads " << omp_get_max_threads() << "\n";
  const PrimeField f(FieldSpec{FieldMode::PrimeField, 18, 1000081});
  bool ok = true;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, 1000080);
  for (std::size_t n : {size / 4, size / 2, size}) {
    KMatrix<PrimeField> m(f, n, n + n / 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = {d(rng)};
    ok = compare("random", m, reps) && ok;
  }

  auto field = std::make_shared<const PrimeField>(f.spec());
  auto alg = Algebra<PrimeField>::make(field, standard_params(*field, 3, 1));
  const auto p = build_P_complex(alg, 5);
  ok = compare("flattened d_5", p.d(5).flatten().to_dense(), reps) && ok;
  return ok ? 0 : 1;
}
