// Serial vs OpenMP timings for the hot kernels. The parallel variants are
// bit-identical to the serial references; this target only reports speed.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hankel/arithmetic.hpp"
#include "hankel/coulomb.hpp"
#include "hankel/engine.hpp"
#include "hankel/matrix.hpp"
#include "hankel/special.hpp"

using namespace hankel;

namespace {

double timed(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-34s serial %8.3fs   omp %8.3fs   speedup %5.2fx\n", name.c_str(),
              serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    PrecisionContext ctx = make_context(800);
    std::vector<long> args;
    for (long s = 2; s <= 64; ++s) args.push_back(s);
    zeta_store_clear();
    double ts = timed([&] { zeta_batch_serial(args, ctx); });
    zeta_store_clear();
    double tp = timed([&] { zeta_batch(args, ctx); });
    report("zeta batch s=2..64 @800 digits", ts, tp);
  }

  {
    PrecisionContext ctx = make_context(800);
    PrecMatrix m = build_matrix(HankelSpec{DirichletSeries::zeta(), 28, 0}, ctx);
    double ts = timed([&] { det_cholesky_serial(m); });
    double tp = timed([&] { det_cholesky(m); });
    report("cholesky n=28 @800 digits", ts, tp);
    ts = timed([&] { det_lu_serial(m); });
    tp = timed([&] { det_lu(m); });
    report("lu n=28 @800 digits", ts, tp);
  }

  {
    double ts = timed([&] { h_table_serial(4, 4000); });
    double tp = timed([&] { h_table(4, 4000); });
    report("h_table n=4, m <= 4000", ts, tp);
  }

  {
    PrecisionContext ctx = make_context(40);
    HankelSpec spec{DirichletSeries::zeta(), 3, 0};
    double ts = timed([&] { hankel_bruteforce_serial(spec, 140, ctx); });
    double tp = timed([&] { hankel_bruteforce(spec, 140, ctx); });
    report("bruteforce n=3, M=140", ts, tp);
  }

  {
    double ts = timed([&] { plancherel_Z_serial(4, 36); });
    double tp = timed([&] { plancherel_Z(4, 36); });
    report("plancherel Z_4(36)", ts, tp);
  }

  {
    std::vector<uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
    double ts = timed([&] {
      for (uint64_t s : seeds) optimize(150, s, 150000);
    });
    double tp = timed([&] { optimize_multi(150, seeds, 150000); });
    report("gas restarts n=150 x8 seeds", ts, tp);
  }

  return 0;
}
