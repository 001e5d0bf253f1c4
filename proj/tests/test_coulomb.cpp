#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "hankel/coulomb.hpp"

using namespace hankel;

namespace {

// independent dim-oracle: hook length formula
mpz_class hook_dimension(const Partition& p) {
  std::vector<long> parts;
  for (long v : p.parts) {
    if (v > 0) parts.push_back(v);
  }
  long k = 0;
  for (long v : parts) k += v;
  if (k == 0) return 1;
  std::vector<long> conj(static_cast<size_t>(parts.empty() ? 0 : parts[0]), 0);
  for (long v : parts) {
    for (long j = 0; j < v; ++j) conj[static_cast<size_t>(j)]++;
  }
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class den = 1;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (long j = 0; j < parts[i]; ++j) {
      long hook = parts[i] - j + conj[static_cast<size_t>(j)] - static_cast<long>(i) - 1;
      den *= hook;
    }
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  REQUIRE(r == 0);
  return q;
}

}  // namespace

TEST_SUITE_BEGIN("coulomb");

TEST_CASE("phi at the pinned configurations") {
  CHECK(phi_discrete({1}, 1) == 0.0);
  CHECK(phi_discrete({1, 2}, 2) == doctest::Approx(-4.0 * std::log(2.0)).epsilon(1e-14));
  double p13 = phi_discrete({1, 3}, 2);
  CHECK(p13 == doctest::Approx(-4.0 * std::log(3.0) + 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(p13 < phi_discrete({1, 2}, 2));
}

TEST_CASE("phi input handling") {
  CHECK(std::isinf(phi_discrete_any_order({2, 2, 5}, 3)));
  CHECK_THROWS_AS(phi_discrete({3, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi_discrete({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(phi_discrete({0, 2}, 2), std::invalid_argument);
  // permutation invariance through the sorting wrapper
  std::mt19937_64 rng(7);
  std::vector<long> m{2, 5, 9, 14, 30};
  double ref = phi_discrete(m, 5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(m.begin(), m.end(), rng);
    CHECK(phi_discrete_any_order(m, 5) == ref);
  }
}

TEST_CASE("optimize basics") {
  Configuration c1 = optimize(1, 3, 100);
  CHECK(c1.m == std::vector<long>{1});
  CHECK(c1.phi == 0.0);

  Configuration c2 = optimize(2, 5, 20000);
  CHECK(c2.m == std::vector<long>{1, 2});

  // never below the greedy start
  for (long n : {3L, 10L, 40L}) {
    std::vector<long> greedy(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) greedy[static_cast<size_t>(i)] = i + 1;
    Configuration c = optimize(n, 11, 30000);
    CHECK(c.phi >= phi_discrete(greedy, n));
    CHECK(c.phi == doctest::Approx(phi_discrete(c.m, n)).epsilon(1e-12));
  }
}

TEST_CASE("optimize is deterministic in (n, seed, budget)") {
  Configuration a = optimize(25, 123, 50000);
  Configuration b = optimize(25, 123, 50000);
  CHECK(a.m == b.m);
  CHECK(a.phi == b.phi);
  Configuration c = optimize(25, 124, 50000);
  // different seed may or may not match; the recomputed invariant still holds
  CHECK(c.phi == doctest::Approx(phi_discrete(c.m, 25)).epsilon(1e-12));
}

TEST_CASE("optimize matches exhaustive search for small n") {
  for (long n = 2; n <= 5; ++n) {
    Configuration got = optimize(n, 1, 100000);
    std::vector<long> stack, best_m;
    double best = -1e300;
    std::function<void(long, long)> rec = [&](long next, long len) {
      if (len == n) {
        double p = phi_discrete(stack, n);
        if (p > best) {
          best = p;
          best_m = stack;
        }
        return;
      }
      for (long v = next; v <= 30 - (n - 1 - len); ++v) {
        stack.push_back(v);
        rec(v + 1, len + 1);
        stack.pop_back();
      }
    };
    rec(1, 0);
    CAPTURE(n);
    CHECK(got.m == best_m);
    CHECK(got.phi == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("multi-seed restarts pick the best deterministically") {
  Configuration best = optimize_multi(30, {1, 2, 3, 4}, 20000);
  for (uint64_t s : {1ULL, 2ULL, 3ULL, 4ULL}) {
    CHECK(best.phi >= optimize(30, s, 20000).phi);
  }
}

TEST_CASE("empirical cdf of the optimal pair") {
  Configuration c = optimize(2, 5, 20000);
  auto cdf = empirical_cdf(c, 2);
  REQUIRE(cdf.size() == 2);
  CHECK(cdf[0].first == doctest::Approx(0.5));
  CHECK(cdf[0].second == doctest::Approx(0.5));
  CHECK(cdf[1].first == doctest::Approx(1.0));
  CHECK(cdf[1].second == doctest::Approx(1.0));
}

TEST_CASE("optimized profile tracks the equilibrium cdf") {
  Configuration c = optimize_multi(100, {1, 2}, 200000);
  CHECK(sup_cdf_distance(c, 100) <= 0.08);
  const double n = 100.0;
  double target = -n * n * (std::log(2.0 * n) - 1.5);
  CHECK(std::abs(c.phi / target - 1.0) <= 0.03);
}

TEST_CASE("plancherel weights in shifted coordinates") {
  {
    Partition p{{1}};
    PlancherelWeight w = plancherel_weight(p, 1);
    REQUIRE(w.exact_valid);
    CHECK(w.exact == 1);
  }
  {
    Partition p{{1, 1}};
    PlancherelWeight w = plancherel_weight(p, 2);
    REQUIRE(w.exact_valid);
    CHECK(w.exact == mpq_class(1, 4));
    // the (dim/|lambda|!)^2 route gives the same number
    mpz_class d = partition_dimension(p, 2);
    CHECK(d == 1);
    CHECK(w.exact == mpq_class(d * d, 4));  // |lambda|! = 2
  }
  CHECK_THROWS_AS(plancherel_weight(Partition{{2, 1, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(plancherel_weight(Partition{{1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("product form equals the hook-length dimension for all small lambda") {
  for (long k = 1; k <= 8; ++k) {
    for (const auto& p : partitions_of(k)) {
      long rows = static_cast<long>(p.parts.size());
      mpz_class via_product = partition_dimension(p, rows);
      mpz_class via_hooks = hook_dimension(p);
      CHECK(via_product == via_hooks);
      // and the two printed P(lambda) forms coincide (ratio 1)
      PlancherelWeight w = plancherel_weight(p, rows);
      REQUIRE(w.exact_valid);
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
      CHECK(w.exact * fact * fact == via_hooks * via_hooks);
    }
  }
}

TEST_CASE("plancherel partial sums") {
  CHECK(plancherel_Z(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  // sum 1/(m!)^2 = I_0(2) = 2.27958530233607...
  CHECK(plancherel_Z(1, 40) == doctest::Approx(2.2795853023360673).epsilon(1e-12));
  double z25 = plancherel_Z(2, 25), z30 = plancherel_Z(2, 30);
  CHECK(z30 >= z25);
  CHECK(std::abs(z30 - z25) <= 1e-8);
  // monotone in m_max
  double prev = 0.0;
  for (long m = 2; m <= 12; m += 2) {
    double z = plancherel_Z(3, m);
    CHECK(z >= prev);
    prev = z;
  }
  CHECK(plancherel_Z_serial(3, 20) == plancherel_Z(3, 20));
  CHECK_THROWS_AS(plancherel_Z(3, 1), std::invalid_argument);
}

TEST_SUITE_END();
