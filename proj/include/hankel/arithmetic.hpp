#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hankel/precision.hpp"

namespace hankel {

// Smallest-prime-factor sieve; trial division past the sieve limit.
class FactorSieve {
 public:
  explicit FactorSieve(uint64_t limit);
  // (prime, exponent) pairs, ascending primes.
  std::vector<std::pair<uint64_t, int>> factorize(uint64_t m) const;
  std::vector<uint64_t> divisors(uint64_t m) const;  // ascending
  uint64_t limit() const { return limit_; }

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

// Shared desk-scale sieve (grown on demand).
const FactorSieve& default_sieve(uint64_t at_least = 1 << 20);

uint64_t sigma2(uint64_t m);        // sum of squared divisors
uint64_t num_divisors(uint64_t m);  // d(m)
int moebius(uint64_t m);            // mu(m) in {-1, 0, 1}

// Named Dirichlet coefficient oracle f(m) with the flags the Hankel engine
// keys its algorithm choices on. `evaluate` is the closed-form F(s) hook
// used for matrix entries; series without one support only the
// coefficient-based operations.
struct DirichletSeries {
  std::string name;
  std::function<long(uint64_t)> coeff;
  bool is_multiplicative = false;
  bool is_nonnegative = false;
  std::function<BigReal(long, const PrecisionContext&)> evaluate;

  static DirichletSeries zeta();
  static DirichletSeries moebius_series();  // coefficients mu(m), F = 1/zeta
};

struct HFunctionEntry {
  uint64_t n = 0;
  uint64_t m = 0;
  mpz_class value;
};

// Ordered n-tuples of positive integers with product m, lexicographic.
// The callback receives each tuple; return count emitted.
uint64_t ordered_factorizations(uint64_t m, int n,
                                const std::function<void(const std::vector<uint64_t>&)>& emit);
std::vector<std::vector<uint64_t>> ordered_factorizations_list(uint64_t m, int n);

// h_n(m) = (1/n!) sum over ordered factorizations of the squared Vandermonde.
// Tuples with repeated entries contribute zero, so the sum runs over sets of
// n distinct divisors with product m, each standing for n! orderings; the
// 1/n! cancels and the result is an exact nonnegative integer.
mpz_class h_function(int n, uint64_t m);

// Reference evaluation straight from the definition: enumerate every ordered
// tuple, sum the squared Vandermonde, divide by n! asserting exactness.
// Test oracle for h_function.
mpz_class h_from_ordered(int n, uint64_t m);

std::vector<HFunctionEntry> h_table(int n, uint64_t m_max);
std::vector<HFunctionEntry> h_table_serial(int n, uint64_t m_max);

// d_n(m) for m = 1..m_max: number of ordered n-factorizations (n-fold
// Dirichlet convolution of 1).
std::vector<uint64_t> divisor_count_table(int n, uint64_t m_max);

// Upper bound for sum_{m>M} h_n(m)/m^{2n+r}, from h_n(m) <= d_n(m) m^{2(n-1)}/n!
// and sum_m d_n(m)/m^{2+r} = zeta(2+r)^n:
//   tail <= (zeta(2+r)^n - sum_{m<=M} d_n(m)/m^{2+r}) / n!
// Requires M >= n! (below n! every coefficient vanishes; smaller M flags misuse).
BigReal dirichlet_tail_bound(int n, int r, uint64_t M, const PrecisionContext& ctx);

}  // namespace hankel
