#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "genus0/rat.hpp"

namespace genus0 {

// Kronecker symbol (a|n), total on its domain, multiplicative in both
// arguments.
int kronecker(const Int& a, const Int& n);

// Deterministic primality test: trial division plus Miller-Rabin with a
// witness set that is exact below 3.3e24 (far beyond anything handled here);
// larger inputs fall back to a high-repetition probabilistic test.
bool is_prime(const Int& n);

struct FactorBudget {
  // Maximum Pollard-Brent iterations before giving up on a cofactor.
  std::uint64_t rho_iterations = 20'000'000;
};

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes strictly
// increasing. Throws budget_error if a cofactor resists the rho budget.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n,
                                                const FactorBudget& budget = {});

// All positive divisors of n >= 1, sorted.
std::vector<Int> divisors(const Int& n);

// n = square * squarefree; returns {squarefree, square_root_of_square_part}.
std::pair<Int, Int> squarefree_split(const Int& n);

// Finite prime part of a set of places S (the infinite place is implicit).
// Construction sorts, deduplicates and verifies primality.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Int> primes);

  bool contains(const Int& p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  const std::vector<Int>& primes() const { return primes_; }

 private:
  std::vector<Int> primes_;
};

// Least e >= 1 with a^e = 1 mod m, computed by divisor reduction of the
// Carmichael exponent. Requires m >= 2 and gcd(a, m) = 1.
Int mult_order(const Int& a, const Int& m);

// Exact rational square root: r >= 0 with r^2 = q, empty if q is not a
// square in Q.
std::optional<Rat> rational_sqrt(const Rat& q);

// n = s_part * coprime_part with s_part supported on S and coprime_part
// coprime to every prime of S. Requires n >= 1.
std::pair<Int, Int> s_split(const Int& n, const PrimeSet& s);

// The prime-to-S part of n (second component of s_split).
Int prime_to_s_part(const Int& n, const PrimeSet& s);

// True iff every prime of den(q) lies in S.
bool is_s_integer(const Rat& q, const PrimeSet& s);

// All S-smooth positive integers <= bound, sorted ascending. 1 is always
// included.
std::vector<Int> s_smooth_upto(const PrimeSet& s, const Int& bound);

// Floor square root of n >= 0.
Int isqrt(const Int& n);

}  // namespace genus0
