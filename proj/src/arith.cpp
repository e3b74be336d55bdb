#include "genus0/arith.hpp"

#include <algorithm>

namespace genus0 {

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// Miller-Rabin with fixed witness a; n odd, n > a >= 2.
bool miller_rabin(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

const long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (long p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // Exact for n < 3.317e24 with this witness set.
  Int limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, 24);
  if (n < 3 * limit) {
    for (long p : kSmallPrimes)
      if (!miller_rabin(n, Int(p))) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_brent(const Int& n, std::uint64_t max_iters) {
  // Brent's cycle variant of Pollard rho with batched gcds.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b9ul);
  std::uint64_t spent = 0;
  while (spent < max_iters) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1 && spent < max_iters) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1 && spent < max_iters; k += batch) {
        ys = y;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        spent += lim;
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n && g != 1) return g;
  }
  throw budget_error("factorization work budget exceeded for " + n.get_str());
}

void factor_into(const Int& n, std::vector<std::pair<Int, unsigned>>& out,
                 const FactorBudget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_brent(n, budget.rho_iterations);
  factor_into(d, out, budget);
  factor_into(n / d, out, budget);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n,
                                                const FactorBudget& budget) {
  if (n < 1) throw error("factorize requires n >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= m && p < 100000; p += (p % 6 == 1 ? 4 : 2)) {
    // p runs over 5, 7, 11, 13, ... (6k +- 1).
    strip(p);
  }
  if (m > 1) {
    std::vector<std::pair<Int, unsigned>> rest;
    factor_into(m, rest, budget);
    // Merge equal primes from the recursive split.
    std::sort(rest.begin(), rest.end());
    for (auto& [p, e] : rest) {
      if (!out.empty() && out.back().first == p)
        out.back().second += e;
      else
        out.emplace_back(p, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> divisors(const Int& n) {
  auto fac = factorize(n);
  std::vector<Int> out{1};
  for (auto& [p, e] : fac) {
    std::size_t base = out.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n == 0) throw error("squarefree_split of zero");
  Int m = ::abs(n);
  Int sf = n < 0 ? -1 : 1;
  Int sq = 1;
  for (auto& [p, e] : factorize(m)) {
    if (e % 2) sf *= p;
    for (unsigned i = 0; i < e / 2; ++i) sq *= p;
  }
  return {sf, sq};
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const Int& p : primes_)
    if (!is_prime(p)) throw error("not a prime: " + p.get_str());
}

bool PrimeSet::contains(const Int& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

Int mult_order(const Int& a, const Int& m) {
  if (m < 2) throw error("mult_order requires modulus >= 2");
  Int g = gcd(a, m);
  if (g != 1) throw error("mult_order: arguments not coprime");
  // Carmichael exponent of (Z/m)^* from the factorization of m.
  Int lambda = 1;
  for (auto& [p, e] : factorize(m)) {
    Int lp;
    if (p == 2)
      lp = e == 1 ? Int(1) : (e == 2 ? Int(2) : Int(Int(1) << (e - 2)));
    else {
      lp = p - 1;
      for (unsigned i = 1; i < e; ++i) lp *= p;
    }
    lambda = lcm(lambda, lp);
  }
  Int order = lambda;
  Int am = a % m;
  if (am < 0) am += m;
  auto pow_is_one = [&](const Int& e) {
    Int r;
    mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r == 1;
  };
  G0_CHECK(pow_is_one(order), "group exponent does not annihilate unit");
  for (auto& [q, eq] : factorize(order)) {
    for (unsigned i = 0; i < eq; ++i) {
      if (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t()) && pow_is_one(order / q))
        order /= q;
      else
        break;
    }
  }
  return order;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  Int n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  return Rat(isqrt(n), isqrt(d));
}

std::pair<Int, Int> s_split(const Int& n, const PrimeSet& s) {
  if (n < 1) throw error("s_split requires n >= 1");
  Int s_part = 1, rest = n;
  for (const Int& p : s.primes()) {
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      s_part *= p;
    }
  }
  return {s_part, rest};
}

Int prime_to_s_part(const Int& n, const PrimeSet& s) { return s_split(n, s).second; }

bool is_s_integer(const Rat& q, const PrimeSet& s) {
  return s_split(q.den(), s).second == 1;
}

std::vector<Int> s_smooth_upto(const PrimeSet& s, const Int& bound) {
  std::vector<Int> out;
  if (bound < 1) return out;
  out.push_back(1);
  for (const Int& p : s.primes()) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      Int v = out[i] * p;
      while (v <= bound) {
        out.push_back(v);
        v *= p;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int isqrt(const Int& n) {
  if (n < 0) throw error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace genus0
