#include "genus0/quad.hpp"

namespace genus0 {

std::string QuadElem::str() const {
  if (b.is_zero()) return a.str();
  std::string root = "sqrt(" + d.get_str() + ")";
  std::string bs;
  if (b == Rat(1))
    bs = root;
  else if (b == Rat(-1))
    bs = "-" + root;
  else
    bs = b.str() + "*" + root;
  if (a.is_zero()) return bs;
  if (b.sign() > 0) return a.str() + " + " + bs;
  return a.str() + " - " + (b == Rat(-1) ? root : (-b).str() + "*" + root);
}

Int combine_d(const QuadElem& x, const QuadElem& y) {
  if (x.d == 0) return y.d;
  if (y.d == 0 || x.d == y.d) return x.d;
  throw error("mixing elements of Q(sqrt(" + x.d.get_str() + ")) and Q(sqrt(" +
              y.d.get_str() + "))");
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  return QuadElem(x.a + y.a, x.b + y.b, combine_d(x, y));
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  return QuadElem(x.a - y.a, x.b - y.b, combine_d(x, y));
}

QuadElem operator-(const QuadElem& x) { return QuadElem(-x.a, -x.b, x.d); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  Int d = combine_d(x, y);
  return QuadElem(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * inverse(y); }

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a != y.a || x.b != y.b) return false;
  return x.b.is_zero() || x.d == y.d;
}

bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

QuadElem inverse(const QuadElem& x) {
  Rat n = x.norm();
  if (n.is_zero()) throw error("inverse of zero (or zero-norm) element");
  return QuadElem(x.a / n, -x.b / n, x.d);
}

QuadElem pow(const QuadElem& x, const Int& e) {
  if (e < 0) return pow(inverse(x), -e);
  QuadElem acc(1);
  QuadElem base = x;
  Int k = e;
  while (k > 0) {
    if (mpz_tstbit(k.get_mpz_t(), 0)) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Int denominator(const QuadElem& x) { return lcm(x.a.den(), x.b.den()); }

SplitType splitting_type(const Int& D, const Int& p) {
  if (D == 0 || D == 1) throw error("splitting_type: D must be squarefree != 0, 1");
  Int dmod4 = D % 4;
  if (dmod4 < 0) dmod4 += 4;
  Int disc = dmod4 == 1 ? D : Int(4 * D);
  switch (kronecker(disc, p)) {
    case 1:
      return SplitType::split;
    case -1:
      return SplitType::inert;
    default:
      return SplitType::ramified;
  }
}

bool infinite_place_splits(const Int& D) {
  if (D == 0 || D == 1) throw error("infinite_place_splits: bad D");
  return D > 0;
}

QuadElem pell_fundamental(const Int& D) {
  if (D <= 1) throw error("pell_fundamental requires D > 1");
  Int a0 = isqrt(D);
  if (a0 * a0 == D) throw error("pell_fundamental requires nonsquare D");
  // PQa recurrences for the continued fraction of sqrt(D); convergents
  // h_i/k_i give h^2 - D k^2 = (-1)^(i+1) Q_(i+1).
  Int P = 0, Q = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  for (int i = 1;; ++i) {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (a0 + P) / Q;
    if (Q == 1) {
      // h^2 - D k^2 = (-1)^i at the current convergent.
      if (i % 2 == 0) return QuadElem(Rat(h), Rat(k), D);
      QuadElem u(Rat(h), Rat(k), D);  // norm -1; square it
      return u * u;
    }
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

namespace {

// Is pi = (a + b sqrt(D))/den acceptable: b != 0 and not divisible by p in
// Z[sqrt(D)] (which would put both prime ideals above p into pi).
bool acceptable_pi(const Int& a, const Int& b, const Int& p) {
  if (b == 0) return false;
  return !(mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) &&
           mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

QuadElem split_prime_element(const Int& D, const Int& p,
                             const SplitSearchBudget& budget) {
  if (splitting_type(D, p) != SplitType::split)
    throw error("split_prime_element: " + p.get_str() + " does not split in Q(sqrt(" +
                D.get_str() + "))");
  Int dmod4 = D % 4;
  if (dmod4 < 0) dmod4 += 4;
  const bool half_allowed = (dmod4 == 1) && p == 2;
  std::uint64_t spent = 0;
  // For D > 0 the search per target value is capped using the Pell unit: any
  // solvable |a^2 - D b^2| = m has a representative with b below roughly
  // sqrt(m * x_eps / D).
  Int pell_x = 0;
  if (D > 1) pell_x = pell_fundamental(D).a.num();

  Int target = 1;
  for (unsigned k = 1; k <= budget.max_power; ++k) {
    target *= p;
    // Integral solutions a^2 - D b^2 = +-p^k.
    Int bmax;
    if (D < 0)
      bmax = isqrt(target / -D);
    else
      bmax = isqrt(target * pell_x / D) + 1;
    for (Int b = 1; b <= bmax; ++b) {
      if (++spent > budget.max_candidates)
        throw budget_error("split_prime_element budget exhausted for p = " + p.get_str());
      for (int sign : {+1, -1}) {
        Int a2 = sign > 0 ? Int(target + D * b * b) : Int(D * b * b - target);
        if (D < 0 && sign < 0) continue;
        if (a2 < 0) continue;
        if (!mpz_perfect_square_p(a2.get_mpz_t())) continue;
        Int a = isqrt(a2);
        if (acceptable_pi(a, b, p)) return QuadElem(Rat(a), Rat(b), D);
      }
    }
    if (half_allowed) {
      // (a + b sqrt(D))/2 with a, b odd and a^2 - D b^2 = +-4 p^k.
      Int target4 = 4 * target;
      Int bmax2;
      if (D < 0)
        bmax2 = isqrt(target4 / -D);
      else
        bmax2 = isqrt(target4 * pell_x / D) + 1;
      for (Int b = 1; b <= bmax2; b += 2) {
        if (++spent > budget.max_candidates)
          throw budget_error("split_prime_element budget exhausted for p = " + p.get_str());
        for (int sign : {+1, -1}) {
          Int a2 = sign > 0 ? Int(target4 + D * b * b) : Int(D * b * b - target4);
          if (D < 0 && sign < 0) continue;
          if (a2 < 0) continue;
          if (!mpz_perfect_square_p(a2.get_mpz_t())) continue;
          Int a = isqrt(a2);
          if (mpz_tstbit(a.get_mpz_t(), 0) && acceptable_pi(a, b, p))
            return QuadElem(Rat(a, Int(2)), Rat(b, Int(2)), D);
        }
      }
    }
  }
  throw budget_error("split_prime_element: no power of " + p.get_str() +
                     " representable within budget");
}

std::optional<QuadElem> norm_one_generator(const Int& D, const PrimeSet& s) {
  if (D == 0 || D == 1) throw error("norm_one_generator: bad D");
  QuadElem gamma;
  if (D > 0) {
    gamma = pell_fundamental(D);
  } else {
    const Int* found = nullptr;
    for (const Int& p : s.primes()) {
      if (splitting_type(D, p) == SplitType::split) {
        found = &p;
        break;
      }
    }
    if (!found) return std::nullopt;
    QuadElem pi = split_prime_element(D, *found);
    gamma = pi / pi.conj();
  }
  G0_CHECK(gamma.norm() == Rat(1), "norm-one generator has norm != 1");
  // Roots of unity in a quadratic field have order at most 6.
  QuadElem g = gamma;
  for (int k = 1; k <= 6; ++k) {
    G0_CHECK(g != QuadElem(1), "norm-one generator is a root of unity");
    g = g * gamma;
  }
  G0_CHECK(s_split(denominator(gamma), s).second == 1,
           "norm-one generator denominator not S-smooth");
  return gamma;
}

namespace {

struct QuadMod {
  Int a, b;
};

QuadMod mul_mod(const QuadMod& x, const QuadMod& y, const Int& D, const Int& m) {
  QuadMod r;
  r.a = (x.a * y.a + D * x.b * y.b) % m;
  r.b = (x.a * y.b + x.b * y.a) % m;
  if (r.a < 0) r.a += m;
  if (r.b < 0) r.b += m;
  return r;
}

QuadMod pow_mod(QuadMod x, Int e, const Int& D, const Int& m) {
  QuadMod acc{1 % m, 0};
  while (e > 0) {
    if (mpz_tstbit(e.get_mpz_t(), 0)) acc = mul_mod(acc, x, D, m);
    e >>= 1;
    if (e > 0) x = mul_mod(x, x, D, m);
  }
  return acc;
}

}  // namespace

Int quad_order_mod(const QuadElem& gamma, const Int& m) {
  if (m < 2) throw error("quad_order_mod requires modulus >= 2");
  const Int& D = gamma.d;
  Int den = denominator(gamma);
  if (gcd(den, m) != 1)
    throw error("quad_order_mod: element not invertible mod " + m.get_str());
  Int dinv;
  if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
    throw error("quad_order_mod: denominator not invertible");
  QuadMod g;
  g.a = (gamma.a.num() * (den / gamma.a.den()) % m) * dinv % m;
  g.b = (gamma.b.num() * (den / gamma.b.den()) % m) * dinv % m;
  if (g.a < 0) g.a += m;
  if (g.b < 0) g.b += m;
  Int nrm = (g.a * g.a - D * g.b * g.b) % m;
  if (gcd(nrm, m) != 1)
    throw error("quad_order_mod: element not a unit mod " + m.get_str());

  // Order of the unit group of Z[sqrt(D)]/p^a, by the root count of
  // x^2 - D mod p; multiplicative over the factorization of m.
  Int group = 1;
  for (auto& [p, e] : factorize(m)) {
    Int dm = D % p;
    if (dm < 0) dm += p;
    int roots = 0;
    for (Int x = 0; x < p; ++x)
      if ((x * x - dm) % p == 0) ++roots;
    Int up;
    if (roots == 2)
      up = (p - 1) * (p - 1);
    else if (roots == 0)
      up = p * p - 1;
    else
      up = p * (p - 1);
    Int pk = 1;
    for (unsigned i = 1; i < e; ++i) pk *= p * p;
    group *= up * pk;
  }

  auto is_one = [&](const Int& e) {
    QuadMod r = pow_mod(g, e, D, m);
    return r.a == 1 % m && r.b == 0;
  };
  G0_CHECK(is_one(group), "unit group order does not annihilate element");
  Int order = group;
  for (auto& [q, eq] : factorize(group)) {
    for (unsigned i = 0; i < eq; ++i) {
      if (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t()) && is_one(order / q))
        order /= q;
      else
        break;
    }
  }
  return order;
}

}  // namespace genus0
