#pragma once

#include <optional>
#include <string>

#include "genus0/arith.hpp"
#include "genus0/rat.hpp"

namespace genus0 {

// Element a + b*sqrt(d) of Q(sqrt(d)), d squarefree and != 0, 1.
// Rational values are stored with b = 0 and d = 0; they combine freely with
// elements of any field. Mixing two distinct nonzero d values throws.
struct QuadElem {
  Rat a;
  Rat b;
  Int d;

  QuadElem() : a(0), b(0), d(0) {}
  QuadElem(int v) : a(v), b(0), d(0) {}
  QuadElem(long v) : a(v), b(0), d(0) {}
  QuadElem(const Rat& v) : a(v), b(0), d(0) {}
  QuadElem(const Rat& a_, const Rat& b_, const Int& d_) : a(a_), b(b_), d(d_) {
    if (b.is_zero()) d = 0;
    if (!b.is_zero() && (d == 0 || d == 1))
      throw error("QuadElem needs squarefree d != 0, 1");
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  QuadElem conj() const { return QuadElem(a, -b, d); }
  Rat norm() const { return a * a - Rat(d) * b * b; }

  std::string str() const;
};

// Shared field tag of two operands (0 if both rational); throws on mismatch.
Int combine_d(const QuadElem& x, const QuadElem& y);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);
bool operator==(const QuadElem& x, const QuadElem& y);
bool operator!=(const QuadElem& x, const QuadElem& y);

QuadElem inverse(const QuadElem& x);
// x^e for any integer e (negative exponents through the inverse).
QuadElem pow(const QuadElem& x, const Int& e);

// lcm of the two component denominators.
Int denominator(const QuadElem& x);

enum class SplitType { split, inert, ramified };

// Behaviour of p in Q(sqrt(D)), from the Kronecker symbol of the field
// discriminant (D for D = 1 mod 4, else 4D).
SplitType splitting_type(const Int& D, const Int& p);

// For base field Q: the real place splits in Q(sqrt(D)) iff D > 0.
bool infinite_place_splits(const Int& D);

// Fundamental solution x + y*sqrt(D) of x^2 - D y^2 = 1 with x, y > 0 and x
// minimal, by the continued-fraction expansion of sqrt(D). If the minimal
// unit of Z[sqrt(D)] has norm -1 its square is returned.
QuadElem pell_fundamental(const Int& D);

struct SplitSearchBudget {
  unsigned max_power = 24;                 // largest p^k tried
  std::uint64_t max_candidates = 30'000'000;  // total b values tried
};

// An element pi of Z[sqrt(D)] (or half-integral for p = 2, D = 1 mod 4) with
// |norm(pi)| = p^k for some k >= 1 and pi supported on a single prime ideal
// above p. Requires splitting_type(D, p) == split.
QuadElem split_prime_element(const Int& D, const Int& p,
                             const SplitSearchBudget& budget = {});

// A norm-one unit of infinite order in the T-unit group, T = places over
// S and infinity: the Pell unit when D > 0, else pi/conj(pi) for the
// smallest split p in S. Empty when no place splits.
std::optional<QuadElem> norm_one_generator(const Int& D, const PrimeSet& s);

// Least e >= 1 with gamma^e = 1 in Z[sqrt(D)]/(m). Requires m >= 2, the
// component denominators of gamma invertible mod m, and gamma a unit of the
// residue ring.
Int quad_order_mod(const QuadElem& gamma, const Int& m);

}  // namespace genus0
