#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus0/quad.hpp"
#include "genus0/rat.hpp"

namespace genus0 {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a field K (K = Rat or QuadElem).
// ---------------------------------------------------------------------------

template <class K>
struct UPoly {
  std::vector<K> c;  // c[i] is the coefficient of t^i; trimmed, zero = empty

  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& v) {
    UPoly p;
    if (!v.is_zero()) p.c.push_back(v);
    return p;
  }
  static UPoly var() {
    UPoly p;
    p.c = {K(0), K(1)};
    return p;
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }
  K at(std::size_t i) const { return i < c.size() ? c[i] : K(0); }
  const K& leading() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return c.back();
  }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  K eval(const K& t) const {
    K acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly derivative() const {
    UPoly r;
    for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * K(long(i)));
    r.trim();
    return r;
  }
};

template <class K>
UPoly<K> operator+(const UPoly<K>& x, const UPoly<K>& y) {
  UPoly<K> r;
  r.c.resize(std::max(x.c.size(), y.c.size()), K(0));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.at(i) + y.at(i);
  r.trim();
  return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K>& x, const UPoly<K>& y) {
  UPoly<K> r;
  r.c.resize(std::max(x.c.size(), y.c.size()), K(0));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.at(i) - y.at(i);
  r.trim();
  return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K>& x) {
  UPoly<K> r = x;
  for (auto& v : r.c) v = -v;
  return r;
}

template <class K>
UPoly<K> operator*(const UPoly<K>& x, const UPoly<K>& y) {
  UPoly<K> r;
  if (x.is_zero() || y.is_zero()) return r;
  r.c.assign(x.c.size() + y.c.size() - 1, K(0));
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] = r.c[i + j] + x.c[i] * y.c[j];
  r.trim();
  return r;
}

template <class K>
UPoly<K> operator*(const K& s, const UPoly<K>& x) {
  UPoly<K> r = x;
  for (auto& v : r.c) v = s * v;
  r.trim();
  return r;
}

template <class K>
bool operator==(const UPoly<K>& x, const UPoly<K>& y) {
  if (x.c.size() != y.c.size()) return false;
  for (std::size_t i = 0; i < x.c.size(); ++i)
    if (!(x.c[i] == y.c[i])) return false;
  return true;
}

template <class K>
UPoly<K> upoly_pow(const UPoly<K>& x, unsigned e) {
  UPoly<K> acc = UPoly<K>::constant(K(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& num, const UPoly<K>& den) {
  if (den.is_zero()) throw error("polynomial division by zero");
  UPoly<K> q, r = num;
  if (r.deg() >= den.deg()) q.c.assign(r.deg() - den.deg() + 1, K(0));
  while (!r.is_zero() && r.deg() >= den.deg()) {
    K f = r.leading() / den.leading();
    int shift = r.deg() - den.deg();
    q.c[shift] = f;
    for (std::size_t i = 0; i < den.c.size(); ++i)
      r.c[i + shift] = r.c[i + shift] - f * den.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

// Monic gcd via the Euclidean algorithm.
template <class K>
UPoly<K> upoly_gcd(UPoly<K> x, UPoly<K> y) {
  while (!y.is_zero()) {
    auto [q, r] = divrem(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  K inv = K(1) / x.leading();
  return inv * x;
}

// ---------------------------------------------------------------------------
// Rational functions in one variable: num/den reduced, den monic.
// ---------------------------------------------------------------------------

template <class K>
struct URat {
  UPoly<K> num;
  UPoly<K> den;

  URat() : num(), den(UPoly<K>::constant(K(1))) {}
  URat(UPoly<K> n, UPoly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  static URat constant(const K& v) { return URat(UPoly<K>::constant(v), UPoly<K>::constant(K(1))); }
  static URat var() { return URat(UPoly<K>::var(), UPoly<K>::constant(K(1))); }

  void reduce() {
    if (den.is_zero()) throw error("rational function with zero denominator");
    if (num.is_zero()) {
      den = UPoly<K>::constant(K(1));
      return;
    }
    UPoly<K> g = upoly_gcd(num, den);
    if (g.deg() > 0) {
      num = divrem(num, g).first;
      den = divrem(den, g).first;
    }
    K inv = K(1) / den.leading();
    num = inv * num;
    den = inv * den;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_constant() const { return num.is_constant() && den.is_constant(); }

  // Value at a finite point; empty at a pole.
  std::optional<K> eval(const K& t) const {
    K d = den.eval(t);
    if (d.is_zero()) return std::nullopt;
    return num.eval(t) / d;
  }

  bool has_pole_at_infinity() const { return num.deg() > den.deg(); }

  // Value at t = infinity; empty when there is a pole there.
  std::optional<K> value_at_infinity() const {
    if (has_pole_at_infinity()) return std::nullopt;
    if (num.deg() < den.deg()) return K(0);
    return num.leading() / den.leading();
  }
};

template <class K>
URat<K> operator+(const URat<K>& x, const URat<K>& y) {
  return URat<K>(x.num * y.den + y.num * x.den, x.den * y.den);
}
template <class K>
URat<K> operator-(const URat<K>& x, const URat<K>& y) {
  return URat<K>(x.num * y.den - y.num * x.den, x.den * y.den);
}
template <class K>
URat<K> operator*(const URat<K>& x, const URat<K>& y) {
  return URat<K>(x.num * y.num, x.den * y.den);
}
template <class K>
URat<K> operator/(const URat<K>& x, const URat<K>& y) {
  if (y.is_zero()) throw error("division by the zero rational function");
  return URat<K>(x.num * y.den, x.den * y.num);
}
template <class K>
bool operator==(const URat<K>& x, const URat<K>& y) {
  return x.num == y.num && x.den == y.den;
}

// Coefficient-wise lift of a rational-coefficient object into Q(sqrt(D)).
UPoly<QuadElem> lift_quad(const UPoly<Rat>& p);
URat<QuadElem> lift_quad(const URat<Rat>& r);

// ---------------------------------------------------------------------------
// Moebius maps t = (a u + b) / (c u + d) over Q(sqrt(D)).
// ---------------------------------------------------------------------------

struct Mobius {
  QuadElem a, b, c, d;

  Mobius() : a(1), b(0), c(0), d(1) {}
  Mobius(const QuadElem& a_, const QuadElem& b_, const QuadElem& c_, const QuadElem& d_);

  QuadElem det() const { return a * d - b * c; }
  bool is_rational() const;

  // Value at u; empty means infinity.
  std::optional<QuadElem> apply(const QuadElem& u) const;
  // Value at u = infinity; empty means infinity.
  std::optional<QuadElem> apply_infinity() const;
  // Inverse map applied to t.
  std::optional<QuadElem> apply_inverse(const QuadElem& t) const;
  // Composition: (this o other)(u) = this(other(u)).
  Mobius compose(const Mobius& other) const;
  // this(s * u): fold an argument rescaling into the map.
  Mobius scale_arg(const QuadElem& s) const;
};

// R((a t + b)/(c t + d)), cleared of denominators and reduced.
URat<QuadElem> mobius_substitute(const URat<Rat>& r, const Mobius& m);
URat<QuadElem> mobius_substitute(const URat<QuadElem>& r, const Mobius& m);

// ---------------------------------------------------------------------------
// Laurent polynomials with coefficients in Q(sqrt(D)).
// ---------------------------------------------------------------------------

struct LaurentPoly {
  std::map<long, QuadElem> terms;  // exponent -> coefficient, no zeros
  Int d = 0;                       // shared field tag; 0 when all rational

  void set(long e, const QuadElem& v);
  QuadElem coeff(long e) const;
  bool is_zero() const { return terms.empty(); }
  long min_exp() const;
  long max_exp() const;

  // Exact value at theta != 0 (Horner in U and 1/U).
  QuadElem eval(const QuadElem& theta) const;

  // F(c U): multiplies the exponent-j coefficient by c^j.
  LaurentPoly scale_arg(const QuadElem& c) const;

  std::string str() const;
};

bool operator==(const LaurentPoly& x, const LaurentPoly& y);

// Exact Laurent expansion of a rational function whose only poles are at 0
// and infinity (denominator a monomial); throws otherwise.
LaurentPoly to_laurent(const URat<QuadElem>& r);

// True iff conjugating every coefficient equals reversing exponent signs.
bool is_skew_symmetric(const LaurentPoly& f);

// Least N >= 1 such that N * (every coefficient) has S-smooth denominators:
// the lcm over coefficients of the prime-to-S part of both component
// denominators.
Int clearing_constant(const std::vector<LaurentPoly>& fs, const PrimeSet& s);

// ---------------------------------------------------------------------------
// Sparse bivariate polynomials over Q in x, y.
// ---------------------------------------------------------------------------

struct Poly2 {
  // (i, j) -> coefficient of x^i y^j; no zero coefficients stored.
  std::map<std::pair<int, int>, Rat> terms;

  static Poly2 constant(const Rat& v);
  static Poly2 var_x();
  static Poly2 var_y();

  void set(int i, int j, const Rat& v);
  Rat coeff(int i, int j) const;
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return total_deg() <= 0; }
  int total_deg() const;

  Rat eval(const Rat& x, const Rat& y) const;
  UPoly<Rat> specialize_x(const Rat& x) const;  // polynomial in y
  UPoly<Rat> specialize_y(const Rat& y) const;  // polynomial in x
  Poly2 swapped() const;                        // x <-> y
  Poly2 homogeneous_part(int degree) const;
  Poly2 dx() const;
  Poly2 dy() const;

  // f(X(t), Y(t)) as a rational function; exact identity checks.
  URat<Rat> compose(const URat<Rat>& x, const URat<Rat>& y) const;

  std::string str() const;
};

Poly2 operator+(const Poly2& x, const Poly2& y);
Poly2 operator-(const Poly2& x, const Poly2& y);
Poly2 operator-(const Poly2& x);
Poly2 operator*(const Poly2& x, const Poly2& y);
Poly2 poly2_pow(const Poly2& x, unsigned e);
bool operator==(const Poly2& x, const Poly2& y);

// Distinct rational roots of a nonzero polynomial, sorted ascending.
std::vector<Rat> rational_roots(const UPoly<Rat>& p);

// Printing for univariate objects (round-trips through the parser).
std::string upoly_str(const UPoly<Rat>& p, const std::string& var = "t");
std::string urat_str(const URat<Rat>& r, const std::string& var = "t");

}  // namespace genus0
