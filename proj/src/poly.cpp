#include "genus0/poly.hpp"

#include <algorithm>
#include <sstream>

namespace genus0 {

UPoly<QuadElem> lift_quad(const UPoly<Rat>& p) {
  UPoly<QuadElem> r;
  r.c.reserve(p.c.size());
  for (const Rat& v : p.c) r.c.emplace_back(v);
  r.trim();
  return r;
}

URat<QuadElem> lift_quad(const URat<Rat>& r) {
  return URat<QuadElem>(lift_quad(r.num), lift_quad(r.den));
}

// ---------------------------------------------------------------------------
// Mobius
// ---------------------------------------------------------------------------

Mobius::Mobius(const QuadElem& a_, const QuadElem& b_, const QuadElem& c_,
               const QuadElem& d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (det().is_zero()) throw error("degenerate Moebius map (det = 0)");
}

bool Mobius::is_rational() const {
  return a.is_rational() && b.is_rational() && c.is_rational() && d.is_rational();
}

std::optional<QuadElem> Mobius::apply(const QuadElem& u) const {
  QuadElem den = c * u + d;
  if (den.is_zero()) return std::nullopt;
  return (a * u + b) / den;
}

std::optional<QuadElem> Mobius::apply_infinity() const {
  if (c.is_zero()) return std::nullopt;
  return a / c;
}

std::optional<QuadElem> Mobius::apply_inverse(const QuadElem& t) const {
  QuadElem den = a - c * t;
  if (den.is_zero()) return std::nullopt;
  return (d * t - b) / den;
}

Mobius Mobius::compose(const Mobius& o) const {
  return Mobius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d);
}

Mobius Mobius::scale_arg(const QuadElem& s) const {
  if (s.is_zero()) throw error("Moebius argument rescale by zero");
  return Mobius(a * s, b, c * s, d);
}

namespace {

URat<QuadElem> mobius_substitute_impl(const UPoly<QuadElem>& num,
                                      const UPoly<QuadElem>& den, const Mobius& m) {
  // P((a t + b)/(c t + d)) homogenizes as sum p_i (a t + b)^i (c t + d)^(n-i)
  // over the common degree n of numerator and denominator.
  int n = std::max(num.deg(), den.deg());
  UPoly<QuadElem> top = UPoly<QuadElem>({m.b, m.a});
  UPoly<QuadElem> bot = UPoly<QuadElem>({m.d, m.c});
  std::vector<UPoly<QuadElem>> tp(n + 1), bp(n + 1);
  tp[0] = bp[0] = UPoly<QuadElem>::constant(QuadElem(1));
  for (int i = 1; i <= n; ++i) {
    tp[i] = tp[i - 1] * top;
    bp[i] = bp[i - 1] * bot;
  }
  auto lift = [&](const UPoly<QuadElem>& p) {
    UPoly<QuadElem> acc;
    for (int i = 0; i <= p.deg(); ++i) {
      if (p.at(i).is_zero()) continue;
      acc = acc + p.at(i) * (tp[i] * bp[n - i]);
    }
    return acc;
  };
  return URat<QuadElem>(lift(num), lift(den));
}

}  // namespace

URat<QuadElem> mobius_substitute(const URat<Rat>& r, const Mobius& m) {
  return mobius_substitute_impl(lift_quad(r.num), lift_quad(r.den), m);
}

URat<QuadElem> mobius_substitute(const URat<QuadElem>& r, const Mobius& m) {
  return mobius_substitute_impl(r.num, r.den, m);
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

void LaurentPoly::set(long e, const QuadElem& v) {
  if (v.is_zero()) {
    terms.erase(e);
    return;
  }
  if (v.d != 0) {
    if (d == 0)
      d = v.d;
    else if (d != v.d)
      throw error("Laurent coefficients from different quadratic fields");
  }
  terms[e] = v;
}

QuadElem LaurentPoly::coeff(long e) const {
  auto it = terms.find(e);
  return it == terms.end() ? QuadElem(0) : it->second;
}

long LaurentPoly::min_exp() const { return terms.empty() ? 0 : terms.begin()->first; }
long LaurentPoly::max_exp() const { return terms.empty() ? 0 : terms.rbegin()->first; }

QuadElem LaurentPoly::eval(const QuadElem& theta) const {
  if (theta.is_zero()) throw error("Laurent evaluation at zero");
  // Horner over the nonnegative part in theta, the negative part in 1/theta.
  std::vector<std::pair<long, QuadElem>> pos, neg;
  for (const auto& [e, v] : terms) (e >= 0 ? pos : neg).emplace_back(e, v);
  QuadElem plus(0);
  if (!pos.empty()) {
    long prev = 0;
    bool first = true;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
      if (first) {
        plus = it->second;
        first = false;
      } else {
        plus = plus * pow(theta, Int(prev - it->first)) + it->second;
      }
      prev = it->first;
    }
    plus = plus * pow(theta, Int(prev));
  }
  QuadElem minus(0);
  if (!neg.empty()) {
    QuadElem w = inverse(theta);
    long prev = 0;
    bool first = true;
    for (const auto& [e, v] : neg) {
      long m = -e;
      if (first) {
        minus = v;
        first = false;
      } else {
        minus = minus * pow(w, Int(prev - m)) + v;
      }
      prev = m;
    }
    minus = minus * pow(w, Int(prev));
  }
  return plus + minus;
}

LaurentPoly LaurentPoly::scale_arg(const QuadElem& c) const {
  if (c.is_zero()) throw error("Laurent rescale by zero");
  LaurentPoly r;
  for (const auto& [e, v] : terms) r.set(e, v * pow(c, Int(e)));
  return r;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.str() << ")";
    if (it->first != 0) out << "*U^" << it->first;
  }
  return out.str();
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms.size() != y.terms.size()) return false;
  for (const auto& [e, v] : x.terms)
    if (!(y.coeff(e) == v)) return false;
  return true;
}

LaurentPoly to_laurent(const URat<QuadElem>& r) {
  const UPoly<QuadElem>& den = r.den;
  // Denominator must be (monic) t^k.
  for (int i = 0; i < den.deg(); ++i)
    if (!den.at(i).is_zero())
      throw error("rational function has a pole away from 0 and infinity");
  long k = den.deg();
  LaurentPoly out;
  for (int i = 0; i <= r.num.deg(); ++i) out.set(i - k, r.num.at(i));
  return out;
}

bool is_skew_symmetric(const LaurentPoly& f) {
  for (const auto& [e, v] : f.terms)
    if (!(v.conj() == f.coeff(-e))) return false;
  return true;
}

Int clearing_constant(const std::vector<LaurentPoly>& fs, const PrimeSet& s) {
  if (fs.empty()) throw error("clearing_constant of an empty family");
  Int n = 1;
  for (const LaurentPoly& f : fs)
    for (const auto& [e, v] : f.terms) {
      n = lcm(n, prime_to_s_part(v.a.den(), s));
      n = lcm(n, prime_to_s_part(v.b.den(), s));
    }
  return n;
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

Poly2 Poly2::constant(const Rat& v) {
  Poly2 p;
  p.set(0, 0, v);
  return p;
}
Poly2 Poly2::var_x() {
  Poly2 p;
  p.set(1, 0, Rat(1));
  return p;
}
Poly2 Poly2::var_y() {
  Poly2 p;
  p.set(0, 1, Rat(1));
  return p;
}

void Poly2::set(int i, int j, const Rat& v) {
  if (v.is_zero())
    terms.erase({i, j});
  else
    terms[{i, j}] = v;
}

Rat Poly2::coeff(int i, int j) const {
  auto it = terms.find({i, j});
  return it == terms.end() ? Rat(0) : it->second;
}

int Poly2::total_deg() const {
  int d = -1;
  for (const auto& [ij, v] : terms) d = std::max(d, ij.first + ij.second);
  return d;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [ij, v] : terms) {
    Rat t = v;
    for (int i = 0; i < ij.first; ++i) t *= x;
    for (int j = 0; j < ij.second; ++j) t *= y;
    acc += t;
  }
  return acc;
}

UPoly<Rat> Poly2::specialize_x(const Rat& x) const {
  std::vector<Rat> c;
  for (const auto& [ij, v] : terms) {
    Rat t = v;
    for (int i = 0; i < ij.first; ++i) t *= x;
    if (ij.second >= static_cast<int>(c.size())) c.resize(ij.second + 1, Rat(0));
    c[ij.second] += t;
  }
  return UPoly<Rat>(std::move(c));
}

UPoly<Rat> Poly2::specialize_y(const Rat& y) const { return swapped().specialize_x(y); }

Poly2 Poly2::swapped() const {
  Poly2 r;
  for (const auto& [ij, v] : terms) r.set(ij.second, ij.first, v);
  return r;
}

Poly2 Poly2::homogeneous_part(int degree) const {
  Poly2 r;
  for (const auto& [ij, v] : terms)
    if (ij.first + ij.second == degree) r.set(ij.first, ij.second, v);
  return r;
}

Poly2 Poly2::dx() const {
  Poly2 r;
  for (const auto& [ij, v] : terms)
    if (ij.first > 0) r.set(ij.first - 1, ij.second, v * Rat(ij.first));
  return r;
}

Poly2 Poly2::dy() const {
  Poly2 r;
  for (const auto& [ij, v] : terms)
    if (ij.second > 0) r.set(ij.first, ij.second - 1, v * Rat(ij.second));
  return r;
}

URat<Rat> Poly2::compose(const URat<Rat>& x, const URat<Rat>& y) const {
  URat<Rat> acc;
  for (const auto& [ij, v] : terms) {
    URat<Rat> t = URat<Rat>::constant(v);
    for (int i = 0; i < ij.first; ++i) t = t * x;
    for (int j = 0; j < ij.second; ++j) t = t * y;
    acc = acc + t;
  }
  return acc;
}

Poly2 operator+(const Poly2& x, const Poly2& y) {
  Poly2 r = x;
  for (const auto& [ij, v] : y.terms) r.set(ij.first, ij.second, r.coeff(ij.first, ij.second) + v);
  return r;
}

Poly2 operator-(const Poly2& x, const Poly2& y) {
  Poly2 r = x;
  for (const auto& [ij, v] : y.terms) r.set(ij.first, ij.second, r.coeff(ij.first, ij.second) - v);
  return r;
}

Poly2 operator-(const Poly2& x) {
  Poly2 r;
  for (const auto& [ij, v] : x.terms) r.set(ij.first, ij.second, -v);
  return r;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
  Poly2 r;
  for (const auto& [a, va] : x.terms)
    for (const auto& [b, vb] : y.terms) {
      int i = a.first + b.first, j = a.second + b.second;
      r.set(i, j, r.coeff(i, j) + va * vb);
    }
  return r;
}

Poly2 poly2_pow(const Poly2& x, unsigned e) {
  Poly2 acc = Poly2::constant(Rat(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

bool operator==(const Poly2& x, const Poly2& y) {
  if (x.terms.size() != y.terms.size()) return false;
  for (const auto& [ij, v] : x.terms)
    if (!(y.coeff(ij.first, ij.second) == v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

std::vector<Rat> rational_roots(const UPoly<Rat>& p) {
  if (p.is_zero()) throw error("rational_roots of the zero polynomial");
  // Clear to integer coefficients.
  Int den = 1;
  for (const Rat& v : p.c) den = lcm(den, v.den());
  std::vector<Int> c;
  c.reserve(p.c.size());
  for (const Rat& v : p.c) c.push_back(v.num() * (den / v.den()));

  std::vector<Rat> roots;
  // Strip powers of t.
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    c.erase(c.begin(), c.begin() + low);
  }
  if (c.size() <= 1) return roots;

  Int content = 0;
  for (const Int& v : c) content = gcd(content, v);
  for (Int& v : c) v /= content;

  auto eval_at = [&](const Int& num, const Int& dnm) {
    // sum c_i num^i dnm^(n-i) == 0 detects the root exactly.
    Int acc = 0, np = 1;
    std::vector<Int> dp(c.size(), 1);
    for (std::size_t i = 1; i < c.size(); ++i) dp[i] = dp[i - 1] * dnm;
    for (std::size_t i = 0; i < c.size(); ++i) {
      acc += c[i] * np * dp[c.size() - 1 - i];
      np *= num;
    }
    return acc == 0;
  };

  for (const Int& q : divisors(::abs(c.back()))) {
    for (const Int& pdiv : divisors(::abs(c.front()))) {
      if (gcd(pdiv, q) != 1) continue;
      if (eval_at(pdiv, q)) roots.push_back(Rat(pdiv, q));
      if (eval_at(-pdiv, q)) roots.push_back(Rat(-pdiv, q));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// One monomial like "x^2*y" or "(3/2)*x" following the input grammar.
std::string term_str(const Rat& coeff, const std::vector<std::pair<std::string, int>>& vars) {
  std::string mono;
  for (const auto& [name, e] : vars) {
    if (e == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += name;
    if (e > 1) mono += "^" + std::to_string(e);
  }
  Rat c = coeff.abs();
  if (mono.empty()) return c.str();
  if (c == Rat(1)) return mono;
  if (c.is_integer()) return c.str() + "*" + mono;
  return "(" + c.str() + ")*" + mono;
}

std::string join_terms(std::vector<std::pair<Rat, std::string>> parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [coeff, body] = parts[i];
    if (i == 0)
      out += coeff.sign() < 0 ? "-" : "";
    else
      out += coeff.sign() < 0 ? " - " : " + ";
    out += body;
  }
  return out;
}

}  // namespace

std::string Poly2::str() const {
  // Terms descending by total degree, then x-degree.
  std::vector<std::pair<std::pair<int, int>, Rat>> ts(terms.begin(), terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto& [ij, v] : ts)
    parts.emplace_back(v, term_str(v, {{"x", ij.first}, {"y", ij.second}}));
  return join_terms(std::move(parts));
}

std::string upoly_str(const UPoly<Rat>& p, const std::string& var) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (int i = p.deg(); i >= 0; --i) {
    Rat v = p.at(i);
    if (v.is_zero()) continue;
    parts.emplace_back(v, term_str(v, {{var, i}}));
  }
  return join_terms(std::move(parts));
}

std::string urat_str(const URat<Rat>& r, const std::string& var) {
  if (r.den.is_constant()) return upoly_str(r.num, var);
  return "(" + upoly_str(r.num, var) + ")/(" + upoly_str(r.den, var) + ")";
}

}  // namespace genus0
