#include "genus0/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace genus0 {

bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.coords == b.coords; }

bool point_lex_less(const AffinePoint& a, const AffinePoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

Int point_height(const AffinePoint& p) {
  Int h = 0;
  for (const Rat& c : p.coords) h = std::max(h, rat_height(c));
  return h;
}

bool point_search_less(const AffinePoint& a, const AffinePoint& b) {
  Int ha = point_height(a), hb = point_height(b);
  if (ha != hb) return ha < hb;
  for (std::size_t i = 0; i < std::min(a.coords.size(), b.coords.size()); ++i) {
    if (a.coords[i] != b.coords[i]) return search_rat_less(a.coords[i], b.coords[i]);
  }
  return a.coords.size() < b.coords.size();
}

bool point_sorted_less(const AffinePoint& a, const AffinePoint& b) {
  Int ha = point_height(a), hb = point_height(b);
  if (ha != hb) return ha < hb;
  return point_lex_less(a, b);
}

CurveInput CurveInput::implicit(Poly2 f, bool irreducibility_asserted) {
  if (f.is_zero() || f.total_deg() < 1)
    throw error("curve polynomial must be nonzero of degree >= 1");
  CurveInput c;
  c.kind = Kind::implicit_curve;
  c.f = std::move(f);
  c.irreducibility_asserted = irreducibility_asserted;
  return c;
}

CurveInput CurveInput::parametrized(std::vector<URat<Rat>> coords, bool properness_asserted) {
  if (coords.size() < 2) throw error("parametrization needs at least 2 coordinates");
  bool nonconstant = false;
  for (const auto& c : coords) nonconstant |= !c.is_constant();
  if (!nonconstant) throw error("parametrization must have a nonconstant coordinate");
  CurveInput c;
  c.kind = Kind::parametrized;
  c.coords = std::move(coords);
  c.properness_asserted = properness_asserted;
  return c;
}

Classification classify_implicit(const Poly2& f) {
  int deg = f.total_deg();
  if (deg < 1) return {ConicClass::degenerate, 0, "constant polynomial"};
  if (deg == 1) return {ConicClass::line, 0, ""};
  if (deg == 2) {
    // ax^2 + bxy + cy^2 + dx + ey + g; the projective conic is smooth iff
    // det [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, g]] != 0.
    Rat a = f.coeff(2, 0), b = f.coeff(1, 1), c = f.coeff(0, 2);
    Rat d = f.coeff(1, 0), e = f.coeff(0, 1), g = f.coeff(0, 0);
    Rat half(1, 2);
    Rat b2 = b * half, d2 = d * half, e2 = e * half;
    Rat det = a * (c * g - e2 * e2) - b2 * (b2 * g - e2 * d2) + d2 * (b2 * e2 - c * d2);
    if (!det.is_zero()) return {ConicClass::conic_smooth, 0, ""};
    return {ConicClass::degenerate, 0, "singular degree-2 form (reducible or rank <= 2)"};
  }
  // Leading form L(x, y); count distinct projective roots: distinct roots of
  // L(t, 1) plus the direction (1 : 0) when the t-degree drops below deg.
  Poly2 lead = f.homogeneous_part(deg);
  UPoly<Rat> g = lead.swapped().specialize_x(Rat(1));  // L(t, 1) as poly in t
  int roots = 0;
  if (!g.is_zero()) {
    UPoly<Rat> der = g.derivative();
    UPoly<Rat> sq = der.is_zero() ? g : divrem(g, upoly_gcd(g, der)).first;
    roots = sq.deg();
  }
  if (g.deg() < deg) roots += 1;
  return {ConicClass::higher_degree, roots, ""};
}

InfinityData infinity_of_conic(const Poly2& f) {
  Classification cls = classify_implicit(f);
  G0_CHECK(cls.kind == ConicClass::conic_smooth, "infinity_of_conic needs a smooth conic");
  Rat a = f.coeff(2, 0), b = f.coeff(1, 1), c = f.coeff(0, 2);
  Rat disc = b * b - Rat(4) * a * c;
  InfinityData out;
  if (disc.is_zero()) {
    out.kind = InfinityData::Kind::one_place;
    // Double root of the leading form: slope m with c m^2 + b m + a = 0.
    if (c.is_zero())
      out.p1 = {true, Rat(0)};
    else
      out.p1 = {false, -b / (Rat(2) * c)};
    return out;
  }
  if (auto root = rational_sqrt(disc)) {
    out.kind = InfinityData::Kind::two_rational;
    // Roots of c m^2 + b m + a; degree drop means one direction at (1 : 0).
    if (c.is_zero()) {
      out.p1 = {true, Rat(0)};
      out.p2 = {false, -a / b};
    } else {
      out.p1 = {false, (-b + *root) / (Rat(2) * c)};
      out.p2 = {false, (-b - *root) / (Rat(2) * c)};
    }
    return out;
  }
  // Conjugate pair: disc = s^2 D with D squarefree; root (-b + s sqrt(D)) / 2c.
  out.kind = InfinityData::Kind::two_conjugate;
  Rat disc_scaled = disc * Rat(Int(disc.den() * disc.den()));  // integer now
  auto [sf, sq] = squarefree_split(disc_scaled.num());
  out.d = sf;
  G0_CHECK(!c.is_zero(), "square discriminant escaped the rational branch");
  Rat s(sq, disc.den());
  out.alpha = QuadElem(-b / (Rat(2) * c), s / (Rat(2) * c), sf);
  return out;
}

namespace {

// Places of the projective t-line where some coordinate has a pole.
struct PoleData {
  std::vector<Rat> rational;   // distinct finite rational poles
  UPoly<Rat> conjugate_block;  // squarefree, no rational roots
  bool at_infinity = false;
};

PoleData collect_poles(const std::vector<URat<Rat>>& coords) {
  PoleData out;
  UPoly<Rat> den = UPoly<Rat>::constant(Rat(1));
  for (const auto& c : coords) {
    if (c.has_pole_at_infinity()) out.at_infinity = true;
    // lcm of denominators.
    UPoly<Rat> g = upoly_gcd(den, c.den);
    den = divrem(den * c.den, g).first;
  }
  if (den.deg() > 0) {
    UPoly<Rat> der = den.derivative();
    UPoly<Rat> sq = divrem(den, upoly_gcd(den, der)).first;
    out.rational = rational_roots(sq);
    UPoly<Rat> rest = sq;
    for (const Rat& r : out.rational) {
      UPoly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
      rest = divrem(rest, lin).first;
    }
    out.conjugate_block = rest;
  }
  return out;
}

}  // namespace

InfinityData poles_of_parametrization(const std::vector<URat<Rat>>& coords) {
  PoleData poles = collect_poles(coords);
  int finite_rational = static_cast<int>(poles.rational.size());
  int conj_deg = std::max(poles.conjugate_block.deg(), 0);
  int total = finite_rational + conj_deg + (poles.at_infinity ? 1 : 0);
  InfinityData out;
  G0_CHECK(total >= 1, "nonconstant parametrization with no pole");
  if (total == 1) {
    out.kind = InfinityData::Kind::one_place;
    out.p1 = poles.at_infinity ? PlaceQ{true, Rat(0)} : PlaceQ{false, poles.rational[0]};
    return out;
  }
  if (total == 2 && conj_deg == 2) {
    out.kind = InfinityData::Kind::two_conjugate;
    // alpha = (-b + s sqrt(D)) / 2a for the irreducible a t^2 + b t + c.
    Rat a = poles.conjugate_block.at(2), b = poles.conjugate_block.at(1),
        c = poles.conjugate_block.at(0);
    Rat disc = b * b - Rat(4) * a * c;
    Rat disc_scaled = disc * Rat(Int(disc.den() * disc.den()));
    auto [sf, sq] = squarefree_split(disc_scaled.num());
    out.d = sf;
    Rat s(sq, disc.den());
    out.alpha = QuadElem(-b / (Rat(2) * a), s / (Rat(2) * a), sf);
    return out;
  }
  if (total == 2) {
    out.kind = InfinityData::Kind::two_rational;
    if (poles.at_infinity) {
      out.p1 = {false, poles.rational[0]};
      out.p2 = {true, Rat(0)};
    } else {
      out.p1 = {false, poles.rational[0]};
      out.p2 = {false, poles.rational[1]};
    }
    return out;
  }
  out.kind = InfinityData::Kind::three_or_more;
  out.count = total;
  return out;
}

std::vector<URat<Rat>> parametrize_conic(const Poly2& f, const AffinePoint& p) {
  G0_CHECK(p.coords.size() == 2, "parametrize_conic expects a plane point");
  const Rat& px = p.coords[0];
  const Rat& py = p.coords[1];
  if (!f.eval(px, py).is_zero())
    throw error("parametrize_conic: point does not lie on the curve");
  // f(P + (s, m s)) = s * (fx(P) + m fy(P)) + s^2 * L(1, m) with L the
  // leading form, so the second intersection is at s = -B(m) / A(m).
  UPoly<Rat> a_poly(std::vector<Rat>{f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)});
  UPoly<Rat> b_poly(std::vector<Rat>{f.dx().eval(px, py), f.dy().eval(px, py)});
  G0_CHECK(!a_poly.is_zero(), "degree-2 curve with zero leading form");
  G0_CHECK(!b_poly.is_zero(), "smooth conic with a singular point");
  URat<Rat> s(-b_poly, a_poly);
  URat<Rat> x = URat<Rat>::constant(px) + s;
  URat<Rat> y = URat<Rat>::constant(py) + URat<Rat>::var() * s;
  URat<Rat> residue = f.compose(x, y);
  G0_CHECK(residue.is_zero(), "pencil parametrization does not satisfy the curve equation");
  return {x, y};
}

ImageTester::ImageTester(const std::vector<URat<Rat>>& coords, const PrimeSet& s)
    : coords_(&coords), s_(s) {
  fast_ok_ = true;
  for (const Int& p : s.primes()) {
    if (!p.fits_ulong_p()) fast_ok_ = false;
    else small_primes_.push_back(p.get_ui());
  }
  for (const auto& c : coords) {
    HomogCoord h;
    h.n = std::max(c.num.deg(), c.den.deg());
    if (h.n < 0) h.n = 0;
    Int clear = 1;
    for (int i = 0; i <= c.num.deg(); ++i) clear = lcm(clear, c.num.at(i).den());
    for (int i = 0; i <= c.den.deg(); ++i) clear = lcm(clear, c.den.at(i).den());
    h.num.assign(h.n + 1, 0);
    h.den.assign(h.n + 1, 0);
    for (int i = 0; i <= h.n; ++i) {
      h.num[i] = c.num.at(i).num() * (clear / c.num.at(i).den());
      h.den[i] = c.den.at(i).num() * (clear / c.den.at(i).den());
    }
    for (const Int& v : h.num) max_bits_ = std::max(max_bits_, long(mpz_sizeinbase(v.get_mpz_t(), 2)));
    for (const Int& v : h.den) max_bits_ = std::max(max_bits_, long(mpz_sizeinbase(v.get_mpz_t(), 2)));
    if (h.n > 12) fast_ok_ = false;
    homog_.push_back(std::move(h));
  }
  if (max_bits_ > 62) fast_ok_ = false;
  if (fast_ok_)
    for (auto& h : homog_) {
      for (const Int& v : h.num) h.num_l.push_back(v.get_si());
      for (const Int& v : h.den) h.den_l.push_back(v.get_si());
    }
}

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  if (a <= UINT64_MAX && b <= UINT64_MAX)
    return std::gcd(std::uint64_t(a), std::uint64_t(b));
  while (b) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::optional<AffinePoint> ImageTester::test(const Int& a, const Int& b) const {
  if (a.fits_slong_p() && b.fits_slong_p()) return test_small(a.get_si(), b.get_si());
  return test_exact(Rat(a, b));
}

std::optional<AffinePoint> ImageTester::test_small(long a, long b) const {
  long h = std::max(std::labs(a), b);
  long hbits = 1;
  while ((1L << hbits) <= h && hbits < 62) ++hbits;
  bool fast = fast_ok_ && hbits <= 62;
  if (fast)
    for (const auto& hc : homog_)
      if (max_bits_ + hc.n * hbits + 8 > 120) fast = false;
  if (!fast) return test_exact(Rat(Int(a), Int(b)));
  for (const auto& hc : homog_) {
    // Evaluate numerator and denominator homogeneously at (a, b).
    __int128 bp = 1;
    __int128 num = 0, den = 0;
    for (int j = hc.n; j >= 0; --j) {
      // bp = b^(n - j)
      num = num * a + __int128(hc.num_l[j]) * bp;
      den = den * a + __int128(hc.den_l[j]) * bp;
      if (j > 0) bp *= b;
    }
    if (den == 0) return std::nullopt;  // pole
    __int128 g = gcd128(num, den);
    __int128 q = abs128(den) / (g ? g : 1);
    for (unsigned long p : small_primes_)
      while (q % p == 0) q /= p;
    if (q != 1) return std::nullopt;
  }
  // Rare hit: rebuild the point exactly.
  return test_exact(Rat(Int(a), Int(b)));
}

std::optional<AffinePoint> ImageTester::test_exact(const Rat& t) const {
  AffinePoint out;
  for (const auto& c : *coords_) {
    auto v = c.eval(t);
    if (!v || !is_s_integer(*v, s_)) return std::nullopt;
    out.coords.push_back(*v);
  }
  out.param = t;
  return out;
}

std::vector<Rat> s_integral_fiber(const Poly2& f, const Rat& v, bool swapped,
                                  const PrimeSet& s) {
  UPoly<Rat> g = swapped ? f.specialize_y(v) : f.specialize_x(v);
  std::vector<Rat> ys;
  if (g.deg() <= 0) return ys;
  if (g.deg() == 1) {
    ys.push_back(-g.at(0) / g.at(1));
  } else if (g.deg() == 2) {
    Rat disc = g.at(1) * g.at(1) - Rat(4) * g.at(2) * g.at(0);
    if (auto r = rational_sqrt(disc)) {
      ys.push_back((-g.at(1) + *r) / (Rat(2) * g.at(2)));
      if (!r->is_zero()) ys.push_back((-g.at(1) - *r) / (Rat(2) * g.at(2)));
    }
  } else {
    ys = rational_roots(g);
  }
  std::erase_if(ys, [&](const Rat& y) { return !is_s_integer(y, s); });
  return ys;
}

LineDecision line_decision(const Poly2& f, const PrimeSet& s) {
  G0_CHECK(f.total_deg() == 1, "line_decision expects a degree-1 polynomial");
  Rat ar = f.coeff(1, 0), br = f.coeff(0, 1), cr = f.coeff(0, 0);
  Int m = lcm(lcm(ar.den(), br.den()), cr.den());
  Int a = ar.num() * (m / ar.den());
  Int b = br.num() * (m / br.den());
  Int c = cr.num() * (m / cr.den());
  Int g = gcd(a, b);
  G0_CHECK(g != 0, "degree-1 polynomial without linear part");
  Int gs = prime_to_s_part(g, s);
  LineDecision out;
  if (!mpz_divisible_p(c.get_mpz_t(), gs.get_mpz_t())) return out;
  out.has_point = true;
  // a u + b v = g, then scale by -c/g; the S-smooth part of g moves into the
  // denominators.
  Int u, v, gg;
  mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int smooth = g / gs;
  Int scale = -c / gs;
  AffinePoint pt;
  pt.coords = {Rat(u * scale, smooth), Rat(v * scale, smooth)};
  G0_CHECK(f.eval(pt.coords[0], pt.coords[1]).is_zero(), "line witness point off the line");
  G0_CHECK(is_s_integer(pt.coords[0], s) && is_s_integer(pt.coords[1], s),
           "line witness point not S-integral");
  out.point = pt;
  return out;
}

}  // namespace genus0
