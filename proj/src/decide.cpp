#include "genus0/decide.hpp"

#include <algorithm>
#include <numeric>

namespace genus0 {

const char* case_tag(CurveCase c) {
  switch (c) {
    case CurveCase::parabolic:
      return "I1";
    case CurveCase::hyperbolic:
      return "I2K";
    default:
      return "I2L";
  }
}

// ---------------------------------------------------------------------------
// Point search
// ---------------------------------------------------------------------------

namespace {

void solve_fiber(const Poly2& f, const Rat& x0, bool swapped, const PrimeSet& s,
                 std::vector<AffinePoint>& out) {
  for (const Rat& y : s_integral_fiber(f, x0, swapped, s)) {
    AffinePoint p;
    p.coords = swapped ? std::vector<Rat>{y, x0} : std::vector<Rat>{x0, y};
    out.push_back(p);
  }
}

// Candidate values of exact height h with S-smooth denominator (smooth must
// contain the S-smooth integers up to at least h, sorted).
template <class Fn>
void for_height_candidates(const Int& h, const std::vector<Int>& smooth, Fn&& fn) {
  for (const Int& b : smooth) {
    if (b > h) break;
    if (gcd(h, b) == 1) {
      fn(Rat(h, b));
      fn(Rat(-h, b));
    }
  }
  if (std::binary_search(smooth.begin(), smooth.end(), h)) {
    for (Int a = h == 1 ? 0 : 1; a < h; ++a) {
      if (gcd(a, h) != 1) continue;
      fn(Rat(a, h));
      if (a != 0) fn(Rat(-a, h));
    }
  }
}

}  // namespace

std::optional<AffinePoint> search_point(const CurveInput& input, const PrimeSet& s,
                                        const Int& bound) {
  if (bound < 1) throw error("search bound must be >= 1");
  if (input.kind == CurveInput::Kind::implicit_curve) {
    std::vector<Int> denoms = s_smooth_upto(s, bound);
    bool dual_sweep = input.f.total_deg() >= 2;
    // Degree-1: sweep x and solve for y when y appears, else sweep y.
    bool sweep_x_first = dual_sweep || input.f.coeff(0, 1) != Rat(0);
    for (Int h = 1; h <= bound; ++h) {
      std::vector<AffinePoint> level;
      for_height_candidates(h, denoms, [&](const Rat& v) {
        if (sweep_x_first) solve_fiber(input.f, v, false, s, level);
        if (dual_sweep || !sweep_x_first) solve_fiber(input.f, v, true, s, level);
      });
      if (!level.empty())
        return *std::min_element(level.begin(), level.end(), point_search_less);
    }
    return std::nullopt;
  }

  // Parametrized: t = a/b with max(|a|, b) = h, any denominator.
  G0_CHECK(bound.fits_slong_p(), "parametrized search bound too large");
  ImageTester tester(input.coords, s);
  long hmax = bound.get_si();
  for (long h = 1; h <= hmax; ++h) {
    std::vector<AffinePoint> level;
    auto try_t = [&](long a, long b) {
      if (auto p = tester.test_small(a, b)) level.push_back(*p);
    };
    for (long b = 1; b <= h; ++b)
      if (std::gcd(h, b) == 1) {
        try_t(h, b);
        try_t(-h, b);
      }
    for (long a = h == 1 ? 0 : 1; a < h; ++a)
      if (std::gcd(a, h) == 1) {
        try_t(a, h);
        if (a != 0) try_t(-a, h);
      }
    if (!level.empty())
      return *std::min_element(level.begin(), level.end(), point_search_less);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witness construction
// ---------------------------------------------------------------------------

namespace {

bool coord_has_pole_at(const URat<Rat>& c, const PlaceQ& q) {
  if (q.at_infinity) return c.has_pole_at_infinity();
  return c.den.eval(q.value).is_zero();
}

// The pole sent to u = infinity: the one owned by the lowest-indexed
// coordinate (so the leading coordinate grows with theta); ties prefer the
// place at infinity, then the smaller value.
std::pair<PlaceQ, PlaceQ> orient_poles(const std::vector<URat<Rat>>& coords,
                                       const PlaceQ& p1, const PlaceQ& p2) {
  auto first_owner = [&](const PlaceQ& q) {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coord_has_pole_at(coords[i], q)) return i;
    return coords.size();
  };
  std::size_t k1 = first_owner(p1), k2 = first_owner(p2);
  if (k1 < k2) return {p1, p2};
  if (k2 < k1) return {p2, p1};
  if (p1.at_infinity) return {p1, p2};
  if (p2.at_infinity) return {p2, p1};
  return search_rat_less(p1.value, p2.value) ? std::make_pair(p1, p2)
                                             : std::make_pair(p2, p1);
}

struct WorkingParam {
  std::vector<URat<Rat>> coords;
  Rat t0;
};

WorkingParam line_parametrization(const Poly2& f, const AffinePoint& p) {
  Rat a = f.coeff(1, 0), b = f.coeff(0, 1), c = f.coeff(0, 0);
  WorkingParam w;
  if (!b.is_zero()) {
    // (t, -(c + a t)/b)
    UPoly<Rat> num(std::vector<Rat>{-c / b, -a / b});
    w.coords = {URat<Rat>::var(), URat<Rat>(num, UPoly<Rat>::constant(Rat(1)))};
    w.t0 = p.coords[0];
  } else {
    w.coords = {URat<Rat>::constant(-c / a), URat<Rat>::var()};
    w.t0 = p.coords[1];
  }
  return w;
}

WorkingParam conic_parametrization(const Poly2& f, const AffinePoint& p) {
  const Rat& px = p.coords[0];
  const Rat& py = p.coords[1];
  Rat fx = f.dx().eval(px, py), fy = f.dy().eval(px, py);
  WorkingParam w;
  if (!fy.is_zero()) {
    w.coords = parametrize_conic(f, p);
    w.t0 = -fx / fy;
    return w;
  }
  // Vertical tangent at P: the slope pencil puts P at infinity, so use the
  // transposed pencil and swap the coordinates back.
  AffinePoint q;
  q.coords = {py, px};
  auto swapped = parametrize_conic(f.swapped(), q);
  w.coords = {swapped[1], swapped[0]};
  w.t0 = -fy / fx;  // derivatives of the swapped curve at q
  return w;
}

}  // namespace

Witness build_witness(const CurveInput& input, const PrimeSet& s,
                      const InfinityData& infinity, const AffinePoint& p) {
  // Stage 1: a parametrization of the curve with P at a finite parameter.
  WorkingParam work;
  if (input.kind == CurveInput::Kind::parametrized) {
    G0_CHECK(p.param.has_value(), "parametrized base point lacks a parameter value");
    work.coords = input.coords;
    work.t0 = *p.param;
  } else if (input.f.total_deg() == 1) {
    work = line_parametrization(input.f, p);
  } else {
    work = conic_parametrization(input.f, p);
  }

  InfinityData poles = input.kind == CurveInput::Kind::parametrized
                           ? infinity
                           : poles_of_parametrization(work.coords);
  G0_CHECK(poles.kind == infinity.kind || input.kind != CurveInput::Kind::parametrized,
           "pole analysis mismatch");
  if (input.kind == CurveInput::Kind::implicit_curve &&
      infinity.kind == InfinityData::Kind::two_conjugate) {
    G0_CHECK(poles.kind == InfinityData::Kind::two_conjugate &&
                 poles.d == infinity.d,
             "conic and parametrization disagree on the field at infinity");
  }

  // Stage 2: the coordinate u with the pole(s) at infinity (parabolic), at
  // {0, infinity} (hyperbolic), or u = (t - alpha)/(t - conj(alpha)) (Pell),
  // normalized so that u = 0 resp. u = 1 at the base point.
  Witness w;
  w.curve = input;
  w.primes = s;
  w.base_param = work.t0;
  QuadElem t0q{work.t0};

  switch (poles.kind) {
    case InfinityData::Kind::one_place: {
      w.curve_case = CurveCase::parabolic;
      if (poles.p1.at_infinity) {
        w.map = Mobius(QuadElem(1), t0q, QuadElem(0), QuadElem(1));
      } else {
        QuadElem pole{poles.p1.value};
        QuadElem s0 = inverse(t0q - pole);
        w.map = Mobius(pole, pole * s0 + QuadElem(1), QuadElem(1), s0);
      }
      break;
    }
    case InfinityData::Kind::two_rational: {
      w.curve_case = CurveCase::hyperbolic;
      auto [q_inf, q_zero] = orient_poles(work.coords, poles.p1, poles.p2);
      Mobius base;
      if (q_inf.at_infinity)
        base = Mobius(QuadElem(1), QuadElem{q_zero.value}, QuadElem(0), QuadElem(1));
      else if (q_zero.at_infinity)
        base = Mobius(QuadElem{q_inf.value}, QuadElem(1), QuadElem(1), QuadElem(0));
      else
        base = Mobius(QuadElem{q_inf.value}, QuadElem{q_zero.value}, QuadElem(1), QuadElem(1));
      auto u0 = base.apply_inverse(t0q);
      G0_CHECK(u0.has_value() && !u0->is_zero(), "base parameter collides with a pole");
      w.map = base.scale_arg(*u0);
      break;
    }
    case InfinityData::Kind::two_conjugate: {
      w.curve_case = CurveCase::pell_type;
      w.d = poles.d;
      const QuadElem& alpha = poles.alpha;
      QuadElem alpha_conj = alpha.conj();
      Mobius base(alpha_conj, -alpha, QuadElem(1), QuadElem(-1));
      QuadElem u0 = (t0q - alpha) / (t0q - alpha_conj);
      G0_CHECK(u0.norm() == Rat(1), "base u-value does not have norm 1");
      w.map = base.scale_arg(u0);
      break;
    }
    default:
      throw invariant_error("build_witness called on a non-constructive branch");
  }

  // Stage 3: coordinates as Laurent polynomials in U.
  for (const auto& coord : work.coords) {
    LaurentPoly f = to_laurent(mobius_substitute(coord, w.map));
    w.fs.push_back(f);
  }
  for (std::size_t i = 0; i < w.fs.size(); ++i) {
    const LaurentPoly& f = w.fs[i];
    G0_CHECK(is_s_integer(p.coords[i], s), "base point is not S-integral");
    if (w.curve_case == CurveCase::parabolic) {
      G0_CHECK(f.min_exp() >= 0, "parabolic coordinate with a negative exponent");
      G0_CHECK(f.coeff(0) == QuadElem{p.coords[i]}, "F(0) does not reproduce the base point");
    } else {
      G0_CHECK(f.eval(QuadElem(1)) == QuadElem{p.coords[i]},
               "F(1) does not reproduce the base point");
    }
    if (w.curve_case == CurveCase::pell_type)
      G0_CHECK(is_skew_symmetric(f), "Pell-type coordinate is not skew-symmetric");
  }

  // Stage 4: clearing constant and congruence data.
  w.clearing = clearing_constant(w.fs, s);
  w.modulus = prime_to_s_part(w.clearing, s);

  switch (w.curve_case) {
    case CurveCase::parabolic:
      w.gen.kind = Generator::Kind::integers;
      break;
    case CurveCase::hyperbolic: {
      G0_CHECK(!s.empty(), "hyperbolic witness needs a finite prime in S");
      w.gen.kind = Generator::Kind::s_unit_power;
      w.gen.p = s.primes().front();
      w.gen.step = w.modulus == 1 ? Int(1) : mult_order(w.gen.p, w.modulus);
      break;
    }
    case CurveCase::pell_type: {
      auto gamma = norm_one_generator(*w.d, s);
      G0_CHECK(gamma.has_value(), "pell-type witness without a split place");
      w.gen.kind = Generator::Kind::norm_one_power;
      w.gen.gamma = *gamma;
      w.gen.step = w.modulus == 1 ? Int(1) : quad_order_mod(*gamma, w.modulus);
      break;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

namespace {

Verdict finite_verdict(FiniteReason why, const std::string& text) {
  Verdict v;
  v.kind = VerdictKind::finite;
  v.finite_reason = why;
  v.reason = text;
  return v;
}

Verdict unknown_verdict(const std::string& text) {
  Verdict v;
  v.kind = VerdictKind::unknown;
  v.reason = text;
  return v;
}

// Applies the branch conditions to an exactly-known infinity structure and
// runs the base-point search. `finite_ok` gates FINITE verdicts that depend
// on an unverified user assertion (parametrized properness).
Verdict run_branch(const CurveInput& input, const PrimeSet& s, const InfinityData& inf,
                   const Int& bound, bool finite_ok, const std::string& caveat) {
  auto gated_finite = [&](FiniteReason why, const std::string& text) {
    if (finite_ok) return finite_verdict(why, text);
    return unknown_verdict(text + "; " + caveat);
  };

  std::string branch;
  switch (inf.kind) {
    case InfinityData::Kind::one_place:
      branch = "branch (a): one point at infinity";
      break;
    case InfinityData::Kind::two_rational:
      if (s.empty())
        return gated_finite(FiniteReason::unit_rank_obstruction,
                            "unit-rank obstruction: |S| = 1 (two rational points at "
                            "infinity need a finite prime in S)");
      branch = "branch (b): two rational points at infinity, |S| >= 2";
      break;
    case InfinityData::Kind::two_conjugate: {
      std::string field = "Q(sqrt(" + inf.d.get_str() + "))";
      if (infinite_place_splits(inf.d)) {
        branch = "branch (c): conjugate points at infinity; the real place splits in " +
                 field + " (D > 0)";
      } else {
        const Int* split = nullptr;
        for (const Int& p : s.primes())
          if (splitting_type(inf.d, p) == SplitType::split) {
            split = &p;
            break;
          }
        if (!split)
          return gated_finite(FiniteReason::no_split_place,
                              "no place of S splits in " + field);
        branch = "branch (c): conjugate points at infinity; " + split->get_str() +
                 " splits in " + field;
      }
      break;
    }
    case InfinityData::Kind::three_or_more:
      return gated_finite(FiniteReason::three_plus_places,
                          "at least " + std::to_string(inf.count) +
                              " points at infinity");
    default:
      return unknown_verdict("points at infinity could not be analyzed");
  }

  auto base = search_point(input, s, bound);
  if (!base)
    return unknown_verdict("structure admits infinitude (" + branch +
                           ") but no S-integral base point was found with height <= " +
                           bound.get_str());
  Verdict v;
  v.kind = VerdictKind::infinite;
  v.reason = branch;
  v.witness = build_witness(input, s, inf, *base);
  return v;
}

}  // namespace

Verdict decide(const CurveInput& input, const PrimeSet& s, const Int& search_bound) {
  Verdict out;
  out.search_bound = search_bound;
  std::vector<std::string> assumptions;
  if (input.kind == CurveInput::Kind::implicit_curve && input.irreducibility_asserted)
    assumptions.push_back("irreducibility asserted by user");
  if (input.kind == CurveInput::Kind::parametrized && input.properness_asserted)
    assumptions.push_back("parametrization asserted proper (degree-1) by user");

  try {
    if (input.kind == CurveInput::Kind::implicit_curve) {
      Classification cls = classify_implicit(input.f);
      switch (cls.kind) {
        case ConicClass::degenerate: {
          out.kind = VerdictKind::input_error;
          out.reason = "degenerate input: " + cls.reason;
          break;
        }
        case ConicClass::line: {
          LineDecision ld = line_decision(input.f, s);
          if (!ld.has_point) {
            out = finite_verdict(FiniteReason::empty_line,
                                 "the line has no S-integral point (gcd obstruction)");
          } else {
            InfinityData inf;
            inf.kind = InfinityData::Kind::one_place;
            inf.p1 = {true, Rat(0)};
            out.kind = VerdictKind::infinite;
            out.reason = "branch (a): a line has one point at infinity";
            out.witness = build_witness(input, s, inf, *ld.point);
          }
          break;
        }
        case ConicClass::conic_smooth: {
          InfinityData inf = infinity_of_conic(input.f);
          out = run_branch(input, s, inf, search_bound, /*finite_ok=*/true, "");
          break;
        }
        case ConicClass::higher_degree: {
          if (cls.distinct_leading_roots >= 3) {
            if (input.irreducibility_asserted) {
              out = finite_verdict(
                  FiniteReason::three_plus_places,
                  "leading form has " + std::to_string(cls.distinct_leading_roots) +
                      " >= 3 distinct roots, so an irreducible curve has >= 3 points "
                      "at infinity");
            } else {
              out = unknown_verdict(
                  "degree >= 3: the leading form has >= 3 distinct roots, but without "
                  "--assert-irreducible a reducible curve could hide an infinite "
                  "component; supply a parametrization or assert irreducibility");
            }
          } else {
            out = unknown_verdict(
                "implicit curves of degree >= 3 are out of scope unless the leading "
                "form has >= 3 distinct roots; supply a parametrization");
          }
          break;
        }
      }
    } else {
      InfinityData inf = poles_of_parametrization(input.coords);
      out = run_branch(input, s, inf, search_bound, input.properness_asserted,
                       "a FINITE verdict for a parametrized curve is conditional on "
                       "the map being proper; pass --assert-proper to accept it");
    }
  } catch (const budget_error& e) {
    out = unknown_verdict(std::string("work budget exhausted: ") + e.what());
  }
  out.assumptions = assumptions;
  out.search_bound = search_bound;
  return out;
}

}  // namespace genus0
