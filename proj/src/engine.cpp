#include "genus0/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace genus0 {

namespace {

bool s_local_integral(const QuadElem& z, const PrimeSet& s) {
  return is_s_integer(z.a, s) && is_s_integer(z.b, s);
}

}  // namespace

ThetaStream::ThetaStream(const Witness& w) : w_(&w), current_(1) {
  switch (w.gen.kind) {
    case Generator::Kind::integers:
      break;
    case Generator::Kind::s_unit_power:
      step_ = pow(QuadElem(Rat(w.gen.p)), w.gen.step);
      break;
    case Generator::Kind::norm_one_power:
      step_ = pow(w.gen.gamma, w.gen.step);
      break;
  }
}

QuadElem ThetaStream::next() {
  ++k_;
  QuadElem theta;
  if (w_->gen.kind == Generator::Kind::integers) {
    Int idx = Int((k_ + 1) / 2) * w_->clearing;
    theta = QuadElem(Rat(k_ % 2 == 1 ? idx : -idx));
    G0_CHECK(theta.a.is_integer() &&
                 mpz_divisible_p(theta.a.num().get_mpz_t(), w_->clearing.get_mpz_t()),
             "theta not divisible by the clearing constant");
    return theta;
  }
  current_ = current_ * step_;
  theta = current_;
  if (w_->gen.kind == Generator::Kind::norm_one_power)
    G0_CHECK(theta.norm() == Rat(1), "theta stream left the norm-one kernel");
  if (w_->modulus > 1) {
    QuadElem residue = (theta - QuadElem(1)) / QuadElem(Rat(w_->modulus));
    G0_CHECK(s_local_integral(residue, w_->primes), "theta misses its congruence class");
  }
  return theta;
}

namespace {

// Exact verification of one generated point; throws on any failure.
void verify_point(const Witness& w, const QuadElem& theta, AffinePoint& pt,
                  const PrimeSet& s) {
  for (const Rat& c : pt.coords)
    G0_CHECK(is_s_integer(c, s), "generated coordinate is not an S-integer");
  if (w.curve.kind == CurveInput::Kind::implicit_curve) {
    G0_CHECK(w.curve.f.eval(pt.coords[0], pt.coords[1]).is_zero(),
             "generated point is off the curve");
    return;
  }
  auto t = w.map.apply(theta);
  if (!t.has_value()) {
    // theta maps to t = infinity; the coordinates take their limit values.
    for (std::size_t i = 0; i < pt.coords.size(); ++i) {
      auto v = w.curve.coords[i].value_at_infinity();
      G0_CHECK(v.has_value() && *v == pt.coords[i],
               "generated point does not match the parametrization at infinity");
    }
    return;
  }
  G0_CHECK(t->is_rational(), "generated parameter value is irrational");
  pt.param = t->a;
  for (std::size_t i = 0; i < pt.coords.size(); ++i) {
    auto v = w.curve.coords[i].eval(t->a);
    G0_CHECK(v.has_value() && *v == pt.coords[i],
             "generated point does not match the parametrization");
  }
}

}  // namespace

std::vector<AffinePoint> generate_points(const Witness& w, long count, const PrimeSet& s) {
  if (count < 1) throw error("generate_points needs count >= 1");
  ThetaStream stream(w);
  std::set<std::vector<Rat>> seen;
  std::vector<AffinePoint> out;
  long budget = 16 * count + 64;
  while (static_cast<long>(out.size()) < count) {
    G0_CHECK(budget-- > 0, "theta stream kept revisiting the same points");
    QuadElem theta = stream.next();
    AffinePoint pt;
    pt.coords.reserve(w.fs.size());
    for (const LaurentPoly& f : w.fs) {
      QuadElem v = f.eval(theta);
      G0_CHECK(v.is_rational(), "coordinate value has a nonzero sqrt(D) component");
      pt.coords.push_back(v.a);
    }
    verify_point(w, theta, pt, s);
    if (seen.insert(pt.coords).second) out.push_back(pt);
  }
  return out;
}

std::vector<AffinePoint> enumerate_points(const CurveInput& input, const PrimeSet& s,
                                          const Int& bound) {
  if (bound < 1) throw error("enumeration bound must be >= 1");
  std::set<std::vector<Rat>> seen;
  std::vector<AffinePoint> out;
  auto add = [&](const AffinePoint& p) {
    if (seen.insert(p.coords).second) out.push_back(p);
  };

  if (input.kind == CurveInput::Kind::implicit_curve) {
    const Poly2& f = input.f;
    bool dual = f.total_deg() >= 2;
    bool sweep_x = dual || f.coeff(0, 1) != Rat(0);
    for (const Int& b : s_smooth_upto(s, bound)) {
      for (Int a = 0; a <= bound; ++a) {
        if (gcd(a, b) != 1) continue;
        for (int sign : {+1, -1}) {
          if (a == 0 && sign < 0) continue;
          Rat v(sign > 0 ? a : Int(-a), b);
          if (sweep_x)
            for (const Rat& y : s_integral_fiber(f, v, false, s))
              add(AffinePoint{{v, y}, std::nullopt});
          if (dual || !sweep_x)
            for (const Rat& x : s_integral_fiber(f, v, true, s))
              add(AffinePoint{{x, v}, std::nullopt});
        }
      }
    }
  } else {
    G0_CHECK(bound.fits_slong_p(), "enumeration bound too large");
    ImageTester tester(input.coords, s);
    long hmax = bound.get_si();
    for (long b = 1; b <= hmax; ++b) {
      for (long a = 0; a <= hmax; ++a) {
        if (std::gcd(a, b) != 1) continue;
        for (int sign : {+1, -1}) {
          if (a == 0 && sign < 0) continue;
          if (auto p = tester.test_small(sign > 0 ? a : -a, b)) add(*p);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), point_sorted_less);
  return out;
}

}  // namespace genus0
