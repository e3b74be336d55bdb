#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "genus0/curve.hpp"
#include "genus0/parse.hpp"

using namespace genus0;

namespace {

AffinePoint pt(const Rat& x, const Rat& y) { return AffinePoint{{x, y}, std::nullopt}; }

// Brute search for a rational linear factor (p x + q y + r) with small
// integer coefficients; degree-2 polynomials that factor over Q factor into
// two such lines (up to scale), so absence certifies irreducibility for the
// small-coefficient corpus below.
bool has_small_linear_factor(const Poly2& f) {
  for (long p = -6; p <= 6; ++p)
    for (long q = -6; q <= 6; ++q)
      for (long r = -6; r <= 6; ++r) {
        if (p == 0 && q == 0) continue;
        // Divide f by (p x + q y + r) over Q(x) by eliminating y (or x).
        Poly2 line;
        line.set(1, 0, Rat(p));
        line.set(0, 1, Rat(q));
        line.set(0, 0, Rat(r));
        // Check vanishing on the line by substitution: if q != 0,
        // y = -(p x + r)/q; else x = -r/p.
        URat<Rat> x_sub, y_sub;
        if (q != 0) {
          x_sub = URat<Rat>::var();
          UPoly<Rat> num(std::vector<Rat>{Rat(-r, q), Rat(-p, q)});
          y_sub = URat<Rat>(num, UPoly<Rat>::constant(Rat(1)));
        } else {
          x_sub = URat<Rat>::constant(Rat(-r, p));
          y_sub = URat<Rat>::var();
        }
        if (f.compose(x_sub, y_sub).is_zero()) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("classify_implicit examples") {
  CHECK(classify_implicit(parse_poly("x^2 - 2*y^2 - 1")).kind == ConicClass::conic_smooth);
  CHECK(classify_implicit(parse_poly("x^2 - y^2")).kind == ConicClass::degenerate);
  auto higher = classify_implicit(parse_poly("x^2*y + x*y^2 - 1"));
  CHECK(higher.kind == ConicClass::higher_degree);
  CHECK(higher.distinct_leading_roots == 3);  // leading form x y (x + y)
  CHECK(classify_implicit(parse_poly("x + 2*y - 5")).kind == ConicClass::line);
  CHECK(classify_implicit(parse_poly("x^2 + y^2 - 0")).kind == ConicClass::degenerate);
  CHECK(classify_implicit(parse_poly("y - x^2")).kind == ConicClass::conic_smooth);
  // Leading-root counting: x^4 - y^4 has 4, (x - y)^3 has 1, x^3 - y has 1.
  CHECK(classify_implicit(parse_poly("x^4 - y^4 + x")).distinct_leading_roots == 4);
  CHECK(classify_implicit(parse_poly("(x - y)^3 + x")).distinct_leading_roots == 1);
  CHECK(classify_implicit(parse_poly("x^3 - y")).distinct_leading_roots == 1);
}

TEST_CASE("smooth conics in a 20-item corpus are irreducible (brute factor search)") {
  std::vector<std::string> smooth = {
      "x^2 + y^2 - 1", "x^2 - 2*y^2 - 1", "x*y - 1",       "y - x^2",
      "x^2 + y^2 - 3", "x^2 - 2*y^2 - 3", "2*x^2 + 3*y^2 - 5",
      "x^2 + x*y + y^2 - 1", "x^2 - 3*y^2 + x - 2", "y^2 - x - 1",
      "x*y + x + y - 1", "4*x^2 - y^2 + 3", "x^2 + 4*y - 2", "x^2 - x*y - y^2 - 1"};
  std::vector<std::string> degenerate = {
      "x^2 - y^2", "x^2 + 2*x*y + y^2 - 1", "x^2 - 1", "x*y", "x^2 + y^2",
      "(x + y)^2 - 2*(x + y) + 1"};
  int checked = 0;
  for (const auto& text : smooth) {
    Poly2 f = parse_poly(text);
    CAPTURE(text);
    REQUIRE(classify_implicit(f).kind == ConicClass::conic_smooth);
    REQUIRE_FALSE(has_small_linear_factor(f));
    ++checked;
  }
  for (const auto& text : degenerate) {
    Poly2 f = parse_poly(text);
    CAPTURE(text);
    REQUIRE(classify_implicit(f).kind == ConicClass::degenerate);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("infinity_of_conic examples") {
  CHECK(infinity_of_conic(parse_poly("y - x^2")).kind == InfinityData::Kind::one_place);
  CHECK(infinity_of_conic(parse_poly("x*y - 1")).kind == InfinityData::Kind::two_rational);
  InfinityData circle = infinity_of_conic(parse_poly("x^2 + y^2 - 1"));
  CHECK(circle.kind == InfinityData::Kind::two_conjugate);
  CHECK(circle.d == -1);
  InfinityData pell = infinity_of_conic(parse_poly("x^2 - 2*y^2 - 1"));
  CHECK(pell.kind == InfinityData::Kind::two_conjugate);
  CHECK(pell.d == 2);
  // Discriminant 12 = 4 * 3 reduces to the squarefree part 3.
  InfinityData d12 = infinity_of_conic(parse_poly("x^2 - 3*y^2 - 1"));
  CHECK(d12.d == 3);
}

TEST_CASE("poles_of_parametrization examples") {
  CHECK(poles_of_parametrization(parse_param_list("t^2,t^3")).kind ==
        InfinityData::Kind::one_place);
  InfinityData two = poles_of_parametrization(parse_param_list("1/t,t"));
  CHECK(two.kind == InfinityData::Kind::two_rational);
  InfinityData conj =
      poles_of_parametrization(parse_param_list("(1-t^2)/(1+t^2),2*t/(1+t^2)"));
  CHECK(conj.kind == InfinityData::Kind::two_conjugate);
  CHECK(conj.d == -1);
  // alpha is a root of the irreducible denominator factor.
  QuadElem alpha = conj.alpha;
  CHECK(alpha * alpha + QuadElem(1) == QuadElem(0));

  // Monotonicity: adding a coordinate with a new pole refines the count.
  auto coords = parse_param_list("t^2,t^3,1/(t-1)");
  CHECK(poles_of_parametrization(coords).kind == InfinityData::Kind::two_rational);
  auto more = parse_param_list("t^2,t^3,1/(t-1),1/(t-2)");
  CHECK(poles_of_parametrization(more).kind == InfinityData::Kind::three_or_more);
  // An irreducible cubic denominator alone is already three places.
  auto cubic = parse_param_list("1/(t^3 - 2),t");
  CHECK(poles_of_parametrization(cubic).kind == InfinityData::Kind::three_or_more);
}

TEST_CASE("parametrize_conic satisfies the curve identity exactly") {
  struct Case {
    const char* curve;
    Rat x, y;
  } cases[] = {{"x^2 + y^2 - 1", Rat(1), Rat(0)},
               {"x*y - 1", Rat(1), Rat(1)},
               {"y - x^2", Rat(0), Rat(0)},
               {"x^2 - 2*y^2 - 1", Rat(3), Rat(2)},
               {"2*x^2 + 3*y^2 - 5", Rat(1), Rat(1)}};
  for (const auto& c : cases) {
    CAPTURE(c.curve);
    Poly2 f = parse_poly(c.curve);
    auto coords = parametrize_conic(f, pt(c.x, c.y));
    REQUIRE(coords.size() == 2);
    REQUIRE(f.compose(coords[0], coords[1]).is_zero());
  }
  CHECK_THROWS_AS(parametrize_conic(parse_poly("x^2 + y^2 - 1"), pt(Rat(2), Rat(0))),
                  error);
}

TEST_CASE("parametrize_conic pole structure") {
  // Hyperbola through (1,1): two distinct rational poles.
  auto hyp = parametrize_conic(parse_poly("x*y - 1"), pt(Rat(1), Rat(1)));
  CHECK(poles_of_parametrization(hyp).kind == InfinityData::Kind::two_rational);
  // Parabola through the origin: a single pole at infinity, x affine.
  auto par = parametrize_conic(parse_poly("y - x^2"), pt(Rat(0), Rat(0)));
  CHECK(poles_of_parametrization(par).kind == InfinityData::Kind::one_place);
  CHECK(par[0].den.is_constant());
  CHECK(par[0].num.deg() == 1);
  CHECK(par[1].num.deg() == 2);
  // Circle through (1,0): conjugate poles over Q(i) (classical form).
  auto circ = parametrize_conic(parse_poly("x^2 + y^2 - 1"), pt(Rat(1), Rat(0)));
  InfinityData inf = poles_of_parametrization(circ);
  CHECK(inf.kind == InfinityData::Kind::two_conjugate);
  CHECK(inf.d == -1);
}

TEST_CASE("line_decision examples") {
  PrimeSet empty;
  PrimeSet s2(std::vector<Int>{2});

  auto a = line_decision(parse_poly("x + 2*y - 5"), empty);
  REQUIRE(a.has_point);
  CHECK(a.point->coords[0].is_integer());
  CHECK(a.point->coords[1].is_integer());

  auto b = line_decision(parse_poly("2*x + 4*y - 1"), empty);
  CHECK_FALSE(b.has_point);

  auto c = line_decision(parse_poly("2*x + 4*y - 1"), s2);
  REQUIRE(c.has_point);
  CHECK(is_s_integer(c.point->coords[0], s2));
  CHECK(is_s_integer(c.point->coords[1], s2));

  // Vertical and horizontal lines, and rational coefficients.
  auto d = line_decision(parse_poly("x - 3"), empty);
  REQUIRE(d.has_point);
  CHECK(d.point->coords[0] == Rat(3));
  auto e = line_decision(parse_poly("(1/3)*y - 2"), empty);
  REQUIRE(e.has_point);
  CHECK(e.point->coords[1] == Rat(6));
  auto f = line_decision(parse_poly("3*x - 1"), empty);
  CHECK_FALSE(f.has_point);
}

TEST_CASE("point orderings") {
  AffinePoint a = pt(Rat(0), Rat(1)), b = pt(Rat(-1), Rat(0)), c = pt(Rat(1), Rat(0));
  // Sorted (enumerate) order: height then plain lexicographic.
  CHECK(point_sorted_less(b, a));
  CHECK(point_sorted_less(a, c));
  // Search order prefers nonnegative numerators at equal height.
  CHECK(point_search_less(a, b));
  CHECK(point_search_less(c, b));
  CHECK(point_height(pt(Rat(-7, 2), Rat(1))) == 7);
}

TEST_CASE("s_integral_fiber") {
  PrimeSet empty;
  Poly2 circle = parse_poly("x^2 + y^2 - 1");
  auto ys = s_integral_fiber(circle, Rat(0), false, empty);
  CHECK(ys.size() == 2);
  CHECK(s_integral_fiber(circle, Rat(1, 2), false, empty).empty());
  PrimeSet s5(std::vector<Int>{5});
  auto y35 = s_integral_fiber(circle, Rat(3, 5), false, s5);
  REQUIRE(y35.size() == 2);
  CHECK((y35[0] == Rat(4, 5) || y35[1] == Rat(4, 5)));
  // Cubic fiber: x^2 y + x y^2 - 1 at x = 1 gives y^2 + y - 1 = 0 (no roots).
  Poly2 cubic = parse_poly("x^2*y + x*y^2 - 1");
  CHECK(s_integral_fiber(cubic, Rat(1), false, empty).empty());
}

TEST_CASE("ImageTester agrees with exact rational evaluation") {
  struct Case {
    const char* coords;
    std::vector<Int> s;
  } cases[] = {{"1/(5*t),t", {2}},
               {"(1-t^2)/(1+t^2),2*t/(1+t^2)", {5}},
               {"t^2,t^3", {}},
               {"(3*t+1)/(7*t-2),(t^2-4)/(2*t)", {2, 7}}};
  for (const auto& c : cases) {
    CAPTURE(c.coords);
    auto coords = parse_param_list(c.coords);
    PrimeSet s(c.s);
    ImageTester tester(coords, s);
    for (long a = -40; a <= 40; ++a)
      for (long b = 1; b <= 25; ++b) {
        if (std::gcd(std::labs(a), b) != 1) continue;
        auto fast = tester.test_small(a, b);
        // Exact reference.
        Rat t{Int(a), Int(b)};
        std::optional<std::vector<Rat>> exact;
        std::vector<Rat> vals;
        bool ok = true;
        for (const auto& coord : coords) {
          auto v = coord.eval(t);
          if (!v || !is_s_integer(*v, s)) {
            ok = false;
            break;
          }
          vals.push_back(*v);
        }
        if (ok) exact = vals;
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(fast.has_value() == exact.has_value());
        if (fast) REQUIRE(fast->coords == *exact);
      }
  }
}

TEST_CASE("CurveInput validation") {
  CHECK_THROWS_AS(CurveInput::implicit(parse_poly("0")), error);
  CHECK_THROWS_AS(CurveInput::implicit(parse_poly("5")), error);
  CHECK_THROWS_AS(CurveInput::parametrized(parse_param_list("1,2")), error);
  CHECK_THROWS_AS(CurveInput::parametrized({parse_ratfunc("t")}), error);
  CHECK_NOTHROW(CurveInput::parametrized(parse_param_list("t,1")));
}
