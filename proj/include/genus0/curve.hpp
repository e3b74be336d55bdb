#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus0/poly.hpp"

namespace genus0 {

// A point of the affine curve with exact rational coordinates. For
// parametrized curves `param` records the parameter value mapping to it.
struct AffinePoint {
  std::vector<Rat> coords;
  std::optional<Rat> param;
};

bool operator==(const AffinePoint& a, const AffinePoint& b);

// Plain coordinate-wise comparison (used as the sorted-output order).
bool point_lex_less(const AffinePoint& a, const AffinePoint& b);
// Height of a point: max coordinate height.
Int point_height(const AffinePoint& p);
// Search order: height first, then the slow-growth coordinate order.
bool point_search_less(const AffinePoint& a, const AffinePoint& b);
// Output order of enumerate_points: (height, lexicographic).
bool point_sorted_less(const AffinePoint& a, const AffinePoint& b);

// Either an implicit plane curve f(x, y) = 0 or an explicit parametrization
// t -> (x_1(t), ..., x_n(t)).
struct CurveInput {
  enum class Kind { implicit_curve, parametrized };
  Kind kind = Kind::implicit_curve;

  Poly2 f;  // implicit
  bool irreducibility_asserted = false;

  std::vector<URat<Rat>> coords;  // parametrized, n >= 2
  bool properness_asserted = false;

  static CurveInput implicit(Poly2 f, bool irreducibility_asserted = false);
  static CurveInput parametrized(std::vector<URat<Rat>> coords,
                                 bool properness_asserted = false);
};

// A place of the parameter line (pole location) or a direction at infinity
// of the plane; `at_infinity` marks t = infinity resp. the direction where
// the dehomogenized form drops degree.
struct PlaceQ {
  bool at_infinity = false;
  Rat value;
};

// The points at infinity of the curve, as far as the degree <= 2 theory (or
// the pole structure of a parametrization) determines them exactly.
struct InfinityData {
  enum class Kind { one_place, two_rational, two_conjugate, three_or_more, unknown };
  Kind kind = Kind::unknown;
  PlaceQ p1, p2;   // one_place uses p1; two_rational uses both
  Int d = 0;       // two_conjugate: squarefree field tag
  QuadElem alpha;  // two_conjugate: one of the conjugate pair
  int count = 0;   // three_or_more: lower bound on the number of places
  std::string note;
};

enum class ConicClass { line, conic_smooth, higher_degree, degenerate };

struct Classification {
  ConicClass kind;
  int distinct_leading_roots = 0;  // higher_degree only
  std::string reason;              // degenerate only
};

// Lines, smooth conics (nonzero determinant of the homogenized symmetric
// matrix), degenerate degree-2 forms, and for degree >= 3 the number of
// distinct roots of the leading form over the algebraic closure.
Classification classify_implicit(const Poly2& f);

// Points at infinity of a smooth conic from the discriminant of its leading
// form. Requires classify_implicit(f).kind == conic_smooth.
InfinityData infinity_of_conic(const Poly2& f);

// Distinct poles of the coordinate functions on the projective parameter
// line, grouped by Q-irreducible factor.
InfinityData poles_of_parametrization(const std::vector<URat<Rat>>& coords);

// The pencil of lines through P: x = P.x + s, y = P.y + m s solved for the
// second intersection, as rational functions of the slope m. Requires
// f(P) = 0 and a smooth conic. The single point on the vertical line
// through P is not reached (it corresponds to m = infinity).
std::vector<URat<Rat>> parametrize_conic(const Poly2& f, const AffinePoint& p);

// Exact decision for degree-1 curves: an S-integral point exists iff the
// prime-to-S part of gcd of the (integer-cleared) x and y coefficients
// divides the constant term; a witness point is produced by extended gcd.
struct LineDecision {
  bool has_point = false;
  std::optional<AffinePoint> point;
};

LineDecision line_decision(const Poly2& f, const PrimeSet& s);

// S-integral solutions y of f(v, y) = 0 (or f(y, v) = 0 when swapped):
// quadratic formula for fiber degree <= 2, rational root search above.
// Empty when the fiber polynomial vanishes identically.
std::vector<Rat> s_integral_fiber(const Poly2& f, const Rat& v, bool swapped,
                                  const PrimeSet& s);

// Exact S-integrality test for parametrization images over the t = a/b
// lattice. Small candidates run through an overflow-checked 128-bit
// homogeneous evaluation; everything else falls back to exact rationals.
class ImageTester {
 public:
  ImageTester(const std::vector<URat<Rat>>& coords, const PrimeSet& s);

  // The image point X(a/b) when every coordinate is an S-integer, empty
  // otherwise (including at poles). Requires gcd(a, b) = 1, b >= 1.
  std::optional<AffinePoint> test(const Int& a, const Int& b) const;

  // Same contract, avoiding bignum traffic for rejected candidates.
  std::optional<AffinePoint> test_small(long a, long b) const;

 private:
  struct HomogCoord {
    std::vector<Int> num, den;      // homogeneous coefficients, degree n
    std::vector<long> num_l, den_l; // 64-bit mirrors for the fast path
    int n = 0;
  };
  std::optional<AffinePoint> test_exact(const Rat& t) const;

  const std::vector<URat<Rat>>* coords_;
  PrimeSet s_;
  std::vector<HomogCoord> homog_;
  std::vector<unsigned long> small_primes_;
  long max_bits_ = 0;  // coefficient magnitude bound for the fast path
  bool fast_ok_ = false;
};

}  // namespace genus0
