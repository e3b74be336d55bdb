#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus0/curve.hpp"

namespace genus0 {

// Parabolic: one place at infinity, polynomial coordinates, theta = N k.
// Hyperbolic: two rational places, Laurent coordinates, theta = p^(e k).
// Pell type: two conjugate places over Q(sqrt(D)), theta = gamma^(e k).
enum class CurveCase { parabolic, hyperbolic, pell_type };

// Wire tags used in reports.
const char* case_tag(CurveCase c);

struct Generator {
  enum class Kind { integers, s_unit_power, norm_one_power };
  Kind kind = Kind::integers;
  Int p = 0;        // s_unit_power: the S-prime being powered
  QuadElem gamma;   // norm_one_power: norm-one unit of infinite order
  Int step = 1;     // exponent step e
};

// Everything needed to generate verified points forever.
struct Witness {
  CurveCase curve_case = CurveCase::parabolic;
  std::optional<Int> d;            // field tag for pell_type
  Rat base_param;                  // parameter value of the base point
  Mobius map;                      // t = map(U), u(P)-normalization folded in
  std::vector<LaurentPoly> fs;     // coordinates as (Laurent) polynomials in U
  Int clearing = 1;                // N: clears coefficient denominators
  Int modulus = 1;                 // prime-to-S part of N (1 = no congruence)
  Generator gen;
  CurveInput curve;                // retained for exact point verification
  PrimeSet primes;                 // the S the witness was built for
};

enum class VerdictKind { infinite, finite, unknown, input_error };

enum class FiniteReason {
  none,
  three_plus_places,       // >= 3 points at infinity
  unit_rank_obstruction,   // two rational places but S has no finite prime
  no_split_place,          // conjugate places, no split place in S
  empty_line,              // degree-1 congruence obstruction
};

struct Verdict {
  VerdictKind kind = VerdictKind::input_error;
  FiniteReason finite_reason = FiniteReason::none;
  std::string reason;
  std::optional<Witness> witness;
  std::vector<std::string> assumptions;
  Int search_bound = 0;
};

// The full pipeline: classify, test the branch conditions against S, search
// for an S-integral base point, build the constructive witness. Degree-1
// inputs are decided exactly; bounded search failure yields UNKNOWN, never
// FINITE.
Verdict decide(const CurveInput& input, const PrimeSet& s, const Int& search_bound);

// Deterministic bounded search for an S-integral point: sweeps x = a/b with
// |a| <= H and S-smooth b <= H (both axes for conics), or the parameter
// t = a/b with |a|, b <= H; first hit in (height, slow-growth) order.
std::optional<AffinePoint> search_point(const CurveInput& input, const PrimeSet& s,
                                        const Int& bound);

// Construct the witness for a branch that admits infinitude, through a
// parametrization with the base point at a finite parameter value.
Witness build_witness(const CurveInput& input, const PrimeSet& s,
                      const InfinityData& infinity, const AffinePoint& p);

}  // namespace genus0
