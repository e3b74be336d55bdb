// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. All arithmetic is exact; the
// only tolerances are the stated runtime caps.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "genus0/engine.hpp"
#include "genus0/parse.hpp"
#include "genus0/report.hpp"

using namespace genus0;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

struct CorpusCase {
  std::string curve;
  std::vector<long> primes;
  bool assert_irreducible;
  VerdictKind expect;
};

const std::vector<CorpusCase>& corpus() {
  static const std::vector<CorpusCase> cases = {
      {"x + 2*y - 5", {}, false, VerdictKind::infinite},
      {"2*x + 4*y - 1", {}, false, VerdictKind::finite},
      {"2*x + 4*y - 1", {2}, false, VerdictKind::infinite},
      {"y - x^2", {}, false, VerdictKind::infinite},
      {"x*y - 1", {}, false, VerdictKind::finite},
      {"x*y - 1", {2}, false, VerdictKind::infinite},
      {"x^2 + y^2 - 1", {}, false, VerdictKind::finite},
      {"x^2 + y^2 - 1", {5}, false, VerdictKind::infinite},
      {"x^2 + y^2 - 1", {3}, false, VerdictKind::finite},
      {"x^2 - 2*y^2 - 1", {}, false, VerdictKind::infinite},
      {"x^2 - 2*y^2 - 3", {}, false, VerdictKind::unknown},
      {"x^2*y + x*y^2 - 1", {}, true, VerdictKind::finite},
  };
  return cases;
}

PrimeSet primeset(const std::vector<long>& ps) {
  std::vector<Int> v;
  for (long p : ps) v.emplace_back(p);
  return PrimeSet(v);
}

CurveInput input_of(const CorpusCase& c) {
  return CurveInput::implicit(parse_poly(c.curve), c.assert_irreducible);
}

std::string case_name(const CorpusCase& c) {
  std::string s = c.curve + " / {";
  for (std::size_t i = 0; i < c.primes.size(); ++i)
    s += (i ? "," : "") + std::to_string(c.primes[i]);
  return s + "}";
}

const Int kDefaultBound = 10000;

std::vector<Verdict> run_corpus() {
  std::vector<Verdict> out;
  for (const CorpusCase& c : corpus())
    out.push_back(decide(input_of(c), primeset(c.primes), kDefaultBound));
  return out;
}

// 1. Verdicts across all classification branches, full corpus under 10 seconds.
void criterion1() {
  auto start = Clock::now();
  auto verdicts = run_corpus();
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].kind != corpus()[i].expect) {
      ok = false;
      detail += case_name(corpus()[i]) + " gave " + verdict_name(verdicts[i].kind) + "; ";
    }
  }
  if (secs >= 10.0) {
    ok = false;
    detail += "runtime " + std::to_string(secs) + "s >= 10s";
  } else {
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << "12 verdicts, " << secs << "s";
    detail += t.str();
  }
  report(1, "verdict corpus", ok, detail);
}

// 2. Soundness: 25 exactly-verified pairwise-distinct points per INFINITE case.
void criterion2() {
  bool ok = true;
  std::string detail;
  int streams = 0;
  for (const CorpusCase& c : corpus()) {
    if (c.expect != VerdictKind::infinite) continue;
    PrimeSet s = primeset(c.primes);
    Verdict v = decide(input_of(c), s, kDefaultBound);
    if (v.kind != VerdictKind::infinite) {
      ok = false;
      detail += case_name(c) + " not infinite; ";
      continue;
    }
    ++streams;
    try {
      auto pts = generate_points(*v.witness, 25, s);
      std::set<std::vector<Rat>> distinct;
      Poly2 f = parse_poly(c.curve);
      for (const AffinePoint& p : pts) {
        distinct.insert(p.coords);
        if (!f.eval(p.coords[0], p.coords[1]).is_zero()) {
          ok = false;
          detail += case_name(c) + ": point off curve; ";
        }
        for (const Rat& coord : p.coords)
          if (!is_s_integer(coord, s)) {
            ok = false;
            detail += case_name(c) + ": non-S-integral coordinate; ";
          }
      }
      if (distinct.size() != 25) {
        ok = false;
        detail += case_name(c) + ": only " + std::to_string(distinct.size()) +
                  " distinct points; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail += case_name(c) + ": " + e.what() + "; ";
    }
  }
  if (ok) detail = std::to_string(streams) + " streams x 25 exact points";
  report(2, "soundness sweep", ok, detail);
}

// 3. Oracle cross-check against exhaustive enumeration.
void criterion3() {
  bool ok = true;
  std::string detail;
  const Int lattice = 10000;
  struct Pick {
    std::string curve;
    std::vector<long> primes;
  } picks[] = {{"x^2 + y^2 - 1", {5}}, {"x*y - 1", {2}}};
  for (const auto& pick : picks) {
    PrimeSet s = primeset(pick.primes);
    CurveInput in = CurveInput::implicit(parse_poly(pick.curve));
    Verdict v = decide(in, s, kDefaultBound);
    if (v.kind != VerdictKind::infinite) {
      ok = false;
      detail += pick.curve + " not infinite; ";
      continue;
    }
    auto enumerated = enumerate_points(in, s, lattice);
    std::set<std::vector<Rat>> table;
    for (const AffinePoint& p : enumerated) table.insert(p.coords);
    for (const AffinePoint& p : generate_points(*v.witness, 25, s)) {
      bool inside = true;
      for (const Rat& c : p.coords) inside = inside && rat_height(c) <= lattice;
      if (inside && table.count(p.coords) == 0) {
        ok = false;
        detail += pick.curve + ": generated point missing from enumeration; ";
      }
    }
  }
  for (const CorpusCase& c : corpus()) {
    if (c.expect != VerdictKind::finite) continue;
    CurveInput in = input_of(c);
    std::size_t n3 = enumerate_points(in, primeset(c.primes), 1000).size();
    std::size_t n4 = enumerate_points(in, primeset(c.primes), 10000).size();
    if (n3 != n4) {
      ok = false;
      detail += case_name(c) + ": " + std::to_string(n3) + " -> " + std::to_string(n4) +
                " points between bounds; ";
    }
  }
  if (ok) detail = "generated points enumerated; finite counts stable 1e3 -> 1e4";
  report(3, "oracle cross-check", ok, detail);
}

// 4. Pell suite: continued fractions vs ascending brute force.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (long d = 2; d <= 50; ++d) {
    bool squarefree = true;
    for (long k = 2; k * k <= d; ++k)
      if (d % (k * k) == 0) squarefree = false;
    long r = 1;
    while (r * r < d) ++r;
    if (!squarefree || r * r == d) continue;
    QuadElem eps = pell_fundamental(d);
    // Brute force: least y with d y^2 + 1 a perfect square.
    std::uint64_t x = 1;
    std::uint64_t y = 1;
    for (;; ++y) {
      std::uint64_t v = std::uint64_t(d) * y * y + 1;
      while (x * x < v) ++x;
      if (x * x == v) break;
    }
    if (eps.a != Rat(long(x)) || eps.b != Rat(long(y))) {
      ok = false;
      detail += "D=" + std::to_string(d) + " mismatch; ";
    }
  }
  auto start = Clock::now();
  {
    const std::uint64_t cap = 300'000'000;
    std::uint64_t x = 1;
    std::uint64_t found_y = 0;
    for (std::uint64_t y = 1; y <= cap; ++y) {
      std::uint64_t v = 61 * y * y + 1;
      while (x * x < v) ++x;
      if (x * x == v) {
        found_y = y;
        break;
      }
    }
    QuadElem eps = pell_fundamental(61);
    if (found_y == 0 || eps.a != Rat(Int("1766319049")) ||
        eps.b != Rat(Int("226153980")) || Rat(Int(long(found_y))) != eps.b) {
      ok = false;
      detail += "D=61 mismatch; ";
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) {
    ok = false;
    detail += "D=61 oracle took " + std::to_string(secs) + "s >= 60s";
  } else {
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << "all squarefree D <= 50 plus D = 61 oracle in " << secs << "s";
    detail += t.str();
  }
  report(4, "pell suite", ok, detail);
}

// 5. Kronecker and splitting against direct enumeration.
void criterion5() {
  bool ok = true;
  std::string detail;
  // Sieve the odd primes below 500.
  std::vector<long> primes;
  for (long p = 3; p < 500; p += 2) {
    bool prime = true;
    for (long q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  long checked = 0;
  for (long p : primes) {
    std::vector<char> residue(p, 0);
    for (long x = 1; x < p; ++x) residue[(x * x) % p] = 1;
    for (long a = -499; a < 500; ++a) {
      long r = ((a % p) + p) % p;
      int expect = r == 0 ? 0 : (residue[r] ? 1 : -1);
      if (kronecker(Int(a), Int(p)) != expect) {
        ok = false;
        detail += "(" + std::to_string(a) + "|" + std::to_string(p) + "); ";
      }
      ++checked;
    }
  }
  // Splitting vs root counting of the maximal-order minimal polynomial.
  std::vector<long> small_primes{2};
  for (long p : primes)
    if (p < 100) small_primes.push_back(p);
  long split_checked = 0;
  for (long d = -30; d <= 30; ++d) {
    if (d == 0 || d == 1) continue;
    bool squarefree = true;
    for (long k = 2; k * k <= std::labs(d); ++k)
      if (d % (k * k) == 0) squarefree = false;
    if (!squarefree) continue;
    for (long p : small_primes) {
      long a1, a0;
      if (((d % 4) + 4) % 4 == 1) {
        a1 = -1;
        a0 = -(d - 1) / 4;
      } else {
        a1 = 0;
        a0 = -d;
      }
      int roots = 0;
      for (long x = 0; x < p; ++x)
        if ((((x * x + a1 * x + a0) % p) + p) % p == 0) ++roots;
      SplitType expect = roots == 2   ? SplitType::split
                         : roots == 0 ? SplitType::inert
                                      : SplitType::ramified;
      if (splitting_type(Int(d), Int(p)) != expect) {
        ok = false;
        detail += "split(D=" + std::to_string(d) + ", p=" + std::to_string(p) + "); ";
      }
      ++split_checked;
    }
  }
  if (ok)
    detail = std::to_string(checked) + " kronecker values, " +
             std::to_string(split_checked) + " splitting types";
  report(5, "kronecker/splitting suite", ok, detail);
}

// 6. Skew-symmetry and reality of the Pell-type machinery.
void criterion6() {
  bool ok = true;
  std::string detail;
  int witnesses = 0;
  for (const CorpusCase& c : corpus()) {
    if (c.expect != VerdictKind::infinite) continue;
    PrimeSet s = primeset(c.primes);
    Verdict v = decide(input_of(c), s, kDefaultBound);
    if (v.kind != VerdictKind::infinite) continue;
    const Witness& w = *v.witness;
    if (w.curve_case != CurveCase::pell_type) continue;
    ++witnesses;
    for (const LaurentPoly& f : w.fs)
      if (!is_skew_symmetric(f)) {
        ok = false;
        detail += case_name(c) + ": F not skew-symmetric; ";
      }
    ThetaStream stream(w);
    for (int k = 0; k < 25; ++k) {
      QuadElem theta = stream.next();
      if (theta.norm() != Rat(1)) {
        ok = false;
        detail += case_name(c) + ": theta norm != 1; ";
      }
      if (w.modulus > 1) {
        QuadElem residue = (theta - QuadElem(1)) / QuadElem(Rat(w.modulus));
        if (!is_s_integer(residue.a, s) || !is_s_integer(residue.b, s)) {
          ok = false;
          detail += case_name(c) + ": theta != 1 mod modulus; ";
        }
      }
      for (const LaurentPoly& f : w.fs) {
        QuadElem value = f.eval(theta);
        if (!value.b.is_zero()) {
          ok = false;
          detail += case_name(c) + ": coordinate has sqrt(D) part; ";
        }
      }
    }
  }
  if (witnesses == 0) {
    ok = false;
    detail = "no pell-type witnesses in the corpus";
  }
  if (ok)
    detail = std::to_string(witnesses) + " witnesses, 25 thetas each, all real and = 1 mod N'";
  report(6, "skew-symmetry and reality", ok, detail);
}

// 7. Determinism: byte-identical JSON across two full corpus runs.
void criterion7() {
  auto render = [&]() {
    std::string all;
    for (const CorpusCase& c : corpus()) {
      PrimeSet s = primeset(c.primes);
      Verdict v = decide(input_of(c), s, kDefaultBound);
      std::vector<AffinePoint> pts;
      if (v.kind == VerdictKind::infinite) pts = generate_points(*v.witness, 5, s);
      all += report_json(v, pts).dump() + "\n";
    }
    return all;
  };
  std::string first = render();
  std::string second = render();
  bool ok = !first.empty() && first == second;
  report(7, "deterministic reports", ok,
         ok ? std::to_string(first.size()) + " bytes identical" : "reports differ");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
