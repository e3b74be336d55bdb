// Command-line front end: decide whether an affine genus-zero curve has
// infinitely many S-integral points, generate verified points from the
// constructive witness, or enumerate all lattice points up to a bound.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genus0/engine.hpp"
#include "genus0/parse.hpp"
#include "genus0/report.hpp"

namespace {

using namespace genus0;

struct CommonOpts {
  std::string curve;
  std::string param;
  std::vector<std::string> primes;
  std::string bound = "10000";
  bool assert_irreducible = false;
  bool assert_proper = false;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  auto* curve = cmd->add_option("--curve", o.curve, "implicit curve polynomial in x, y");
  auto* param =
      cmd->add_option("--param", o.param, "comma-separated parametrization in t");
  curve->excludes(param);
  cmd->add_option("--primes", o.primes,
                  "finite primes of S, comma separated (the infinite place is always "
                  "implicit)")
      ->delimiter(',');
  cmd->add_option("--bound", o.bound, "search/enumeration height bound");
  cmd->add_flag("--assert-irreducible", o.assert_irreducible,
                "assert that an implicit curve is irreducible");
  cmd->add_flag("--assert-proper", o.assert_proper,
                "assert that a parametrization is proper (degree-1)");
  cmd->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

CurveInput read_curve(const CommonOpts& o) {
  if (!o.curve.empty())
    return CurveInput::implicit(parse_poly(o.curve), o.assert_irreducible);
  if (!o.param.empty())
    return CurveInput::parametrized(parse_param_list(o.param), o.assert_proper);
  throw error("one of --curve or --param is required");
}

PrimeSet read_primes(const CommonOpts& o) {
  std::vector<Int> ps;
  for (const std::string& s : o.primes) ps.emplace_back(s);
  return PrimeSet(ps);
}

Int read_bound(const CommonOpts& o) {
  Int h(o.bound);
  if (h < 1) throw error("--bound must be >= 1");
  return h;
}

void emit(const CommonOpts& o, const Verdict& v, const std::vector<AffinePoint>& pts) {
  if (o.format == "json")
    std::cout << report_json(v, pts).dump(2) << "\n";
  else
    std::cout << report_text(v, pts);
}

int run_decide(const CommonOpts& o) {
  Verdict v = decide(read_curve(o), read_primes(o), read_bound(o));
  emit(o, v, {});
  return exit_code(v.kind);
}

int run_generate(const CommonOpts& o, long count) {
  CurveInput input = read_curve(o);
  PrimeSet s = read_primes(o);
  Verdict v = decide(input, s, read_bound(o));
  std::vector<AffinePoint> pts;
  if (v.kind == VerdictKind::infinite) pts = generate_points(*v.witness, count, s);
  emit(o, v, pts);
  return exit_code(v.kind);
}

int run_enumerate(const CommonOpts& o) {
  CurveInput input = read_curve(o);
  PrimeSet s = read_primes(o);
  auto pts = enumerate_points(input, s, read_bound(o));
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["count"] = pts.size();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AffinePoint& p : pts) {
      nlohmann::ordered_json coords = nlohmann::ordered_json::array();
      for (const Rat& c : p.coords) coords.push_back(rat_pair(c));
      arr.push_back(coords);
    }
    out["points"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const AffinePoint& p : pts) std::cout << point_line(p) << "\n";
    std::cout << "count: " << pts.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-integral points on genus-zero curves"};
  app.require_subcommand(1);

  CommonOpts decide_opts, generate_opts, enumerate_opts;
  long count = 10;

  CLI::App* cmd_decide =
      app.add_subcommand("decide", "decide whether the S-integral point set is infinite");
  add_common(cmd_decide, decide_opts);

  CLI::App* cmd_generate =
      app.add_subcommand("generate", "emit verified S-integral points when infinite");
  add_common(cmd_generate, generate_opts);
  cmd_generate->add_option("--count", count, "number of points to emit")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "list all S-integral points on the search lattice");
  add_common(cmd_enumerate, enumerate_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(decide_opts);
    if (cmd_generate->parsed()) return run_generate(generate_opts, count);
    return run_enumerate(enumerate_opts);
  } catch (const genus0::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const genus0::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
