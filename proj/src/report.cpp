#include "genus0/report.hpp"

#include <sstream>

namespace genus0 {

using nlohmann::ordered_json;

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::infinite:
      return 0;
    case VerdictKind::finite:
      return 1;
    case VerdictKind::unknown:
      return 2;
    default:
      return 3;
  }
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::infinite:
      return "infinite";
    case VerdictKind::finite:
      return "finite";
    case VerdictKind::unknown:
      return "unknown";
    default:
      return "error";
  }
}

const char* finite_reason_code(FiniteReason r) {
  switch (r) {
    case FiniteReason::three_plus_places:
      return "three-plus-places-at-infinity";
    case FiniteReason::unit_rank_obstruction:
      return "unit-rank-obstruction";
    case FiniteReason::no_split_place:
      return "no-split-place";
    case FiniteReason::empty_line:
      return "empty-line";
    default:
      return "";
  }
}

ordered_json rat_pair(const Rat& q) {
  return ordered_json::array({q.num().get_str(), q.den().get_str()});
}

namespace {

ordered_json generator_json(const Witness& w) {
  ordered_json g;
  switch (w.gen.kind) {
    case Generator::Kind::integers:
      g["type"] = "integers";
      g["modulus"] = w.clearing.get_str();
      break;
    case Generator::Kind::s_unit_power:
      g["type"] = "s-unit-power";
      g["p"] = w.gen.p.get_str();
      g["step"] = w.gen.step.get_str();
      g["modulus"] = w.modulus.get_str();
      break;
    case Generator::Kind::norm_one_power: {
      g["type"] = "norm-one-power";
      ordered_json gamma;
      gamma["a"] = rat_pair(w.gen.gamma.a);
      gamma["b"] = rat_pair(w.gen.gamma.b);
      gamma["D"] = w.gen.gamma.d.get_str();
      g["gamma"] = gamma;
      g["step"] = w.gen.step.get_str();
      g["modulus"] = w.modulus.get_str();
      break;
    }
  }
  return g;
}

std::string generator_text(const Witness& w) {
  switch (w.gen.kind) {
    case Generator::Kind::integers:
      return "all multiples of N (interleaved signs)";
    case Generator::Kind::s_unit_power:
      return "powers of " + w.gen.p.get_str() + ", step " + w.gen.step.get_str() +
             ", modulus " + w.modulus.get_str();
    default:
      return "powers of gamma = " + w.gen.gamma.str() + ", step " +
             w.gen.step.get_str() + ", modulus " + w.modulus.get_str();
  }
}

}  // namespace

ordered_json report_json(const Verdict& v, const std::vector<AffinePoint>& points) {
  ordered_json out;
  out["verdict"] = verdict_name(v.kind);
  std::string reason = v.reason;
  if (v.kind == VerdictKind::finite)
    reason = std::string(finite_reason_code(v.finite_reason)) + ": " + reason;
  out["reason"] = reason;
  if (v.witness) {
    const Witness& w = *v.witness;
    out["case"] = case_tag(w.curve_case);
    out["D"] = w.d ? ordered_json(w.d->get_str()) : ordered_json(nullptr);
    out["N"] = w.clearing.get_str();
    out["generator"] = generator_json(w);
  } else {
    out["case"] = nullptr;
    out["D"] = nullptr;
    out["N"] = nullptr;
    out["generator"] = nullptr;
  }
  out["assumptions"] = v.assumptions;
  ordered_json pts = ordered_json::array();
  for (const AffinePoint& p : points) {
    ordered_json coords = ordered_json::array();
    for (const Rat& c : p.coords) coords.push_back(rat_pair(c));
    pts.push_back(coords);
  }
  out["points"] = pts;
  return out;
}

std::string point_line(const AffinePoint& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out << ", ";
    if (p.coords.size() == 2)
      out << (i == 0 ? "x" : "y");
    else
      out << "x" << (i + 1);
    out << " = " << p.coords[i].str();
  }
  return out.str();
}

std::string report_text(const Verdict& v, const std::vector<AffinePoint>& points) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(v.kind) << "\n";
  if (v.kind == VerdictKind::finite)
    out << "reason: [" << finite_reason_code(v.finite_reason) << "] " << v.reason << "\n";
  else
    out << "reason: " << v.reason << "\n";
  if (!v.assumptions.empty()) {
    out << "assumptions:\n";
    for (const auto& a : v.assumptions) out << "  - " << a << "\n";
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "case: " << case_tag(w.curve_case) << "\n";
    if (w.d) out << "D: " << w.d->get_str() << "\n";
    out << "N: " << w.clearing.get_str() << "\n";
    out << "generator: " << generator_text(w) << "\n";
    for (std::size_t i = 0; i < w.fs.size(); ++i)
      out << "F" << (i + 1) << "(U) = " << w.fs[i].str() << "\n";
  }
  if (!points.empty()) {
    out << "points:\n";
    for (const AffinePoint& p : points) out << "  " << point_line(p) << "\n";
  }
  return out.str();
}

}  // namespace genus0
