#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "genus0/decide.hpp"

namespace genus0 {

// Exit codes: 0 infinite, 1 finite, 2 unknown, 3 error.
int exit_code(VerdictKind k);

const char* verdict_name(VerdictKind k);
const char* finite_reason_code(FiniteReason r);

// ["num", "den"] with exact decimal strings; no floating point anywhere.
nlohmann::ordered_json rat_pair(const Rat& q);

// Machine-readable report. `points` may be empty (decide) or carry the
// generated/enumerated list.
nlohmann::ordered_json report_json(const Verdict& v, const std::vector<AffinePoint>& points);

// Human-readable report with the same content.
std::string report_text(const Verdict& v, const std::vector<AffinePoint>& points);

// One point per line: "x = a/b, y = c/d" (x1, x2, ... beyond two coordinates).
std::string point_line(const AffinePoint& p);

}  // namespace genus0
