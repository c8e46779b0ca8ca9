#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "polymix/rat.hpp"

namespace polymix {

/// Exact or floating verification value.
using ReportValue = std::variant<Rat, double>;

std::string value_to_string(const ReportValue& v);

/// One verified statement instance: what was compared, how, and the margin.
/// `exact` means lhs, rhs and slack are rationals and `holds` was decided by
/// exact sign comparison; float reports use the directional tolerance noted
/// in the producing checker.
struct Report {
  std::string statement_id;
  std::string inputs_digest;
  ReportValue lhs;
  ReportValue rhs;
  bool exact = true;
  bool holds = false;
  ReportValue slack;
  std::string notes;
};

enum class Relation { kEqual, kGreaterEqual, kLessEqual };

/// Exact comparison report: slack = lhs - rhs, holds decided by `rel`.
Report make_exact_report(std::string statement_id, std::string digest, Rat lhs, Rat rhs,
                         Relation rel, std::string notes = "");

/// Float comparison with a directional tolerance: a >= comparison may fail
/// only by at most `tol`.
Report make_float_report(std::string statement_id, std::string digest, double lhs, double rhs,
                         Relation rel, double tol, std::string notes = "");

/// FNV-1a over a canonical encoding of the inputs; stable across runs.
uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

}  // namespace polymix
