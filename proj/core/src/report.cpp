#include "polymix/report.hpp"

#include <cmath>
#include <cstdio>

namespace polymix {

std::string value_to_string(const ReportValue& v) {
  if (std::holds_alternative<Rat>(v)) return rat_to_string(std::get<Rat>(v));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v));
  return buf;
}

Report make_exact_report(std::string statement_id, std::string digest, Rat lhs, Rat rhs,
                         Relation rel, std::string notes) {
  Report r;
  r.statement_id = std::move(statement_id);
  r.inputs_digest = std::move(digest);
  Rat slack = lhs - rhs;
  switch (rel) {
    case Relation::kEqual:
      r.holds = sign(slack) == 0;
      break;
    case Relation::kGreaterEqual:
      r.holds = sign(slack) >= 0;
      break;
    case Relation::kLessEqual:
      r.holds = sign(slack) <= 0;
      break;
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.exact = true;
  r.slack = std::move(slack);
  r.notes = std::move(notes);
  return r;
}

Report make_float_report(std::string statement_id, std::string digest, double lhs, double rhs,
                         Relation rel, double tol, std::string notes) {
  Report r;
  r.statement_id = std::move(statement_id);
  r.inputs_digest = std::move(digest);
  double slack = lhs - rhs;
  switch (rel) {
    case Relation::kEqual:
      r.holds = std::fabs(slack) <= tol;
      break;
    case Relation::kGreaterEqual:
      r.holds = slack >= -tol;
      break;
    case Relation::kLessEqual:
      r.holds = slack <= tol;
      break;
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.exact = false;
  r.slack = slack;
  r.notes = std::move(notes);
  return r;
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  uint64_t h = fnv1a64(bytes);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace polymix
