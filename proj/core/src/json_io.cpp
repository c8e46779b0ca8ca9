#include "polymix/json_io.hpp"

#include <sstream>

#include "polymix/errors.hpp"

namespace polymix {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0) {
      throw InvalidArgument("bad integer literal: " + j.get<std::string>());
    }
    return v;
  }
  throw InvalidArgument("expected an integer or integer string");
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw InvalidArgument("expected a rational \"p/q\" string");
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of integers");
  IntVec v;
  for (const json& e : j) v.push_back(int_from_json(e));
  return v;
}

ordered_json intvec_to_json(const IntVec& v) {
  ordered_json a = ordered_json::array();
  for (const Int& e : v) a.push_back(int_to_json(e));
  return a;
}

ordered_json value_to_json(const ReportValue& v) {
  if (std::holds_alternative<Rat>(v)) return rat_to_string(std::get<Rat>(v));
  return std::get<double>(v);
}

int dim_from_json(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw InvalidArgument("missing integer field \"dim\"");
  }
  int dim = j["dim"].get<int>();
  if (dim < 1) throw InvalidArgument("\"dim\" must be >= 1");
  return dim;
}

}  // namespace

ordered_json polytope_to_json(const Polytope& p) {
  ordered_json j;
  j["dim"] = p.ambient_dim();
  ordered_json verts = ordered_json::array();
  for (const RatVec& v : p.vertices()) {
    ordered_json row = ordered_json::array();
    for (const Rat& x : v) row.push_back(rat_to_string(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Polytope polytope_from_json(const json& j) {
  int dim = dim_from_json(j);
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
    throw InvalidArgument("polytope JSON needs a nonempty \"vertices\" array");
  }
  std::vector<RatVec> pts;
  for (const json& row : j["vertices"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw InvalidArgument("vertex length disagrees with \"dim\"");
    }
    RatVec v;
    for (const json& x : row) v.push_back(rat_from_json(x));
    pts.push_back(std::move(v));
  }
  return make_polytope(pts);
}

ordered_json halfspaces_to_json(const std::vector<Halfspace>& hs, int dim) {
  ordered_json j;
  j["dim"] = dim;
  ordered_json arr = ordered_json::array();
  for (const Halfspace& h : hs) {
    ordered_json e;
    e["normal"] = intvec_to_json(h.normal);
    e["offset"] = rat_to_string(h.offset);
    arr.push_back(std::move(e));
  }
  j["halfspaces"] = std::move(arr);
  return j;
}

std::pair<std::vector<Halfspace>, int> halfspaces_from_json(const json& j) {
  int dim = dim_from_json(j);
  if (!j.contains("halfspaces") || !j["halfspaces"].is_array()) {
    throw InvalidArgument("halfspace JSON needs a \"halfspaces\" array");
  }
  std::vector<Halfspace> hs;
  for (const json& e : j["halfspaces"]) {
    if (!e.contains("normal") || !e.contains("offset")) {
      throw InvalidArgument("halfspace entry needs \"normal\" and \"offset\"");
    }
    Halfspace h{intvec_from_json(e["normal"]), rat_from_json(e["offset"])};
    if (static_cast<int>(h.normal.size()) != dim) {
      throw InvalidArgument("halfspace normal length disagrees with \"dim\"");
    }
    hs.push_back(std::move(h));
  }
  return {std::move(hs), dim};
}

ordered_json toric_to_json(const ToricData& d) {
  ordered_json j;
  j["dim"] = d.dim;
  ordered_json rays = ordered_json::array();
  for (const IntVec& u : d.rays) rays.push_back(intvec_to_json(u));
  j["rays"] = std::move(rays);
  ordered_json coeffs = ordered_json::array();
  for (const Rat& a : d.coeffs) coeffs.push_back(rat_to_string(a));
  j["coeffs"] = std::move(coeffs);
  return j;
}

ToricData toric_from_json(const json& j) {
  ToricData d;
  d.dim = dim_from_json(j);
  if (!j.contains("rays") || !j["rays"].is_array() || !j.contains("coeffs") ||
      !j["coeffs"].is_array()) {
    throw InvalidArgument("toric JSON needs \"rays\" and \"coeffs\" arrays");
  }
  for (const json& u : j["rays"]) d.rays.push_back(intvec_from_json(u));
  for (const json& a : j["coeffs"]) d.coeffs.push_back(rat_from_json(a));
  validate_toric(d);
  return d;
}

ordered_json newton_body_to_json(const NewtonBody& b) {
  ordered_json j;
  j["toric"] = toric_to_json(b.ambient);
  j["body"] = polytope_to_json(b.body);
  return j;
}

NewtonBody newton_body_from_json(const json& j) {
  if (!j.contains("toric") || !j.contains("body")) {
    throw InvalidArgument("newton body JSON needs \"toric\" and \"body\"");
  }
  return make_newton_body(toric_from_json(j["toric"]), polytope_from_json(j["body"]));
}

ordered_json measure_to_json(const MixedAreaMeasure& m) {
  ordered_json j;
  j["dim"] = m.dim;
  ordered_json atoms = ordered_json::array();
  for (const MeasureAtom& a : m.atoms) {
    ordered_json e;
    e["dir"] = intvec_to_json(a.direction);
    e["weight"] = rat_to_string(a.weight);
    atoms.push_back(std::move(e));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

MixedAreaMeasure measure_from_json(const json& j) {
  MixedAreaMeasure m;
  m.dim = dim_from_json(j);
  if (!j.contains("atoms") || !j["atoms"].is_array()) {
    throw InvalidArgument("measure JSON needs an \"atoms\" array");
  }
  for (const json& e : j["atoms"]) {
    if (!e.contains("dir") || !e.contains("weight")) {
      throw InvalidArgument("measure atom needs \"dir\" and \"weight\"");
    }
    m.atoms.push_back(MeasureAtom{intvec_from_json(e["dir"]), rat_from_json(e["weight"])});
  }
  return m;
}

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["schema"] = "1";
  j["statement"] = r.statement_id;
  j["digest"] = r.inputs_digest;
  j["lhs"] = value_to_json(r.lhs);
  j["rhs"] = value_to_json(r.rhs);
  j["exact"] = r.exact;
  j["holds"] = r.holds;
  j["slack"] = value_to_json(r.slack);
  j["notes"] = r.notes;
  return j;
}

std::string report_csv_header() {
  return "statement,digest,lhs,rhs,exact,holds,slack,notes";
}

namespace {
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}
}  // namespace

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << r.statement_id << ',' << r.inputs_digest << ',' << value_to_string(r.lhs) << ','
     << value_to_string(r.rhs) << ',' << (r.exact ? "true" : "false") << ','
     << (r.holds ? "true" : "false") << ',' << value_to_string(r.slack) << ','
     << csv_quote(r.notes);
  return os.str();
}

}  // namespace polymix
