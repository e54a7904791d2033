#include "sqcover/io.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include "json.hpp"

namespace sqcover {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& msg) { throw ParseError(ParseErrorCode::schema_violation, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorCode::malformed_json, e.what());
  } catch (const json::out_of_range& e) {
    // 406: a literal too large for a double
    if (e.id == 406) throw ParseError(ParseErrorCode::non_finite_number, e.what());
    throw ParseError(ParseErrorCode::malformed_json, e.what());
  }
}

void require_keys(const json& obj, const char* where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) schema_error(std::string(where) + ": expected an object");
  for (const char* k : required) {
    if (!obj.contains(k)) schema_error(std::string(where) + ": missing \"" + k + "\"");
  }
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) schema_error(std::string(where) + ": unknown field \"" + key + "\"");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where + ": expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(ParseErrorCode::non_finite_number, where + ": non-finite number");
  return d;
}

// null stands for a non-finite value (JSON has no infinities).
double number_or_nan(const json& v, const std::string& where) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) schema_error(where + ": expected a number");
  return v.get<double>();
}

json number_json(double d) { return std::isfinite(d) ? json(d) : json(nullptr); }

CoverMode parse_mode(const json& v) {
  if (v == "interior") return CoverMode::interior;
  if (v == "boundary") return CoverMode::boundary;
  schema_error("mode: expected \"interior\" or \"boundary\"");
}

json samples_json(const std::vector<CheckSample>& s) {
  json out = json::array();
  for (const auto& c : s) out.push_back({number_json(c.x), number_json(c.value), number_json(c.radius)});
  return out;
}

std::vector<CheckSample> parse_samples(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where + ": expected an array");
  std::vector<CheckSample> out;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != 3) schema_error(where + ": rows are [x, value, radius]");
    out.push_back({number_or_nan(row[0], where), number_or_nan(row[1], where), number_or_nan(row[2], where)});
  }
  return out;
}

json config_json(const Configuration& cfg) {
  json squares = json::array();
  for (const auto& sq : cfg.squares) {
    squares.push_back({{"center", {sq.center().x, sq.center().y}}, {"angle", sq.angle()}});
  }
  return {{"schema_version", "1"}, {"edge", cfg.edge}, {"mode", std::string(to_string(cfg.mode))},
          {"squares", squares}};
}

json certificate_json(const CoverageCertificate& cert, const GapReport* gaps) {
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back({w.x, w.y});
  json out = {{"schema_version", "1"},
              {"verdict", std::string(to_string(cert.verdict))},
              {"witnesses", witnesses},
              {"undecided_area_bound", number_json(cert.undecided_area_bound)},
              {"max_depth_used", cert.max_depth_used},
              {"margin", cert.margin},
              {"tight", cert.tight},
              {"tolerance", cert.tolerance}};
  if (gaps) {
    json sides = json::array();
    for (const auto& side : gaps->uncovered) {
      json iv = json::array();
      for (const auto& s : side) iv.push_back({s.lo, s.hi});
      sides.push_back(iv);
    }
    out["gaps"] = {{"uncovered", sides}, {"total_uncovered_length", gaps->total_uncovered_length}};
  }
  return out;
}

json report_json(const CheckReport& r) {
  json out = {{"check_id", r.check_id},
              {"verdict", std::string(to_string(r.verdict))},
              {"grid_size", r.grid_size},
              {"worst_margin", number_json(r.worst_margin)},
              {"data", samples_json(r.data)}};
  if (!r.secondary.empty()) out["secondary"] = samples_json(r.secondary);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::malformed_json: return "malformed_json";
    case ParseErrorCode::schema_violation: return "schema_violation";
    case ParseErrorCode::non_finite_number: return "non_finite_number";
  }
  return "?";
}

Configuration parse_config(std::string_view text) {
  json doc = parse_json(text);
  require_keys(doc, "config", {"schema_version", "edge", "mode", "squares"});
  if (doc["schema_version"] != "1") schema_error("schema_version: expected \"1\"");

  Configuration cfg;
  cfg.edge = number(doc["edge"], "edge");
  if (cfg.edge <= 0.0) schema_error("edge: must be positive");
  cfg.mode = parse_mode(doc["mode"]);

  const json& squares = doc["squares"];
  if (!squares.is_array() || squares.empty()) schema_error("squares: expected a nonempty array");
  for (const auto& s : squares) {
    require_keys(s, "square", {"center", "angle"});
    const json& c = s["center"];
    if (!c.is_array() || c.size() != 2) schema_error("center: expected [x, y]");
    Point p{number(c[0], "center"), number(c[1], "center")};
    cfg.squares.emplace_back(p, number(s["angle"], "angle"));
  }
  return cfg;
}

std::string serialize_config(const Configuration& cfg) { return dump(config_json(cfg)); }

std::string serialize_certificate(const CoverageCertificate& cert, const GapReport* gaps) {
  return dump(certificate_json(cert, gaps));
}

std::string serialize_report(const CheckReport& report) { return dump(report_json(report)); }

std::string serialize_reports(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return dump(arr);
}

CheckReport parse_report(std::string_view text) {
  json doc = parse_json(text);
  require_keys(doc, "report", {"check_id", "verdict", "grid_size", "worst_margin", "data"}, {"secondary", "note"});
  CheckReport r;
  if (!doc["check_id"].is_string()) schema_error("check_id: expected a string");
  r.check_id = doc["check_id"].get<std::string>();
  const json& v = doc["verdict"];
  if (v == "pass") {
    r.verdict = CheckVerdict::pass;
  } else if (v == "fail") {
    r.verdict = CheckVerdict::fail;
  } else if (v == "inconclusive") {
    r.verdict = CheckVerdict::inconclusive;
  } else {
    schema_error("verdict: unknown value");
  }
  if (!doc["grid_size"].is_number_integer()) schema_error("grid_size: expected an integer");
  r.grid_size = doc["grid_size"].get<int>();
  r.worst_margin = number_or_nan(doc["worst_margin"], "worst_margin");
  r.data = parse_samples(doc["data"], "data");
  if (doc.contains("secondary")) r.secondary = parse_samples(doc["secondary"], "secondary");
  if (doc.contains("note")) {
    if (!doc["note"].is_string()) schema_error("note: expected a string");
    r.note = doc["note"].get<std::string>();
  }
  return r;
}

std::string serialize_search_result(const SearchResult& result) {
  json hist = json::array();
  for (const auto& h : result.history) {
    hist.push_back({{"restart", h.restart}, {"edge", h.edge}, {"penalty", number_json(h.penalty)}});
  }
  json out = {{"best_edge", result.best_edge},
              {"config", config_json(result.config)},
              {"certificate", certificate_json(result.certificate, nullptr)},
              {"history", hist}};
  return dump(out);
}

}  // namespace sqcover
