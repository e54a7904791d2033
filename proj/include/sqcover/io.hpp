#pragma once

// JSON documents for configurations, certificates and check reports.
// Numbers are written with round-trip precision, keys in sorted order, so
// identical values always give identical bytes.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqcover/constructions.hpp"
#include "sqcover/optimize.hpp"
#include "sqcover/paper_checks.hpp"
#include "sqcover/verify.hpp"

namespace sqcover {

enum class ParseErrorCode {
  malformed_json = 10,
  schema_violation = 11,
  non_finite_number = 12,
};

std::string_view to_string(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

/// {schema_version: "1", edge, mode, squares: [{center: [x, y], angle}]}.
/// Unknown keys are rejected; angles are normalized on load.
Configuration parse_config(std::string_view text);
std::string serialize_config(const Configuration& cfg);

std::string serialize_certificate(const CoverageCertificate& cert, const GapReport* gaps = nullptr);

/// {check_id, verdict, grid_size, worst_margin, data: [[x, value, radius]...]}
/// plus `secondary` and `note` when present. Non-finite margins become null.
std::string serialize_report(const CheckReport& report);
std::string serialize_reports(const std::vector<CheckReport>& reports);
CheckReport parse_report(std::string_view text);

std::string serialize_search_result(const SearchResult& result);

}  // namespace sqcover
