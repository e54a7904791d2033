#pragma once

// Static SVG 1.1 drawings: a configuration over its target square, and the
// sampled curves of a check report. Coordinates are printed with a fixed
// number of decimals so identical inputs give identical files.

#include <string>

#include "sqcover/constructions.hpp"
#include "sqcover/paper_checks.hpp"
#include "sqcover/verify.hpp"

namespace sqcover {

/// Target square dashed, covering squares solid, gap witnesses as red dots,
/// uncovered boundary pieces (from `gaps`) as dashed red segments.
std::string render_svg(const Configuration& cfg, const CoverageCertificate* cert = nullptr,
                       const GapReport* gaps = nullptr);

/// Line plot of report.data (and report.secondary in a second panel).
std::string render_report_svg(const CheckReport& report);

}  // namespace sqcover
