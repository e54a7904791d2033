#include <regex>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sqcover/svg.hpp"

using namespace sqcover;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("configuration drawing: dashed target, solid squares, no markers without a certificate") {
  Configuration cfg = construct_interior(3);
  std::string svg = render_svg(cfg);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polygon") == 4);
  CHECK(count(svg, "stroke-dasharray") == 1);
  CHECK(count(svg, "<circle") == 0);
  CoverageCertificate empty;
  CHECK(count(render_svg(cfg, &empty), "<circle") == 0);
  CHECK(render_svg(cfg) == svg);
}

TEST_CASE("the three-square figure puts two tilted squares on the origin corner") {
  // map pixel coordinates back through the drawing's affine map, recovered from the target square
  Configuration cfg = construct_interior(3);
  std::string svg = render_svg(cfg);
  std::regex poly("<polygon[^>]*points=\"([^\"]*)\"");
  std::vector<std::vector<std::pair<double, double>>> polys;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    std::vector<std::pair<double, double>> pts;
    std::string s = (*it)[1];
    std::regex pt("(-?[0-9.]+),(-?[0-9.]+)");
    for (auto p = std::sregex_iterator(s.begin(), s.end(), pt); p != std::sregex_iterator(); ++p)
      pts.emplace_back(std::stod((*p)[1]), std::stod((*p)[2]));
    polys.push_back(pts);
  }
  REQUIRE(polys.size() == 4);
  auto target = polys.back();  // v1, v2, v3, v4
  double scale = (target[1].first - target[0].first) / cfg.edge;
  auto world = [&](std::pair<double, double> p) {
    return Point{(p.first - target[0].first) / scale, (target[0].second - p.second) / scale};
  };
  int on_origin = 0;
  for (int i = 0; i < 3; ++i) {
    auto corners = square_corners(cfg.squares[i]);
    for (int k = 0; k < 4; ++k) {
      Point w = world(polys[i][k]);
      CHECK(std::abs(w.x - corners[k].x) < 1e-3);
      CHECK(std::abs(w.y - corners[k].y) < 1e-3);
      on_origin += std::hypot(w.x, w.y) < 1e-3;
    }
  }
  CHECK(on_origin == 2);
}

TEST_CASE("gap witnesses and uncovered boundary pieces are drawn") {
  Configuration cfg = oracle::with_edge(construct_boundary(5), construct_boundary(5).edge + 1e-4);
  VerifyOptions o;
  o.tight = true;
  BoundaryResult r = verify_boundary(cfg, o);
  std::string svg = render_svg(cfg, &r.certificate, &r.gaps);
  CHECK(count(svg, "<circle") == static_cast<int>(r.certificate.witnesses.size()));
  int pieces = 0;
  for (const auto& s : r.gaps.uncovered) pieces += static_cast<int>(s.size());
  CHECK(count(svg, "<line") == pieces);
  CHECK(pieces > 0);
  CHECK(count(svg, "stroke-dasharray") == 1 + pieces);
}

TEST_CASE("report plots have one polyline per series") {
  CheckReport r{"x", CheckVerdict::pass, 3, 1.0, {{0, 1, 0}, {1, -1, 0}, {2, 3, 0}}, {}, ""};
  CHECK(count(render_report_svg(r), "<polyline") == 1);
  r.secondary = r.data;
  CHECK(count(render_report_svg(r), "<polyline") == 2);
  CHECK(render_report_svg(r) == render_report_svg(r));
}
