#include "sqcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace sqcover {
namespace {

constexpr double kCanvas = 480.0;
constexpr double kPad = 16.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  // "-0.0000" and "0.0000" must not differ between runs that round differently
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

std::string header(double w, double h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
     << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
  return os.str();
}

// World -> pixel map with y pointing up.
struct View {
  double x0, y1, scale;
  double px(double x) const { return kPad + (x - x0) * scale; }
  double py(double y) const { return kPad + (y1 - y) * scale; }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void panel(std::ostringstream& os, const std::vector<CheckSample>& s, double top, double height, const char* color) {
  double left = 56.0, width = kCanvas - left - kPad;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, vmin = xmin, vmax = -xmin;
  for (const auto& c : s) {
    if (!std::isfinite(c.x) || !std::isfinite(c.value)) continue;
    xmin = std::min(xmin, c.x);
    xmax = std::max(xmax, c.x);
    vmin = std::min(vmin, c.value);
    vmax = std::max(vmax, c.value);
  }
  os << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
  if (!(xmin < xmax)) return;
  if (!(vmin < vmax)) {
    vmin -= 0.5;
    vmax += 0.5;
  }
  auto X = [&](double x) { return left + (x - xmin) / (xmax - xmin) * width; };
  auto Y = [&](double v) { return top + (vmax - v) / (vmax - vmin) * height; };
  if (vmin < 0.0 && vmax > 0.0) {
    os << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(left + width) << "\" y2=\""
       << fmt(Y(0)) << "\" stroke=\"#888\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
  bool first = true;
  for (const auto& c : s) {
    if (!std::isfinite(c.x) || !std::isfinite(c.value)) continue;
    os << (first ? "" : " ") << fmt(X(c.x)) << ',' << fmt(Y(c.value));
    first = false;
  }
  os << "\"/>\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", vmax);
  os << "<text x=\"2\" y=\"" << fmt(top + 10) << "\" font-size=\"9\">" << buf << "</text>\n";
  std::snprintf(buf, sizeof buf, "%.6g", vmin);
  os << "<text x=\"2\" y=\"" << fmt(top + height) << "\" font-size=\"9\">" << buf << "</text>\n";
  std::snprintf(buf, sizeof buf, "%.6g", xmin);
  os << "<text x=\"" << fmt(left) << "\" y=\"" << fmt(top + height + 11) << "\" font-size=\"9\">" << buf << "</text>\n";
  std::snprintf(buf, sizeof buf, "%.6g", xmax);
  os << "<text x=\"" << fmt(left + width) << "\" y=\"" << fmt(top + height + 11)
     << "\" font-size=\"9\" text-anchor=\"end\">" << buf << "</text>\n";
}

}  // namespace

std::string render_svg(const Configuration& cfg, const CoverageCertificate* cert, const GapReport* gaps) {
  double x0 = 0.0, y0 = 0.0, x1 = cfg.edge, y1 = cfg.edge;
  for (const auto& sq : cfg.squares) {
    for (const auto& c : square_corners(sq)) {
      x0 = std::min(x0, c.x);
      y0 = std::min(y0, c.y);
      x1 = std::max(x1, c.x);
      y1 = std::max(y1, c.y);
    }
  }
  double span = std::max(x1 - x0, y1 - y0);
  View v{x0, y1, (kCanvas - 2 * kPad) / span};
  double w = 2 * kPad + (x1 - x0) * v.scale, h = 2 * kPad + (y1 - y0) * v.scale;

  std::ostringstream os;
  os << header(w, h);
  static const char* palette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};
  for (std::size_t i = 0; i < cfg.squares.size(); ++i) {
    const char* c = palette[i % std::size(palette)];
    os << "<polygon fill=\"" << c << "\" fill-opacity=\"0.15\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    auto corners = square_corners(cfg.squares[i]);
    for (int k = 0; k < 4; ++k) os << (k ? " " : "") << fmt(v.px(corners[k].x)) << ',' << fmt(v.py(corners[k].y));
    os << "\"/>\n";
  }
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" points=\"";
  for (int k = 0; k < 4; ++k) {
    Point p = cfg.vertex(k);
    os << (k ? " " : "") << fmt(v.px(p.x)) << ',' << fmt(v.py(p.y));
  }
  os << "\"/>\n";
  if (gaps) {
    for (int side = 0; side < 4; ++side) {
      Segment s = cfg.side(side);
      Point dir = (1.0 / cfg.edge) * (s.b - s.a);
      for (const auto& iv : gaps->uncovered[side]) {
        Point a = s.a + iv.lo * dir, b = s.a + iv.hi * dir;
        os << "<line x1=\"" << fmt(v.px(a.x)) << "\" y1=\"" << fmt(v.py(a.y)) << "\" x2=\"" << fmt(v.px(b.x))
           << "\" y2=\"" << fmt(v.py(b.y)) << "\" stroke=\"red\" stroke-width=\"3\" stroke-dasharray=\"4,3\"/>\n";
      }
    }
  }
  if (cert) {
    for (const auto& p : cert->witnesses) {
      os << "<circle cx=\"" << fmt(v.px(p.x)) << "\" cy=\"" << fmt(v.py(p.y))
         << "\" r=\"3\" fill=\"red\" stroke=\"none\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_report_svg(const CheckReport& report) {
  bool two = !report.secondary.empty();
  double ph = 160.0;
  double h = 28.0 + ph + 24.0 + (two ? ph + 24.0 : 0.0);
  std::ostringstream os;
  os << header(kCanvas, h);
  os << "<text x=\"" << fmt(kPad) << "\" y=\"16\" font-size=\"12\">" << escape(report.check_id) << ": "
     << to_string(report.verdict) << "</text>\n";
  panel(os, report.data, 28.0, ph, "#1f77b4");
  if (two) panel(os, report.secondary, 28.0 + ph + 24.0, ph, "#d62728");
  os << "</svg>\n";
  return os.str();
}

}  // namespace sqcover
