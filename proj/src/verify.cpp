#include "sqcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqcover {
namespace {

constexpr std::size_t kMaxWitnesses = 16;

std::vector<SquareFrame> frames_of(const Configuration& cfg) {
  std::vector<SquareFrame> frames;
  frames.reserve(cfg.squares.size());
  for (const auto& sq : cfg.squares) frames.emplace_back(sq);
  return frames;
}

void push_children(const Cell& c, std::vector<Cell>& out) {
  for (int dy = 0; dy < 2; ++dy) {
    for (int dx = 0; dx < 2; ++dx) out.push_back({2 * c.ix + dx, 2 * c.iy + dy, c.depth + 1});
  }
}

Point point_on_side(const Segment& s, double t) {
  const double len = distance(s.a, s.b);
  return s.a + (t / len) * (s.b - s.a);
}

// Depth at which the cell diagonal drops to tol / 2: beyond it every cell is
// decided in tight mode.
int tight_depth(double edge, double tol) {
  const double d = std::ceil(std::log2(edge * kSqrt2 / (0.5 * tol)));
  return static_cast<int>(std::max(0.0, d));
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::covered: return "covered";
    case Verdict::gap: return "gap";
    default: return "undecided";
  }
}

CellThresholds thresholds_for(const VerifyOptions& opt) {
  if (opt.tight) return {-opt.tight_tolerance, -0.5 * opt.tight_tolerance};
  if (!(opt.margin >= 0.0)) throw std::invalid_argument("verify: margin must be >= 0");
  return {opt.margin, -opt.margin};
}

std::vector<SideInterval> merge_intervals(std::vector<SideInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const SideInterval& a, const SideInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<SideInterval> out;
  for (const auto& iv : intervals) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<SideInterval> complement_intervals(const std::vector<SideInterval>& merged, double len, int side) {
  std::vector<SideInterval> gaps;
  double cursor = 0.0;
  for (const auto& iv : merged) {
    if (iv.lo > cursor) gaps.push_back({side, cursor, std::min(iv.lo, len)});
    cursor = std::max(cursor, iv.hi);
    if (cursor >= len) break;
  }
  if (cursor < len) gaps.push_back({side, cursor, len});
  std::erase_if(gaps, [](const SideInterval& g) { return !(g.hi > g.lo); });
  return gaps;
}

BoundaryResult verify_boundary(const Configuration& cfg, const VerifyOptions& opt) {
  cfg.validate();
  const CellThresholds thr = thresholds_for(opt);
  const auto frames = frames_of(cfg);

  BoundaryResult result;
  CoverageCertificate& cert = result.certificate;
  cert.margin = opt.tight ? 0.0 : opt.margin;
  cert.tight = opt.tight;
  cert.tolerance = opt.tight ? opt.tight_tolerance : 0.0;

  // Per side: intervals certainly inside some square (cover) and intervals
  // possibly inside (their complement is certainly uncovered).
  struct SideWork {
    std::vector<SideInterval> uncovered;
    std::vector<SideInterval> certain_gaps;
  };
  auto work_side = [&](std::size_t i) {
    const int side = static_cast<int>(i);
    const Segment seg = cfg.side(side);
    std::vector<SideInterval> cover;
    std::vector<SideInterval> reach;
    for (const auto& f : frames) {
      if (auto iv = clip_segment(f, seg, thr.inner, +1, side)) cover.push_back(*iv);
      if (auto iv = clip_segment(f, seg, thr.outer, -1, side)) reach.push_back(*iv);
    }
    SideWork w;
    w.uncovered = complement_intervals(merge_intervals(cover), cfg.edge, side);
    w.certain_gaps = complement_intervals(merge_intervals(reach), cfg.edge, side);
    return w;
  };
  const auto sides = map_indices(4, opt.backend, work_side);

  bool covered = true;
  for (int i = 0; i < 4; ++i) {
    result.gaps.uncovered[i] = sides[i].uncovered;
    for (const auto& g : sides[i].uncovered) result.gaps.total_uncovered_length += g.length();
    covered = covered && sides[i].uncovered.empty();
  }
  if (covered) {
    cert.verdict = Verdict::covered;
    return result;
  }
  for (int i = 0; i < 4; ++i) {
    const auto& gaps = sides[i].certain_gaps;
    if (gaps.empty()) continue;
    const auto widest =
        std::max_element(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) { return a.length() < b.length(); });
    cert.witnesses.push_back(point_on_side(cfg.side(i), 0.5 * (widest->lo + widest->hi)));
  }
  cert.verdict = cert.witnesses.empty() ? Verdict::undecided : Verdict::gap;
  return result;
}

BoundaryResult verify_boundary(const Configuration& cfg, double margin) {
  VerifyOptions opt;
  opt.margin = margin;
  return verify_boundary(cfg, opt);
}

CoverageCertificate verify_interior(const Configuration& cfg, const VerifyOptions& opt) {
  cfg.validate();
  if (opt.max_depth < 1) throw std::invalid_argument("verify_interior: max_depth must be >= 1");
  const CellThresholds thr = thresholds_for(opt);
  const auto frames = frames_of(cfg);
  const int depth_limit = opt.tight ? std::max(opt.max_depth, tight_depth(cfg.edge, opt.tight_tolerance)) : opt.max_depth;

  CoverageCertificate cert;
  cert.margin = opt.tight ? 0.0 : opt.margin;
  cert.tight = opt.tight;
  cert.tolerance = opt.tight ? opt.tight_tolerance : 0.0;

  std::vector<Cell> level{Cell{0, 0, 0}};
  for (int depth = 0;; ++depth) {
    cert.max_depth_used = depth;
    const auto status = classify_cells(frames, cfg.edge, level, thr, opt.backend);

    for (std::size_t i = 0; i < level.size() && cert.witnesses.size() < kMaxWitnesses; ++i) {
      if (status[i] == CellStatus::empty || status[i] == CellStatus::witness) {
        cert.witnesses.push_back(cell_center(cfg.edge, level[i]));
      }
    }
    if (!cert.witnesses.empty()) {
      cert.verdict = Verdict::gap;
      return cert;
    }

    std::vector<Cell> next;
    double unresolved_area = 0.0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (status[i] != CellStatus::unresolved) continue;
      unresolved_area += cell_area(cfg.edge, level[i]);
      push_children(level[i], next);
    }
    if (next.empty()) {
      cert.verdict = Verdict::covered;
      return cert;
    }
    if (depth >= depth_limit || next.size() > opt.max_cells_per_level) {
      cert.verdict = Verdict::undecided;
      cert.undecided_area_bound = unresolved_area;
      return cert;
    }
    level = std::move(next);
  }
}

CoverageCertificate verify_interior(const Configuration& cfg, int max_depth, double margin) {
  VerifyOptions opt;
  opt.max_depth = max_depth;
  opt.margin = margin;
  return verify_interior(cfg, opt);
}

CoverageCertificate verify(const Configuration& cfg, const VerifyOptions& opt) {
  return cfg.mode == CoverMode::interior ? verify_interior(cfg, opt) : verify_boundary(cfg, opt).certificate;
}

double uncovered_boundary_length(const Configuration& cfg) {
  cfg.validate();
  const auto frames = frames_of(cfg);
  double total = 0.0;
  for (int side = 0; side < 4; ++side) {
    const Segment seg = cfg.side(side);
    std::vector<SideInterval> reach;
    for (const auto& f : frames) {
      if (auto iv = clip_segment(f, seg, 0.0, -1, side)) reach.push_back(*iv);
    }
    for (const auto& g : complement_intervals(merge_intervals(std::move(reach)), cfg.edge, side)) total += g.length();
  }
  return total;
}

OracleResult monte_carlo_oracle(const Configuration& cfg, std::int64_t samples, std::uint64_t seed, Backend backend) {
  cfg.validate();
  if (samples < 1) throw std::invalid_argument("monte_carlo_oracle: samples must be >= 1");
  const bool boundary = cfg.mode == CoverMode::boundary;
  const auto frames = frames_of(cfg);
  const auto flags = flag_uncovered_samples(frames, cfg.edge, boundary, samples, seed, backend);

  OracleResult r;
  std::int64_t count = 0;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) continue;
    if (count == 0) r.witness = sample_point(cfg.edge, boundary, seed, i);
    ++count;
  }
  r.uncovered_found = count > 0;
  const double measure = boundary ? 4.0 * cfg.edge : cfg.edge * cfg.edge;
  r.estimate = measure * static_cast<double>(count) / static_cast<double>(samples);
  return r;
}

double uncovered_area_bound(const Configuration& cfg, int max_depth, CellThresholds thr, Backend backend) {
  cfg.validate();
  const auto frames = frames_of(cfg);
  double area = 0.0;
  std::vector<Cell> level{Cell{0, 0, 0}};
  for (int depth = 0; depth <= max_depth && !level.empty(); ++depth) {
    const auto status = classify_cells(frames, cfg.edge, level, thr, backend);
    std::vector<Cell> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      switch (status[i]) {
        case CellStatus::covered: break;
        case CellStatus::empty: area += cell_area(cfg.edge, level[i]); break;
        default:
          if (depth == max_depth) {
            area += cell_area(cfg.edge, level[i]);
          } else {
            push_children(level[i], next);
          }
      }
    }
    level = std::move(next);
  }
  return area;
}

}  // namespace sqcover
