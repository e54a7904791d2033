#include "sqcover/paper_checks.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sqcover/constants.hpp"
#include "sqcover/geom.hpp"
#include "sqcover/lshape.hpp"

namespace sqcover {
namespace {

using HP = boost::multiprecision::cpp_bin_float_50;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Nodes whose argument of l comes this close to 1 are left to the limit
// evaluation.
constexpr double kSingularExclusion = 1e-9;
constexpr double kHpTolerance = 1e-12;
constexpr std::size_t kMaxPlotRows = 1024;

double down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}
double up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

// --- 50-digit evaluation for identities at points where l' is singular ---

template <class T>
T l_t(const T& x) {
  using std::sqrt;
  T r2 = (x - 1) * (x + 1);
  if (r2 < 0) r2 = 0;
  return x - x * sqrt(r2);
}

HP hp_sqrt_phi() {
  using boost::multiprecision::sqrt;
  return sqrt((1 + sqrt(HP(5))) / 2);
}
HP hp_alpha_star() { return acos(1 / hp_sqrt_phi()); }
HP hp_pi() { return boost::math::constants::pi<HP>(); }
HP hp_xbar() {
  using boost::multiprecision::sqrt;
  const HP r2 = sqrt(HP(2));
  return r2 / 2 * sqrt(sqrt(13 - 8 * r2) + 1);
}

template <class T>
std::pair<T, T> a1a2_t(const T& alpha, const T& lambda) {
  using std::cos;
  using std::sin;
  return {(1 - lambda * cos(alpha)) / sin(alpha), (1 - lambda * sin(alpha)) / cos(alpha)};
}

HP f_hp(const HP& alpha) {
  const HP lam = hp_sqrt_phi();
  const auto [a1, a2] = a1a2_t(alpha, lam);
  return l_t(HP(lam - a1)) + l_t(HP(lam - a2));
}

HP g_hp(const HP& x2, const HP& a) {
  using boost::multiprecision::sqrt;
  return l_t(HP(a - l_t(x2))) + sqrt(HP(2)) + l_t(HP(a - l_t(HP(a - x2)))) - a;
}

// --- guarded helpers ---

const GuardedScalar& g_sqrt_phi() {
  static const GuardedScalar v = sqrt((GuardedScalar(1.0) + sqrt(GuardedScalar(5.0))) / GuardedScalar(2.0));
  return v;
}

const GuardedScalar& g_sqrt2() {
  static const GuardedScalar v = sqrt(GuardedScalar(2.0));
  return v;
}

GuardedScalar radicand(const GuardedScalar& x) { return (x - 1.0) * (x + 1.0); }

// Counts certified signs of quantities required to be positive.
struct Tally {
  long positive = 0;
  long negative = 0;
  long unknown = 0;
  double worst = kInf;

  void add(const GuardedScalar& q) {
    switch (q.sign()) {
      case Sign::positive: ++positive; break;
      case Sign::negative: ++negative; break;
      default: ++unknown;
    }
    worst = std::min(worst, q.lower());
  }
  void add_unknown() {
    ++unknown;
    worst = std::min(worst, -kInf);
  }
  void fail(double margin) {
    ++negative;
    worst = std::min(worst, margin);
  }
  void merge(const Tally& o) {
    positive += o.positive;
    negative += o.negative;
    unknown += o.unknown;
    worst = std::min(worst, o.worst);
  }
  CheckVerdict verdict() const {
    if (negative > 0) return CheckVerdict::fail;
    if (unknown > 0) return CheckVerdict::inconclusive;
    return CheckVerdict::pass;
  }
};

CheckSample sample(double x, const GuardedScalar& v) { return {x, v.value(), v.radius()}; }

template <class T>
std::vector<T> thin(const std::vector<T>& rows) {
  if (rows.size() <= kMaxPlotRows) return rows;
  // evenly spaced picks, both ends kept
  std::vector<T> out;
  const std::size_t last = rows.size() - 1;
  for (std::size_t k = 0; k < kMaxPlotRows; ++k) out.push_back(rows[k * last / (kMaxPlotRows - 1)]);
  return out;
}

CheckReport inconclusive_report(std::string id, int grid, std::string note) {
  CheckReport r;
  r.check_id = std::move(id);
  r.grid_size = grid;
  r.verdict = CheckVerdict::inconclusive;
  r.worst_margin = -kInf;
  r.note = std::move(note);
  return r;
}

// Interval [lo, hi] split into `cells` closed cells; the last one ends at hi.
GuardedScalar cell(double lo, double hi, int cells, std::size_t i) {
  const double w = (hi - lo) / cells;
  const double a = lo + w * static_cast<double>(i);
  const double b = i + 1 == static_cast<std::size_t>(cells) ? hi : lo + w * static_cast<double>(i + 1);
  return GuardedScalar::from_interval(down(a), up(b));
}

// alpha* = arccos(1/sqrt phi) and its mirror, widened outward.
double alpha_star_lo() { return down(constants().alpha_star, 4); }
double alpha_star_mirror_hi() { return up(kHalfPi - constants().alpha_star, 4); }

GuardedScalar g_value(const GuardedScalar& x2, const GuardedScalar& x3) {
  const GuardedScalar a = x2 + x3;
  return l_of(a - l_of(x2)) + g_sqrt2() + l_of(a - l_of(x3)) - a;
}

}  // namespace

std::string_view to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    default: return "inconclusive";
  }
}

std::pair<double, double> A1A2(double alpha, double lambda) {
  if (!(alpha > 0.0 && alpha < kHalfPi) || !(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("A1A2: need 0 < alpha < pi/2 and lambda > 0");
  }
  return a1a2_t(alpha, lambda);
}

Ineq2Sides ineq2_sides(double alpha, double lambda) {
  const auto [a1, a2] = A1A2(alpha, lambda);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {lambda - a1 - a2, (1.0 - c) * (1.0 - s) / (c * s)};
}

CheckReport ineq2_check(int grid, Backend backend) {
  if (grid < 2) return inconclusive_report("ineq2_positivity", grid, "grid must be >= 2");
  struct Row {
    Tally tally;
    GuardedScalar lhs_at_one;
    GuardedScalar rhs;
  };
  const double step = kHalfPi / grid;
  auto row = [&](std::size_t i) {
    Row out;
    const GuardedScalar alpha(step * (static_cast<double>(i) + 0.5));
    const GuardedScalar c = cos(alpha);
    const GuardedScalar s = sin(alpha);
    const GuardedScalar rhs = (1.0 - c) * (1.0 - s) / (c * s);
    out.rhs = rhs;
    out.tally.add(rhs);
    for (int j = 0; j < grid; ++j) {
      const GuardedScalar lam(1.0 + 2.0 * j / (grid - 1));
      const GuardedScalar lhs = lam - (1.0 - lam * c) / s - (1.0 - lam * s) / c;
      const GuardedScalar d = lhs - rhs;
      if (j == 0) {
        // Equality holds at lambda = 1; only a certified violation counts.
        out.lhs_at_one = lhs;
        out.tally.add(lhs);
        if (d.certainly_negative()) out.tally.fail(d.upper());
      } else {
        out.tally.add(d);
      }
    }
    return out;
  };
  const auto rows = map_indices(static_cast<std::size_t>(grid), backend, row);

  CheckReport rep;
  rep.check_id = "ineq2_positivity";
  rep.grid_size = grid;
  Tally total;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total.merge(rows[i].tally);
    const double alpha = step * (static_cast<double>(i) + 0.5);
    rep.data.push_back(sample(alpha, rows[i].lhs_at_one));
    rep.secondary.push_back(sample(alpha, rows[i].rhs));
  }
  rep.data = thin(rep.data);
  rep.secondary = thin(rep.secondary);
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note = "lambda in [1,3]; data: lambda - A1 - A2 at lambda = 1, secondary: lower bound (equal at lambda = 1)";
  return rep;
}

CheckReport a1a2_check(int cells, Backend backend) {
  if (cells < 1) return inconclusive_report("a1a2_monotonicity", cells, "need at least one cell");
  const double lo = alpha_star_lo();
  const double hi = alpha_star_mirror_hi();
  struct Cell1 {
    Tally tally;
    GuardedScalar a1, a2;
  };
  auto one = [&](std::size_t i) {
    Cell1 out;
    const GuardedScalar alpha = cell(lo, hi, cells, i);
    const GuardedScalar lam = g_sqrt_phi();
    const GuardedScalar c = cos(alpha);
    const GuardedScalar s = sin(alpha);
    out.tally.add(lam - c);  // sign of A1'
    out.tally.add(lam - s);  // minus sign of A2'
    out.a1 = (1.0 - lam * c) / s;
    out.a2 = (1.0 - lam * s) / c;
    return out;
  };
  const auto res = map_indices(static_cast<std::size_t>(cells), backend, one);

  CheckReport rep;
  rep.check_id = "a1a2_monotonicity";
  rep.grid_size = cells;
  Tally total;
  for (std::size_t i = 0; i < res.size(); ++i) {
    total.merge(res[i].tally);
    const double mid = cell(lo, hi, cells, i).value();
    rep.data.push_back(sample(mid, res[i].a1));
    rep.secondary.push_back(sample(mid, res[i].a2));
  }
  rep.data = thin(rep.data);
  rep.secondary = thin(rep.secondary);

  // Monotone, so the extremes sit at the endpoints: 0 and sqrt(phi) - 1.
  const HP lam = hp_sqrt_phi();
  const HP a = hp_alpha_star();
  const auto [a1_lo, a2_lo] = a1a2_t(a, lam);
  const auto [a1_hi, a2_hi] = a1a2_t(HP(hp_pi() / 2 - a), lam);
  const HP peak = lam - 1;
  using boost::multiprecision::abs;
  const double dev = static_cast<double>(
      std::max({HP(abs(a1_lo)), HP(abs(a2_hi)), HP(abs(a2_lo - peak)), HP(abs(a1_hi - peak))}));
  if (dev > kHpTolerance) total.fail(kHpTolerance - dev);
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note = "lambda = sqrt(phi); A1 0 -> sqrt(phi)-1 increasing, A2 sqrt(phi)-1 -> 0 decreasing; endpoint deviation " +
             std::to_string(dev);
  return rep;
}

double f_of(double alpha) {
  const double lam = constants().sqrt_phi;
  const auto [a1, a2] = A1A2(alpha, lam);
  return l_of(lam - a1) + l_of(lam - a2);
}

GuardedScalar f_of(const GuardedScalar& alpha) {
  const GuardedScalar lam = g_sqrt_phi();
  const GuardedScalar c = cos(alpha);
  const GuardedScalar s = sin(alpha);
  return l_of(lam - (1.0 - lam * c) / s) + l_of(lam - (1.0 - lam * s) / c);
}

GuardedScalar f_derivative_numerator(const GuardedScalar& alpha) {
  const GuardedScalar lam = g_sqrt_phi();
  const GuardedScalar c = cos(alpha);
  const GuardedScalar s = sin(alpha);
  const GuardedScalar x1 = lam - (1.0 - lam * c) / s;
  const GuardedScalar x2 = lam - (1.0 - lam * s) / c;
  const GuardedScalar d1 = (lam - c) / (s * s);
  const GuardedScalar d2 = (s - lam) / (c * c);
  const GuardedScalar r1 = sqrt_nonneg(radicand(x1));
  const GuardedScalar r2 = sqrt_nonneg(radicand(x2));
  // f' = -l'(x1) A1' - l'(x2) A2', with l'(x) = N(x) / sqrt(x^2 - 1).
  return -(l_prime_numerator(x1) * d1 * r2) - l_prime_numerator(x2) * d2 * r1;
}

CheckReport f_symmetry_check(int grid) {
  if (grid < 2) return inconclusive_report("f_symmetry", grid, "grid must be >= 2");
  const int nodes = std::min(grid, 256);
  const HP a0 = hp_alpha_star();
  const HP span = hp_pi() / 2 - 2 * a0;
  CheckReport rep;
  rep.check_id = "f_symmetry";
  rep.grid_size = nodes;
  double worst = 0.0;
  for (int k = 0; k <= nodes; ++k) {
    const HP a = a0 + span * k / nodes;
    const HP fa = f_hp(a);
    const HP dev = boost::multiprecision::abs(fa - f_hp(HP(hp_pi() / 2 - a)));
    worst = std::max(worst, static_cast<double>(dev));
    rep.data.push_back({static_cast<double>(a), static_cast<double>(fa), static_cast<double>(dev)});
  }
  rep.worst_margin = kHpTolerance - worst;
  rep.verdict = worst <= kHpTolerance ? CheckVerdict::pass : CheckVerdict::fail;
  rep.note = "|f(a) - f(pi/2 - a)| in 50-digit arithmetic on [alpha*, pi/2 - alpha*]";
  return rep;
}

CheckReport f_endpoint_check() {
  const HP a = hp_alpha_star();
  const HP dev = boost::multiprecision::abs(f_hp(a) - hp_sqrt_phi());
  const double at_double = f_of(constants().alpha_star);
  CheckReport rep;
  rep.check_id = "f_endpoint";
  rep.grid_size = 1;
  rep.data.push_back({static_cast<double>(a), static_cast<double>(f_hp(a)), static_cast<double>(dev)});
  rep.secondary.push_back({constants().alpha_star, at_double, std::abs(at_double - constants().sqrt_phi)});
  rep.worst_margin = kHpTolerance - static_cast<double>(dev);
  rep.verdict = dev <= kHpTolerance ? CheckVerdict::pass : CheckVerdict::fail;
  rep.note =
      "f(alpha*) = sqrt(phi), the only equality on [alpha*, pi/4]; 50-digit evaluation (secondary: double "
      "evaluation at the rounded alpha*, off by ~sqrt(eps) since x2 = 1 there)";
  return rep;
}

CheckReport f_monotonicity_check(int grid, Backend backend) {
  if (grid < 16) return inconclusive_report("f_monotonicity", grid, "grid below 16: guards too coarse");
  const double split = 7.0 * kPi / 32.0;
  const double lo1 = alpha_star_lo();
  const double hi1 = up(split, 2);
  const double lo2 = down(split, 2);
  const double hi2 = up(kPi / 4.0, 2);

  struct Result {
    GuardedScalar q;
    GuardedScalar f;
    GuardedScalar deriv;
    bool ok = true;
  };
  auto one = [&](std::size_t k) {
    Result out;
    const bool first = k < static_cast<std::size_t>(grid);
    const std::size_t i = first ? k : k - static_cast<std::size_t>(grid);
    const GuardedScalar alpha = first ? cell(lo1, hi1, grid, i) : cell(lo2, hi2, grid, i);
    try {
      out.f = f_of(alpha);
      if (first) {
        out.deriv = f_derivative_numerator(alpha);
        out.q = -out.deriv;
      } else {
        out.q = g_sqrt_phi() - out.f;
      }
    } catch (const std::domain_error&) {
      out.ok = false;
    }
    return out;
  };
  const auto res = map_indices(2 * static_cast<std::size_t>(grid), backend, one);

  CheckReport rep;
  rep.check_id = "f_monotonicity";
  rep.grid_size = grid;
  Tally total;
  for (std::size_t k = 0; k < res.size(); ++k) {
    const bool first = k < static_cast<std::size_t>(grid);
    const std::size_t i = first ? k : k - static_cast<std::size_t>(grid);
    const double mid = first ? cell(lo1, hi1, grid, i).value() : cell(lo2, hi2, grid, i).value();
    if (!res[k].ok) {
      total.add_unknown();
      continue;
    }
    total.add(res[k].q);
    rep.data.push_back(sample(mid, res[k].f));
    if (first) rep.secondary.push_back(sample(mid, res[k].deriv));
  }
  rep.data = thin(rep.data);
  rep.secondary = thin(rep.secondary);
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note =
      "f' < 0 on [alpha*, 7pi/32] via the sign of f' sqrt(x1^2-1) sqrt(x2^2-1) (secondary); f < sqrt(phi) on "
      "[7pi/32, pi/4]; data: f";
  return rep;
}

double G_of(double x2, double a) {
  const double x1 = a - l_of(x2);
  const double x4 = a - l_of(a - x2);
  return l_of(x1) + kSqrt2 + l_of(x4) - a;
}

GPartials g_partials(const GuardedScalar& x2, const GuardedScalar& x3) {
  const GuardedScalar a = x2 + x3;
  const GuardedScalar x1 = a - l_of(x2);
  const GuardedScalar x4 = a - l_of(x3);
  const GuardedScalar d1 = l_prime(x1), d2 = l_prime(x2), d3 = l_prime(x3), d4 = l_prime(x4);
  const GuardedScalar s1 = l_second(x1), s2 = l_second(x2), s3 = l_second(x3), s4 = l_second(x4);
  const GuardedScalar e3 = 1.0 - d3;  // d x4 / d a
  GPartials p;
  p.g = l_of(x1) + g_sqrt2() + l_of(x4) - a;
  p.gx = d4 * d3 - d1 * d2;
  p.ga = d1 + d4 * e3 - 1.0;
  p.gxx = s1 * d2 * d2 - d1 * s2 + s4 * d3 * d3 - d4 * s3;
  p.gxa = s4 * d3 * e3 - s1 * d2 + d4 * s3;
  p.gaa = s1 + s4 * e3 * e3 - d4 * s3;
  return p;
}

GuardedScalar implicit_first_derivative(const GPartials& p) { return -p.gx / p.ga; }

GuardedScalar implicit_second_derivative(const GPartials& p) {
  const GuardedScalar num = p.gxx * p.ga * p.ga - 2.0 * p.gxa * p.gx * p.ga + p.gaa * p.gx * p.gx;
  return -num / (p.ga * p.ga * p.ga);
}

double solve_a(double x2) {
  double lo = x2 + 1.0;
  double hi = constants().sbd5;
  if (!(lo <= hi)) throw std::domain_error("solve_a: x2 beyond xbar");
  if (lo == hi) return hi;  // x2 = xbar
  if (G_of(x2, lo) < 0.0 || G_of(x2, hi) > 0.0) throw std::domain_error("solve_a: no sign change");
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (G_of(x2, mid) > 0.0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

double symmetric_point() {
  double lo = 1.0;
  double hi = 0.5 * constants().sbd5;
  if (G_of(lo, 2.0 * lo) < 0.0 || G_of(hi, 2.0 * hi) > 0.0) throw std::domain_error("symmetric_point: no sign change");
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (G_of(mid, 2.0 * mid) > 0.0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

CheckReport g_root_check() {
  const HP xb = hp_xbar();
  const HP g = g_hp(xb, HP(1 + xb));
  const double dev = static_cast<double>(boost::multiprecision::abs(g));
  const double xbar = constants().xbar;
  CheckReport rep;
  rep.check_id = "g_root_at_xbar";
  rep.grid_size = 1;
  rep.data.push_back({static_cast<double>(xb), static_cast<double>(g), dev});
  rep.secondary.push_back({xbar, G_of(xbar, 1.0 + xbar), 0.0});
  constexpr double tol = 1e-10;
  rep.worst_margin = tol - dev;
  rep.verdict = dev <= tol ? CheckVerdict::pass : CheckVerdict::fail;
  rep.note = "G(xbar, 1 + xbar) in 50-digit arithmetic (secondary: double evaluation, where a - x2 = 1 up to rounding)";
  return rep;
}

namespace {

struct CurvePoint {
  bool ok = false;
  double x2 = 0.0;
  GuardedScalar d2;
};

// Rigorous curve point with x3 fixed exactly: bracket x2 where G(x2, x2 + x3)
// changes sign (it decreases in x2), then evaluate d2a on the bracket.
CurvePoint curve_point(double x2_guess, double x3) {
  CurvePoint out;
  const GuardedScalar g3(x3);
  double w = 1e-13;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (int attempt = 0; attempt < 12 && !bracketed; ++attempt, w *= 8.0) {
    lo = x2_guess - w;
    hi = x2_guess + w;
    try {
      bracketed = g_value(GuardedScalar(lo), g3).certainly_positive() && g_value(GuardedScalar(hi), g3).certainly_negative();
    } catch (const std::domain_error&) {
      bracketed = false;
    }
  }
  if (!bracketed) return out;
  for (int it = 0; it < 80; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const Sign s = g_value(GuardedScalar(mid), g3).sign();
    if (s == Sign::positive) {
      lo = mid;
    } else if (s == Sign::negative) {
      hi = mid;
    } else {
      break;
    }
  }
  try {
    out.d2 = implicit_second_derivative(g_partials(GuardedScalar::from_interval(lo, hi), g3));
    out.x2 = lo + 0.5 * (hi - lo);
    out.ok = true;
  } catch (const std::domain_error&) {
    out.ok = false;
  }
  return out;
}

// Second derivative of the solved a(x2) by finite differences: central where
// x2 + h stays below xbar, second-order backward otherwise.
double finite_difference_d2(double x2, double xbar) {
  constexpr double h = 1e-4;
  if (x2 + h < xbar) return (solve_a(x2 + h) - 2.0 * solve_a(x2) + solve_a(x2 - h)) / (h * h);
  return (2.0 * solve_a(x2) - 5.0 * solve_a(x2 - h) + 4.0 * solve_a(x2 - 2.0 * h) - solve_a(x2 - 3.0 * h)) / (h * h);
}

}  // namespace

CheckReport second_derivative_check(int grid, Backend backend) {
  if (grid < 16) return inconclusive_report("second_derivative", grid, "grid below 16");
  const double xbar = constants().xbar;
  double xs = 0.0;
  try {
    xs = symmetric_point();
  } catch (const std::domain_error&) {
    return inconclusive_report("second_derivative", grid, "symmetric point not bracketed");
  }

  struct Node {
    bool excluded = false;
    bool solved = false;
    CurvePoint cp;
    double fd = 0.0;
  };
  auto one = [&](std::size_t i) {
    Node out;
    const double x2 = i == static_cast<std::size_t>(grid) ? xbar : xs + (xbar - xs) * static_cast<double>(i) / grid;
    double a = 0.0;
    try {
      a = solve_a(x2);
      out.fd = finite_difference_d2(x2, xbar);
    } catch (const std::domain_error&) {
      return out;
    }
    out.solved = true;
    const double x3 = a - x2;  // exact: a and x2 are within a factor 2
    if (x3 - 1.0 < kSingularExclusion) {
      out.excluded = true;
      return out;
    }
    out.cp = curve_point(x2, x3);
    return out;
  };
  const auto nodes = map_indices(static_cast<std::size_t>(grid) + 1, backend, one);

  CheckReport rep;
  rep.check_id = "second_derivative";
  rep.grid_size = grid;
  Tally total;
  double worst_fd = 0.0;
  int excluded = 0;
  for (const Node& n : nodes) {
    if (!n.solved) {
      total.add_unknown();
      continue;
    }
    if (n.excluded) {
      ++excluded;
      continue;
    }
    if (!n.cp.ok) {
      total.add_unknown();
      continue;
    }
    total.add(n.cp.d2);
    const double rel = std::abs(n.fd - n.cp.d2.value()) / std::abs(n.cp.d2.value());
    worst_fd = std::max(worst_fd, rel);
    if (rel > 1e-4) total.fail(-rel);
    rep.data.push_back(sample(n.cp.x2, n.cp.d2));
    rep.secondary.push_back({n.cp.x2, n.fd, std::abs(n.fd - n.cp.d2.value())});
  }

  // Limit towards xbar, where x3 -> 1: certify at x3 = 1 + 2^-k.
  for (int k : {30, 35, 40}) {
    const double x3 = 1.0 + std::ldexp(1.0, -k);
    // x3 - 1 ~ c (xbar - x2)^2, so the matching x2 sits close below xbar.
    double lo = xs;
    double hi = xbar;
    for (int it = 0; it < 200; ++it) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      double g = 0.0;
      try {
        g = G_of(mid, mid + x3);
      } catch (const std::domain_error&) {
        g = -1.0;
      }
      (g > 0.0 ? lo : hi) = mid;
    }
    const CurvePoint cp = curve_point(lo + 0.5 * (hi - lo), x3);
    if (!cp.ok) {
      total.add_unknown();
      continue;
    }
    total.add(cp.d2);
    rep.data.push_back(sample(cp.x2, cp.d2));
  }

  // The curve ends at (xbar, 1 + xbar).
  const double a_end = solve_a(xbar);
  if (std::abs(a_end - constants().sbd5) > 1e-9) total.fail(-std::abs(a_end - constants().sbd5));

  std::sort(rep.data.begin(), rep.data.end(), [](const CheckSample& a, const CheckSample& b) { return a.x < b.x; });
  rep.data = thin(rep.data);
  rep.secondary = thin(rep.secondary);
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note = "d2a/dx2^2 on [" + std::to_string(xs) + ", xbar] (symmetric point to xbar); " + std::to_string(excluded) +
             " node(s) with a - x2 within 1e-9 of 1 replaced by limit points; worst finite-difference deviation " +
             std::to_string(worst_fd) + " (secondary)";
  return rep;
}

CheckReport symmetric_slope_check() {
  CheckReport rep;
  rep.check_id = "symmetric_slope";
  rep.grid_size = 1;
  double xs = 0.0;
  try {
    xs = symmetric_point();
  } catch (const std::domain_error&) {
    return inconclusive_report("symmetric_slope", 1, "symmetric point not bracketed");
  }
  // The bracket of the root of G(x, 2x); on it x2 = x3, so G_x2 vanishes.
  const GuardedScalar x = GuardedScalar::from_interval(down(xs, 4), up(xs, 4));
  const GuardedScalar da = implicit_first_derivative(g_partials(x, x));
  const double bound = std::max(std::abs(da.lower()), std::abs(da.upper()));
  rep.data.push_back(sample(xs, da));
  // Slope at the midpoint of [1, xbar], for reference.
  const double mid = 0.5 * (1.0 + constants().xbar);
  const double a_mid = solve_a(mid);
  const GuardedScalar da_mid = implicit_first_derivative(g_partials(GuardedScalar(mid), GuardedScalar(a_mid - mid)));
  rep.secondary.push_back(sample(mid, da_mid));
  constexpr double tol = 1e-8;
  rep.worst_margin = tol - bound;
  rep.verdict = bound <= tol ? CheckVerdict::pass : CheckVerdict::fail;
  rep.note = "da/dx2 = 0 where x2 = a - x2 (x2 = " + std::to_string(xs) + ", a = " + std::to_string(2.0 * xs) +
             "); secondary: slope at (1 + xbar)/2";
  return rep;
}

double xbar_solve() {
  const double target = kSqrt2 - 1.0;
  auto h = [&](double x) { return x * std::sqrt((x - 1.0) * (x + 1.0)) - target; };
  double lo = 1.0;
  double hi = kSqrt2;
  while (hi - lo > 1e-15) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

CheckReport xbar_check(int cells) {
  if (cells < 1) return inconclusive_report("xbar", cells, "need at least one cell");
  CheckReport rep;
  rep.check_id = "xbar";
  rep.grid_size = cells;
  Tally total;
  const double x = xbar_solve();
  const double closed = xbar_closed_form();
  const double dev = std::abs(x - closed);
  const double residual = std::abs(x + 1.0 - l_of(x) - kSqrt2);
  if (dev > 1e-12) total.fail(1e-12 - dev);
  if (residual > 1e-12) total.fail(1e-12 - residual);
  if (!(1.0 + x >= 2.0720 && 1.0 + x <= 2.0721)) total.fail(-1.0);
  // Uniqueness: x sqrt(x^2 - 1) has derivative (2x^2 - 1) / sqrt(x^2 - 1) > 0
  // and changes sign once between the endpoints.
  const GuardedScalar target = g_sqrt2() - 1.0;
  total.add(target);                                      // h(1) = -target < 0
  total.add(g_sqrt2() * 1.0 - target);                    // h(sqrt 2) > 0
  for (int i = 0; i < cells; ++i) {
    const GuardedScalar c = cell(1.0, kSqrt2, cells, static_cast<std::size_t>(i));
    total.add(2.0 * square(c) - 1.0);
  }
  rep.data.push_back({x, closed, dev});
  rep.secondary.push_back({x, residual, 0.0});
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note = "bisection vs closed form; 1 + xbar = " + std::to_string(1.0 + x);
  return rep;
}

CheckReport lshape_monotonicity_check(int cells, Backend backend) {
  if (cells < 1) return inconclusive_report("lshape_monotonicity", cells, "need at least one cell");
  struct Result {
    Tally tally;
    GuardedScalar l, sum;
  };
  auto one = [&](std::size_t i) {
    Result out;
    const GuardedScalar x = cell(1.0, kSqrt2, cells, i);
    const GuardedScalar r = sqrt_nonneg(radicand(x));
    const GuardedScalar x2 = square(x);
    out.tally.add(-l_prime_numerator(x));             // l decreasing
    out.tally.add(2.0 * x2 - 1.0 - 2.0 * r);           // x + l(x) decreasing
    out.tally.add(2.0 * x2 - 1.0);                     // x - l(x) = x r increasing
    out.l = l_of(x);
    out.sum = x + out.l;
    return out;
  };
  const auto res = map_indices(static_cast<std::size_t>(cells), backend, one);
  CheckReport rep;
  rep.check_id = "lshape_monotonicity";
  rep.grid_size = cells;
  Tally total;
  for (std::size_t i = 0; i < res.size(); ++i) {
    total.merge(res[i].tally);
    const double mid = cell(1.0, kSqrt2, cells, i).value();
    rep.data.push_back(sample(mid, res[i].l));
    rep.secondary.push_back(sample(mid, res[i].sum));
  }
  rep.data = thin(rep.data);
  rep.secondary = thin(rep.secondary);
  rep.verdict = total.verdict();
  rep.worst_margin = total.worst;
  rep.note = "derivative numerators over [1, sqrt 2]; data: l, secondary: x + l(x)";
  return rep;
}

CheckReport triangle_in_parallelogram_check(std::uint64_t seed, Backend backend) {
  // A unit-area parallelogram is an affine image of the unit square, and
  // affine maps scale all areas alike, so the unit square suffices.
  constexpr int per_side = 64;
  constexpr int random_triangles = 100000;
  std::vector<Point> pts;
  for (int side = 0; side < 4; ++side) {
    for (int k = 0; k < per_side; ++k) {
      const double t = static_cast<double>(k) / per_side;
      switch (side) {
        case 0: pts.push_back({t, 0.0}); break;
        case 1: pts.push_back({1.0, t}); break;
        case 2: pts.push_back({1.0 - t, 1.0}); break;
        default: pts.push_back({0.0, 1.0 - t});
      }
    }
  }
  auto area = [](Point a, Point b, Point c) {
    return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
  };
  const auto grid_best = map_indices(pts.size(), backend, [&](std::size_t i) {
    double best = 0.0;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) best = std::max(best, area(pts[i], pts[j], pts[k]));
    }
    return best;
  });
  const auto random_best = map_indices(random_triangles, backend, [&](std::size_t i) {
    auto p = [&](int v) {
      return Point{sample_uniform(seed, 2 * i + (v == 2), 2 * (v % 2)),
                   sample_uniform(seed, 2 * i + (v == 2), 2 * (v % 2) + 1)};
    };
    return area(p(0), p(1), p(2));
  });
  const double g = *std::max_element(grid_best.begin(), grid_best.end());
  const double r = *std::max_element(random_best.begin(), random_best.end());
  const double best = std::max(g, r);

  CheckReport rep;
  rep.check_id = "triangle_in_parallelogram";
  rep.grid_size = per_side;
  rep.data = {{0.0, g, 0.0}, {1.0, r, 0.0}};
  constexpr double tol = 1e-9;
  const bool bounded = best <= 0.5 + tol;
  const bool attained = g >= 0.5 - 1e-15;
  rep.worst_margin = 0.5 + tol - best;
  rep.verdict = bounded && attained ? CheckVerdict::pass : CheckVerdict::fail;
  rep.note = "max triangle area in the unit square: boundary grid (data[0]) and 1e5 random triangles (data[1])";
  return rep;
}

std::vector<CheckReport> run_all_checks(int grid, Backend backend) {
  std::vector<CheckReport> out;
  out.push_back(ineq2_check(grid, backend));
  out.push_back(a1a2_check(std::max(grid, 1024), backend));
  out.push_back(f_symmetry_check(grid));
  out.push_back(f_endpoint_check());
  out.push_back(f_monotonicity_check(grid, backend));
  out.push_back(g_root_check());
  out.push_back(second_derivative_check(grid, backend));
  out.push_back(symmetric_slope_check());
  out.push_back(xbar_check(1024));
  out.push_back(lshape_monotonicity_check(std::max(grid, 1024), backend));
  out.push_back(triangle_in_parallelogram_check(1, backend));
  return out;
}

bool aggregate_pass(const std::vector<CheckReport>& reports) {
  return !reports.empty() && std::all_of(reports.begin(), reports.end(),
                                         [](const CheckReport& r) { return r.verdict == CheckVerdict::pass; });
}

}  // namespace sqcover
