// sqcover: construct, verify, optimize and render unit-square coverings, and
// re-run the numeric checks behind the optimal ones.
//
// Exit codes: 0 covered / pass, 1 gap / fail, 2 undecided / inconclusive,
// 3 usage or input error.

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "sqcover/constants.hpp"
#include "sqcover/constructions.hpp"
#include "sqcover/io.hpp"
#include "sqcover/optimize.hpp"
#include "sqcover/paper_checks.hpp"
#include "sqcover/svg.hpp"
#include "sqcover/verify.hpp"

namespace {

using namespace sqcover;

constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::covered: return 0;
    case Verdict::gap: return 1;
    case Verdict::undecided: return 2;
  }
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Configuration load_config(const std::string& path) {
  try {
    return parse_config(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + std::string(to_string(e.code())) + ": " + e.what());
  }
}

CoverMode mode_of(const std::string& s) { return s == "boundary" ? CoverMode::boundary : CoverMode::interior; }

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

// One row of the known-values table.
struct Row {
  std::string s, sbd, form, provenance;
};

Row table_row(int n) {
  Row r{"-", "-", "-", "open"};
  if (n <= 5) r.s = fixed(s_closed_form(n));
  if (n == 1 || n == 2) {
    r.sbd = fixed(1.0);
    r.form = "1";
    r.provenance = n == 1 ? "trivial" : "proven: one square must be a translate of the target";
  } else if (n == 3) {
    r.sbd = fixed(constants().sqrt_phi);
    r.form = "sqrt(phi)";
    r.provenance = "proven: equals the interior optimum";
  } else if (n % 4 == 0 || n % 4 == 1) {
    int k = (n - 4) / 4;
    r.sbd = fixed(sbd_closed_form(n));
    std::string base = n % 4 == 0 ? "2" : "1+xbar";
    r.form = k == 0 ? base : k == 1 ? base + "+sqrt2" : base + "+" + std::to_string(k) + "sqrt2";
    if (k == 0) {
      r.provenance = n == 4 ? "proven: four corner squares" : "proven: tilted L-shape optimum";
    } else {
      r.provenance = "recurrence: S_bd(" + std::to_string(n - 4) + ")+sqrt2";
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-square coverings of a square and of its boundary"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)")->check(CLI::NonNegativeNumber);

  // construct
  auto* construct = app.add_subcommand("construct", "Emit an optimal covering as JSON");
  int c_n = 0;
  std::string c_mode = "interior";
  std::string c_out, c_svg;
  construct->add_option("--n", c_n, "number of squares")->required();
  construct->add_option("--mode", c_mode, "interior | boundary")->required()->check(CLI::IsMember({"interior", "boundary"}));
  construct->add_option("--out", c_out, "write the config here instead of stdout");
  construct->add_option("--svg", c_svg, "also render to this SVG file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Certify a configuration");
  std::string v_cfg, v_svg;
  std::string v_mode = "interior";
  VerifyOptions v_opt;
  bool v_serial = false;
  verify_cmd->add_option("CFG", v_cfg, "config JSON")->required()->check(CLI::ExistingFile);
  auto* v_mode_opt =
      verify_cmd->add_option("--mode", v_mode, "override the config's mode")->check(CLI::IsMember({"interior", "boundary"}));
  verify_cmd->add_option("--depth", v_opt.max_depth, "quadtree depth")->check(CLI::Range(0, 40));
  verify_cmd->add_option("--margin", v_opt.margin, "strict-mode margin")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--tight", v_opt.tight, "tolerance mode (1e-9)");
  verify_cmd->add_flag("--serial", v_serial, "use the serial reference kernels");
  verify_cmd->add_option("--svg", v_svg, "render the configuration with witnesses");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Search for the largest coverable edge");
  int o_n = 0;
  std::string o_mode = "interior";
  SearchParams o_params;
  std::string o_out, o_svg;
  optimize->add_option("--n", o_n, "number of squares")->required()->check(CLI::PositiveNumber);
  optimize->add_option("--mode", o_mode, "interior | boundary")->required()->check(CLI::IsMember({"interior", "boundary"}));
  optimize->add_option("--seed", o_params.seed, "RNG seed")->required();
  optimize->add_option("--restarts", o_params.restarts, "restarts per probed edge");
  optimize->add_option("--budget", o_params.time_budget_s, "wall-clock budget in seconds");
  optimize->add_option("--iterations", o_params.inner_iterations, "objective evaluations per local search");
  optimize->add_flag("--warm", o_params.warm_start, "seed restarts from the known constructions");
  optimize->add_option("--out", o_out, "write the best config here");
  optimize->add_option("--svg", o_svg, "render the best config");

  // check-paper
  auto* check = app.add_subcommand("check-paper", "Re-certify the numeric facts behind the optimal coverings");
  int k_grid = 4096;
  std::string k_report, k_svg_dir;
  check->add_option("--grid", k_grid, "grid size")->check(CLI::PositiveNumber);
  check->add_option("--report", k_report, "write all reports as a JSON array");
  check->add_option("--svg-dir", k_svg_dir, "write one plot per check into this directory");

  // table
  auto* table = app.add_subcommand("table", "Known optimal edges");
  int t_max = 13;
  table->add_option("--max-n", t_max, "largest n")->check(CLI::Range(1, 10000));

  // render
  auto* render = app.add_subcommand("render", "Render a configuration as SVG");
  std::string r_cfg, r_svg;
  render->add_option("CFG", r_cfg, "config JSON")->required()->check(CLI::ExistingFile);
  render->add_option("--svg", r_svg, "output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*construct) {
      Configuration cfg = mode_of(c_mode) == CoverMode::interior ? construct_interior(c_n) : construct_boundary(c_n);
      std::string text = serialize_config(cfg);
      if (c_out.empty()) {
        std::cout << text;
      } else {
        write_file(c_out, text);
      }
      if (!c_svg.empty()) write_file(c_svg, render_svg(cfg));
      return 0;
    }

    if (*verify_cmd) {
      Configuration cfg = load_config(v_cfg);
      if (v_mode_opt->count()) cfg.mode = mode_of(v_mode);
      if (v_serial) v_opt.backend = Backend::serial;
      if (cfg.mode == CoverMode::boundary) {
        BoundaryResult res = verify_boundary(cfg, v_opt);
        std::cout << serialize_certificate(res.certificate, &res.gaps);
        if (!v_svg.empty()) write_file(v_svg, render_svg(cfg, &res.certificate, &res.gaps));
        return exit_code(res.certificate.verdict);
      }
      CoverageCertificate cert = verify_interior(cfg, v_opt);
      std::cout << serialize_certificate(cert);
      if (!v_svg.empty()) write_file(v_svg, render_svg(cfg, &cert));
      return exit_code(cert.verdict);
    }

    if (*optimize) {
      o_params.validate();
      SearchResult res = max_edge_search(o_n, mode_of(o_mode), o_params);
      std::cout << serialize_search_result(res);
      if (!o_out.empty()) write_file(o_out, serialize_config(res.config));
      if (!o_svg.empty()) write_file(o_svg, render_svg(res.config, &res.certificate));
      return exit_code(res.certificate.verdict);
    }

    if (*check) {
      std::vector<CheckReport> reports = run_all_checks(k_grid);
      bool any_fail = false, any_open = false;
      for (const auto& r : reports) {
        std::printf("%-28s %-12s grid=%-6d worst_margin=%.6e\n", r.check_id.c_str(),
                    std::string(to_string(r.verdict)).c_str(), r.grid_size, r.worst_margin);
        any_fail = any_fail || r.verdict == CheckVerdict::fail;
        any_open = any_open || r.verdict == CheckVerdict::inconclusive;
      }
      std::printf("aggregate: %s\n", aggregate_pass(reports) ? "pass" : "fail");
      if (!k_report.empty()) write_file(k_report, serialize_reports(reports));
      if (!k_svg_dir.empty()) {
        std::filesystem::create_directories(k_svg_dir);
        for (const auto& r : reports) {
          write_file((std::filesystem::path(k_svg_dir) / (r.check_id + ".svg")).string(), render_report_svg(r));
        }
      }
      return any_fail ? 1 : any_open ? 2 : 0;
    }

    if (*table) {
      std::printf("%-4s %-14s %-14s %-14s %s\n", "n", "S(n)", "S_bd(n)", "S_bd form", "provenance");
      for (int n = 1; n <= t_max; ++n) {
        Row r = table_row(n);
        std::printf("%-4d %-14s %-14s %-14s %s\n", n, r.s.c_str(), r.sbd.c_str(), r.form.c_str(),
                    r.provenance.c_str());
      }
      return 0;
    }

    if (*render) {
      write_file(r_svg, render_svg(load_config(r_cfg)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
