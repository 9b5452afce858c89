// Experiment harness: Toeplitz systems with random-phase Wiener-class
// symbols, solved by (preconditioned) conjugate gradients, plus spectral
// diagnostics. Emits deterministic CSV and optional SVG plots.
#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "randtoeplitz.h"

namespace {

struct Config {
  std::uint64_t seed = 20240101;
  double tol = 1e-10;
  std::string even_rule = "average";
  std::string rhs = "ones";
  std::string phases = "random";
  std::string out;
  std::string svg;
  std::size_t n = 65;
  std::size_t m_min = 10;
  std::size_t m_max = 120;
  std::size_t trials = 0;  // per-command default applied in main
  std::uint64_t trial = 1;
  double epsilon = 0.05;
};

int even_rule_code(const Config& cfg) {
  return cfg.even_rule == "zero" ? RTZ_EVEN_RULE_ZERO : RTZ_EVEN_RULE_AVERAGE;
}

[[noreturn]] void die(const std::string& msg, int code) {
  std::fprintf(stderr, "rtz: %s\n", msg.c_str());
  std::exit(code);
}

void check_status(rtz_status st, const std::string& what) {
  if (st != RTZ_OK) die(what + ": " + rtz_last_error(), 2);
}

void write_file(const std::string& path, const std::string& data) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) die("cannot open output file " + path, 2);
  std::fwrite(data.data(), 1, data.size(), f);
  std::fclose(f);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One realized system: coefficients with bandwidth n-1, T, Strang S.
struct Instance {
  rtz_coeffs* c = nullptr;
  rtz_toeplitz* t = nullptr;
  rtz_circulant* s = nullptr;

  Instance(const Config& cfg, std::size_t n, std::uint64_t trial) {
    rtz_model* model = nullptr;
    check_status(rtz_model_create(cfg.seed, n - 1, 1.1,
                                  cfg.phases == "zero" ? 1 : 0, &model),
                 "model");
    check_status(rtz_model_realize(model, trial, &c), "realize");
    rtz_model_free(model);
    check_status(rtz_toeplitz_create(c, n, &t), "toeplitz");
    check_status(rtz_strang_create(c, n, even_rule_code(cfg), &s), "strang");
  }
  ~Instance() {
    rtz_circulant_free(s);
    rtz_toeplitz_free(t);
    rtz_coeffs_free(c);
  }
};

std::vector<double> make_rhs_for(const Config& cfg, std::size_t n) {
  std::vector<double> b(2 * n);
  const int kind =
      cfg.rhs == "ones" ? RTZ_RHS_ONES : RTZ_RHS_SEEDED_RANDOM;
  check_status(rtz_make_rhs(n, kind, cfg.seed, b.data()), "rhs");
  return b;
}

// Returns the iteration count, or -1 when the trial failed (library error or
// non-convergence). Sweeps keep going either way.
long run_one(const Config& cfg, rtz_toeplitz* t, rtz_circulant* s,
             const std::vector<double>& b, std::uint64_t trial,
             const char* method) {
  rtz_solve_report* rep = nullptr;
  const rtz_status st = rtz_pcg_solve(t, s, b.data(), cfg.tol, 0,
                                      RTZ_INDEFINITE_CONTINUE, &rep);
  if (st != RTZ_OK) {
    std::fprintf(stderr, "rtz: warning: trial %" PRIu64 " %s failed: %s\n",
                 trial, method, rtz_last_error());
    return -1;
  }
  int converged = 0;
  size_t iters = 0;
  rtz_solve_report_converged(rep, &converged);
  rtz_solve_report_iterations(rep, &iters);
  rtz_solve_report_free(rep);
  if (!converged) {
    std::fprintf(stderr,
                 "rtz: warning: trial %" PRIu64 " %s hit the iteration cap\n",
                 trial, method);
    return -1;
  }
  return static_cast<long>(iters);
}

// ---- SVG emission ----------------------------------------------------------

struct Series {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> pts;
};

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string render_svg(const std::vector<Series>& series,
                       const std::string& xlabel, const std::string& ylabel,
                       bool scatter) {
  const double W = 800, H = 500, L = 70, R = 170, T = 30, B = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  bool any = false;
  for (const Series& s : series) {
    for (auto [x, y] : s.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      any = true;
    }
  }
  if (!any) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double xpad = 0.05 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;
  auto px = [&](double x) {
    return L + (x - xmin) / (xmax - xmin) * (W - L - R);
  };
  auto py = [&](double y) {
    return H - B - (y - ymin) / (ymax - ymin) * (H - T - B);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"500\" viewBox=\"0 0 800 500\">\n";
  svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  // axes
  svg += "<line x1=\"" + fmt6(L) + "\" y1=\"" + fmt6(H - B) + "\" x2=\"" +
         fmt6(W - R) + "\" y2=\"" + fmt6(H - B) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt6(L) + "\" y1=\"" + fmt6(T) + "\" x2=\"" +
         fmt6(L) + "\" y2=\"" + fmt6(H - B) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // ticks
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    svg += "<text x=\"" + fmt6(px(fx)) + "\" y=\"" + fmt6(H - B + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + fmt6(fx) +
           "</text>\n";
    svg += "<text x=\"" + fmt6(L - 8) + "\" y=\"" + fmt6(py(fy) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt6(fy) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt6((L + W - R) / 2) + "\" y=\"" + fmt6(H - 12) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt6((T + H - B) / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 " +
         fmt6((T + H - B) / 2) + ")\">" + ylabel + "</text>\n";

  double legend_y = T + 10;
  for (const Series& s : series) {
    if (scatter) {
      for (auto [x, y] : s.pts) {
        svg += "<circle cx=\"" + fmt6(px(x)) + "\" cy=\"" + fmt6(py(y)) +
               "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
      }
    } else {
      std::string poly;
      for (auto [x, y] : s.pts) {
        poly += fmt6(px(x)) + "," + fmt6(py(y)) + " ";
      }
      if (!poly.empty()) poly.pop_back();
      svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" +
             s.color + "\" stroke-width=\"1.5\"/>\n";
    }
    svg += "<line x1=\"" + fmt6(W - R + 15) + "\" y1=\"" + fmt6(legend_y) +
           "\" x2=\"" + fmt6(W - R + 40) + "\" y2=\"" + fmt6(legend_y) +
           "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt6(W - R + 46) + "\" y=\"" + fmt6(legend_y + 4) +
           "\" font-size=\"12\">" + s.name + "</text>\n";
    legend_y += 20;
  }
  svg += "</svg>\n";
  return svg;
}

// ---- commands --------------------------------------------------------------

int cmd_fig1(const Config& cfg) {
  const std::vector<double> b = make_rhs_for(cfg, cfg.n);
  std::string csv = "t,iter_cg,iter_pcg\n";
  Series cg_series{"cg", "#d62728", {}}, pcg_series{"pcg", "#1f77b4", {}};
  double cg_sum = 0, pcg_sum = 0;
  std::size_t cg_ok = 0, pcg_ok = 0;
  for (std::uint64_t t = 1; t <= cfg.trials; ++t) {
    Instance inst(cfg, cfg.n, t);
    const long icg = run_one(cfg, inst.t, nullptr, b, t, "cg");
    const long ipcg = run_one(cfg, inst.t, inst.s, b, t, "pcg");
    csv += std::to_string(t) + "," + std::to_string(icg) + "," +
           std::to_string(ipcg) + "\n";
    if (icg >= 0) {
      cg_sum += icg;
      ++cg_ok;
      cg_series.pts.emplace_back(double(t), double(icg));
    }
    if (ipcg >= 0) {
      pcg_sum += ipcg;
      ++pcg_ok;
      pcg_series.pts.emplace_back(double(t), double(ipcg));
    }
  }
  write_file(cfg.out, csv);
  if (!cfg.svg.empty()) {
    write_file(cfg.svg,
               render_svg({cg_series, pcg_series}, "t", "iterations", false));
  }
  std::printf("fig1 n=%zu trials=%zu: mean_iter_cg=%s (failed %zu), "
              "mean_iter_pcg=%s (failed %zu)\n",
              cfg.n, cfg.trials,
              cg_ok ? fmt6(cg_sum / cg_ok).c_str() : "n/a",
              cfg.trials - cg_ok,
              pcg_ok ? fmt6(pcg_sum / pcg_ok).c_str() : "n/a",
              cfg.trials - pcg_ok);
  return 0;
}

int cmd_fig2(const Config& cfg) {
  std::string csv = "n,avg_iter_cg,avg_iter_pcg\n";
  Series cg_series{"cg", "#d62728", {}}, pcg_series{"pcg", "#1f77b4", {}};
  std::size_t failures = 0;
  for (std::size_t m = cfg.m_min; m <= cfg.m_max; ++m) {
    const std::size_t n = 2 * m + 1;
    const std::vector<double> b = make_rhs_for(cfg, n);
    double cg_sum = 0, pcg_sum = 0;
    std::size_t cg_ok = 0, pcg_ok = 0;
    for (std::uint64_t t = 1; t <= cfg.trials; ++t) {
      Instance inst(cfg, n, t);
      const long icg = run_one(cfg, inst.t, nullptr, b, t, "cg");
      const long ipcg = run_one(cfg, inst.t, inst.s, b, t, "pcg");
      if (icg >= 0) {
        cg_sum += icg;
        ++cg_ok;
      } else {
        ++failures;
      }
      if (ipcg >= 0) {
        pcg_sum += ipcg;
        ++pcg_ok;
      } else {
        ++failures;
      }
    }
    const double cg_avg = cg_ok ? cg_sum / cg_ok : -1.0;
    const double pcg_avg = pcg_ok ? pcg_sum / pcg_ok : -1.0;
    csv += std::to_string(n) + "," + fmt(cg_avg) + "," + fmt(pcg_avg) + "\n";
    if (cg_ok) cg_series.pts.emplace_back(double(n), cg_avg);
    if (pcg_ok) pcg_series.pts.emplace_back(double(n), pcg_avg);
  }
  write_file(cfg.out, csv);
  if (!cfg.svg.empty()) {
    write_file(cfg.svg, render_svg({cg_series, pcg_series}, "n",
                                   "average iterations", false));
  }
  std::printf("fig2 m=%zu..%zu trials=%zu: %zu failed solves\n", cfg.m_min,
              cfg.m_max, cfg.trials, failures);
  return 0;
}

int cmd_spectrum(const Config& cfg) {
  std::string csv = "t,index,eigenvalue\n";
  Series pts{"spectrum", "#1f77b4", {}};
  std::size_t failures = 0;
  for (std::uint64_t t = 1; t <= cfg.trials; ++t) {
    Instance inst(cfg, cfg.n, t);
    rtz_spectral_report* rep = nullptr;
    const rtz_status st =
        rtz_preconditioned_spectrum(inst.t, inst.s, cfg.epsilon, &rep);
    if (st != RTZ_OK) {
      std::fprintf(stderr, "rtz: warning: trial %" PRIu64 " spectrum failed: %s\n",
                   t, rtz_last_error());
      csv += std::to_string(t) + ",-1,nan\n";
      ++failures;
      continue;
    }
    size_t n = 0, outliers = 0;
    rtz_spectral_report_size(rep, &n);
    rtz_spectral_report_outliers(rep, &outliers);
    std::vector<double> eigs(n);
    rtz_spectral_report_eigenvalues(rep, eigs.data());
    rtz_spectral_report_free(rep);
    for (std::size_t i = 0; i < n; ++i) {
      csv += std::to_string(t) + "," + std::to_string(i + 1) + "," +
             fmt(eigs[i]) + "\n";
      pts.pts.emplace_back(eigs[i], double(t));
    }
    std::printf("spectrum t=%" PRIu64 ": outliers(|lambda-1|>%s)=%zu\n", t,
                fmt6(cfg.epsilon).c_str(), outliers);
  }
  write_file(cfg.out, csv);
  if (!cfg.svg.empty()) {
    write_file(cfg.svg, render_svg({pts}, "eigenvalue", "t", true));
  }
  if (failures) std::printf("spectrum: %zu trials failed\n", failures);
  return 0;
}

int cmd_solve(const Config& cfg) {
  Instance inst(cfg, cfg.n, cfg.trial);
  const std::vector<double> b = make_rhs_for(cfg, cfg.n);
  std::string csv = "method,iter,ratio\n";
  std::vector<Series> series;
  const char* names[2] = {"cg", "pcg"};
  const char* colors[2] = {"#d62728", "#1f77b4"};
  for (int which = 0; which < 2; ++which) {
    rtz_circulant* s = which ? inst.s : nullptr;
    rtz_solve_report* rep = nullptr;
    check_status(rtz_pcg_solve(inst.t, s, b.data(), cfg.tol, 0,
                               RTZ_INDEFINITE_CONTINUE, &rep),
                 names[which]);
    size_t count = 0, iters = 0;
    int converged = 0;
    double true_res = 0;
    rtz_solve_report_residual_count(rep, &count);
    rtz_solve_report_iterations(rep, &iters);
    rtz_solve_report_converged(rep, &converged);
    rtz_solve_report_true_residual(rep, &true_res);
    std::vector<double> ratios(count);
    rtz_solve_report_residuals(rep, ratios.data());
    rtz_solve_report_free(rep);
    Series s_out{names[which], colors[which], {}};
    for (std::size_t i = 0; i < count; ++i) {
      csv += std::string(names[which]) + "," + std::to_string(i) + "," +
             fmt(ratios[i]) + "\n";
      s_out.pts.emplace_back(double(i),
                             std::log10(std::max(ratios[i], 1e-16)));
    }
    series.push_back(std::move(s_out));
    std::printf("%s: iterations=%zu converged=%d true_residual_ratio=%s\n",
                names[which], iters, converged, fmt6(true_res).c_str());
  }
  write_file(cfg.out, csv);
  if (!cfg.svg.empty()) {
    write_file(cfg.svg, render_svg(series, "iteration",
                                   "log10 residual ratio", false));
  }
  return 0;
}

int cmd_equidist(const Config& cfg) {
  std::string csv = "n,test_function,discrepancy\n";
  for (std::size_t n : {33u, 65u, 129u, 257u}) {
    Instance inst(cfg, n, cfg.trial);
    for (unsigned k = 0; k <= 4; ++k) {
      double d = 0.0;
      check_status(rtz_equidist_discrepancy(inst.t, inst.c, RTZ_TEST_MONOMIAL,
                                            double(k), &d),
                   "equidist");
      csv += std::to_string(n) + ",t^" + std::to_string(k) + "," + fmt(d) +
             "\n";
    }
    double x = 0.0;
    check_status(rtz_equidist_default_log_x(inst.t, inst.c, &x), "equidist");
    double dl = 0.0;
    check_status(
        rtz_equidist_discrepancy(inst.t, inst.c, RTZ_TEST_LOG_SHIFT, x, &dl),
        "equidist");
    csv += std::to_string(n) + ",log(1+" + fmt6(x) + "t)," + fmt(dl) + "\n";
  }
  write_file(cfg.out, csv);
  std::printf("equidist: wrote ladder n=33,65,129,257 to %s\n",
              cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Hermitian Toeplitz systems: Strang-preconditioned CG "
               "experiments and spectral diagnostics"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool with_svg = true) {
    sub->add_option("--seed", cfg.seed, "master RNG seed");
    sub->add_option("--tol", cfg.tol, "residual ratio tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--even-rule", cfg.even_rule,
                    "Strang middle entry for even sizes")
        ->check(CLI::IsMember({"zero", "average"}));
    sub->add_option("--rhs", cfg.rhs, "right-hand side kind")
        ->check(CLI::IsMember({"ones", "random"}));
    sub->add_option("--phases", cfg.phases, "coefficient phase mode")
        ->check(CLI::IsMember({"random", "zero"}));
    sub->add_option("--out", cfg.out, "CSV output path");
    if (with_svg) sub->add_option("--svg", cfg.svg, "SVG plot output path");
  };

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "per-trial CG vs PCG iteration counts at fixed n");
  add_common(fig1);
  fig1->add_option("--n", cfg.n, "matrix dimension")->check(CLI::Range(2, 100000));
  fig1->add_option("--trials", cfg.trials, "number of trials")
      ->check(CLI::PositiveNumber);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "trial-averaged iteration counts over the ladder n = 2m+1");
  add_common(fig2);
  fig2->add_option("--m-min", cfg.m_min, "smallest m")->check(CLI::PositiveNumber);
  fig2->add_option("--m-max", cfg.m_max, "largest m")->check(CLI::PositiveNumber);
  fig2->add_option("--trials", cfg.trials, "trials per size")
      ->check(CLI::PositiveNumber);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues of the preconditioned matrix per trial");
  add_common(spectrum);
  spectrum->add_option("--n", cfg.n, "matrix dimension")
      ->check(CLI::Range(2, 1024));
  spectrum->add_option("--trials", cfg.trials, "number of trials")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--epsilon", cfg.epsilon, "outlier threshold around 1")
      ->check(CLI::PositiveNumber);

  CLI::App* solve = app.add_subcommand(
      "solve", "one system end to end with residual traces");
  add_common(solve);
  solve->add_option("--n", cfg.n, "matrix dimension")
      ->check(CLI::Range(2, 100000));
  solve->add_option("--trial", cfg.trial, "trial index of the realization");

  CLI::App* equidist = app.add_subcommand(
      "equidist", "eigenvalue/symbol discrepancies over n = 33..257");
  add_common(equidist, /*with_svg=*/false);
  equidist->add_option("--trial", cfg.trial, "trial index of the realization");

  CLI11_PARSE(app, argc, argv);

  if (fig1->parsed()) {
    if (!cfg.trials) cfg.trials = 100;
    if (cfg.out.empty()) cfg.out = "fig1.csv";
    return cmd_fig1(cfg);
  }
  if (fig2->parsed()) {
    if (!cfg.trials) cfg.trials = 50;
    if (cfg.out.empty()) cfg.out = "fig2.csv";
    if (cfg.m_min > cfg.m_max) die("--m-min must not exceed --m-max", 1);
    return cmd_fig2(cfg);
  }
  if (spectrum->parsed()) {
    if (!cfg.trials) cfg.trials = 6;
    if (cfg.out.empty()) cfg.out = "spectrum.csv";
    return cmd_spectrum(cfg);
  }
  if (solve->parsed()) {
    if (cfg.out.empty()) cfg.out = "solve.csv";
    return cmd_solve(cfg);
  }
  if (equidist->parsed()) {
    if (cfg.out.empty()) cfg.out = "equidist.csv";
    return cmd_equidist(cfg);
  }
  return 1;
}
