// Copyright 2026 The hornrmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "hornrmt/derivative_principle.hpp"
#include "hornrmt/ensembles.hpp"
#include "hornrmt/error.hpp"
#include "hornrmt/golden_thompson.hpp"
#include "hornrmt/harness.hpp"
#include "hornrmt/horn.hpp"
#include "hornrmt/quantum_info.hpp"
#include "hornrmt/special_functions.hpp"
#include "output.hpp"

namespace hornrmt::cli {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::size_t kGridPoints = 400;

struct Config {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::size_t bins = kDefaultBins;
  std::string format = "csv";
  std::string out;
  unsigned workers = 1;
  double ks_threshold = kDefaultKsThreshold;
};

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = kGridPoints;
};

// "lo:hi:steps"
Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  Grid g;
  try {
    if (parts.size() != 3) throw std::invalid_argument("");
    std::size_t used = 0;
    g.lo = std::stod(parts[0], &used);
    g.hi = std::stod(parts[1]);
    g.steps = static_cast<std::size_t>(std::stoul(parts[2]));
  } catch (const std::exception&) {
    throw DomainError("--grid expects lo:hi:steps, got '" + text + "'");
  }
  if (!(g.lo < g.hi) || g.steps < 2)
    throw DomainError("--grid requires lo < hi and steps >= 2, got '" + text + "'");
  return g;
}

// "lo:hi"
std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw DomainError("--fit expects lo:hi, got '" + text + "'");
  }
}

Spectrum spectrum2(const std::vector<double>& v, const char* flag) {
  if (v.size() != 2) {
    std::ostringstream os;
    os << flag << " expects two comma-separated values, got " << v.size();
    throw DomainError(os.str());
  }
  return Spectrum(v);
}

Document tabulate(const std::string& xname, const std::function<double(double)>& f,
                  const Grid& g) {
  Document doc;
  doc.columns = {xname, "density"};
  for (std::size_t i = 0; i < g.steps; ++i) {
    const double x =
        i + 1 == g.steps ? g.hi : g.lo + (g.hi - g.lo) * static_cast<double>(i) / (g.steps - 1);
    doc.rows.push_back({Cell::number(x), Cell::number(f(x))});
  }
  return doc;
}

Grid resolve_grid(const std::string& grid_text, std::pair<double, double> range) {
  if (!grid_text.empty()) return parse_grid(grid_text);
  return {range.first, range.second, kGridPoints};
}

Document report_document(const ComparisonReport& r, double threshold, bool& passed) {
  passed = r.ks_statistic < threshold;
  Document doc;
  doc.columns = {"density_id", "sample_count", "ks_statistic", "l1_distance", "ks_threshold",
                 "passed"};
  doc.rows.push_back({Cell::string(r.density_id),
                      Cell::integer(static_cast<long long>(r.sample_count)),
                      Cell::number(r.ks_statistic), Cell::number(r.l1_distance),
                      Cell::number(threshold), Cell::boolean(passed)});
  return doc;
}

// Density table or Monte Carlo comparison for a harness experiment.
int experiment_command(const Config& cfg, ExperimentParams params, bool verify,
                       const std::string& xname, const std::string& grid_text, Document& doc) {
  params.bins = cfg.bins;
  params.workers = cfg.workers;
  const AnalyticDensity analytic = analytic_density(params);
  if (verify) {
    const RandomStream stream(cfg.seed, 0);
    bool passed = false;
    doc = report_document(verify_experiment(params, cfg.samples, stream), cfg.ks_threshold,
                          passed);
    return passed ? kExitOk : kExitNumerical;
  }
  doc = tabulate(xname, analytic.density, resolve_grid(grid_text, default_range(params)));
  doc.fields.emplace_back("density", Cell::string(analytic.id));
  return kExitOk;
}

struct MixCheck {
  std::string name;
  double estimate;
  double reference;
  double statistic;
  double threshold;
  bool passed;
};

Document mix_checks_document(const std::vector<MixCheck>& checks) {
  Document doc;
  doc.columns = {"check", "estimate", "reference", "statistic", "threshold", "passed"};
  for (const auto& c : checks)
    doc.rows.push_back({Cell::string(c.name), Cell::number(c.estimate), Cell::number(c.reference),
                        Cell::number(c.statistic), Cell::number(c.threshold),
                        Cell::boolean(c.passed)});
  return doc;
}

int mix_command(const Config& cfg, double mu, double nu, bool verify, bool is_qjsd,
                Document& doc) {
  const OrbitParams p(mu, nu);
  const double closed = is_qjsd ? qjsd_average(p) : coherence_average(p);
  if (!verify) {
    doc.columns = {"mu", "nu", is_qjsd ? "qjsd" : "coherence"};
    doc.rows.push_back({Cell::number(mu), Cell::number(nu), Cell::number(closed)});
    return kExitOk;
  }
  const RandomStream mean_stream(cfg.seed, 0);
  const MeanEstimate mc = is_qjsd ? qjsd_empirical(p, cfg.samples, mean_stream, cfg.workers)
                                  : coherence_empirical(p, cfg.samples, mean_stream, cfg.workers);
  const double z = mc.std_error > 0.0 ? std::abs(mc.mean - closed) / mc.std_error
                                      : (mc.mean == closed ? 0.0 : INFINITY);
  std::vector<MixCheck> checks;
  checks.push_back({"mean", mc.mean, closed, z, 3.0, z <= 3.0});

  ExperimentParams params;
  params.kind = is_qjsd ? ExperimentKind::EigenMix : ExperimentKind::DiagMix;
  params.mu = mu;
  params.nu = nu;
  params.bins = cfg.bins;
  params.workers = cfg.workers;
  const RandomStream hist_stream(cfg.seed, 1);
  const ComparisonReport r = verify_experiment(params, cfg.samples, hist_stream);
  checks.push_back({to_string(params.kind) + " ks", r.ks_statistic, 0.0, r.ks_statistic,
                    cfg.ks_threshold, r.ks_statistic < cfg.ks_threshold});
  doc = mix_checks_document(checks);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  return ok ? kExitOk : kExitNumerical;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral densities of sums of random Hermitian matrices", "hornrmt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Config cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Monte Carlo draws")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("--bins", cfg.bins, "Histogram bins")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: standard output)");
  app.add_option("--workers", cfg.workers, "Worker threads (0: one per core)")
      ->capture_default_str();
  app.add_option("--ks-threshold", cfg.ks_threshold, "KS acceptance threshold for --verify")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  std::function<int(Document&)> action;
  auto leaf = [&](CLI::App* sub, std::function<int(Document&)> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // pdf2
  auto* pdf2 = app.add_subcommand("pdf2", "Closed-form 2x2 densities for fixed spectra");
  pdf2->require_subcommand(1);
  std::vector<double> a_vals, b_vals;
  std::string grid_text;
  bool verify = false;
  for (const char* which : {"eigen", "diag"}) {
    const bool eigen = std::string(which) == "eigen";
    auto* sub = pdf2->add_subcommand(
        which, eigen ? "Density of the ordered eigenvalue gap c1 - c2"
                     : "Density of the diagonal entry C11 on the trace slice");
    sub->add_option("--a", a_vals, "Spectrum of A, a1,a2")->delimiter(',')->required();
    sub->add_option("--b", b_vals, "Spectrum of B, b1,b2")->delimiter(',')->required();
    sub->add_option("--grid", grid_text, "Evaluation grid lo:hi:steps");
    sub->add_flag("--verify", verify, "Compare against Monte Carlo draws");
    leaf(sub, [&, eigen](Document& doc) {
      ExperimentParams params;
      params.kind = eigen ? ExperimentKind::OrbitSumGap : ExperimentKind::OrbitSumDiag;
      params.a = spectrum2(a_vals, "--a");
      params.b = spectrum2(b_vals, "--b");
      return experiment_command(cfg, params, verify, eigen ? "gap" : "c11", grid_text, doc);
    });
  }

  // gue-sum / wishart-sum / single-eig
  unsigned n = 0, k = 1, m = 2;
  auto* gue = app.add_subcommand("gue-sum", "Sum of K GUE(n) matrices");
  gue->add_option("--n", n, "Matrix dimension")->required();
  gue->add_option("--k", k, "Number of summands")->capture_default_str();
  gue->add_option("--grid", grid_text, "Evaluation grid lo:hi:steps");
  gue->add_flag("--verify", verify, "Compare against Monte Carlo draws");
  leaf(gue, [&](Document& doc) {
    ExperimentParams params;
    params.kind = ExperimentKind::GueSum;
    params.n = n;
    params.k = k;
    return experiment_command(cfg, params, verify, n == 2 ? "gap" : "x", grid_text, doc);
  });

  auto* wish = app.add_subcommand("wishart-sum", "Sum of K complex Wishart(m, n) matrices");
  wish->add_option("--m", m, "Rows of each factor")->capture_default_str();
  wish->add_option("--n", n, "Columns of each factor")->required();
  wish->add_option("--k", k, "Number of summands")->capture_default_str();
  wish->add_option("--grid", grid_text, "Evaluation grid lo:hi:steps");
  wish->add_flag("--verify", verify, "Compare against Monte Carlo draws");
  leaf(wish, [&](Document& doc) {
    ExperimentParams params;
    params.kind = ExperimentKind::WishartSum;
    params.m = m;
    params.n = n;
    params.k = k;
    return experiment_command(cfg, params, verify, m == 1 ? "x" : "gap", grid_text, doc);
  });

  auto* single = app.add_subcommand("single-eig", "One-eigenvalue density of a GUE(n) sum");
  single->add_option("--n", n, "Matrix dimension")->required();
  single->add_option("--k", k, "Number of summands")->capture_default_str();
  single->add_option("--grid", grid_text, "Evaluation grid lo:hi:steps");
  leaf(single, [&](Document& doc) {
    GueParams{n, k}.validate();
    const double r = std::sqrt(static_cast<double>(k)) * (std::sqrt(2.0 * n) + 4.0);
    doc = tabulate("x", [&](double x) { return single_eigenvalue_density_sum(n, k, x); },
                   resolve_grid(grid_text, {-r, r}));
    return kExitOk;
  });

  // gt
  auto* gt = app.add_subcommand("gt", "Golden-Thompson ratio alpha_n");
  gt->require_subcommand(1);
  auto* gt_ratio = gt->add_subcommand("ratio", "Exact alpha_n");
  gt_ratio->add_option("--n", n, "Matrix dimension")->required();
  leaf(gt_ratio, [&](Document& doc) {
    const Rational r = alpha_ratio(n);
    doc.columns = {"n", "alpha", "decimal"};
    doc.rows.push_back({Cell::integer(n), Cell::string(r.str()),
                        Cell::number(static_cast<double>(r))});
    return kExitOk;
  });
  auto* gt_emp = gt->add_subcommand("empirical", "Monte Carlo estimate of alpha_n");
  gt_emp->add_option("--n", n, "Matrix dimension")->required();
  leaf(gt_emp, [&](Document& doc) {
    const GtReport r = gt_empirical(n, cfg.samples, RandomStream(cfg.seed, 0), cfg.workers);
    doc.columns = {"n", "samples", "empirical_ratio", "stderr", "analytic_ratio", "violations"};
    doc.rows.push_back({Cell::integer(r.n), Cell::integer(static_cast<long long>(r.samples)),
                        Cell::number(r.empirical_ratio), Cell::number(r.std_error),
                        Cell::number(r.analytic_ratio),
                        Cell::integer(static_cast<long long>(r.violations))});
    return kExitOk;
  });
  auto* gt_scan = gt->add_subcommand("scan", "Table of ln alpha_n");
  unsigned nmax = 0;
  std::string fit_text;
  gt_scan->add_option("--nmax", nmax, "Largest n")->required();
  gt_scan->add_option("--fit", fit_text, "Least-squares window lo:hi");
  leaf(gt_scan, [&](Document& doc) {
    const RealFunctionTable t = ln_alpha_scan(nmax);
    doc.columns = {"n", "ln_alpha"};
    for (std::size_t i = 0; i < t.size(); ++i)
      doc.rows.push_back({Cell::integer(static_cast<long long>(t.abscissae()[i])),
                          Cell::number(t.ordinates()[i])});
    if (!fit_text.empty()) {
      const auto [lo, hi] = parse_window(fit_text);
      const LinearFit fit = least_squares_fit(t, lo, hi);
      doc.fields.emplace_back("fit_slope", Cell::number(fit.slope));
      doc.fields.emplace_back("fit_intercept", Cell::number(fit.intercept));
      doc.fields.emplace_back("fit_points", Cell::integer(static_cast<long long>(fit.points)));
    }
    return kExitOk;
  });

  // qjsd / coherence / surface
  double mu = 0.0, nu = 0.0;
  for (const char* which : {"qjsd", "coherence"}) {
    const bool is_qjsd = std::string(which) == "qjsd";
    auto* sub = app.add_subcommand(
        which, is_qjsd ? "Average quantum Jensen-Shannon divergence of two qubit orbits"
                       : "Average relative-entropy coherence of a mixture of two qubit orbits");
    sub->add_option("--mu", mu, "Smaller eigenvalue of the first orbit, in [0, 1/2)")->required();
    sub->add_option("--nu", nu, "Smaller eigenvalue of the second orbit, in [0, 1/2)")->required();
    sub->add_flag("--verify", verify, "Compare against Monte Carlo draws");
    leaf(sub, [&, is_qjsd](Document& doc) { return mix_command(cfg, mu, nu, verify, is_qjsd, doc); });
  }
  auto* surface = app.add_subcommand("surface", "Closed-form values on a (mu, nu) grid");
  surface->require_subcommand(1);
  unsigned steps = 0;
  for (const char* which : {"qjsd", "coherence"}) {
    const bool is_qjsd = std::string(which) == "qjsd";
    auto* sub = surface->add_subcommand(which, "mu,nu,value table");
    sub->add_option("--grid", steps, "Points per axis; mu, nu = 0.5 i / steps")->required();
    leaf(sub, [&, is_qjsd](Document& doc) {
      doc.columns = {"mu", "nu", "value"};
      for (const SurfacePoint& pt :
           surface_values(is_qjsd ? SurfaceQuantity::Qjsd : SurfaceQuantity::Coherence, steps))
        doc.rows.push_back({Cell::number(pt.mu), Cell::number(pt.nu), Cell::number(pt.value)});
      return kExitOk;
    });
  }

  // deriv
  auto* deriv = app.add_subcommand("deriv", "Symbolic derivative principle");
  deriv->require_subcommand(1);
  auto* demo = deriv->add_subcommand("demo", "Diagonal density, its image, and the closed form");
  std::string ensemble = "gue";
  demo->add_option("--ensemble", ensemble, "gue or wishart")
      ->check(CLI::IsMember({"gue", "wishart"}))
      ->capture_default_str();
  demo->add_option("--n", n, "Dimension (gue) or factor columns (wishart)")->required();
  demo->add_option("--k", k, "Number of summands")->capture_default_str();
  demo->add_option("--m", m, "Wishart rows")->capture_default_str();
  leaf(demo, [&](Document& doc) {
    const bool g = ensemble == "gue";
    const WeightedDensity q = g ? gue_diag_density(n, k) : wishart_diag_density(m, n, k);
    const WeightedDensity p = derivative_principle(q);
    const WeightedDensity closed = g ? gue_sum_closed_form(n, k) : wishart_sum_closed_form(m, n, k);
    const bool same = p == closed;
    doc.columns = {"item", "value"};
    doc.rows.push_back({Cell::string("input"), Cell::string(q.to_string())});
    doc.rows.push_back({Cell::string("output"), Cell::string(p.to_string())});
    doc.rows.push_back({Cell::string("closed_form"), Cell::string(closed.to_string())});
    doc.rows.push_back({Cell::string("integral"), Cell::string(normalize(p).integral.to_string())});
    doc.rows.push_back({Cell::string("identical"), Cell::boolean(same)});
    return same ? kExitOk : kExitNumerical;
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("hornrmt");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hornrmt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "hornrmt: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "hornrmt: no command given\n";
    return kExitUsage;
  }

  Document doc;
  int status = kExitOk;
  try {
    status = action(doc);
  } catch (const DomainError& e) {
    err << "hornrmt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "hornrmt: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }

  const Meta meta{kVersion, cfg.seed, join_args(args)};
  const Format format = cfg.format == "json" ? Format::Json : Format::Csv;
  if (cfg.out.empty()) {
    write_document(out, format, meta, doc);
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "hornrmt: cannot open output file '" << cfg.out << "'\n";
      return kExitUsage;
    }
    write_document(file, format, meta, doc);
  }
  return status;
}

}  // namespace hornrmt::cli
