#include "stable/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stable/error.hpp"
#include "stable/evaluator.hpp"
#include "stable/params.hpp"
#include "stable/quadrature.hpp"
#include "stable/series_tail.hpp"
#include "stable/threshold.hpp"

namespace stable::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

int worker_count(size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("STABLE_DENSITY_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(std::min<size_t>(n, std::max<size_t>(jobs, 1)));
}

// index-ordered parallel map; output stays deterministic because each job
// writes only its own slot
template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
  int workers = worker_count(count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      size_t i;
      while ((i = next.fetch_add(1)) < count) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

enum class Format { Csv, Json };

struct EvalJob {
  double x;
  StableParams params;
  EvalOptions opts;
};

struct EvalOutcome {
  std::optional<DensityValue> result;
  std::string reason;
  bool validation_error = false;
};

EvalOutcome run_job(const EvalJob& job) {
  EvalOutcome out;
  try {
    out.result = density(job.x, job.params, job.opts);
  } catch (const Error& e) {
    out.reason = e.what();
    out.validation_error = errc_is_validation(e.code());
  }
  return out;
}

void emit_eval_header(std::ostream& out, Format format, bool with_reason) {
  if (format != Format::Csv) return;
  out << "x,alpha,theta,lambda,density,strategy,error_bound";
  if (with_reason) out << ",reason";
  out << "\n";
}

void emit_eval_row(std::ostream& out, Format format, const EvalJob& job,
                   const EvalOutcome& res, bool with_reason, bool first) {
  if (format == Format::Csv) {
    out << fmt17(job.x) << ',' << fmt17(job.params.alpha) << ','
        << fmt17(job.params.theta) << ',' << fmt17(job.params.lambda) << ',';
    if (res.result) {
      out << fmt17(res.result->value) << ','
          << strategy_name(res.result->strategy) << ',';
      if (res.result->error_bound) out << fmt17(*res.result->error_bound);
    } else {
      out << ",,";
    }
    if (with_reason) out << ',' << csv_quote(res.reason);
    out << "\n";
    return;
  }
  nlohmann::json row;
  row["x"] = job.x;
  row["alpha"] = job.params.alpha;
  row["theta"] = job.params.theta;
  row["lambda"] = job.params.lambda;
  if (res.result) {
    row["density"] = res.result->value;
    row["strategy"] = strategy_name(res.result->strategy);
    if (res.result->error_bound) {
      row["error_bound"] = *res.result->error_bound;
    } else {
      row["error_bound"] = nullptr;
    }
    row["converged"] = res.result->converged;
  } else {
    row["density"] = nullptr;
    row["strategy"] = nullptr;
    row["error_bound"] = nullptr;
  }
  if (with_reason) row["reason"] = res.reason.empty() ? nlohmann::json() : nlohmann::json(res.reason);
  out << (first ? "[\n  " : ",\n  ") << row.dump();
}

void emit_json_close(std::ostream& out, bool any) {
  out << (any ? "\n]\n" : "[]\n");
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "series") return Method::Series;
  if (name == "quad") return Method::Quad;
  if (name == "closed") return Method::Closed;
  if (name == "oracle") return Method::Oracle;
  throw Error(Errc::DomainError,
              "method must be one of auto, series, quad, closed, oracle");
}

std::vector<double> make_grid(double x_min, double x_max, int points,
                              const std::string& spacing) {
  if (points < 2) {
    throw Error(Errc::DomainError, "points must be at least 2");
  }
  if (points > 10'000'000) {
    throw Error(Errc::DomainError, "points capped at 10000000");
  }
  if (!(x_max > x_min)) {
    throw Error(Errc::DomainError, "x-max must exceed x-min");
  }
  std::vector<double> xs(points);
  if (spacing == "log") {
    if (!(x_min > 0.0)) {
      throw Error(Errc::DomainError, "log spacing needs x-min > 0");
    }
    double l0 = std::log(x_min);
    double dl = (std::log(x_max) - l0) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = std::exp(l0 + i * dl);
  } else if (spacing == "linear") {
    double dx = (x_max - x_min) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = x_min + i * dx;
  } else {
    throw Error(Errc::DomainError, "spacing must be linear or log");
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

struct Shared {
  Format format = Format::Csv;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

struct EvalArgs {
  double alpha = 0.0;
  double theta = 0.0;
  double lambda = 1.0;
  double x = 0.0;
  double eps = 1e-5;
  int n_max = 128;
  std::optional<int> n_terms;
  std::string method = "auto";
  bool header = false;
  bool strict = false;
};

int cmd_eval(const Shared& sh, const EvalArgs& a) {
  EvalJob job;
  job.x = a.x;
  job.params = StableParams{a.alpha, a.theta, a.lambda};
  job.opts.eps = a.eps;
  job.opts.n_max = a.n_max;
  job.opts.method = parse_method(a.method);
  if (a.n_terms) job.opts.n_terms = a.n_terms;

  DensityValue result = density(job.x, job.params, job.opts);
  EvalOutcome outcome;
  outcome.result = result;
  if (sh.format == Format::Csv) {
    if (a.header) emit_eval_header(*sh.out, sh.format, false);
    emit_eval_row(*sh.out, sh.format, job, outcome, false, true);
  } else {
    emit_eval_row(*sh.out, sh.format, job, outcome, false, true);
    emit_json_close(*sh.out, true);
  }
  if (a.strict && !result.converged) {
    *sh.err << "error: result did not converge to the requested tolerance\n";
    return 3;
  }
  return 0;
}

struct SweepArgs {
  double alpha = 0.0;
  double theta = 0.0;
  double lambda = 1.0;
  double x_min = 0.0;
  double x_max = 0.0;
  int points = 0;
  std::string spacing = "linear";
  double eps = 1e-5;
  int n_max = 128;
  bool keep_failures = false;
};

int cmd_sweep(const Shared& sh, const SweepArgs& a) {
  validate(a.alpha, a.theta, a.lambda);
  std::vector<double> xs = make_grid(a.x_min, a.x_max, a.points, a.spacing);

  std::vector<EvalJob> jobs(xs.size());
  std::vector<EvalOutcome> outcomes(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    jobs[i].x = xs[i];
    jobs[i].params = StableParams{a.alpha, a.theta, a.lambda};
    jobs[i].opts.eps = a.eps;
    jobs[i].opts.n_max = a.n_max;
  }
  parallel_for(xs.size(), [&](size_t i) { outcomes[i] = run_job(jobs[i]); });

  if (!a.keep_failures) {
    for (size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].result) {
        *sh.err << "error: x = " << fmt17(jobs[i].x) << ": "
                << outcomes[i].reason << "\n";
        return outcomes[i].validation_error ? 2 : 3;
      }
    }
  }

  emit_eval_header(*sh.out, sh.format, a.keep_failures);
  bool any = false;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    emit_eval_row(*sh.out, sh.format, jobs[i], outcomes[i], a.keep_failures,
                  !any);
    any = true;
  }
  if (sh.format == Format::Json) emit_json_close(*sh.out, any);
  return 0;
}

struct ThresholdArgs {
  double alpha = 0.0;
  double eps = 1e-5;
  std::vector<int> n_terms;
  bool optimize = false;
  int n_max = 128;
};

int cmd_threshold(const Shared& sh, const ThresholdArgs& a) {
  struct Row {
    double alpha;
    int n;
    double eps;
    double x;
    const char* method;
  };
  std::vector<Row> rows;
  if (a.optimize) {
    OptimalTerms best = optimal_terms(a.alpha, a.eps, a.n_max);
    rows.push_back({a.alpha, best.n_terms, a.eps, best.x_threshold,
                    "optimize"});
  } else {
    std::vector<int> ns = a.n_terms;
    if (ns.empty()) ns = {3, 10, 30, 60, 90};
    rows.reserve(ns.size());
    for (int n : ns) {
      ThresholdResult r = threshold_coordinate(a.alpha, n, a.eps);
      rows.push_back({a.alpha, n, a.eps, r.x_threshold, "bisection"});
    }
  }

  if (sh.format == Format::Csv) {
    *sh.out << "alpha,N,eps,x_threshold,method\n";
    for (const Row& r : rows) {
      *sh.out << fmt17(r.alpha) << ',' << r.n << ',' << fmt17(r.eps) << ','
              << fmt17(r.x) << ',' << r.method << "\n";
    }
  } else {
    bool any = false;
    for (const Row& r : rows) {
      nlohmann::json row;
      row["alpha"] = r.alpha;
      row["N"] = r.n;
      row["eps"] = r.eps;
      row["x_threshold"] = r.x;
      row["method"] = r.method;
      *sh.out << (any ? ",\n  " : "[\n  ") << row.dump();
      any = true;
    }
    emit_json_close(*sh.out, any);
  }
  return 0;
}

struct DiagnoseArgs {
  double alpha = 0.0;
  double theta = 0.0;
  double eps = 1e-5;
  std::vector<int> n_terms;
  double x_min = 1.0;
  double x_max = 1e3;
  int points = 121;
  std::string spacing = "log";
  bool no_split = false;
};

int cmd_diagnose(const Shared& sh, const DiagnoseArgs& a) {
  validate(a.alpha, a.theta);
  std::vector<double> xs = make_grid(a.x_min, a.x_max, a.points, a.spacing);
  std::vector<int> ns = a.n_terms;
  if (ns.empty()) ns = {3, 10, 30, 60, 90};

  struct QuadCell {
    double value = 0.0;
    std::string reason;
  };
  std::vector<QuadCell> quads(xs.size());
  QuadOptions qopt;
  qopt.tol = 0.1 * a.eps;
  qopt.split_at_peak = !a.no_split;
  parallel_for(xs.size(), [&](size_t i) {
    try {
      quads[i].value = density_integral(xs[i], a.alpha, a.theta, qopt).value;
    } catch (const Error& e) {
      quads[i].reason = e.what();
    }
  });

  struct SeriesCell {
    std::optional<double> value;
    double bound = 0.0;
    double x_eps = 0.0;
  };
  std::vector<SeriesCell> cells(xs.size() * ns.size());
  parallel_for(cells.size(), [&](size_t idx) {
    size_t i = idx / ns.size();
    int n = ns[idx % ns.size()];
    SeriesCell& cell = cells[idx];
    cell.x_eps = threshold_coordinate(a.alpha, n, a.eps).x_threshold;
    cell.bound = remainder_bound(std::fabs(xs[i]), a.alpha, n);
    try {
      cell.value = tail_density(xs[i], a.alpha, a.theta, n).value;
    } catch (const Error&) {
      // divergent or excluded cells stay empty; that is the diagnostic
    }
  });

  bool any = false;
  if (sh.format == Format::Csv) {
    *sh.out << "x,density_quad,density_series,abs_diff,remainder_bound,"
               "below_threshold,n\n";
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = 0; j < ns.size(); ++j) {
      const SeriesCell& cell = cells[i * ns.size() + j];
      bool below = std::fabs(xs[i]) < cell.x_eps;
      if (sh.format == Format::Csv) {
        *sh.out << fmt17(xs[i]) << ',' << fmt17(quads[i].value) << ',';
        if (cell.value) {
          *sh.out << fmt17(*cell.value) << ','
                  << fmt17(std::fabs(quads[i].value - *cell.value));
        } else {
          *sh.out << ',';
        }
        *sh.out << ',' << fmt17(cell.bound) << ','
                << (below ? "true" : "false") << ',' << ns[j] << "\n";
      } else {
        nlohmann::json row;
        row["x"] = xs[i];
        row["density_quad"] = quads[i].value;
        if (cell.value) {
          row["density_series"] = *cell.value;
          row["abs_diff"] = std::fabs(quads[i].value - *cell.value);
        } else {
          row["density_series"] = nullptr;
          row["abs_diff"] = nullptr;
        }
        row["remainder_bound"] = cell.bound;
        row["below_threshold"] = below;
        row["n"] = ns[j];
        *sh.out << (any ? ",\n  " : "[\n  ") << row.dump();
        any = true;
      }
    }
  }
  if (sh.format == Format::Json) emit_json_close(*sh.out, any);
  return 0;
}

int cmd_selftest(const Shared& sh) {
  int failures = 0;
  auto check = [&](const char* name, bool ok, const std::string& detail) {
    if (ok) {
      *sh.out << "PASS: " << name << "\n";
    } else {
      *sh.out << "FAIL: " << name << " (" << detail << ")\n";
      ++failures;
    }
  };

  {
    bool ok = true;
    std::string detail;
    for (double alpha : {0.6, 1.3}) {
      for (double theta : {0.0, 0.3}) {
        for (double x : {-3.7, 1.2, 9.0}) {
          double lhs = density(-x, StableParams{alpha, theta}).value;
          double rhs = density(x, StableParams{alpha, -theta}).value;
          if (lhs != rhs) {
            ok = false;
            detail = "asymmetry at alpha=" + fmt17(alpha);
          }
        }
      }
    }
    check("reflection symmetry", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (double x = -6.0; x <= 6.0; x += 0.5) {
      double got = density(x, StableParams{2.0, 0.0}).value;
      double want = gaussian_closed_form(x);
      if (std::fabs(got - want) > 1e-12) {
        ok = false;
        detail = "x=" + fmt17(x);
      }
    }
    check("gaussian closed form", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (double theta : {0.3, -0.8}) {
      for (double x : {2.0, 5.0}) {
        double got = tail_density(x, 1.0, theta, 120).value;
        double want = closed_form_alpha1(x, theta);
        if (std::fabs(got - want) > 1e-10) {
          ok = false;
          detail = "x=" + fmt17(x) + " theta=" + fmt17(theta);
        }
      }
    }
    check("cauchy family series", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    double prev = 0.0;
    for (int n : {3, 10, 30, 60, 90}) {
      ThresholdResult r = threshold_coordinate(0.7, n, 1e-5);
      if (std::fabs(r.residual) > 1e-10) ok = false;
      if (n > 3 && r.x_threshold >= prev) {
        ok = false;
        detail = "not decreasing at N=" + std::to_string(n);
      }
      prev = r.x_threshold;
    }
    double x30 = threshold_coordinate(1.3, 30, 1e-5).x_threshold;
    double x60 = threshold_coordinate(1.3, 60, 1e-5).x_threshold;
    if (!(x60 > x30)) {
      ok = false;
      detail = "alpha=1.3 thresholds not increasing";
    }
    check("threshold orderings", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    struct Case {
      double alpha, theta, x;
    } cases[] = {{0.7, 0.2, 2.0}, {1.3, -0.1, 20.0}};
    for (const Case& c : cases) {
      double series = tail_density(c.x, c.alpha, c.theta, 30).value;
      double quad = density_integral(c.x, c.alpha, c.theta, 1e-8).value;
      if (std::fabs(series - quad) > 1e-5) {
        ok = false;
        detail = "alpha=" + fmt17(c.alpha);
      }
    }
    check("series/quadrature overlap", ok, detail);
  }
  {
    QuadResult q = density_integral(1.5, 0.8, 0.25, 1e-9);
    QuadResult o = fourier_oracle(1.5, 0.8, 0.25, 1e-9);
    bool ok = q.converged && o.converged &&
              std::fabs(q.value - o.value) < 1e-6;
    check("quadrature vs fourier oracle", ok,
          "diff=" + fmt17(std::fabs(q.value - o.value)));
  }
  {
    QuadResult o = fourier_oracle(1.0, 2.0, 0.0, 1e-9);
    bool ok = o.converged &&
              std::fabs(o.value - gaussian_closed_form(1.0)) < 1e-8;
    check("fourier oracle gaussian", ok, "value=" + fmt17(o.value));
  }

  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"strictly stable density evaluator"};
  app.require_subcommand(1);
  app.fallthrough();

  Shared sh;
  sh.out = &out;
  sh.err = &err;
  std::string format = "csv";
  app.add_option("--format", format, "output format: csv or json")
      ->capture_default_str();

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "evaluate the density at one x");
  eval->add_option("--alpha", ea.alpha, "stability index in (0, 2]")
      ->required();
  eval->add_option("--theta", ea.theta, "skew in [-theta_bound, theta_bound]")
      ->required();
  eval->add_option("--lambda", ea.lambda, "scale > 0")
      ->capture_default_str();
  eval->add_option("--x", ea.x, "evaluation point")->required();
  eval->add_option("--eps", ea.eps, "accuracy target")
      ->capture_default_str();
  eval->add_option("--n-max", ea.n_max, "series length cap")
      ->capture_default_str();
  int eval_n_terms = 0;
  CLI::Option* eval_n_opt =
      eval->add_option("--n-terms", eval_n_terms, "fixed series length");
  eval->add_option("--method", ea.method,
                   "auto, series, quad, closed, or oracle")
      ->capture_default_str();
  eval->add_flag("--header", ea.header, "print the CSV header row");
  eval->add_flag("--strict", ea.strict,
                 "exit nonzero when the result did not converge");

  SweepArgs sa;
  CLI::App* sweep =
      app.add_subcommand("sweep", "evaluate the density over an x grid");
  sweep->add_option("--alpha", sa.alpha, "stability index in (0, 2]")
      ->required();
  sweep->add_option("--theta", sa.theta, "skew")->required();
  sweep->add_option("--lambda", sa.lambda, "scale > 0")
      ->capture_default_str();
  sweep->add_option("--x-min", sa.x_min, "grid start")->required();
  sweep->add_option("--x-max", sa.x_max, "grid end")->required();
  sweep->add_option("--points", sa.points, "grid size (>= 2)")->required();
  sweep->add_option("--spacing", sa.spacing, "linear or log")
      ->capture_default_str();
  sweep->add_option("--eps", sa.eps, "accuracy target")
      ->capture_default_str();
  sweep->add_option("--n-max", sa.n_max, "series length cap")
      ->capture_default_str();
  sweep->add_flag("--keep-failures", sa.keep_failures,
                  "emit failed points as rows with a reason column");

  ThresholdArgs ta;
  CLI::App* threshold =
      app.add_subcommand("threshold", "series validity thresholds");
  threshold->add_option("--alpha", ta.alpha, "stability index in (0, 2]")
      ->required();
  threshold->add_option("--eps", ta.eps, "accuracy target")
      ->capture_default_str();
  threshold->add_option("--n-terms", ta.n_terms,
                        "series lengths (default 3,10,30,60,90)")
      ->delimiter(',');
  threshold->add_flag("--optimize", ta.optimize,
                      "report the N minimizing the threshold");
  threshold->add_option("--n-max", ta.n_max, "search cap for --optimize")
      ->capture_default_str();

  DiagnoseArgs da;
  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "series vs quadrature comparison over an x grid");
  diagnose->add_option("--alpha", da.alpha, "stability index in (0, 2]")
      ->required();
  diagnose->add_option("--theta", da.theta, "skew")->capture_default_str();
  diagnose->add_option("--eps", da.eps, "accuracy target")
      ->capture_default_str();
  diagnose->add_option("--n-terms", da.n_terms,
                       "series lengths (default 3,10,30,60,90)")
      ->delimiter(',');
  diagnose->add_option("--x-min", da.x_min, "grid start")
      ->capture_default_str();
  diagnose->add_option("--x-max", da.x_max, "grid end")
      ->capture_default_str();
  diagnose->add_option("--points", da.points, "grid size (>= 2)")
      ->capture_default_str();
  diagnose->add_option("--spacing", da.spacing, "linear or log")
      ->capture_default_str();
  diagnose->add_flag("--no-split", da.no_split,
                     "disable the peak pre-split (plain quadrature profile)");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run built-in consistency checks");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("stable_density");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }

  if (format == "json") {
    sh.format = Format::Json;
  } else if (format == "csv") {
    sh.format = Format::Csv;
  } else {
    err << "error: --format must be csv or json\n";
    return 64;
  }

  try {
    if (eval->parsed()) {
      if (eval_n_opt->count() > 0) ea.n_terms = eval_n_terms;
      return cmd_eval(sh, ea);
    }
    if (sweep->parsed()) return cmd_sweep(sh, sa);
    if (threshold->parsed()) return cmd_threshold(sh, ta);
    if (diagnose->parsed()) return cmd_diagnose(sh, da);
    if (selftest->parsed()) return cmd_selftest(sh);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return errc_is_validation(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 64;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace stable::cli
