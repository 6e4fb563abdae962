// taxitrig: evaluate taxicab trig functions and derivatives, tabulate and
// plot them, and run the verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taxitrig/angle.h"
#include "taxitrig/derivatives.h"
#include "taxitrig/errors.h"
#include "taxitrig/functions.h"
#include "taxitrig/scalar.h"
#include "taxitrig/series.h"
#include "taxitrig/svg.h"
#include "taxitrig/verification.h"

namespace {

using namespace taxitrig;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public Error {
 public:
  using Error::Error;
};

struct ModeFlags {
  bool exact = false;
  bool fp = false;
};

void AddModeFlags(CLI::App* cmd, ModeFlags& flags) {
  auto* exact = cmd->add_flag("--exact", flags.exact, "Exact rational arithmetic");
  auto* fp = cmd->add_flag("--float", flags.fp, "Binary64 floating point");
  exact->excludes(fp);
}

// Flags win over TAXITRIG_MODE; the default is exact.
Backend ResolveBackend(const ModeFlags& flags) {
  if (flags.exact) return Backend::kExact;
  if (flags.fp) return Backend::kFloat;
  if (const char* env = std::getenv("TAXITRIG_MODE")) {
    const std::string mode = env;
    if (mode == "exact") return Backend::kExact;
    if (mode == "float") return Backend::kFloat;
    if (!mode.empty()) throw ParseError("TAXITRIG_MODE must be 'exact' or 'float'");
  }
  return Backend::kExact;
}

TrigFunction RequireFunction(const std::string& name) {
  if (auto fn = ParseFunction(name)) return *fn;
  throw ParseError("unknown function '" + name + "' (expected sin, cos, tan, cot, sec, csc)");
}

void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::pair<Scalar, Scalar> ParseRange(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ParseError("range must look like FROM:TO");
  return {Scalar::Parse(text.substr(0, colon), Backend::kExact),
          Scalar::Parse(text.substr(colon + 1), Backend::kExact)};
}

void PrintSuite(const SuiteReport& suite, bool verbose) {
  std::printf("%-12s %s  points=%zu failures=%zu max_abs=%s max_rel=%s\n",
              suite.name.c_str(), suite.passed() ? "PASS" : "FAIL",
              suite.points_checked(), suite.failure_count(),
              FormatDouble(suite.max_abs_error()).c_str(),
              FormatDouble(suite.max_rel_error()).c_str());
  for (const DiffReport& r : suite.reports) {
    if (!verbose && r.passed()) continue;
    std::printf("  %-24s %-3s %s  points=%zu failures=%zu max_abs=%s max_rel=%s\n",
                r.check.c_str(), std::string(FunctionName(r.function)).c_str(),
                r.passed() ? "ok" : "FAIL", r.points_checked, r.failures.size(),
                FormatDouble(r.max_abs_error).c_str(),
                FormatDouble(r.max_rel_error).c_str());
    if (!r.failures.empty()) {
      const Failure& f = r.failures.front();
      std::printf("    first failure: theta=%s expected=%s actual=%s form=%s\n",
                  f.theta.c_str(), f.expected.c_str(), f.actual.c_str(), f.form.c_str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taxicab trigonometric functions, derivatives and verification"};
  app.require_subcommand(1);

  // eval
  std::string eval_fn, eval_theta;
  ModeFlags eval_mode;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at theta (t-radians)");
  eval->add_option("function", eval_fn, "sin|cos|tan|cot|sec|csc")->required();
  eval->add_option("theta", eval_theta, "Angle, decimal or p/q")->required();
  AddModeFlags(eval, eval_mode);

  // deriv
  std::string deriv_fn, deriv_theta, deriv_form = "direct";
  ModeFlags deriv_mode;
  auto* deriv = app.add_subcommand("deriv", "Derivative of a function at theta");
  deriv->add_option("function", deriv_fn, "sin|cos|tan|cot|sec|csc")->required();
  deriv->add_option("theta", deriv_theta, "Angle, decimal or p/q")->required();
  deriv->add_option("--form", deriv_form, "direct|product|squared|quotient")
      ->capture_default_str();
  AddModeFlags(deriv, deriv_mode);

  // table
  std::string table_fn, table_from, table_to, table_step, table_format = "csv",
                                                          table_output;
  ModeFlags table_mode;
  auto* table = app.add_subcommand("table", "Tabulate a function on [from, to)");
  table->add_option("function", table_fn)->required();
  table->add_option("from", table_from)->required();
  table->add_option("to", table_to)->required();
  table->add_option("step", table_step)->required();
  table->add_option("--format", table_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("-o,--output", table_output, "Output file (default stdout)");
  AddModeFlags(table, table_mode);

  // plot
  std::vector<std::string> plot_fns;
  std::string plot_from = "0", plot_to = "8", plot_output = "plot.svg";
  int plot_samples = 400;
  double plot_ylim = 4.0;
  ModeFlags plot_mode;
  auto* plot = app.add_subcommand("plot", "Write an SVG graph of one or more functions");
  plot->add_option("functions", plot_fns, "Functions to draw")->required();
  plot->add_option("--from", plot_from)->capture_default_str();
  plot->add_option("--to", plot_to)->capture_default_str();
  plot->add_option("--samples", plot_samples, "Samples across the range")
      ->capture_default_str();
  plot->add_option("--ylim", plot_ylim, "Visible |value| range")->capture_default_str();
  plot->add_option("-o,--output", plot_output, "SVG path ('-' for stdout)")
      ->capture_default_str();
  AddModeFlags(plot, plot_mode);

  // verify
  std::string verify_step = "1/128", verify_range = "0:8";
  double verify_tol = 1e-6, verify_h = 1e-6, verify_exclusion = 1e-3;
  std::size_t verify_samples = 1000;
  unsigned verify_threads = 0;
  bool verify_verbose = false;
  auto* verify = app.add_subcommand("verify", "Run the equivalence, derivative and identity sweeps");
  verify->add_option("--step", verify_step, "Exact grid step")->capture_default_str();
  verify->add_option("--range", verify_range, "Grid range FROM:TO")->capture_default_str();
  verify->add_option("--tol", verify_tol, "Float oracle tolerance")->capture_default_str();
  verify->add_option("--fd-step", verify_h, "Finite-difference step")->capture_default_str();
  verify->add_option("--exclusion", verify_exclusion, "Breakpoint exclusion radius")
      ->capture_default_str();
  verify->add_option("--samples", verify_samples, "Float oracle sample points")
      ->capture_default_str();
  verify->add_option("--threads", verify_threads, "Worker threads (0: auto)");
  verify->add_flag("-v,--verbose", verify_verbose, "Print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) {
      const TrigFunction fn = RequireFunction(eval_fn);
      const Scalar theta = Scalar::Parse(eval_theta, ResolveBackend(eval_mode));
      std::cout << Evaluate(fn, theta).ToString() << "\n";
      return kExitOk;
    }
    if (*deriv) {
      const TrigFunction fn = RequireFunction(deriv_fn);
      const auto form = ParseForm(deriv_form);
      if (!form) throw ParseError("unknown form '" + deriv_form + "'");
      const Scalar theta = Scalar::Parse(deriv_theta, ResolveBackend(deriv_mode));
      std::cout << Derivative(fn, ReduceAngle(theta), *form).ToString() << "\n";
      return kExitOk;
    }
    if (*table) {
      const TrigFunction fn = RequireFunction(table_fn);
      const Backend backend = ResolveBackend(table_mode);
      const Series series =
          Tabulate(fn, Scalar::Parse(table_from, backend), Scalar::Parse(table_to, backend),
                   Scalar::Parse(table_step, backend));
      WriteOutput(table_output,
                  table_format == "json" ? SeriesToJson(series) : SeriesToCsv(series));
      return kExitOk;
    }
    if (*plot) {
      const Backend backend = ResolveBackend(plot_mode);
      PlotOptions options;
      options.from = Scalar::Parse(plot_from, backend);
      options.to = Scalar::Parse(plot_to, backend);
      options.samples = plot_samples;
      options.y_limit = plot_ylim;
      if (!(options.y_limit > 0.0)) throw UsageError("--ylim must be positive");
      std::vector<PlotCurve> curves;
      for (const std::string& name : plot_fns) {
        curves.push_back(BuildPlotCurve(RequireFunction(name), options));
      }
      WriteOutput(plot_output, RenderSvg(curves, options));
      return kExitOk;
    }
    if (*verify) {
      GridSpec grid;
      std::tie(grid.start, grid.end) = ParseRange(verify_range);
      grid.step = Scalar::Parse(verify_step, Backend::kExact);
      grid.exclusion_radius = verify_exclusion;
      OracleOptions oracle;
      oracle.h = verify_h;
      oracle.tolerance = verify_tol;
      oracle.threads = verify_threads;
      if (!(oracle.h > 0.0)) throw UsageError("--fd-step must be positive");

      const std::vector<double> samples =
          OracleSamplePoints(verify_samples, grid.start.to_double(), grid.end.to_double(),
                             grid.exclusion_radius);
      const SuiteReport suites[] = {
          RunEquivalenceSweep(grid, verify_threads),
          RunDerivativeSweep(grid, oracle),
          RunOracleSweep(samples, oracle),
          RunIdentitySuite(grid, verify_threads),
      };
      bool all_passed = true;
      for (const SuiteReport& suite : suites) {
        PrintSuite(suite, verify_verbose);
        all_passed = all_passed && suite.passed();
      }
      std::printf("%s\n", all_passed ? "ALL PASS" : "VERIFICATION FAILED");
      return all_passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleInapplicable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
