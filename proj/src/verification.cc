#include "taxitrig/verification.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <map>
#include <thread>
#include <type_traits>
#include <utility>

#include "taxitrig/angle.h"
#include "taxitrig/derivatives.h"
#include "taxitrig/errors.h"

namespace taxitrig {
namespace {

// One comparison at one point. Sweeps produce these per grid point (possibly
// concurrently) and fold them in grid order, so reports do not depend on
// scheduling.
struct Observation {
  Observation(std::string check, TrigFunction function)
      : check(std::move(check)), function(function) {}

  std::string check;
  TrigFunction function;
  bool ok = true;
  double abs_error = 0.0;
  double rel_error = 0.0;
  Failure failure;
};

using Observations = std::vector<Observation>;

template <typename PointFn>
std::vector<Observations> ParallelMap(std::size_t count, unsigned threads, PointFn fn) {
  std::vector<Observations> out(count);
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count / 32 + 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t lo = 0; lo < count; lo += chunk) {
    const std::size_t hi = std::min(count, lo + chunk);
    jobs.push_back(std::async(std::launch::async, [&out, &fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    }));
  }
  for (auto& job : jobs) job.get();  // rethrows worker exceptions
  return out;
}

SuiteReport Fold(std::string name, const std::vector<Observations>& per_point) {
  std::map<std::pair<std::string, int>, DiffReport> by_key;
  for (const Observations& point : per_point) {
    for (const Observation& obs : point) {
      DiffReport& report = by_key[{obs.check, static_cast<int>(obs.function)}];
      report.check = obs.check;
      report.function = obs.function;
      ++report.points_checked;
      report.max_abs_error = std::max(report.max_abs_error, obs.abs_error);
      report.max_rel_error = std::max(report.max_rel_error, obs.rel_error);
      if (!obs.ok) report.failures.push_back(obs.failure);
    }
  }
  SuiteReport suite;
  suite.name = std::move(name);
  for (auto& [key, report] : by_key) suite.reports.push_back(std::move(report));
  return suite;
}

void SetErrors(Observation& obs, double expected, double actual) {
  obs.abs_error = std::fabs(expected - actual);
  obs.rel_error = expected != 0.0 ? obs.abs_error / std::fabs(expected) : obs.abs_error;
}

// Zero-tolerance comparison of two printable results.
template <typename Result>
Observation Exact(std::string check, TrigFunction fn, std::string_view form,
                  const Scalar& theta, const Result& expected, const Result& actual) {
  Observation obs(std::move(check), fn);
  obs.ok = expected == actual;
  if constexpr (std::is_same_v<Result, Scalar>) {
    SetErrors(obs, expected.to_double(), actual.to_double());
  }
  if (!obs.ok) {
    obs.failure = {theta.ToString(), expected.ToString(), actual.ToString(),
                   std::string(form)};
    if (obs.abs_error == 0.0) obs.abs_error = std::numeric_limits<double>::infinity();
  }
  return obs;
}

Observation Predicate(std::string check, TrigFunction fn, const Scalar& theta, bool ok,
                      std::string expected, std::string actual) {
  Observation obs(std::move(check), fn);
  obs.ok = ok;
  if (!ok) {
    obs.failure = {theta.ToString(), std::move(expected), std::move(actual), "-"};
    obs.abs_error = std::numeric_limits<double>::infinity();
  }
  return obs;
}

Observation Tolerance(std::string check, TrigFunction fn, std::string_view form,
                      double theta, double expected, double actual, double tolerance) {
  Observation obs(std::move(check), fn);
  SetErrors(obs, expected, actual);
  obs.ok = WithinTolerance(expected, actual, tolerance);
  if (!obs.ok) {
    obs.failure = {FormatDouble(theta), FormatDouble(expected), FormatDouble(actual),
                   std::string(form)};
  }
  return obs;
}

void CheckStencil(TrigFunction fn, const Scalar& lo, const Scalar& hi) {
  const Scalar two = lo.Like(kQuarterPeriod);
  const Scalar next_break = ((lo / two).floor() + lo.Like(1)) * two;
  if (next_break < hi) {
    throw OracleInapplicable("stencil [" + lo.ToString() + ", " + hi.ToString() +
                             "] straddles breakpoint " + next_break.ToString() +
                             " for " + std::string(FunctionName(fn)));
  }
}

Scalar ValueOrThrow(TrigFunction fn, const Scalar& theta) {
  const EvalResult r = Evaluate(fn, theta);
  if (r.is_pole()) {
    throw OracleInapplicable(std::string(FunctionName(fn)) + " has a pole at " +
                             theta.ToString());
  }
  return r.value();
}

double DistanceToBreakpoint(double theta) {
  double r = std::fmod(theta, static_cast<double>(kQuarterPeriod));
  if (r < 0.0) r += kQuarterPeriod;
  return std::min(r, kQuarterPeriod - r);
}

std::vector<double> BreakpointsIn(const GridSpec& grid) {
  const Scalar start = grid.start.To(Backend::kExact);
  const Scalar end = grid.end.To(Backend::kExact);
  const Scalar two = Scalar::Exact(kQuarterPeriod);
  std::vector<double> out;
  // First multiple of 2 that is >= start.
  Scalar b = (start / two).floor() * two;
  if (b < start) b += two;
  for (; b < end; b += two) out.push_back(b.to_double());
  return out;
}

std::string QuadrantIdentityText(int quadrant) {
  switch (quadrant) {
    case 1: return "tan+1 = sec";
    case 2: return "-tan+1 = -sec";
    case 3: return "tan+1 = -sec";
    default: return "-tan+1 = sec";
  }
}

}  // namespace

std::vector<Scalar> GridSpec::Points() const {
  if (start.backend() != end.backend() || start.backend() != step.backend()) {
    throw UsageError("grid start, end and step must share a backend");
  }
  if (!(step > step.Like(0))) throw UsageError("grid step must be positive");
  if (!(start < end)) throw UsageError("grid start must be below end");
  std::vector<Scalar> points;
  const Scalar count_scalar = ((end - start) / step).floor();
  const std::int64_t count = count_scalar.to_int64() + 1;
  points.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    Scalar p = start + step * step.Like(i);
    if (!(p < end)) break;
    points.push_back(std::move(p));
  }
  return points;
}

bool SuiteReport::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const DiffReport& r) { return r.passed(); });
}

std::size_t SuiteReport::points_checked() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.points_checked;
  return n;
}

std::size_t SuiteReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.failures.size();
  return n;
}

double SuiteReport::max_abs_error() const {
  double m = 0.0;
  for (const auto& r : reports) m = std::max(m, r.max_abs_error);
  return m;
}

double SuiteReport::max_rel_error() const {
  double m = 0.0;
  for (const auto& r : reports) m = std::max(m, r.max_rel_error);
  return m;
}

const DiffReport* SuiteReport::Find(std::string_view check, TrigFunction fn) const {
  for (const auto& r : reports) {
    if (r.check == check && r.function == fn) return &r;
  }
  return nullptr;
}

bool WithinTolerance(double expected, double actual, double tolerance) {
  const double abs_error = std::fabs(expected - actual);
  if (abs_error <= tolerance) return true;
  return expected != 0.0 && abs_error / std::fabs(expected) <= tolerance;
}

Scalar FiniteDifference(TrigFunction fn, const Scalar& theta, const Scalar& h) {
  if (!(h > h.Like(0))) throw UsageError("step h must be positive");
  const Scalar lo = theta - h;
  const Scalar hi = theta + h;
  CheckStencil(fn, lo, hi);
  ValueOrThrow(fn, theta);
  return (ValueOrThrow(fn, hi) - ValueOrThrow(fn, lo)) / (h + h);
}

Scalar OneSidedDifference(TrigFunction fn, const Scalar& theta, const Scalar& h,
                          Side side) {
  if (!(h > h.Like(0))) throw UsageError("step h must be positive");
  const Scalar lo = side == Side::kLeft ? theta - h : theta;
  const Scalar hi = side == Side::kLeft ? theta : theta + h;
  CheckStencil(fn, lo, hi);
  return (ValueOrThrow(fn, hi) - ValueOrThrow(fn, lo)) / h;
}

std::vector<double> OracleSamplePoints(std::size_t count, double lo, double hi,
                                       double exclusion_radius) {
  if (!(lo < hi)) throw UsageError("sample range must satisfy lo < hi");
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<double> points;
  points.reserve(count);
  const std::size_t max_draws = count * 64 + 1024;
  for (std::size_t n = 0; points.size() < count; ++n) {
    if (n >= max_draws) throw UsageError("exclusion radius leaves no room for samples");
    const double u = std::fmod(0.5 + static_cast<double>(n) * golden, 1.0);
    const double theta = lo + (hi - lo) * u;
    if (DistanceToBreakpoint(theta) > exclusion_radius) points.push_back(theta);
  }
  return points;
}

SuiteReport RunEquivalenceSweep(const GridSpec& grid, unsigned threads) {
  if (!grid.start.is_exact()) throw UsageError("equivalence sweep needs an exact grid");
  const std::vector<Scalar> points = grid.Points();
  auto per_point = ParallelMap(points.size(), threads, [&](std::size_t i) {
    const Scalar& theta = points[i];
    const Angle a = ReduceAngle(theta);
    Observations obs;

    const Scalar cos_value = CosPiecewise(a);
    const Scalar sin_value = SinPiecewise(a);
    const ComplexScalar cos_literal = CosClosedLiteralComplex(a);
    const ComplexScalar sin_literal = SinClosedLiteralComplex(a);
    const Scalar zero = theta.Like(0);
    obs.push_back(Exact("literal-closed-form", TrigFunction::kCos, "literal", theta,
                        cos_value, cos_literal.re));
    obs.push_back(Exact("literal-imaginary-part", TrigFunction::kCos, "literal", theta,
                        zero, cos_literal.im));
    obs.push_back(Exact("pseudo-closed-form", TrigFunction::kCos, "pseudo", theta,
                        cos_value, CosPseudo(a)));
    obs.push_back(Exact("literal-closed-form", TrigFunction::kSin, "literal", theta,
                        sin_value, sin_literal.re));
    obs.push_back(Exact("literal-imaginary-part", TrigFunction::kSin, "literal", theta,
                        zero, sin_literal.im));
    obs.push_back(Exact("pseudo-closed-form", TrigFunction::kSin, "pseudo", theta,
                        sin_value, SinPseudo(a)));

    const Scalar one = theta.Like(1);
    auto ratio = [](const Scalar& num, const Scalar& den) {
      return den.is_zero() ? EvalResult::Pole() : EvalResult::Finite(num / den);
    };
    obs.push_back(Exact("ratio-of-sin-cos", TrigFunction::kTan, "ratio", theta,
                        ratio(sin_value, cos_value), Tan(a)));
    obs.push_back(Exact("ratio-of-sin-cos", TrigFunction::kCot, "ratio", theta,
                        ratio(cos_value, sin_value), Cot(a)));
    obs.push_back(Exact("ratio-of-sin-cos", TrigFunction::kSec, "reciprocal", theta,
                        ratio(one, cos_value), Sec(a)));
    obs.push_back(Exact("ratio-of-sin-cos", TrigFunction::kCsc, "reciprocal", theta,
                        ratio(one, sin_value), Csc(a)));
    return obs;
  });
  return Fold("equivalence", per_point);
}

SuiteReport RunOracleSweep(std::span<const double> points, const OracleOptions& options) {
  const Scalar h = Scalar::Float(options.h);
  auto per_point = ParallelMap(points.size(), options.threads, [&](std::size_t i) {
    const Scalar theta = Scalar::Float(points[i]);
    const Angle a = ReduceAngle(theta);
    Observations obs;
    for (TrigFunction fn : kAllFunctions) {
      const DerivResult analytic = Derivative(fn, a);
      if (!analytic.is_finite()) {
        obs.push_back(Predicate("central-difference", fn, theta, false, "smooth",
                                analytic.ToString()));
        continue;
      }
      const double fd = FiniteDifference(fn, theta, h).to_double();
      obs.push_back(Tolerance("central-difference", fn, "direct", points[i],
                              analytic.value().to_double(), fd, options.tolerance));
    }
    return obs;
  });
  return Fold("oracle", per_point);
}

SuiteReport RunCornerChecks(std::span<const double> breakpoints,
                            const OracleOptions& options) {
  const Scalar h = Scalar::Float(options.h);
  std::vector<Observations> per_point;
  for (double b : breakpoints) {
    const Scalar theta = Scalar::Float(b);
    const Angle a = ReduceAngle(theta);
    Observations obs;
    for (TrigFunction fn : kAllFunctions) {
      const DerivResult d = Derivative(fn, a);
      if (d.is_pole()) continue;
      const double left = OneSidedDifference(fn, theta, h, Side::kLeft).to_double();
      const double right = OneSidedDifference(fn, theta, h, Side::kRight).to_double();
      obs.push_back(Tolerance("one-sided-left", fn, d.is_corner() ? "corner" : "smooth",
                              b, d.left().to_double(), left, options.tolerance));
      obs.push_back(Tolerance("one-sided-right", fn, d.is_corner() ? "corner" : "smooth",
                              b, d.right().to_double(), right, options.tolerance));
    }
    per_point.push_back(std::move(obs));
  }
  return Fold("corners", per_point);
}

SuiteReport RunDerivativeSweep(const GridSpec& grid, const OracleOptions& options) {
  if (!grid.start.is_exact()) throw UsageError("derivative sweep needs an exact grid");
  const std::vector<Scalar> points = grid.Points();
  const Scalar h = Scalar::Float(options.h);

  auto per_point = ParallelMap(points.size(), options.threads, [&](std::size_t i) {
    const Scalar& theta = points[i];
    const Angle a = ReduceAngle(theta);
    const Scalar half = theta.Like(1, 2);
    Observations obs;

    for (TrigFunction fn : kAllFunctions) {
      const DerivResult direct = Derivative(fn, a, DerivForm::kDirect);
      for (DerivForm form : {DerivForm::kProduct, DerivForm::kSquared,
                             DerivForm::kQuotientRule}) {
        if (!FormApplies(fn, form)) continue;
        obs.push_back(Exact("form-agreement", fn, FormName(form), theta, direct,
                            Derivative(fn, a, form)));
      }
    }

    // Closed results.
    auto squared = [&](const EvalResult& r, int sign) {
      if (r.is_pole()) return DerivResult::Pole();
      return DerivResult::Finite(theta.Like(sign) * half * r.value() * r.value());
    };
    obs.push_back(Exact("half-sec-squared", TrigFunction::kTan, "direct", theta,
                        squared(Sec(a), 1), DTan(a)));
    obs.push_back(Exact("half-csc-squared", TrigFunction::kCot, "direct", theta,
                        squared(Csc(a), -1), DCot(a)));
    for (TrigFunction fn : {TrigFunction::kSec, TrigFunction::kCsc}) {
      const DerivResult d = Derivative(fn, a);
      if (!d.is_finite()) continue;
      const Scalar f = Evaluate(fn, a).value();
      obs.push_back(Exact("proportional-to-square", fn, "direct", theta,
                          half * f * f, d.value().abs()));
    }
    for (TrigFunction fn : {TrigFunction::kSin, TrigFunction::kCos}) {
      const DerivResult d = Derivative(fn, a);
      const bool ok = d.left().abs() == half && d.right().abs() == half;
      obs.push_back(Predicate("half-slope", fn, theta, ok, "+-1/2", d.ToString()));
    }

    // Float oracle away from breakpoints.
    const double theta_d = theta.to_double();
    if (DistanceToBreakpoint(theta_d) > grid.exclusion_radius) {
      const Scalar theta_f = Scalar::Float(theta_d);
      const Angle af = ReduceAngle(theta_f);
      for (TrigFunction fn : kAllFunctions) {
        const DerivResult analytic = Derivative(fn, af);
        if (!analytic.is_finite()) {
          obs.push_back(Predicate("central-difference", fn, theta_f, false, "smooth",
                                  analytic.ToString()));
          continue;
        }
        const double fd = FiniteDifference(fn, theta_f, h).to_double();
        obs.push_back(Tolerance("central-difference", fn, "direct", theta_d,
                                analytic.value().to_double(), fd, options.tolerance));
      }
    }
    return obs;
  });

  const std::vector<double> breaks = BreakpointsIn(grid);
  SuiteReport corners = RunCornerChecks(breaks, options);
  SuiteReport suite = Fold("derivatives", per_point);
  for (auto& r : corners.reports) suite.reports.push_back(std::move(r));
  return suite;
}

SuiteReport RunIdentitySuite(const GridSpec& grid, unsigned threads) {
  if (!grid.start.is_exact()) throw UsageError("identity suite needs an exact grid");
  const std::vector<Scalar> points = grid.Points();
  auto per_point = ParallelMap(points.size(), threads, [&](std::size_t i) {
    const Scalar& theta = points[i];
    const Angle a = ReduceAngle(theta);
    const Scalar one = theta.Like(1);
    Observations obs;

    const Scalar s = SinPiecewise(a);
    const Scalar c = CosPiecewise(a);
    obs.push_back(Exact("unit-circle", TrigFunction::kSin, "-", theta, one,
                        s.abs() + c.abs()));

    const EvalResult tan = Tan(a);
    const EvalResult sec = Sec(a);
    if (sec.is_finite()) {
      const Scalar& t = tan.value();
      const Scalar& sc = sec.value();
      Scalar lhs, rhs;
      switch (a.quadrant()) {
        case 1: lhs = t + one; rhs = sc; break;
        case 2: lhs = -t + one; rhs = -sc; break;
        case 3: lhs = t + one; rhs = -sc; break;
        default: lhs = -t + one; rhs = sc; break;
      }
      obs.push_back(Exact("quadrant-identity", TrigFunction::kSec,
                          QuadrantIdentityText(a.quadrant()), theta, rhs, lhs));
    }

    const EvalResult cot = Cot(a);
    if (tan.is_finite() && cot.is_finite() && !tan.value().is_zero()) {
      obs.push_back(Exact("tan-cot-reciprocal", TrigFunction::kTan, "-", theta, one,
                          tan.value() * cot.value()));
    }

    const Scalar period = theta.Like(kPeriod);
    for (TrigFunction fn : kAllFunctions) {
      const EvalResult base = Evaluate(fn, a);
      obs.push_back(Exact("period-8", fn, "+8", theta, base, Evaluate(fn, theta + period)));
      obs.push_back(Exact("period-8", fn, "-8", theta, base, Evaluate(fn, theta - period)));
    }
    obs.push_back(Exact("period-4", TrigFunction::kTan, "+4", theta, tan,
                        Evaluate(TrigFunction::kTan, theta + theta.Like(kPiT))));

    obs.push_back(Predicate("range", TrigFunction::kSin, theta, s.abs() <= one, "|sin| <= 1",
                            s.ToString()));
    obs.push_back(Predicate("range", TrigFunction::kCos, theta, c.abs() <= one, "|cos| <= 1",
                            c.ToString()));
    if (sec.is_finite()) {
      obs.push_back(Predicate("range", TrigFunction::kSec, theta, sec.value().abs() >= one,
                              "|sec| >= 1", sec.ToString()));
    }
    const EvalResult csc = Csc(a);
    if (csc.is_finite()) {
      obs.push_back(Predicate("range", TrigFunction::kCsc, theta, csc.value().abs() >= one,
                              "|csc| >= 1", csc.ToString()));
    }
    return obs;
  });
  return Fold("identities", per_point);
}

}  // namespace taxitrig
