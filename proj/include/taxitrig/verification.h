#ifndef TAXITRIG_VERIFICATION_H_
#define TAXITRIG_VERIFICATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taxitrig/functions.h"
#include "taxitrig/scalar.h"

namespace taxitrig {

// Evenly spaced points start, start+step, ... < end. Exact grids hit the
// breakpoints exactly whenever step divides 2. The sweeps below require an
// exact grid. exclusion_radius only affects float-oracle comparisons.
struct GridSpec {
  Scalar start = Scalar::Exact(0);
  Scalar end = Scalar::Exact(8);
  Scalar step = Scalar::Exact(1, 128);
  double exclusion_radius = 1e-3;

  // Throws UsageError unless step > 0, start < end and backends agree.
  std::vector<Scalar> Points() const;
};

struct OracleOptions {
  double h = 1e-6;
  double tolerance = 1e-6;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Failure {
  std::string theta;
  std::string expected;
  std::string actual;
  std::string form;
};

// Results of one check for one function. Errors are reported as doubles;
// exact checks contribute zero unless they fail.
struct DiffReport {
  std::string check;
  TrigFunction function = TrigFunction::kSin;
  std::size_t points_checked = 0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::string name;
  std::vector<DiffReport> reports;  // ordered by (check, function)

  bool passed() const;
  std::size_t points_checked() const;
  std::size_t failure_count() const;
  double max_abs_error() const;
  double max_rel_error() const;
  // Null when no DiffReport matches.
  const DiffReport* Find(std::string_view check, TrigFunction fn) const;
};

// Pass when either the absolute or the relative error is within tolerance.
bool WithinTolerance(double expected, double actual, double tolerance);

// (f(theta+h) - f(theta-h)) / (2h). Throws OracleInapplicable when a
// breakpoint lies strictly inside (theta-h, theta+h) or f has a pole at any
// stencil point.
Scalar FiniteDifference(TrigFunction fn, const Scalar& theta, const Scalar& h);

enum class Side { kLeft, kRight };
// Backward (f(theta) - f(theta-h)) / h or forward (f(theta+h) - f(theta)) / h.
// The open stencil interval must not contain a breakpoint.
Scalar OneSidedDifference(TrigFunction fn, const Scalar& theta, const Scalar& h,
                          Side side);

// Deterministic low-discrepancy points in [lo, hi) farther than
// exclusion_radius from every multiple of 2.
std::vector<double> OracleSamplePoints(std::size_t count, double lo, double hi,
                                       double exclusion_radius);

// Piecewise, literal closed form and pseudo closed form of sin and cos agree
// exactly (and the literal form is real); tan, cot, sec, csc agree with the
// corresponding ratios of piecewise sin and cos. Requires an exact grid.
SuiteReport RunEquivalenceSweep(const GridSpec& grid, unsigned threads = 0);

// Exact cross-check of every applicable derivative form against the direct
// derivative and the closed results (tan' = sec^2/2, cot' = -csc^2/2,
// |sec'| = sec^2/2, |csc'| = csc^2/2); float central-difference oracle at
// grid points farther than exclusion_radius from a breakpoint; one-sided
// difference checks at every corner in the grid's span.
SuiteReport RunDerivativeSweep(const GridSpec& grid, const OracleOptions& options = {});

// Central-difference oracle at explicit float points for all six functions.
SuiteReport RunOracleSweep(std::span<const double> points,
                           const OracleOptions& options = {});

// Backward and forward differences at the given breakpoints (multiples of 2)
// against the one-sided derivatives, for every function without a pole there.
SuiteReport RunCornerChecks(std::span<const double> breakpoints,
                            const OracleOptions& options = {});

// |sin|+|cos| = 1, quadrant relations between tan and sec, tan*cot = 1,
// period 8 for all six functions and period 4 for tan, range bounds.
SuiteReport RunIdentitySuite(const GridSpec& grid, unsigned threads = 0);

}  // namespace taxitrig

#endif  // TAXITRIG_VERIFICATION_H_
