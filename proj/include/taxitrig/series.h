#ifndef TAXITRIG_SERIES_H_
#define TAXITRIG_SERIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxitrig/functions.h"
#include "taxitrig/scalar.h"

namespace taxitrig {

enum class PointFlag { kOk, kPole, kCornerAdjacent };
std::string_view PointFlagName(PointFlag flag);

struct SeriesPoint {
  Scalar theta;
  std::optional<Scalar> value;  // empty at a pole
  PointFlag flag = PointFlag::kOk;
};

// Sampled values of one function. segment_breaks are the multiples of 2 in
// [from, to) where the branch changes; asymptotes are the poles there.
struct Series {
  TrigFunction function = TrigFunction::kSin;
  std::vector<SeriesPoint> points;
  std::vector<Scalar> segment_breaks;
  std::vector<Scalar> asymptotes;
};

// Points from, from+step, ... < to. A point on a pole keeps its row with an
// empty value; a point on a corner of fn is flagged corner-adjacent.
// Throws UsageError unless from < to and step > 0.
Series Tabulate(TrigFunction fn, const Scalar& from, const Scalar& to,
                const Scalar& step);

// Header "theta,value,flag", LF line endings.
std::string SeriesToCsv(const Series& series);
// {"function", "points": [[theta, value|null], ...], "segment_breaks",
// "asymptotes"}. Exact series use "p/q" strings, float series use numbers.
std::string SeriesToJson(const Series& series);

}  // namespace taxitrig

#endif  // TAXITRIG_SERIES_H_
