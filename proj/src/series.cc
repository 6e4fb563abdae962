#include "taxitrig/series.h"

#include <json.hpp>

#include "taxitrig/angle.h"
#include "taxitrig/derivatives.h"
#include "taxitrig/errors.h"
#include "taxitrig/verification.h"

namespace taxitrig {
namespace {

using Json = nlohmann::ordered_json;

Json ToJson(const Scalar& x) {
  if (x.is_exact()) return x.ToString();
  return x.to_double();
}

}  // namespace

std::string_view PointFlagName(PointFlag flag) {
  switch (flag) {
    case PointFlag::kOk: return "ok";
    case PointFlag::kPole: return "pole";
    case PointFlag::kCornerAdjacent: return "corner-adjacent";
  }
  return "?";
}

Series Tabulate(TrigFunction fn, const Scalar& from, const Scalar& to,
                const Scalar& step) {
  GridSpec grid;
  grid.start = from;
  grid.end = to;
  grid.step = step;

  Series series;
  series.function = fn;
  for (Scalar& theta : grid.Points()) {
    const Angle a = ReduceAngle(theta);
    const EvalResult value = Evaluate(fn, a);
    SeriesPoint point{std::move(theta), std::nullopt, PointFlag::kOk};
    if (value.is_pole()) {
      point.flag = PointFlag::kPole;
    } else {
      point.value = value.value();
      if (ClassifyDifferentiability(fn, a) == Differentiability::kCorner) {
        point.flag = PointFlag::kCornerAdjacent;
      }
    }
    series.points.push_back(std::move(point));
  }

  const Scalar two = from.Like(kQuarterPeriod);
  Scalar b = (from / two).floor() * two;
  if (b < from) b += two;
  for (; b < to; b += two) {
    series.segment_breaks.push_back(b);
    if (Evaluate(fn, b).is_pole()) series.asymptotes.push_back(b);
  }
  return series;
}

std::string SeriesToCsv(const Series& series) {
  std::string out = "theta,value,flag\n";
  for (const SeriesPoint& p : series.points) {
    out += p.theta.ToString();
    out += ',';
    if (p.value) out += p.value->ToString();
    out += ',';
    out += PointFlagName(p.flag);
    out += '\n';
  }
  return out;
}

std::string SeriesToJson(const Series& series) {
  Json points = Json::array();
  for (const SeriesPoint& p : series.points) {
    points.push_back({ToJson(p.theta), p.value ? ToJson(*p.value) : Json()});
  }
  Json breaks = Json::array();
  for (const Scalar& b : series.segment_breaks) breaks.push_back(ToJson(b));
  Json asymptotes = Json::array();
  for (const Scalar& b : series.asymptotes) asymptotes.push_back(ToJson(b));

  Json doc;
  doc["function"] = FunctionName(series.function);
  doc["points"] = points;
  doc["segment_breaks"] = breaks;
  doc["asymptotes"] = asymptotes;
  return doc.dump(2) + "\n";
}

}  // namespace taxitrig
