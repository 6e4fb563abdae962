#include "taxitrig/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "taxitrig/angle.h"
#include "taxitrig/derivatives.h"
#include "taxitrig/errors.h"

namespace taxitrig {
namespace {

constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                         "#9467bd", "#ff7f0e", "#17becf"};
constexpr int kMargin = 40;

std::string Num(double x) {
  if (x == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string JoinNumbers(const std::vector<double>& xs) {
  std::string out;
  for (double x : xs) {
    if (!out.empty()) out += ' ';
    out += Num(x);
  }
  return out;
}

bool IsLinear(TrigFunction fn) {
  return fn == TrigFunction::kSin || fn == TrigFunction::kCos;
}

}  // namespace

PlotCurve BuildPlotCurve(TrigFunction fn, const PlotOptions& options) {
  const Scalar& from = options.from;
  const Scalar& to = options.to;
  if (from.backend() != to.backend()) throw UsageError("plot range backends differ");
  if (!(from < to)) throw UsageError("plot range must satisfy from < to");
  if (options.samples <= 0) throw UsageError("samples must be positive");

  const Scalar two = from.Like(kQuarterPeriod);
  std::vector<Scalar> knots{from};
  Scalar b = ((from / two).floor() + from.Like(1)) * two;
  for (; b < to; b += two) knots.push_back(b);
  knots.push_back(to);

  const double clip = 4.0 * options.y_limit;
  const Scalar span = to - from;

  PlotCurve curve;
  curve.function = fn;
  std::vector<Vertex> current;
  auto close = [&] {
    if (current.size() >= 2) curve.polylines.push_back(std::move(current));
    current.clear();
  };
  auto classify = [&](const Scalar& theta) {
    return ClassifyDifferentiability(fn, ReduceAngle(theta));
  };

  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Scalar& knot = knots[i];
    const Differentiability kind = classify(knot);
    if (kind == Differentiability::kPole) curve.asymptotes.push_back(knot.to_double());
    if (kind == Differentiability::kCorner) curve.corners.push_back(knot.to_double());
    if (i > 0 && kind != Differentiability::kSmooth) close();
    if (i + 1 == knots.size()) break;

    const Scalar& lo = knot;
    const Scalar& hi = knots[i + 1];
    const Scalar mid = (lo + hi) / lo.Like(2);
    const Angle mid_angle = ReduceAngle(mid);
    const int k = mid_angle.branch();
    const Scalar offset = mid - mid_angle.reduced();  // multiple of 8

    std::int64_t pieces = 1;
    if (!IsLinear(fn)) {
      const double share = ((hi - lo) / span).to_double();
      pieces = std::max<std::int64_t>(8, static_cast<std::int64_t>(
                                             std::ceil(options.samples * share)));
    }
    for (std::int64_t j = 0; j <= pieces; ++j) {
      const Scalar theta = lo + (hi - lo) * lo.Like(j, pieces);
      const EvalResult r = EvaluateOnBranch(fn, theta - offset, k);
      if (r.is_pole()) continue;
      const double x = theta.to_double();
      const double y = r.value().to_double();
      if (std::fabs(y) > clip) continue;
      if (!current.empty() && current.back().first == x) continue;
      current.emplace_back(x, y);
    }
  }
  close();
  return curve;
}

std::string RenderSvg(std::span<const PlotCurve> curves, const PlotOptions& options) {
  const double from = options.from.to_double();
  const double to = options.to.to_double();
  const double ylim = options.y_limit;
  const double w = options.width;
  const double h = options.height;
  const double sx = (w - 2 * kMargin) / (to - from);
  const double sy = (h - 2 * kMargin) / (2 * ylim);
  auto px = [&](double theta) { return kMargin + (theta - from) * sx; };
  auto py = [&](double value) { return h / 2 - value * sy; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + Num(w) +
         "\" height=\"" + Num(h) + "\" viewBox=\"0 0 " + Num(w) + " " + Num(h) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + Num(w) + "\" height=\"" + Num(h) +
         "\" fill=\"white\"/>\n";

  // Tick labels at the breakpoints, in pixel space.
  svg += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  for (double t = std::ceil(from / kQuarterPeriod) * kQuarterPeriod; t <= to;
       t += kQuarterPeriod) {
    svg += "  <text x=\"" + Num(px(t)) + "\" y=\"" + Num(py(0) + 14) +
           "\" text-anchor=\"middle\">" + Num(t) + "</text>\n";
  }
  for (double v = -std::floor(ylim); v <= ylim; v += 1.0) {
    if (v == 0.0) continue;
    svg += "  <text x=\"" + Num(kMargin - 6) + "\" y=\"" + Num(py(v) + 3) +
           "\" text-anchor=\"end\">" + Num(v) + "</text>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"plot\" transform=\"matrix(" + Num(sx) + " 0 0 " + Num(-sy) + " " +
         Num(kMargin - from * sx) + " " + Num(h / 2) + ")\">\n";
  svg += "<defs><clipPath id=\"plot-area\" clipPathUnits=\"userSpaceOnUse\"><rect x=\"" +
         Num(from) + "\" y=\"" + Num(-ylim) + "\" width=\"" + Num(to - from) +
         "\" height=\"" + Num(2 * ylim) + "\"/></clipPath></defs>\n";
  svg += "<g clip-path=\"url(#plot-area)\">\n";
  svg += "<line class=\"axis\" x1=\"" + Num(from) + "\" y1=\"0\" x2=\"" + Num(to) +
         "\" y2=\"0\" stroke=\"#888\" stroke-width=\"1\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";
  if (from <= 0.0 && 0.0 <= to) {
    svg += "<line class=\"axis\" x1=\"0\" y1=\"" + Num(-ylim) + "\" x2=\"0\" y2=\"" +
           Num(ylim) + "\" stroke=\"#888\" stroke-width=\"1\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";
  }

  std::size_t color = 0;
  for (const PlotCurve& curve : curves) {
    const std::string_view stroke = kPalette[color++ % std::size(kPalette)];
    svg += "<g class=\"function\" data-function=\"" + std::string(FunctionName(curve.function)) +
           "\" data-corners=\"" + JoinNumbers(curve.corners) + "\" data-asymptotes=\"" +
           JoinNumbers(curve.asymptotes) + "\" stroke=\"" + std::string(stroke) +
           "\" fill=\"none\">\n";
    for (double a : curve.asymptotes) {
      svg += "  <line class=\"asymptote\" x1=\"" + Num(a) + "\" y1=\"" + Num(-ylim) +
             "\" x2=\"" + Num(a) + "\" y2=\"" + Num(ylim) +
             "\" stroke-width=\"1\" stroke-dasharray=\"4 4\" "
             "vector-effect=\"non-scaling-stroke\"/>\n";
    }
    for (const auto& polyline : curve.polylines) {
      svg += "  <polyline class=\"curve\" stroke-width=\"2\" "
             "vector-effect=\"non-scaling-stroke\" points=\"";
      for (std::size_t i = 0; i < polyline.size(); ++i) {
        if (i) svg += ' ';
        svg += Num(polyline[i].first) + "," + Num(polyline[i].second);
      }
      svg += "\"/>\n";
    }
    svg += "</g>\n";
  }
  svg += "</g>\n</g>\n";

  // Legend.
  svg += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  color = 0;
  double y = 16;
  for (const PlotCurve& curve : curves) {
    const std::string_view stroke = kPalette[color++ % std::size(kPalette)];
    svg += "  <text x=\"" + Num(w - kMargin) + "\" y=\"" + Num(y) +
           "\" text-anchor=\"end\" fill=\"" + std::string(stroke) + "\">" +
           std::string(FunctionName(curve.function)) + "</text>\n";
    y += 14;
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace taxitrig
