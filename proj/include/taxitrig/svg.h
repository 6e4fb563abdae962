#ifndef TAXITRIG_SVG_H_
#define TAXITRIG_SVG_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taxitrig/functions.h"
#include "taxitrig/scalar.h"

namespace taxitrig {

struct PlotOptions {
  Scalar from = Scalar::Exact(0);
  Scalar to = Scalar::Exact(8);
  int samples = 400;     // across the whole range, for curved functions
  double y_limit = 4.0;  // visible value range is [-y_limit, y_limit]
  int width = 800;
  int height = 400;
};

using Vertex = std::pair<double, double>;  // (theta, value)

// One function ready to draw. Each polyline is a maximal piece on which the
// function is smooth; polylines end at corners and before poles. Linear
// branches contribute only their end vertices, so sin and cos vertices land
// exactly on the breakpoints.
struct PlotCurve {
  TrigFunction function = TrigFunction::kSin;
  std::vector<std::vector<Vertex>> polylines;
  std::vector<double> corners;
  std::vector<double> asymptotes;
};

// Throws UsageError unless from < to and samples > 0.
PlotCurve BuildPlotCurve(TrigFunction fn, const PlotOptions& options);

// SVG 1.1 document. Curves are drawn inside a group whose transform maps
// (theta, value) to pixels, so polyline points are in data coordinates:
//   <g class="function" data-function="sec" data-corners="0 4"
//      data-asymptotes="2 6">
//     <polyline class="curve" points="theta,value ..."/>
//     <line class="asymptote" x1="2" .../>
std::string RenderSvg(std::span<const PlotCurve> curves, const PlotOptions& options);

}  // namespace taxitrig

#endif  // TAXITRIG_SVG_H_
