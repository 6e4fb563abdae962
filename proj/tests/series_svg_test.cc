#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "taxitrig/errors.h"
#include "taxitrig/series.h"
#include "taxitrig/svg.h"

namespace taxitrig {
namespace {

Scalar Q(std::int64_t num, std::int64_t den = 1) { return Scalar::Exact(num, den); }

TEST_CASE("tabulate sin at the vertices") {
  const Series s = Tabulate(TrigFunction::kSin, Q(0), Q(8), Q(2));
  CHECK(SeriesToCsv(s) ==
        "theta,value,flag\n"
        "0,0,ok\n"
        "2,1,corner-adjacent\n"
        "4,0,ok\n"
        "6,-1,corner-adjacent\n");
  CHECK(s.segment_breaks.size() == 4);
  CHECK(s.asymptotes.empty());
}

TEST_CASE("tabulate tan keeps pole rows") {
  const Series s = Tabulate(TrigFunction::kTan, Q(0), Q(4), Q(1));
  CHECK(SeriesToCsv(s) ==
        "theta,value,flag\n"
        "0,0,ok\n"
        "1,1,ok\n"
        "2,,pole\n"
        "3,-1,ok\n");
  REQUIRE(s.asymptotes.size() == 1);
  CHECK(s.asymptotes[0] == Q(2));
}

TEST_CASE("tabulate with a step wider than the range") {
  const Series s = Tabulate(TrigFunction::kCos, Q(0), Q(1, 2), Q(1));
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].value == Q(1));
  CHECK_THROWS_AS(Tabulate(TrigFunction::kCos, Q(1), Q(0), Q(1)), UsageError);
  CHECK_THROWS_AS(Tabulate(TrigFunction::kCos, Q(0), Q(1), Q(0)), UsageError);
}

TEST_CASE("json mirrors the series") {
  const Series s = Tabulate(TrigFunction::kSec, Q(1), Q(3), Q(1, 2));
  const std::string text = SeriesToJson(s);
  CHECK(text == SeriesToJson(Tabulate(TrigFunction::kSec, Q(1), Q(3), Q(1, 2))));
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["function"] == "sec");
  REQUIRE(doc["points"].size() == 4);
  CHECK(doc["points"][0] == nlohmann::json::array({"1", "2"}));
  CHECK(doc["points"][2][1].is_null());
  CHECK(doc["asymptotes"] == nlohmann::json::array({"2"}));
  CHECK(doc["segment_breaks"] == nlohmann::json::array({"2"}));

  const Series f = Tabulate(TrigFunction::kCos, Scalar::Float(0.0), Scalar::Float(1.0),
                            Scalar::Float(0.5));
  const nlohmann::json fdoc = nlohmann::json::parse(SeriesToJson(f));
  CHECK(fdoc["points"][1][0] == 0.5);
  CHECK(fdoc["points"][1][1] == 0.75);
}

TEST_CASE("plot curve of cos has vertices exactly at the breakpoints") {
  const PlotCurve c = BuildPlotCurve(TrigFunction::kCos, PlotOptions{});
  REQUIRE(c.polylines.size() == 2);
  CHECK(c.polylines[0] == std::vector<Vertex>{{0, 1}, {2, 0}, {4, -1}});
  CHECK(c.polylines[1] == std::vector<Vertex>{{4, -1}, {6, 0}, {8, 1}});
  CHECK(c.corners == std::vector<double>{0, 4, 8});
  CHECK(c.asymptotes.empty());
}

TEST_CASE("plot curve of tan splits at the asymptotes") {
  const PlotCurve c = BuildPlotCurve(TrigFunction::kTan, PlotOptions{});
  CHECK(c.asymptotes == std::vector<double>{2, 6});
  CHECK(c.corners.empty());
  REQUIRE(c.polylines.size() == 3);
  for (const auto& line : c.polylines) {
    for (std::size_t i = 1; i < line.size(); ++i) {
      CHECK(line[i].first > line[i - 1].first);
      // tan increases on every branch.
      CHECK(line[i].second > line[i - 1].second);
    }
  }
  CHECK(c.polylines[0].front() == Vertex{0, 0});
  CHECK(c.polylines[1].front().first > 2.0);
  CHECK(c.polylines[1].back().first < 6.0);
}

TEST_CASE("plot options are validated") {
  PlotOptions bad;
  bad.samples = 0;
  CHECK_THROWS_AS(BuildPlotCurve(TrigFunction::kSin, bad), UsageError);
  PlotOptions reversed;
  reversed.from = Q(8);
  reversed.to = Q(0);
  CHECK_THROWS_AS(BuildPlotCurve(TrigFunction::kSin, reversed), UsageError);
}

TEST_CASE("svg document structure") {
  const PlotOptions options;
  const std::vector<PlotCurve> curves = {BuildPlotCurve(TrigFunction::kSec, options),
                                         BuildPlotCurve(TrigFunction::kCos, options)};
  const std::string svg = RenderSvg(curves, options);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("data-function=\"sec\"") != std::string::npos);
  CHECK(svg.find("data-corners=\"0 4 8\"") != std::string::npos);
  CHECK(svg.find("data-asymptotes=\"2 6\"") != std::string::npos);
  CHECK(svg.find("points=\"0,1 2,0 4,-1\"") != std::string::npos);
  CHECK(svg.find("class=\"asymptote\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == RenderSvg(curves, options));
}

}  // namespace
}  // namespace taxitrig
