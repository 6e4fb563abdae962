#include <doctest.h>

#include <optional>
#include <string>

#include "oracle.h"
#include "taxitrig/errors.h"
#include "taxitrig/functions.h"

namespace taxitrig {
namespace {

using testing::OracleCos;
using testing::OracleSin;

Angle A(std::int64_t num, std::int64_t den = 1) {
  return ReduceAngle(Scalar::Exact(num, den));
}

Scalar Q(std::int64_t num, std::int64_t den = 1) { return Scalar::Exact(num, den); }

EvalResult FromOracle(const std::optional<Rational>& r) {
  return r ? EvalResult::Finite(Scalar::Exact(*r)) : EvalResult::Pole();
}

TEST_CASE("function names round-trip") {
  for (TrigFunction fn : kAllFunctions) {
    CHECK(ParseFunction(FunctionName(fn)) == fn);
  }
  CHECK_FALSE(ParseFunction("tangent").has_value());
  CHECK_FALSE(ParseFunction("SIN").has_value());
}

TEST_CASE("oracle walk reproduces the piecewise display") {
  // Sanity check of the test oracle itself.
  CHECK(OracleCos(Rational(0)) == 1);
  CHECK(OracleSin(Rational(2)) == 1);
  CHECK(OracleCos(Rational(4)) == -1);
  CHECK(OracleSin(Rational(6)) == -1);
  CHECK(OracleCos(Rational(9, 2)) == Rational(-3, 4));
}

TEST_CASE("cos_piecewise examples") {
  CHECK(CosPiecewise(A(0)) == Q(1));
  CHECK(CosPiecewise(A(4)) == Q(-1));
  CHECK(CosPiecewise(A(2)) == Q(0));
  CHECK(CosPiecewise(A(9)) == Q(1, 2));
  CHECK(CosPiecewise(A(6)) == Q(0));
}

TEST_CASE("sin_piecewise examples") {
  CHECK(SinPiecewise(A(2)) == Q(1));
  CHECK(SinPiecewise(A(0)) == Q(0));
  CHECK(SinPiecewise(A(6)) == Q(-1));
  CHECK(SinPiecewise(A(3)) == Q(1, 2));
  CHECK(SinPiecewise(A(4)) == Q(0));
  // -1 is in the theta/2 branch of the [-2, 2) display.
  CHECK(SinPiecewise(A(-1)) == Q(-1, 2));
}

TEST_CASE("literal closed form examples") {
  CHECK(CosClosedLiteral(A(1)) == Q(1, 2));
  CHECK(CosClosedLiteral(A(0)) == Q(1));
  CHECK(CosClosedLiteral(A(5)) == Q(-1, 2));
  CHECK(SinClosedLiteral(A(1)) == Q(1, 2));
  CHECK(SinClosedLiteral(A(0)) == Q(0));
  CHECK(SinClosedLiteral(A(5)) == Q(-1, 2));
}

TEST_CASE("literal closed form is evaluated with complex arithmetic and is real") {
  for (int num = 0; num < 64; ++num) {
    const Angle a = A(num, 8);
    CAPTURE(num);
    const ComplexScalar c = CosClosedLiteralComplex(a);
    const ComplexScalar s = SinClosedLiteralComplex(a);
    CHECK(c.im == Q(0));
    CHECK(s.im == Q(0));
  }
}

TEST_CASE("pseudo closed form examples") {
  CHECK(CosPseudo(A(1)) == Q(1, 2));
  CHECK(SinPseudo(A(1)) == Q(1, 2));
  CHECK(CosPseudo(A(6)) == Q(0));
  // k = 1 reproduces cos = 1 - theta/2, sin = theta/2 on [0, 2).
  for (int num = 0; num < 16; ++num) {
    const Scalar t = Q(num, 8);
    CHECK(CosPseudo(ReduceAngle(t)) == Q(1) - t / Q(2));
    CHECK(SinPseudo(ReduceAngle(t)) == t / Q(2));
  }
}

TEST_CASE("branch pieces carry the expected signs") {
  // k=3: cos = i^2 (3 - theta/2), sin = i^2 (1 - 3 + theta/2)
  const LinearBranch c3 = CosBranch(3, Backend::kExact);
  CHECK(c3.sign == Q(-1));
  CHECK(c3.intercept == Q(3));
  CHECK(c3.slope == Q(-1, 2));
  CHECK(c3.derivative() == Q(1, 2));
  const LinearBranch s4 = SinBranch(4, Backend::kExact);
  CHECK(s4.sign == Q(-1));
  CHECK(s4.intercept == Q(4));
  CHECK_THROWS_AS(CosBranch(0, Backend::kExact), UsageError);
  CHECK_THROWS_AS(SinBranch(5, Backend::kExact), UsageError);
}

TEST_CASE("tan examples") {
  CHECK(Tan(A(0)) == EvalResult::Finite(Q(0)));
  CHECK(Tan(A(2)).is_pole());
  CHECK(Tan(A(6)).is_pole());
  CHECK(Tan(A(1)) == EvalResult::Finite(Q(1)));
  CHECK(Tan(A(3)) == EvalResult::Finite(Q(-1)));
}

TEST_CASE("cot examples") {
  CHECK(Cot(A(1)) == EvalResult::Finite(Q(1)));
  CHECK(Cot(A(0)).is_pole());
  CHECK(Cot(A(4)).is_pole());
  CHECK(Cot(A(2)) == EvalResult::Finite(Q(0)));
}

TEST_CASE("sec and csc examples") {
  CHECK(Sec(A(0)) == EvalResult::Finite(Q(1)));
  CHECK(Sec(A(1)) == EvalResult::Finite(Q(2)));
  CHECK(Sec(A(4)) == EvalResult::Finite(Q(-1)));
  CHECK(Sec(A(2)).is_pole());
  CHECK(Csc(A(2)) == EvalResult::Finite(Q(1)));
  CHECK(Csc(A(0)).is_pole());
  CHECK(Csc(A(4)).is_pole());
}

TEST_CASE("poles occur exactly at the zeros of the defining denominator") {
  for (int num = 0; num < 8 * 16; ++num) {
    const Angle a = A(num, 16);
    const Scalar& t = a.reduced();
    const bool cos_zero = t == Q(2) || t == Q(6);
    const bool sin_zero = t == Q(0) || t == Q(4);
    CAPTURE(t.ToString());
    CHECK(Tan(a).is_pole() == cos_zero);
    CHECK(Sec(a).is_pole() == cos_zero);
    CHECK(Cot(a).is_pole() == sin_zero);
    CHECK(Csc(a).is_pole() == sin_zero);
  }
}

TEST_CASE("pole is a value and value() on it is a usage error") {
  const EvalResult pole = Tan(A(2));
  CHECK(pole.ToString() == "POLE");
  CHECK_THROWS_AS(pole.value(), UsageError);
}

TEST_CASE("float mode near a pole returns large finite values") {
  const EvalResult near = Tan(ReduceAngle(Scalar::Float(2.0 - 1e-9)));
  REQUIRE(near.is_finite());
  CHECK(near.value().to_double() > 1e8);
  CHECK(Tan(ReduceAngle(Scalar::Float(2.0))).is_pole());
}

TEST_CASE("property: all representations match the unit-circle oracle") {
  testing::RationalGenerator gen(314, 40);
  for (int i = 0; i < 1000; ++i) {
    const Rational r = gen.Next();
    const Angle a = ReduceAngle(Scalar::Exact(r));
    CAPTURE(a.raw().ToString());
    const Scalar cos_expected = Scalar::Exact(OracleCos(r));
    const Scalar sin_expected = Scalar::Exact(OracleSin(r));
    CHECK(CosPiecewise(a) == cos_expected);
    CHECK(CosClosedLiteral(a) == cos_expected);
    CHECK(CosPseudo(a) == cos_expected);
    CHECK(SinPiecewise(a) == sin_expected);
    CHECK(SinClosedLiteral(a) == sin_expected);
    CHECK(SinPseudo(a) == sin_expected);
    CHECK(Tan(a) == FromOracle(testing::OracleTan(r)));
    CHECK(Cot(a) == FromOracle(testing::OracleCot(r)));
    CHECK(Sec(a) == FromOracle(testing::OracleSec(r)));
    CHECK(Csc(a) == FromOracle(testing::OracleCsc(r)));
  }
}

TEST_CASE("property: periodicity, unit circle, quadrant identities, range") {
  testing::RationalGenerator gen(2718, 16);
  const Scalar one = Q(1);
  for (int i = 0; i < 800; ++i) {
    const Scalar theta = Scalar::Exact(gen.Next());
    const Angle a = ReduceAngle(theta);
    CAPTURE(theta.ToString());
    for (TrigFunction fn : kAllFunctions) {
      CHECK(Evaluate(fn, theta + Q(8)) == Evaluate(fn, a));
    }
    CHECK(Evaluate(TrigFunction::kTan, theta + Q(4)) == Tan(a));

    const Scalar s = SinPiecewise(a);
    const Scalar c = CosPiecewise(a);
    CHECK(s.abs() + c.abs() == one);
    CHECK(s.abs() <= one);
    CHECK(c.abs() <= one);

    const EvalResult tan = Tan(a);
    const EvalResult sec = Sec(a);
    if (sec.is_finite()) {
      const Scalar& t = tan.value();
      const Scalar& sc = sec.value();
      CHECK(sc.abs() >= one);
      switch (a.quadrant()) {
        case 1: CHECK(t + one == sc); break;
        case 2: CHECK(-t + one == -sc); break;
        case 3: CHECK(t + one == -sc); break;
        case 4: CHECK(-t + one == sc); break;
      }
    }
    const EvalResult csc = Csc(a);
    if (csc.is_finite()) CHECK(csc.value().abs() >= one);
    const EvalResult cot = Cot(a);
    if (tan.is_finite() && cot.is_finite() && !tan.value().is_zero()) {
      CHECK(tan.value() * cot.value() == one);
    }
  }
}

TEST_CASE("quadrant identities at the worked points") {
  // QII at 3: -tan + 1 = 2 = -sec; QIV at 7: -tan + 1 = 2 = sec.
  CHECK(-Tan(A(3)).value() + Q(1) == Q(2));
  CHECK(-Sec(A(3)).value() == Q(2));
  CHECK(-Tan(A(7)).value() + Q(1) == Q(2));
  CHECK(Sec(A(7)).value() == Q(2));
}

TEST_CASE("float backend agrees with exact backend on dyadic points") {
  for (int num = -64; num < 64; ++num) {
    const Scalar exact = Q(num, 8);
    const Scalar fp = Scalar::Float(num / 8.0);
    for (TrigFunction fn : kAllFunctions) {
      const EvalResult e = Evaluate(fn, exact);
      const EvalResult f = Evaluate(fn, fp);
      CHECK(e.is_pole() == f.is_pole());
      if (e.is_finite()) CHECK(e.value().to_double() == doctest::Approx(f.value().to_double()));
    }
  }
}

}  // namespace
}  // namespace taxitrig
