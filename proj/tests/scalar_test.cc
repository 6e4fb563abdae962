#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracle.h"
#include "taxitrig/errors.h"
#include "taxitrig/scalar.h"

namespace taxitrig {
namespace {

TEST_CASE("exact values are stored reduced with a positive denominator") {
  const Scalar x = Scalar::Exact(6, -8);
  CHECK(x.ToString() == "-3/4");
  CHECK(boost::multiprecision::denominator(x.rational()) == 4);
  CHECK(Scalar::Exact(10, 5).ToString() == "2");
  CHECK(Scalar::Exact(0, -3).ToString() == "0");
}

TEST_CASE("exact arithmetic stays exact") {
  const Scalar third = Scalar::Exact(1, 3);
  const Scalar sum = third + third + third;
  CHECK(sum.is_exact());
  CHECK(sum == Scalar::Exact(1));
  CHECK((Scalar::Exact(1, 2) * Scalar::Exact(2, 3)).ToString() == "1/3");
  CHECK((Scalar::Exact(1, 2) / Scalar::Exact(-1, 4)).ToString() == "-2");
  CHECK((-Scalar::Exact(5, 7)).ToString() == "-5/7");
}

TEST_CASE("mixed backends are rejected") {
  const Scalar e = Scalar::Exact(1);
  const Scalar f = Scalar::Float(1.0);
  CHECK_THROWS_AS(e + f, BackendMismatch);
  CHECK_THROWS_AS(e - f, BackendMismatch);
  CHECK_THROWS_AS(e * f, BackendMismatch);
  CHECK_THROWS_AS(f / e, BackendMismatch);
  CHECK_THROWS_AS((void)(e == f), BackendMismatch);
  CHECK_THROWS_AS((void)(e < f), BackendMismatch);
  CHECK_THROWS_AS(f.rational(), BackendMismatch);
}

TEST_CASE("division by zero is a domain error in both backends") {
  CHECK_THROWS_AS(Scalar::Exact(1) / Scalar::Exact(0), DomainError);
  CHECK_THROWS_AS(Scalar::Float(1.0) / Scalar::Float(0.0), DomainError);
  CHECK_THROWS_AS(Scalar::Exact(1, 0), DomainError);
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(Scalar::Exact(7, 2).floor() == Scalar::Exact(3));
  CHECK(Scalar::Exact(-7, 2).floor() == Scalar::Exact(-4));
  CHECK(Scalar::Exact(-4).floor() == Scalar::Exact(-4));
  CHECK(Scalar::Float(-0.5).floor() == Scalar::Float(-1.0));
}

TEST_CASE("parsing rationals and decimals") {
  CHECK(Scalar::Parse("9/2", Backend::kExact).ToString() == "9/2");
  CHECK(Scalar::Parse("-6/4", Backend::kExact).ToString() == "-3/2");
  CHECK(Scalar::Parse("0.125", Backend::kExact).ToString() == "1/8");
  CHECK(Scalar::Parse("-1.5e-2", Backend::kExact).ToString() == "-3/200");
  CHECK(Scalar::Parse("2E3", Backend::kExact).ToString() == "2000");
  CHECK(Scalar::Parse("+3", Backend::kExact).ToString() == "3");
  CHECK(Scalar::Parse("0.1", Backend::kFloat).to_double() == 0.1);
  CHECK(Scalar::Parse("1/3", Backend::kFloat).to_double() == 1.0 / 3.0);
  CHECK(Scalar::Parse("+2.5", Backend::kFloat).to_double() == 2.5);

  for (const char* bad : {"", "x", "1/", "/2", "1/0", "nan", "inf", "1.2.3", "1e", "0x10",
                          "1 ", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::Parse(bad, Backend::kExact), ParseError);
    CHECK_THROWS_AS(Scalar::Parse(bad, Backend::kFloat), ParseError);
  }
}

TEST_CASE("float formatting uses 17 significant digits") {
  CHECK(Scalar::Float(2.0).ToString() == "2");
  CHECK(Scalar::Float(0.1).ToString() == "0.10000000000000001");
  CHECK(Scalar::Float(-0.0).ToString() == "0");
}

TEST_CASE("float to exact conversion is lossless") {
  testing::RationalGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    const double d = gen.Next().convert_to<double>();
    const Scalar exact = Scalar::Float(d).To(Backend::kExact);
    CHECK(exact.to_double() == d);
  }
  CHECK(Scalar::Float(0.1).To(Backend::kExact) != Scalar::Exact(1, 10));
  CHECK_THROWS_AS(Scalar::Float(std::numeric_limits<double>::infinity()).To(Backend::kExact),
                  DomainError);
}

TEST_CASE("property: exact field identities") {
  testing::RationalGenerator gen(11);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = Scalar::Exact(gen.Next());
    const Scalar b = Scalar::Exact(gen.Next());
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a * b / b == a);
    if (a.to_double() < b.to_double()) CHECK(a < b);
    CHECK(a.floor() <= a);
    CHECK(a < a.floor() + Scalar::Exact(1));
  }
}

}  // namespace
}  // namespace taxitrig
