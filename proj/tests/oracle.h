#ifndef TAXITRIG_TESTS_ORACLE_H_
#define TAXITRIG_TESTS_ORACLE_H_

// Test-only reference values that do not go through the library's branch
// formulas: (cos, sin) is read off the unit taxicab circle |x| + |y| = 1 by
// walking an L1 arc length of theta counter-clockwise from (1, 0).

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "taxitrig/scalar.h"

namespace taxitrig::testing {

inline Rational FloorRational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return Rational(q);
}

struct CirclePoint {
  Rational x;  // cos
  Rational y;  // sin
};

// Each side of the unit taxicab circle has L1 length 2.
inline CirclePoint WalkUnitCircle(const Rational& theta) {
  static const std::array<std::pair<int, int>, 5> kVertices = {
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}};
  const Rational t = theta - 8 * FloorRational(theta / 8);
  const Rational side = FloorRational(t / 2);
  const int i = side.convert_to<int>();
  const Rational frac = (t - 2 * side) / 2;
  const auto [x0, y0] = kVertices[i];
  const auto [x1, y1] = kVertices[i + 1];
  return {Rational(x0) + frac * (x1 - x0), Rational(y0) + frac * (y1 - y0)};
}

inline std::optional<Rational> Ratio(const Rational& num, const Rational& den) {
  if (den == 0) return std::nullopt;
  return num / den;
}

inline Rational OracleCos(const Rational& t) { return WalkUnitCircle(t).x; }
inline Rational OracleSin(const Rational& t) { return WalkUnitCircle(t).y; }
inline std::optional<Rational> OracleTan(const Rational& t) {
  const auto p = WalkUnitCircle(t);
  return Ratio(p.y, p.x);
}
inline std::optional<Rational> OracleCot(const Rational& t) {
  const auto p = WalkUnitCircle(t);
  return Ratio(p.x, p.y);
}
inline std::optional<Rational> OracleSec(const Rational& t) {
  return Ratio(Rational(1), WalkUnitCircle(t).x);
}
inline std::optional<Rational> OracleCsc(const Rational& t) {
  return Ratio(Rational(1), WalkUnitCircle(t).y);
}

// Central difference of an oracle function in doubles.
template <typename F>
double OracleCentralDifference(F f, double theta, double h) {
  auto eval = [&](double x) {
    return static_cast<double>(*f(Scalar::Float(x).To(Backend::kExact).rational()));
  };
  return (eval(theta + h) - eval(theta - h)) / (2 * h);
}

// Random rationals p/q with |p/q| <= bound, q in [1, max_den].
class RationalGenerator {
 public:
  explicit RationalGenerator(std::uint64_t seed, std::int64_t bound = 24,
                             std::int64_t max_den = 97)
      : rng_(seed), bound_(bound), max_den_(max_den) {}

  Rational Next() {
    std::uniform_int_distribution<std::int64_t> den(1, max_den_);
    const std::int64_t q = den(rng_);
    std::uniform_int_distribution<std::int64_t> num(-bound_ * q, bound_ * q);
    return Rational(Integer(num(rng_)), Integer(q));
  }

  std::int64_t NextInt(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
  std::int64_t bound_;
  std::int64_t max_den_;
};

}  // namespace taxitrig::testing

#endif  // TAXITRIG_TESTS_ORACLE_H_
