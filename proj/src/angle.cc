#include "taxitrig/angle.h"

#include <cmath>

#include "taxitrig/errors.h"

namespace taxitrig {

TaxicabConstants Constants(Backend backend) {
  return {Scalar::Of(backend, kPiT), Scalar::Of(backend, kPeriod),
          Scalar::Of(backend, kQuarterPeriod)};
}

Angle ReduceAngle(const Scalar& theta) {
  if (!theta.is_finite()) {
    throw DomainError("angle must be finite, got " + theta.ToString());
  }
  const Scalar period = theta.Like(kPeriod);
  Scalar reduced;
  if (theta.is_exact()) {
    reduced = theta - (theta / period).floor() * period;
  } else {
    const double t = theta.to_double();
    double r = t - std::round(t / kPeriod) * kPeriod;
    if (r < 0.0) r += kPeriod;
    // -tiny + 8 rounds to 8, which is 0 on the circle.
    if (r >= kPeriod) r -= kPeriod;
    reduced = Scalar::Float(r);
  }
  const int branch =
      static_cast<int>((reduced / reduced.Like(kQuarterPeriod)).floor().to_int64()) + 1;
  if (branch < 1 || branch > kBranchCount) {
    throw InvariantViolation("branch index out of range for " + theta.ToString());
  }
  return Angle(theta, std::move(reduced), branch);
}

UnitImaginaryPower IPow(long exponent, Backend backend) {
  const long residue = ((exponent % 4) + 4) % 4;
  const Scalar zero = Scalar::Of(backend, 0);
  const Scalar one = Scalar::Of(backend, 1);
  ComplexScalar value;
  switch (residue) {
    case 0: value = {one, zero}; break;
    case 1: value = {zero, one}; break;
    case 2: value = {-one, zero}; break;
    default: value = {zero, -one}; break;
  }
  return {exponent, value};
}

}  // namespace taxitrig
