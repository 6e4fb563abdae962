#ifndef TAXITRIG_ANGLE_H_
#define TAXITRIG_ANGLE_H_

#include "taxitrig/scalar.h"

namespace taxitrig {

// The taxicab unit circle has circumference 8, so pi is 4 t-radians.
inline constexpr int kPiT = 4;
inline constexpr int kPeriod = 2 * kPiT;
inline constexpr int kQuarterPeriod = kPiT / 2;
inline constexpr int kBranchCount = kPeriod / kQuarterPeriod;

struct TaxicabConstants {
  Scalar pi_t;
  Scalar period;
  Scalar quarter_period;
};

TaxicabConstants Constants(Backend backend);

// A t-radian angle together with its canonical representative in [0, 8)
// and the 2-wide branch that contains it. Branch k (1..4) covers
// [2(k-1), 2k); a breakpoint belongs to the branch that begins there.
// Quadrant q covers the same bins, so quadrant() == branch().
class Angle {
 public:
  const Scalar& raw() const { return raw_; }
  const Scalar& reduced() const { return reduced_; }
  int branch() const { return branch_; }
  int quadrant() const { return branch_; }
  Backend backend() const { return reduced_.backend(); }

  // Left edge of the branch, 2(k-1).
  Scalar branch_start() const { return reduced_.Like(2 * (branch_ - 1)); }
  // True when the reduced angle sits exactly on a multiple of 2.
  bool on_breakpoint() const { return reduced_ == branch_start(); }

 private:
  friend Angle ReduceAngle(const Scalar& theta);

  Angle(Scalar raw, Scalar reduced, int branch)
      : raw_(std::move(raw)), reduced_(std::move(reduced)), branch_(branch) {}

  Scalar raw_;
  Scalar reduced_;
  int branch_ = 1;
};

// Canonicalizes theta into [0, 8). Exact inputs subtract an exact multiple
// of 8. Float inputs subtract round(theta/8)*8 and wrap once; there is no
// snapping toward breakpoints. Throws DomainError for NaN/inf.
Angle ReduceAngle(const Scalar& theta);

// A Gaussian number re + i*im over Scalars. Only the operations needed to
// evaluate expressions built from powers of i.
struct ComplexScalar {
  Scalar re;
  Scalar im;

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const Scalar& s) {
    return {a.re * s, a.im * s};
  }
  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

struct UnitImaginaryPower {
  long exponent = 0;
  ComplexScalar value;
};

// i^exponent, looked up by the non-negative residue of exponent mod 4.
UnitImaginaryPower IPow(long exponent, Backend backend = Backend::kExact);

}  // namespace taxitrig

#endif  // TAXITRIG_ANGLE_H_
