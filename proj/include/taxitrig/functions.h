#ifndef TAXITRIG_FUNCTIONS_H_
#define TAXITRIG_FUNCTIONS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "taxitrig/angle.h"
#include "taxitrig/scalar.h"

namespace taxitrig {

enum class TrigFunction { kSin, kCos, kTan, kCot, kSec, kCsc };

inline constexpr std::array<TrigFunction, 6> kAllFunctions = {
    TrigFunction::kSin, TrigFunction::kCos, TrigFunction::kTan,
    TrigFunction::kCot, TrigFunction::kSec, TrigFunction::kCsc};

std::string_view FunctionName(TrigFunction fn);
// Accepts the lowercase names "sin", "cos", ...
std::optional<TrigFunction> ParseFunction(std::string_view name);

// Outcome of evaluating a function: a value, or a pole where the defining
// denominator is exactly zero. Poles are values, not errors.
class EvalResult {
 public:
  static EvalResult Finite(Scalar value) { return EvalResult(std::move(value)); }
  static EvalResult Pole() { return EvalResult(); }

  bool is_pole() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Throws UsageError on a pole.
  const Scalar& value() const;

  // The value, or "POLE".
  std::string ToString() const;

  friend bool operator==(const EvalResult& a, const EvalResult& b) {
    return a.value_ == b.value_;
  }

 private:
  EvalResult() = default;
  explicit EvalResult(Scalar value) : value_(std::move(value)) {}

  std::optional<Scalar> value_;
};

// sign * (intercept + slope * theta): one branch of the pseudo closed form,
// with the power of i already collapsed to a real sign. Valid on the closed
// interval [2(k-1), 2k] so that one-sided limits at the edges can be taken.
struct LinearBranch {
  Scalar sign;
  Scalar intercept;
  Scalar slope;

  Scalar operator()(const Scalar& theta) const {
    return sign * (intercept + slope * theta);
  }
  Scalar derivative() const { return sign * slope; }
};

// Branch k of the pseudo closed forms:
//   cos = i^(k-2) (k-1-theta/2)  (k even),  i^(k-1) (k-theta/2)      (k odd)
//   sin = i^(k-2) (k-theta/2)    (k even),  i^(k-1) (1-k+theta/2)    (k odd)
LinearBranch CosBranch(int k, Backend backend);
LinearBranch SinBranch(int k, Backend backend);

// Cosine and sine, three ways. All take a reduced angle and agree exactly
// in the exact backend.
//
// Piecewise definition on the canonical period:
//   cos = 1 - theta/2 on [0,4), -3 + theta/2 on [4,8)
//   sin = theta/2 on [0,2), 2 - theta/2 on [2,6), -4 + theta/2 on [6,8)
Scalar CosPiecewise(const Angle& a);
Scalar SinPiecewise(const Angle& a);

// The single-formula version with both parity terms present, evaluated with
// genuine complex arithmetic:
//   cos = [(1+(-1)^k) i^(k-2) (k-1-theta/2) + (1+(-1)^(k+1)) i^(k-1) (k-theta/2)] / 2
//   sin = [(1+(-1)^k) i^(k-2) (k-theta/2) + (1+(-1)^(k+1)) i^(k-1) (1-k+theta/2)] / 2
// Throws InvariantViolation if the imaginary part is not exactly zero.
Scalar CosClosedLiteral(const Angle& a);
Scalar SinClosedLiteral(const Angle& a);
// Same, returning the full complex result.
ComplexScalar CosClosedLiteralComplex(const Angle& a);
ComplexScalar SinClosedLiteralComplex(const Angle& a);

// Parity-dispatched pseudo closed forms (CosBranch/SinBranch at a.branch()).
Scalar CosPseudo(const Angle& a);
Scalar SinPseudo(const Angle& a);

// Pole at reduced 2 and 6 (tan, sec) or 0 and 4 (cot, csc).
EvalResult Tan(const Angle& a);
EvalResult Cot(const Angle& a);
EvalResult Sec(const Angle& a);
EvalResult Csc(const Angle& a);

// Dispatch; sin and cos use the piecewise definition.
EvalResult Evaluate(TrigFunction fn, const Angle& a);
EvalResult Evaluate(TrigFunction fn, const Scalar& theta);

// Value of fn using the expressions of branch k, at a theta that may sit
// on either closed edge of that branch. Used for one-sided limits.
EvalResult EvaluateOnBranch(TrigFunction fn, const Scalar& theta, int k);

}  // namespace taxitrig

#endif  // TAXITRIG_FUNCTIONS_H_
