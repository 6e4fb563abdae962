#ifndef TAXITRIG_DERIVATIVES_H_
#define TAXITRIG_DERIVATIVES_H_

#include <optional>
#include <string>
#include <string_view>

#include "taxitrig/angle.h"
#include "taxitrig/functions.h"
#include "taxitrig/scalar.h"

namespace taxitrig {

// Outcome of differentiating at a point.
//   Finite - the derivative exists.
//   Corner - continuous, but the one-sided derivatives differ (left != right).
//   Pole   - the function itself has a pole here.
class DerivResult {
 public:
  enum class Kind { kFinite, kCorner, kPole };

  static DerivResult Finite(Scalar value);
  // Collapses to Finite when left == right.
  static DerivResult FromOneSided(Scalar left, Scalar right);
  static DerivResult Pole();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_corner() const { return kind_ == Kind::kCorner; }
  bool is_pole() const { return kind_ == Kind::kPole; }

  // Finite only; throws UsageError otherwise.
  const Scalar& value() const;
  // Finite or Corner. For Finite both equal value().
  const Scalar& left() const;
  const Scalar& right() const;

  // "<value>", "CORNER <left> <right>" or "POLE".
  std::string ToString() const;

  friend bool operator==(const DerivResult& a, const DerivResult& b);

 private:
  DerivResult(Kind kind, std::optional<Scalar> left, std::optional<Scalar> right)
      : kind_(kind), left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  std::optional<Scalar> left_;
  std::optional<Scalar> right_;
};

// Which derivation to use.
//   kDirect        differentiate the branch expression of the function.
//   kProduct       sec: 1/2 sec (tan -+ 1); csc: -1/2 csc (cot -+ 1),
//                  sign chosen by the parity of the branch.
//   kSquared       tan: 1/2 sec^2, cot: -1/2 csc^2; sec: +-1/2 sec^2 and
//                  csc: -+1/2 csc^2 with the sign fixed per region.
//   kQuotientRule  build from sin, cos and their derivatives only.
enum class DerivForm { kDirect, kProduct, kSquared, kQuotientRule };

std::string_view FormName(DerivForm form);
// "direct", "product", "squared", "quotient" (also "quotient_rule").
std::optional<DerivForm> ParseForm(std::string_view name);
bool FormApplies(TrigFunction fn, DerivForm form);

enum class Differentiability { kSmooth, kCorner, kPole };
std::string_view DifferentiabilityName(Differentiability d);

// Derivative of fn at a. Throws UsageError when the form does not apply to
// fn (sin/cos accept only kDirect; kProduct needs sec or csc).
DerivResult Derivative(TrigFunction fn, const Angle& a,
                       DerivForm form = DerivForm::kDirect);

// +1/2 where the branch rises, -1/2 where it falls; Corner at the extrema.
DerivResult DSin(const Angle& a);
DerivResult DCos(const Angle& a);
DerivResult DTan(const Angle& a, DerivForm form = DerivForm::kDirect);
DerivResult DCot(const Angle& a, DerivForm form = DerivForm::kDirect);
DerivResult DSec(const Angle& a, DerivForm form = DerivForm::kDirect);
DerivResult DCsc(const Angle& a, DerivForm form = DerivForm::kDirect);

// tan' = (cos sin' - sin cos') / cos^2, cot' = (sin cos' - cos sin') / sin^2,
// sec' = -cos' / cos^2, csc' = -sin' / sin^2, using the sine and cosine
// derivatives only. At a corner of sin or cos both one-sided values are
// propagated. Throws UsageError for sin and cos.
DerivResult DerivativeViaQuotientRule(TrigFunction fn, const Angle& a);

Differentiability ClassifyDifferentiability(TrigFunction fn, const Angle& a);

}  // namespace taxitrig

#endif  // TAXITRIG_DERIVATIVES_H_
