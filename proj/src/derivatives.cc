#include "taxitrig/derivatives.h"

#include "taxitrig/errors.h"

namespace taxitrig {
namespace {

bool IsEven(int k) { return k % 2 == 0; }

Scalar Square(const Scalar& x) { return x * x; }

// Sign of the regional squared forms. sec: + on [0,4), - on [4,8);
// csc: - on [6,8) u [0,2), + on [2,6).
int SecRegionSign(int k) { return k <= 2 ? 1 : -1; }
int CscRegionSign(int k) { return (k == 2 || k == 3) ? 1 : -1; }

// (den * num' - num * den') / den^2 for two linear pieces.
Scalar QuotientOfLinear(const Scalar& num, const Scalar& num_slope,
                        const Scalar& den, const Scalar& den_slope) {
  return (den * num_slope - num * den_slope) / Square(den);
}

// Derivative of fn from the expressions of branch k, evaluated at theta on
// the closed branch interval. The caller guarantees fn is finite there.
Scalar BranchDerivative(TrigFunction fn, DerivForm form, const Scalar& theta, int k) {
  const Backend backend = theta.backend();
  const LinearBranch c = CosBranch(k, backend);
  const LinearBranch s = SinBranch(k, backend);
  const Scalar half = theta.Like(1, 2);
  const Scalar one = theta.Like(1);

  switch (fn) {
    case TrigFunction::kSin:
      return s.derivative();
    case TrigFunction::kCos:
      return c.derivative();
    case TrigFunction::kTan:
      if (form == DerivForm::kSquared) return half / Square(c(theta));
      // Signs of numerator and denominator cancel in the ratio.
      return QuotientOfLinear(s.intercept + s.slope * theta, s.slope,
                              c.intercept + c.slope * theta, c.slope);
    case TrigFunction::kCot:
      if (form == DerivForm::kSquared) return -half / Square(s(theta));
      return QuotientOfLinear(c.intercept + c.slope * theta, c.slope,
                              s.intercept + s.slope * theta, s.slope);
    case TrigFunction::kSec: {
      const Scalar cos_value = c(theta);
      const Scalar sec_value = one / cos_value;
      switch (form) {
        case DerivForm::kDirect:
          return -c.derivative() / Square(cos_value);
        case DerivForm::kProduct: {
          const Scalar tan_value = s(theta) / cos_value;
          return half * sec_value * (IsEven(k) ? tan_value - one : tan_value + one);
        }
        case DerivForm::kSquared:
          return theta.Like(SecRegionSign(k)) * half * Square(sec_value);
        case DerivForm::kQuotientRule:
          break;
      }
      break;
    }
    case TrigFunction::kCsc: {
      const Scalar sin_value = s(theta);
      const Scalar csc_value = one / sin_value;
      switch (form) {
        case DerivForm::kDirect:
          return -s.derivative() / Square(sin_value);
        case DerivForm::kProduct: {
          const Scalar cot_value = c(theta) / sin_value;
          return -half * csc_value * (IsEven(k) ? cot_value - one : cot_value + one);
        }
        case DerivForm::kSquared:
          return theta.Like(CscRegionSign(k)) * half * Square(csc_value);
        case DerivForm::kQuotientRule:
          break;
      }
      break;
    }
  }
  throw InvariantViolation("no branch derivative for this function/form");
}

void RequireForm(TrigFunction fn, DerivForm form) {
  if (!FormApplies(fn, form)) {
    throw UsageError("derivative form '" + std::string(FormName(form)) +
                     "' does not apply to " + std::string(FunctionName(fn)));
  }
}

}  // namespace

DerivResult DerivResult::Finite(Scalar value) {
  Scalar copy = value;
  return DerivResult(Kind::kFinite, std::move(copy), std::move(value));
}

DerivResult DerivResult::FromOneSided(Scalar left, Scalar right) {
  if (left == right) return Finite(std::move(left));
  return DerivResult(Kind::kCorner, std::move(left), std::move(right));
}

DerivResult DerivResult::Pole() {
  return DerivResult(Kind::kPole, std::nullopt, std::nullopt);
}

const Scalar& DerivResult::value() const {
  if (kind_ != Kind::kFinite) throw UsageError("derivative is not finite: " + ToString());
  return *right_;
}

const Scalar& DerivResult::left() const {
  if (kind_ == Kind::kPole) throw UsageError("no one-sided derivative at a pole");
  return *left_;
}

const Scalar& DerivResult::right() const {
  if (kind_ == Kind::kPole) throw UsageError("no one-sided derivative at a pole");
  return *right_;
}

std::string DerivResult::ToString() const {
  switch (kind_) {
    case Kind::kFinite: return right_->ToString();
    case Kind::kCorner: return "CORNER " + left_->ToString() + " " + right_->ToString();
    case Kind::kPole: return "POLE";
  }
  return "?";
}

bool operator==(const DerivResult& a, const DerivResult& b) {
  return a.kind_ == b.kind_ && a.left_ == b.left_ && a.right_ == b.right_;
}

std::string_view FormName(DerivForm form) {
  switch (form) {
    case DerivForm::kDirect: return "direct";
    case DerivForm::kProduct: return "product";
    case DerivForm::kSquared: return "squared";
    case DerivForm::kQuotientRule: return "quotient";
  }
  return "?";
}

std::optional<DerivForm> ParseForm(std::string_view name) {
  if (name == "direct") return DerivForm::kDirect;
  if (name == "product") return DerivForm::kProduct;
  if (name == "squared") return DerivForm::kSquared;
  if (name == "quotient" || name == "quotient_rule") return DerivForm::kQuotientRule;
  return std::nullopt;
}

bool FormApplies(TrigFunction fn, DerivForm form) {
  switch (fn) {
    case TrigFunction::kSin:
    case TrigFunction::kCos:
      return form == DerivForm::kDirect;
    case TrigFunction::kTan:
    case TrigFunction::kCot:
      return form != DerivForm::kProduct;
    case TrigFunction::kSec:
    case TrigFunction::kCsc:
      return true;
  }
  return false;
}

std::string_view DifferentiabilityName(Differentiability d) {
  switch (d) {
    case Differentiability::kSmooth: return "smooth";
    case Differentiability::kCorner: return "corner";
    case Differentiability::kPole: return "pole";
  }
  return "?";
}

DerivResult Derivative(TrigFunction fn, const Angle& a, DerivForm form) {
  RequireForm(fn, form);
  if (form == DerivForm::kQuotientRule) return DerivativeViaQuotientRule(fn, a);
  if (Evaluate(fn, a).is_pole()) return DerivResult::Pole();

  const int k = a.branch();
  Scalar right = BranchDerivative(fn, form, a.reduced(), k);
  if (!a.on_breakpoint()) return DerivResult::Finite(std::move(right));

  // At 2(k-1) the left neighbour is branch k-1; branch 1's left neighbour
  // is branch 4 evaluated at its right edge, theta + 8.
  const int left_k = k == 1 ? kBranchCount : k - 1;
  const Scalar left_theta = k == 1 ? a.reduced() + a.reduced().Like(kPeriod) : a.reduced();
  Scalar left = BranchDerivative(fn, form, left_theta, left_k);
  return DerivResult::FromOneSided(std::move(left), std::move(right));
}

DerivResult DSin(const Angle& a) { return Derivative(TrigFunction::kSin, a); }
DerivResult DCos(const Angle& a) { return Derivative(TrigFunction::kCos, a); }
DerivResult DTan(const Angle& a, DerivForm form) {
  return Derivative(TrigFunction::kTan, a, form);
}
DerivResult DCot(const Angle& a, DerivForm form) {
  return Derivative(TrigFunction::kCot, a, form);
}
DerivResult DSec(const Angle& a, DerivForm form) {
  return Derivative(TrigFunction::kSec, a, form);
}
DerivResult DCsc(const Angle& a, DerivForm form) {
  return Derivative(TrigFunction::kCsc, a, form);
}

DerivResult DerivativeViaQuotientRule(TrigFunction fn, const Angle& a) {
  if (fn == TrigFunction::kSin || fn == TrigFunction::kCos) {
    throw UsageError(std::string(FunctionName(fn)) + " has no quotient structure");
  }
  const Scalar s = SinPiecewise(a);
  const Scalar c = CosPiecewise(a);
  const DerivResult ds = DSin(a);
  const DerivResult dc = DCos(a);

  const bool cos_denominator = fn == TrigFunction::kTan || fn == TrigFunction::kSec;
  if ((cos_denominator ? c : s).is_zero()) return DerivResult::Pole();

  auto combine = [&](const Scalar& s_prime, const Scalar& c_prime) -> Scalar {
    switch (fn) {
      case TrigFunction::kTan: return (c * s_prime - s * c_prime) / Square(c);
      case TrigFunction::kCot: return (s * c_prime - c * s_prime) / Square(s);
      case TrigFunction::kSec: return -c_prime / Square(c);
      case TrigFunction::kCsc: return -s_prime / Square(s);
      default: break;
    }
    throw InvariantViolation("unreachable");
  };
  return DerivResult::FromOneSided(combine(ds.left(), dc.left()),
                                   combine(ds.right(), dc.right()));
}

Differentiability ClassifyDifferentiability(TrigFunction fn, const Angle& a) {
  const DerivResult d = Derivative(fn, a, DerivForm::kDirect);
  if (d.is_pole()) return Differentiability::kPole;
  if (d.is_corner()) return Differentiability::kCorner;
  return Differentiability::kSmooth;
}

}  // namespace taxitrig
