#include "taxitrig/functions.h"

#include "taxitrig/errors.h"

namespace taxitrig {
namespace {

bool IsEven(int k) { return k % 2 == 0; }

// (-1)^n as a Scalar.
Scalar MinusOnePow(int n, Backend backend) {
  return Scalar::Of(backend, n % 2 == 0 ? 1 : -1);
}

// Real sign from a power of i that is known to be real.
Scalar RealSign(long exponent, Backend backend) {
  const UnitImaginaryPower p = IPow(exponent, backend);
  if (!p.value.im.is_zero()) {
    throw InvariantViolation("i^" + std::to_string(exponent) + " is not real");
  }
  return p.value.re;
}

void CheckBranch(int k) {
  if (k < 1 || k > kBranchCount) {
    throw UsageError("branch index must be in 1..4, got " + std::to_string(k));
  }
}

// Unsigned linear parts (intercept + slope*theta) of the sin and cos
// branches; tan and cot are their ratios since the signs cancel.
Scalar Linear(const LinearBranch& b, const Scalar& theta) {
  return b.intercept + b.slope * theta;
}

ComplexScalar Literal(const Angle& a, const Scalar& even_linear,
                      const Scalar& odd_linear) {
  const Backend backend = a.backend();
  const int k = a.branch();
  const Scalar one = Scalar::Of(backend, 1);
  const Scalar even_selector = one + MinusOnePow(k, backend);
  const Scalar odd_selector = one + MinusOnePow(k + 1, backend);
  const ComplexScalar even_term =
      IPow(k - 2, backend).value * (even_selector * even_linear);
  const ComplexScalar odd_term =
      IPow(k - 1, backend).value * (odd_selector * odd_linear);
  const Scalar half = Scalar::Of(backend, 1, 2);
  return (even_term + odd_term) * half;
}

Scalar RealPart(const ComplexScalar& z, const char* what, const Angle& a) {
  if (!z.im.is_zero()) {
    throw InvariantViolation(std::string(what) + " closed form has imaginary part " +
                             z.im.ToString() + " at theta=" + a.reduced().ToString());
  }
  return z.re;
}

}  // namespace

std::string_view FunctionName(TrigFunction fn) {
  switch (fn) {
    case TrigFunction::kSin: return "sin";
    case TrigFunction::kCos: return "cos";
    case TrigFunction::kTan: return "tan";
    case TrigFunction::kCot: return "cot";
    case TrigFunction::kSec: return "sec";
    case TrigFunction::kCsc: return "csc";
  }
  return "?";
}

std::optional<TrigFunction> ParseFunction(std::string_view name) {
  for (TrigFunction fn : kAllFunctions) {
    if (FunctionName(fn) == name) return fn;
  }
  return std::nullopt;
}

const Scalar& EvalResult::value() const {
  if (!value_) throw UsageError("value() called on a pole");
  return *value_;
}

std::string EvalResult::ToString() const {
  return value_ ? value_->ToString() : "POLE";
}

LinearBranch CosBranch(int k, Backend backend) {
  CheckBranch(k);
  const Scalar minus_half = Scalar::Of(backend, -1, 2);
  if (IsEven(k)) return {RealSign(k - 2, backend), Scalar::Of(backend, k - 1), minus_half};
  return {RealSign(k - 1, backend), Scalar::Of(backend, k), minus_half};
}

LinearBranch SinBranch(int k, Backend backend) {
  CheckBranch(k);
  if (IsEven(k)) {
    return {RealSign(k - 2, backend), Scalar::Of(backend, k), Scalar::Of(backend, -1, 2)};
  }
  return {RealSign(k - 1, backend), Scalar::Of(backend, 1 - k), Scalar::Of(backend, 1, 2)};
}

Scalar CosPiecewise(const Angle& a) {
  const Scalar& t = a.reduced();
  const Scalar half_t = t / t.Like(2);
  if (t < t.Like(4)) return t.Like(1) - half_t;
  return t.Like(-3) + half_t;
}

Scalar SinPiecewise(const Angle& a) {
  const Scalar& t = a.reduced();
  const Scalar half_t = t / t.Like(2);
  if (t < t.Like(2)) return half_t;
  if (t < t.Like(6)) return t.Like(2) - half_t;
  return t.Like(-4) + half_t;
}

ComplexScalar CosClosedLiteralComplex(const Angle& a) {
  const Scalar& t = a.reduced();
  const int k = a.branch();
  const Scalar half_t = t / t.Like(2);
  return Literal(a, t.Like(k - 1) - half_t, t.Like(k) - half_t);
}

ComplexScalar SinClosedLiteralComplex(const Angle& a) {
  const Scalar& t = a.reduced();
  const int k = a.branch();
  const Scalar half_t = t / t.Like(2);
  return Literal(a, t.Like(k) - half_t, t.Like(1 - k) + half_t);
}

Scalar CosClosedLiteral(const Angle& a) {
  return RealPart(CosClosedLiteralComplex(a), "cos", a);
}

Scalar SinClosedLiteral(const Angle& a) {
  return RealPart(SinClosedLiteralComplex(a), "sin", a);
}

Scalar CosPseudo(const Angle& a) {
  return CosBranch(a.branch(), a.backend())(a.reduced());
}

Scalar SinPseudo(const Angle& a) {
  return SinBranch(a.branch(), a.backend())(a.reduced());
}

EvalResult EvaluateOnBranch(TrigFunction fn, const Scalar& theta, int k) {
  const LinearBranch c = CosBranch(k, theta.backend());
  const LinearBranch s = SinBranch(k, theta.backend());
  switch (fn) {
    case TrigFunction::kSin: return EvalResult::Finite(s(theta));
    case TrigFunction::kCos: return EvalResult::Finite(c(theta));
    case TrigFunction::kTan: {
      const Scalar den = Linear(c, theta);
      if (den.is_zero()) return EvalResult::Pole();
      return EvalResult::Finite(Linear(s, theta) / den);
    }
    case TrigFunction::kCot: {
      const Scalar den = Linear(s, theta);
      if (den.is_zero()) return EvalResult::Pole();
      return EvalResult::Finite(Linear(c, theta) / den);
    }
    case TrigFunction::kSec: {
      const Scalar den = c(theta);
      if (den.is_zero()) return EvalResult::Pole();
      return EvalResult::Finite(theta.Like(1) / den);
    }
    case TrigFunction::kCsc: {
      const Scalar den = s(theta);
      if (den.is_zero()) return EvalResult::Pole();
      return EvalResult::Finite(theta.Like(1) / den);
    }
  }
  throw UsageError("unknown function");
}

EvalResult Tan(const Angle& a) {
  return EvaluateOnBranch(TrigFunction::kTan, a.reduced(), a.branch());
}
EvalResult Cot(const Angle& a) {
  return EvaluateOnBranch(TrigFunction::kCot, a.reduced(), a.branch());
}
EvalResult Sec(const Angle& a) {
  return EvaluateOnBranch(TrigFunction::kSec, a.reduced(), a.branch());
}
EvalResult Csc(const Angle& a) {
  return EvaluateOnBranch(TrigFunction::kCsc, a.reduced(), a.branch());
}

EvalResult Evaluate(TrigFunction fn, const Angle& a) {
  switch (fn) {
    case TrigFunction::kSin: return EvalResult::Finite(SinPiecewise(a));
    case TrigFunction::kCos: return EvalResult::Finite(CosPiecewise(a));
    case TrigFunction::kTan: return Tan(a);
    case TrigFunction::kCot: return Cot(a);
    case TrigFunction::kSec: return Sec(a);
    case TrigFunction::kCsc: return Csc(a);
  }
  throw UsageError("unknown function");
}

EvalResult Evaluate(TrigFunction fn, const Scalar& theta) {
  return Evaluate(fn, ReduceAngle(theta));
}

}  // namespace taxitrig
