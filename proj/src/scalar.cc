#include "taxitrig/scalar.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <system_error>

#include "taxitrig/errors.h"

namespace taxitrig {
namespace {

constexpr int kMaxDecimalExponent = 4096;

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Decimal text to an exact fraction: [+-]digits[.digits][(e|E)[+-]digits].
Rational ParseDecimalExact(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer mantissa = 0;
  int fraction_digits = 0;
  int digits = 0;
  while (pos < text.size() && IsDigit(text[pos])) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    ++pos;
    ++digits;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && IsDigit(text[pos])) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
      ++fraction_digits;
    }
  }
  if (digits == 0) throw ParseError("not a number: '" + std::string(text) + "'");
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    int exp_digits = 0;
    while (pos < text.size() && IsDigit(text[pos])) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > kMaxDecimalExponent) {
        throw ParseError("exponent out of range: '" + std::string(text) + "'");
      }
      ++pos;
      ++exp_digits;
    }
    if (exp_digits == 0) {
      throw ParseError("malformed exponent: '" + std::string(text) + "'");
    }
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) {
    throw ParseError("trailing characters in number: '" + std::string(text) + "'");
  }
  exponent -= fraction_digits;
  Integer scale = boost::multiprecision::pow(Integer(10),
                                             static_cast<unsigned>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * scale)
                                 : Rational(mantissa, scale);
  return negative ? Rational(-value) : value;
}

double ParseDecimalFloat(std::string_view text) {
  // from_chars rejects a leading '+'.
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  // Validate the grammar with the exact parser so "nan", "inf" and hex
  // floats are rejected consistently in both modes.
  ParseDecimalExact(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range || !std::isfinite(value)) {
    throw ParseError("number out of double range: '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

[[noreturn]] void ThrowMismatch(const char* op) {
  throw BackendMismatch(std::string("mixed exact/float operands in ") + op);
}

}  // namespace

std::string_view BackendName(Backend backend) {
  return backend == Backend::kExact ? "exact" : "float";
}

std::string FormatDouble(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Scalar Scalar::Exact(const Rational& value) { return Scalar(value); }

Scalar Scalar::Exact(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  // cpp_rational rejects a negative denominator in this constructor.
  Integer num(numerator);
  Integer den(denominator);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Rational(num, den));
}

Scalar Scalar::Float(double value) { return Scalar(value); }

Scalar Scalar::Of(Backend backend, std::int64_t numerator,
                  std::int64_t denominator) {
  if (backend == Backend::kExact) return Exact(numerator, denominator);
  if (denominator == 0) throw DomainError("zero denominator");
  return Float(static_cast<double>(numerator) / static_cast<double>(denominator));
}

Scalar Scalar::Parse(std::string_view text, Backend backend) {
  if (text.empty()) throw ParseError("empty number");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return backend == Backend::kExact ? Exact(ParseDecimalExact(text))
                                      : Float(ParseDecimalFloat(text));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (num_text.empty() || den_text.empty()) {
    throw ParseError("malformed fraction: '" + std::string(text) + "'");
  }
  if (backend == Backend::kExact) {
    const Rational num = ParseDecimalExact(num_text);
    const Rational den = ParseDecimalExact(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Exact(num / den);
  }
  const double num = ParseDecimalFloat(num_text);
  const double den = ParseDecimalFloat(den_text);
  if (den == 0.0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Float(num / den);
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw BackendMismatch("rational() called on a float scalar");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    return r->convert_to<double>();
  }
  return std::get<double>(value_);
}

Scalar Scalar::To(Backend backend) const {
  if (backend == this->backend()) return *this;
  if (backend == Backend::kFloat) return Float(to_double());
  const double v = std::get<double>(value_);
  if (!std::isfinite(v)) throw DomainError("non-finite value has no exact form");
  // Every finite double is a dyadic rational.
  int exponent = 0;
  const double mantissa = std::frexp(v, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{Integer(scaled)};
  const Integer power = Integer(1) << static_cast<unsigned>(std::abs(exponent));
  if (exponent >= 0) {
    result *= power;
  } else {
    result /= power;
  }
  return Exact(result);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r == 0;
  return std::get<double>(value_) == 0.0;
}

bool Scalar::is_finite() const {
  if (is_exact()) return true;
  return std::isfinite(std::get<double>(value_));
}

bool Scalar::is_integer() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    return boost::multiprecision::denominator(*r) == 1;
  }
  const double v = std::get<double>(value_);
  return std::isfinite(v) && std::floor(v) == v;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  const double v = std::get<double>(value_);
  return (v > 0.0) - (v < 0.0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::floor() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const Integer num = boost::multiprecision::numerator(*r);
    const Integer den = boost::multiprecision::denominator(*r);
    Integer quotient = num / den;  // truncates toward zero
    if (num < 0 && quotient * den != num) --quotient;
    return Exact(Rational(quotient));
  }
  return Float(std::floor(std::get<double>(value_)));
}

std::int64_t Scalar::to_int64() const {
  if (!is_integer()) throw DomainError("not an integer: " + ToString());
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const Integer num = boost::multiprecision::numerator(*r);
    if (num > std::numeric_limits<std::int64_t>::max() ||
        num < std::numeric_limits<std::int64_t>::min()) {
      throw DomainError("integer out of 64-bit range: " + ToString());
    }
    return num.convert_to<std::int64_t>();
  }
  const double v = std::get<double>(value_);
  if (std::fabs(v) >= 9.2e18) throw DomainError("integer out of 64-bit range");
  return static_cast<std::int64_t>(v);
}

std::string Scalar::ToString() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const Integer num = boost::multiprecision::numerator(*r);
    const Integer den = boost::multiprecision::denominator(*r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  return FormatDouble(std::get<double>(value_));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Exact(Rational(-*r));
  return Float(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (backend() != rhs.backend()) ThrowMismatch("+");
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r += std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (backend() != rhs.backend()) ThrowMismatch("-");
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r -= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (backend() != rhs.backend()) ThrowMismatch("*");
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r *= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (backend() != rhs.backend()) ThrowMismatch("/");
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r /= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.backend() != rhs.backend()) ThrowMismatch("==");
  if (lhs.is_exact()) {
    return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
  }
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

bool operator<(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.backend() != rhs.backend()) ThrowMismatch("<");
  if (lhs.is_exact()) {
    return std::get<Rational>(lhs.value_) < std::get<Rational>(rhs.value_);
  }
  return std::get<double>(lhs.value_) < std::get<double>(rhs.value_);
}

}  // namespace taxitrig
