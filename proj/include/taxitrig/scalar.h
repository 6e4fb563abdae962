#ifndef TAXITRIG_SCALAR_H_
#define TAXITRIG_SCALAR_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace taxitrig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Backend { kExact, kFloat };

std::string_view BackendName(Backend backend);

// A real number carried either as an arbitrary-precision fraction or as a
// binary64 double. The two backends never mix: any binary operation or
// comparison between an exact and a float Scalar throws BackendMismatch.
//
// Exact values are always fully reduced with a positive denominator
// (guaranteed by cpp_rational). Division by an exact or float zero throws
// DomainError in both backends; every zero denominator in this library is a
// structural pole and is handled before dividing.
class Scalar {
 public:
  // Exact zero.
  Scalar() = default;

  static Scalar Exact(const Rational& value);
  static Scalar Exact(std::int64_t numerator, std::int64_t denominator = 1);
  static Scalar Float(double value);

  // numerator/denominator in the requested backend.
  static Scalar Of(Backend backend, std::int64_t numerator,
                   std::int64_t denominator = 1);

  // Accepts "p", "p/q", and decimal text with an optional exponent
  // ("-1.25", "3e-2"). In exact mode decimals are converted without
  // rounding; "nan"/"inf" are rejected in both modes. Throws ParseError.
  static Scalar Parse(std::string_view text, Backend backend);

  Backend backend() const {
    return std::holds_alternative<Rational>(value_) ? Backend::kExact
                                                    : Backend::kFloat;
  }
  bool is_exact() const { return backend() == Backend::kExact; }

  // Throws BackendMismatch when the scalar is a float.
  const Rational& rational() const;
  double to_double() const;

  // Same backend as *this.
  Scalar Like(std::int64_t numerator, std::int64_t denominator = 1) const {
    return Of(backend(), numerator, denominator);
  }
  Scalar To(Backend backend) const;

  bool is_zero() const;
  bool is_finite() const;
  bool is_integer() const;
  int sign() const;
  Scalar abs() const;
  Scalar floor() const;
  // Requires an integral value that fits in 64 bits.
  std::int64_t to_int64() const;

  // Exact: "p" or "p/q". Float: printf "%.17g".
  std::string ToString() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator<(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  explicit Scalar(std::variant<Rational, double> value)
      : value_(std::move(value)) {}

  std::variant<Rational, double> value_{Rational(0)};
};

std::string FormatDouble(double value);

}  // namespace taxitrig

#endif  // TAXITRIG_SCALAR_H_
