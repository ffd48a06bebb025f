#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcvx {

/// Exact rational number backed by GMP. Every value produced by this library
/// is kept in lowest terms with a positive denominator.
using Rational = mpq_class;

enum class Errc : std::uint8_t {
  parse,
  domain,
  no_sample,
  parameter_range,
  degenerate_segment,
  dimension_mismatch,
  inexact_model,
  malformed_interval,
  ordering,
  unsupported_chord,
  supremum_not_attained,
  precondition,
  consistency,
  undefined_arithmetic,
};

std::string_view errc_name(Errc code);

/// Single exception type for all library failures. `offending_points` is
/// filled when the failure can be pinned to specific positions (for example
/// breakpoints that break a semicontinuity hypothesis).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<Rational> offending = {});

  Errc code() const noexcept { return code_; }
  /// what() without the error-code prefix.
  const std::string& message() const noexcept { return message_; }
  const std::vector<Rational>& offending_points() const noexcept { return offending_; }

 private:
  Errc code_;
  std::string message_;
  std::vector<Rational> offending_;
};

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.125".
Rational parse_rational(std::string_view text);
/// Lowest-terms form; integers are written without a denominator.
std::string to_string(const Rational& r);
double to_double(const Rational& r);
/// num/den in lowest terms. GMP arithmetic needs canonical operands, which
/// the two-argument mpq_class constructor does not produce.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical copy; GMP arithmetic assumes canonical operands.
inline Rational canonical(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r;
}

/// Value of the extended real line: a finite rational or one of the two
/// infinities, totally ordered with -inf < every finite value < +inf.
class XReal {
 public:
  enum class Kind : std::uint8_t { minus_infinity, finite, plus_infinity };

  XReal() = default;
  XReal(Rational value) : value_(std::move(value)) { value_.canonicalize(); }  // NOLINT(implicit)
  XReal(long value) : value_(value) {}                                          // NOLINT(implicit)

  static XReal plus_infinity() { return XReal(Kind::plus_infinity); }
  static XReal minus_infinity() { return XReal(Kind::minus_infinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_plus_infinity() const noexcept { return kind_ == Kind::plus_infinity; }
  bool is_minus_infinity() const noexcept { return kind_ == Kind::minus_infinity; }

  /// Throws Errc::undefined_arithmetic for infinite values.
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b) { return (a <=> b) == 0; }

  XReal operator-() const;

 private:
  explicit XReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

std::strong_ordering xreal_compare(const XReal& a, const XReal& b);
XReal xreal_max(const XReal& a, const XReal& b);
XReal xreal_min(const XReal& a, const XReal& b);

// Sums involving opposite infinities are rejected with undefined_arithmetic.
XReal operator+(const XReal& a, const XReal& b);
XReal operator-(const XReal& a, const XReal& b);

/// "inf", "-inf" or the rational string.
std::string to_string(const XReal& x);
/// Accepts "inf", "+inf", "-inf" and anything parse_rational accepts.
XReal parse_xreal(std::string_view text);
double to_double(const XReal& x);

struct Point {
  std::vector<Rational> coordinates;

  std::size_t dimension() const noexcept { return coordinates.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

/// Segment parameterised as z(t) = (1-t)*x + t*y, so z(0) = x and z(1) = y.
struct Segment {
  Point x;
  Point y;

  bool is_degenerate() const { return x == y; }
};

Point segment_point(const Segment& s, const Rational& t);

struct ToleranceConfig {
  int grid_points = 201;
  // Only consulted when comparing black-box values.
  Rational float_epsilon{1, 1000000000};

  void validate() const;
};

}  // namespace qcvx
