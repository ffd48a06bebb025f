#include "qcvx/core_types.hpp"

#include <cctype>
#include <limits>

namespace qcvx {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::parse: return "parse";
    case Errc::domain: return "domain";
    case Errc::no_sample: return "no_sample";
    case Errc::parameter_range: return "parameter_range";
    case Errc::degenerate_segment: return "degenerate_segment";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::inexact_model: return "inexact_model";
    case Errc::malformed_interval: return "malformed_interval";
    case Errc::ordering: return "ordering";
    case Errc::unsupported_chord: return "unsupported_chord";
    case Errc::supremum_not_attained: return "supremum_not_attained";
    case Errc::precondition: return "precondition";
    case Errc::consistency: return "consistency";
    case Errc::undefined_arithmetic: return "undefined_arithmetic";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what, std::vector<Rational> offending)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code),
      message_(what),
      offending_(std::move(offending)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&]() -> Error {
    return Error(Errc::parse, "not a rational number: '" + std::string(original) + "'");
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = text.substr(0, slash);
    auto d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw fail();
    num.set_str(std::string(n), 10);
    den.set_str(std::string(d), 10);
    if (den == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(original) + "'");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw fail();
    }
    num.set_str(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(text)) throw fail();
    num.set_str(std::string(text), 10);
  }
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

double to_double(const Rational& r) { return r.get_d(); }

const Rational& XReal::value() const {
  if (!is_finite()) throw Error(Errc::undefined_arithmetic, "value() of an infinite extended real");
  return value_;
}

std::strong_ordering operator<=>(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

XReal XReal::operator-() const {
  switch (kind_) {
    case Kind::plus_infinity: return minus_infinity();
    case Kind::minus_infinity: return plus_infinity();
    case Kind::finite: break;
  }
  return XReal(Rational(-value_));
}

std::strong_ordering xreal_compare(const XReal& a, const XReal& b) { return a <=> b; }

XReal xreal_max(const XReal& a, const XReal& b) { return a < b ? b : a; }

XReal xreal_min(const XReal& a, const XReal& b) { return b < a ? b : a; }

XReal operator+(const XReal& a, const XReal& b) {
  if (a.is_finite() && b.is_finite()) return XReal(Rational(a.value() + b.value()));
  if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
      (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw Error(Errc::undefined_arithmetic, "sum of opposite infinities");
  }
  return a.is_finite() ? b : a;
}

XReal operator-(const XReal& a, const XReal& b) { return a + (-b); }

std::string to_string(const XReal& x) {
  if (x.is_plus_infinity()) return "inf";
  if (x.is_minus_infinity()) return "-inf";
  return to_string(x.value());
}

XReal parse_xreal(std::string_view text) {
  auto t = trim(text);
  if (t == "inf" || t == "+inf") return XReal::plus_infinity();
  if (t == "-inf") return XReal::minus_infinity();
  return XReal(parse_rational(t));
}

double to_double(const XReal& x) {
  if (x.is_plus_infinity()) return std::numeric_limits<double>::infinity();
  if (x.is_minus_infinity()) return -std::numeric_limits<double>::infinity();
  return to_double(x.value());
}

Point segment_point(const Segment& s, const Rational& t) {
  if (t < 0 || t > 1) {
    throw Error(Errc::parameter_range, "segment parameter " + to_string(t) + " outside [0,1]");
  }
  if (s.x.dimension() != s.y.dimension()) {
    throw Error(Errc::dimension_mismatch, "segment endpoints have different dimensions");
  }
  Point z;
  z.coordinates.reserve(s.x.dimension());
  const Rational one_minus_t = 1 - t;
  for (std::size_t i = 0; i < s.x.dimension(); ++i) {
    Rational c = one_minus_t * s.x.coordinates[i] + t * s.y.coordinates[i];
    z.coordinates.push_back(std::move(c));
  }
  return z;
}

void ToleranceConfig::validate() const {
  if (grid_points < 3) {
    throw Error(Errc::parameter_range, "grid_points must be at least 3");
  }
  if (float_epsilon < 0) {
    throw Error(Errc::parameter_range, "float_epsilon must be nonnegative");
  }
}

}  // namespace qcvx
