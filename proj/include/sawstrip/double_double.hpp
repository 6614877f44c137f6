#pragma once

// Double-double real: an unevaluated sum hi + lo of two IEEE doubles with
// |lo| <= ulp(hi)/2, giving about 106 bits (31-32 decimal digits) of
// significand. All operations are deterministic; results do not depend on
// FMA contraction because the exact products go through std::fma.

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

namespace sawstrip {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT(implicit)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  explicit constexpr operator double() const { return hi + lo; }
};

namespace dd_detail {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b|.
inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  using namespace dd_detail;
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) {
  return a + (-b);
}

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  using namespace dd_detail;
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  const double q3 = r.hi / b.hi;
  return dd_detail::quick_two_sum(q1, q2) + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, const DoubleDouble& b) { return a = a / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi == b.hi && a.lo == b.lo;
}

inline std::partial_ordering operator<=>(const DoubleDouble& a, const DoubleDouble& b) {
  if (a.hi != b.hi) return a.hi <=> b.hi;
  return a.lo <=> b.lo;
}

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }

/// Exact multiplication by 2^e.
inline DoubleDouble ldexp(const DoubleDouble& a, int e) {
  return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)};
}

inline DoubleDouble sqrt(const DoubleDouble& a) {
  if (a.hi <= 0.0) return DoubleDouble(std::sqrt(a.hi));
  const double x = std::sqrt(a.hi);
  const DoubleDouble xx = DoubleDouble(x) * DoubleDouble(x);
  return DoubleDouble(x) + (a - xx) / DoubleDouble(2.0 * x);
}

inline bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi) && std::isfinite(a.lo); }

/// Accumulation used by the transfer-matrix inner loop: one fewer two_sum than
/// operator+, accurate when the operands have the same sign.
inline void accumulate_same_sign(DoubleDouble& acc, const DoubleDouble& x) {
  DoubleDouble s = dd_detail::two_sum(acc.hi, x.hi);
  s.lo += acc.lo + x.lo;
  acc = dd_detail::quick_two_sum(s.hi, s.lo);
}

/// Lossless text form: "hi" or "hi+lo" / "hi-lo" with both parts printed to 17
/// significant digits, so parse_exact(to_exact_string(x)) == x bit for bit.
std::string to_exact_string(const DoubleDouble& x);
DoubleDouble parse_exact(std::string_view text);

/// Human-readable decimal with `digits` significant digits (display only).
std::string to_decimal_string(const DoubleDouble& x, int digits = 32);

/// Parses a plain decimal literal ("0.37905227776", "-1.5e-3") to
/// about 31 digits.
DoubleDouble parse_decimal(std::string_view text);

/// cos(3 pi / 8) and 1/sqrt(2 + sqrt 2) to double-double accuracy.
DoubleDouble cos_3pi_8();
DoubleDouble honeycomb_zc();

}  // namespace sawstrip
