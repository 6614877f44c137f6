#pragma once

// Dense truncated power series in z, the numeric substrate of the transfer
// matrix. A series of max degree M stores exactly M+1 coefficients.
//
// Coefficients may be stored pre-scaled: with scale_log2 = e, slot n holds
// c_n * 2^(e*n). The transfer matrix uses e < 0 so that walk counts growing
// like mu^n stay inside the double exponent range at M = 1000; every
// operation here accounts for the scale, and e = 0 gives plain coefficients.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sawstrip/double_double.hpp"
#include "sawstrip/errors.hpp"

namespace sawstrip {

enum class PrecisionMode { fast, high, exact };

std::string to_string(PrecisionMode mode);
PrecisionMode parse_precision(std::string_view name);

template <class Coeff>
struct CoeffTraits;

template <>
struct CoeffTraits<double> {
  using Eval = double;
  static constexpr PrecisionMode mode = PrecisionMode::fast;
  static double scaled(double x, int e) { return std::ldexp(x, e); }
  static Eval to_eval(double x) { return x; }
  static std::string to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static double parse(std::string_view s) { return parse_exact(s).hi; }
  static bool is_nonnegative_integer(double x) { return x >= 0.0 && std::floor(x) == x; }
};

template <>
struct CoeffTraits<DoubleDouble> {
  using Eval = DoubleDouble;
  static constexpr PrecisionMode mode = PrecisionMode::high;
  static DoubleDouble scaled(const DoubleDouble& x, int e) { return ldexp(x, e); }
  static Eval to_eval(const DoubleDouble& x) { return x; }
  static std::string to_string(const DoubleDouble& x) { return to_exact_string(x); }
  static DoubleDouble parse(std::string_view s) { return parse_exact(s); }
  static bool is_nonnegative_integer(const DoubleDouble& x) {
    return x.hi >= 0.0 && std::floor(x.hi) == x.hi && std::floor(x.lo) == x.lo;
  }
};

template <>
struct CoeffTraits<mpz_class> {
  using Eval = DoubleDouble;
  static constexpr PrecisionMode mode = PrecisionMode::exact;
  static mpz_class scaled(const mpz_class& x, int e) {
    if (e != 0) throw PreconditionError("exact series cannot carry a binary scale");
    return x;
  }
  static Eval to_eval(const mpz_class& x) {
    const double hi = x.get_d();
    const mpz_class rest = x - mpz_class(hi);
    return DoubleDouble(hi) + DoubleDouble(rest.get_d());
  }
  static std::string to_string(const mpz_class& x) { return x.get_str(); }
  static mpz_class parse(std::string_view s) {
    mpz_class v;
    if (v.set_str(std::string(s), 10) != 0) throw InputError("not an integer: '" + std::string(s) + "'");
    return v;
  }
  static bool is_nonnegative_integer(const mpz_class& x) { return sgn(x) >= 0; }
};

template <class Coeff>
class TruncatedSeries {
 public:
  using coeff_type = Coeff;

  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(int max_degree, int scale_log2 = 0)
      : coeffs_(checked_length(max_degree)), scale_log2_(scale_log2) {}
  TruncatedSeries(std::vector<Coeff> coeffs, int scale_log2 = 0)
      : coeffs_(std::move(coeffs)), scale_log2_(scale_log2) {
    if (coeffs_.empty()) throw PreconditionError("a truncated series needs at least one coefficient");
  }

  int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int scale_log2() const noexcept { return scale_log2_; }

  /// Stored (possibly scaled) coefficient of z^n.
  const Coeff& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Coeff& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::span<Coeff> coeffs() noexcept { return coeffs_; }

  /// Unscaled coefficient c_n as the evaluation type.
  typename CoeffTraits<Coeff>::Eval coefficient(int n) const {
    using Eval = typename CoeffTraits<Coeff>::Eval;
    const Eval v = CoeffTraits<Coeff>::to_eval(coeffs_[static_cast<std::size_t>(n)]);
    if (scale_log2_ == 0) return v;
    if constexpr (std::is_same_v<Eval, double>) {
      return std::ldexp(v, -scale_log2_ * n);
    } else {
      return ldexp(v, -scale_log2_ * n);
    }
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  static std::size_t checked_length(int max_degree) {
    if (max_degree < 0) throw PreconditionError("max degree must be non-negative");
    return static_cast<std::size_t>(max_degree) + 1;
  }

  std::vector<Coeff> coeffs_;
  int scale_log2_ = 0;
};

/// Coefficientwise sum. Both operands must share M and the binary scale.
template <class Coeff>
TruncatedSeries<Coeff> series_add(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  if (a.max_degree() != b.max_degree()) {
    throw DegreeMismatchError("series_add: degree " + std::to_string(a.max_degree()) + " vs " +
                              std::to_string(b.max_degree()));
  }
  if (a.scale_log2() != b.scale_log2()) {
    throw DegreeMismatchError("series_add: operands carry different coefficient scales");
  }
  TruncatedSeries<Coeff> out = a;
  for (int n = 0; n <= a.max_degree(); ++n) out[n] += b[n];
  return out;
}

/// Returns c * z^k * a(z) truncated at degree M.
template <class Coeff>
TruncatedSeries<Coeff> series_shift_scale(const TruncatedSeries<Coeff>& a, int k, const Coeff& c) {
  if (k < 0) throw PreconditionError("series_shift_scale: negative shift");
  const int m = a.max_degree();
  TruncatedSeries<Coeff> out(m, a.scale_log2());
  const Coeff factor = CoeffTraits<Coeff>::scaled(c, a.scale_log2() * k);
  for (int n = 0; n + k <= m; ++n) out[n + k] = factor * a[n];
  return out;
}

/// Horner evaluation, highest degree first, for z in [0, 1).
template <class Coeff>
typename CoeffTraits<Coeff>::Eval series_eval(const TruncatedSeries<Coeff>& a,
                                              const typename CoeffTraits<Coeff>::Eval& z) {
  using Eval = typename CoeffTraits<Coeff>::Eval;
  if (!(static_cast<double>(z) >= 0.0 && z < Eval(1.0))) {
    throw DomainError("series_eval: z must lie in [0, 1)");
  }
  Eval u = z;
  if constexpr (std::is_same_v<Eval, double>) {
    u = std::ldexp(z, -a.scale_log2());
  } else {
    u = ldexp(z, -a.scale_log2());
  }
  Eval acc(0.0);
  for (int n = a.max_degree(); n >= 0; --n) {
    acc = acc * u + CoeffTraits<Coeff>::to_eval(a[n]);
  }
  return acc;
}

}  // namespace sawstrip
