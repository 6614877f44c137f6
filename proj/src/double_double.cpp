#include "sawstrip/double_double.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sawstrip/errors.hpp"

namespace sawstrip {
namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InputError("not a number: '" + s + "'");
  }
  return v;
}

DoubleDouble pow10_dd(int n) {
  DoubleDouble result(1.0);
  DoubleDouble base(10.0);
  bool negative = n < 0;
  unsigned m = negative ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
  while (m != 0) {
    if (m & 1u) result *= base;
    base *= base;
    m >>= 1;
  }
  return negative ? DoubleDouble(1.0) / result : result;
}

}  // namespace

std::string to_exact_string(const DoubleDouble& x) {
  std::string out = format17(x.hi);
  if (x.lo != 0.0) {
    if (!std::signbit(x.lo)) out += '+';
    out += format17(x.lo);
  }
  return out;
}

DoubleDouble parse_exact(std::string_view text) {
  // Split at the first sign that is neither leading nor an exponent sign.
  for (std::size_t i = 1; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      return {parse_double(text.substr(0, i)), parse_double(text.substr(i))};
    }
  }
  return DoubleDouble(parse_double(text));
}

std::string to_decimal_string(const DoubleDouble& value, int digits) {
  if (!isfinite(value)) return format17(value.hi);
  if (value.hi == 0.0) return "0";
  const bool negative = value.hi < 0.0;
  DoubleDouble r = abs(value);
  int exponent = static_cast<int>(std::floor(std::log10(r.hi)));
  r = r / pow10_dd(exponent);
  while (r.hi >= 10.0) {
    r /= DoubleDouble(10.0);
    ++exponent;
  }
  while (r.hi < 1.0) {
    r *= DoubleDouble(10.0);
    --exponent;
  }
  std::string mantissa;
  for (int i = 0; i <= digits; ++i) {
    int d = static_cast<int>(std::floor(static_cast<double>(r)));
    d = d < 0 ? 0 : (d > 9 ? 9 : d);
    mantissa.push_back(static_cast<char>('0' + d));
    r = (r - DoubleDouble(d)) * DoubleDouble(10.0);
  }
  // Round on the guard digit.
  const bool round_up = mantissa.back() >= '5';
  mantissa.pop_back();
  if (round_up) {
    int i = static_cast<int>(mantissa.size()) - 1;
    while (i >= 0 && mantissa[i] == '9') mantissa[i--] = '0';
    if (i >= 0) {
      ++mantissa[i];
    } else {
      mantissa.insert(mantissa.begin(), '1');
      mantissa.pop_back();
      ++exponent;
    }
  }
  std::string out = negative ? "-" : "";
  out += mantissa[0];
  if (mantissa.size() > 1) {
    out += '.';
    out.append(mantissa, 1, std::string::npos);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03d", exponent);
  return out + buf;
}

DoubleDouble parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  DoubleDouble r(0.0);
  int scale = 0;
  int significant = 0;
  bool seen_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !after_point) {
      after_point = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (significant < 40) {
        r = r * DoubleDouble(10.0) + DoubleDouble(c - '0');
        if (r.hi != 0.0) ++significant;
        if (after_point) --scale;
      } else if (!after_point) {
        ++scale;
      }
    } else {
      break;
    }
  }
  if (!seen_digit) throw InputError("not a decimal number: '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw InputError("not a decimal number: '" + std::string(text) + "'");
    }
    const std::string exp_text(text.substr(i + 1));
    char* end = nullptr;
    const long e = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') {
      throw InputError("bad exponent in '" + std::string(text) + "'");
    }
    scale += static_cast<int>(e);
  }
  if (scale != 0) r = scale > 0 ? r * pow10_dd(scale) : r / pow10_dd(-scale);
  return negative ? -r : r;
}

DoubleDouble cos_3pi_8() {
  const DoubleDouble root2 = sqrt(DoubleDouble(2.0));
  return ldexp(sqrt(DoubleDouble(2.0) - root2), -1);
}

DoubleDouble honeycomb_zc() {
  const DoubleDouble root2 = sqrt(DoubleDouble(2.0));
  return DoubleDouble(1.0) / sqrt(DoubleDouble(2.0) + root2);
}

}  // namespace sawstrip
