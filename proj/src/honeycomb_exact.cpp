#include <array>

#include "sawstrip/errors.hpp"
#include "sawstrip/oracles.hpp"

namespace sawstrip {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly FactoredPoly::expand() const {
  IntPoly out{mpz_class(constant)};
  for (const auto& [factor, mult] : factors) {
    const IntPoly f(factor.begin(), factor.end());
    for (int m = 0; m < mult; ++m) out = poly_mul(out, f);
  }
  return out;
}

namespace {

// Dense coefficient list of a polynomial given as (power, coefficient) terms.
std::vector<long> terms(std::initializer_list<std::pair<int, long>> list) {
  int top = 0;
  for (const auto& t : list) top = std::max(top, t.first);
  std::vector<long> out(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& [p, c] : list) out[static_cast<std::size_t>(p)] += c;
  return out;
}

std::array<RationalGF, 6> build_table() {
  const auto z = [](int p) { return terms({{p, 1}}); };
  const auto one_minus_z2 = terms({{0, 1}, {2, -1}});
  const auto one_minus_z4 = terms({{0, 1}, {4, -1}});
  const auto d1 = terms({{0, 1}, {2, -2}, {4, 1}, {6, -1}});
  const auto q2a = terms({{0, 1}, {2, -1}, {4, -1}, {6, 1}, {8, -1}});
  const auto q2b = terms({{0, 1}, {2, -3}, {4, 3}, {6, -5}, {8, 8}, {10, -9}, {12, 7}, {14, -8}, {16, 8},
                          {18, -5}, {20, 3}, {22, -1}});

  std::array<RationalGF, 6> t;
  // Width 0.
  t[0] = {{2, {{z(3), 1}}}, {1, {{one_minus_z2, 1}}}};
  t[1] = {{2, {{z(2), 1}}}, {1, {{one_minus_z2, 1}}}};
  // Width 1.
  const FactoredPoly den1{1, {{one_minus_z4, 2}, {d1, 1}}};
  t[2] = {{2, {{z(3), 1}, {terms({{0, 1}, {2, -1}, {4, 1}, {6, 3}, {8, -4}, {12, 1}}), 1}}}, den1};
  t[3] = {{2, {{z(4), 1}, {terms({{0, 2}, {4, -4}, {6, 2}, {8, 2}, {10, -1}}), 1}}}, den1};
  // Width 2.
  const FactoredPoly den2{1, {{q2a, 2}, {q2b, 1}}};
  t[4] = {{2,
           {{terms({{3, 1},   {5, -4},  {7, 7},   {9, -7},  {11, 9},  {13, 2},  {15, -31},
                    {17, 39}, {19, -46}, {21, 68}, {23, -75}, {25, 74}, {27, -61}, {29, 41},
                    {31, -20}, {33, 1},  {35, 6},  {37, -4}, {39, 1}}),
             1}}},
          den2};
  t[5] = {{2,
           {{z(6), 1},
            {one_minus_z2, 1},
            {terms({{0, 4},   {2, -4}, {4, -8}, {6, 8},   {8, -4},  {10, 16}, {12, -12}, {14, 18},
                    {16, -10}, {18, 3}, {20, -3}, {22, -4}, {24, 10}, {26, -10}, {28, 5},  {30, -1}}),
             1}}},
          den2};
  return t;
}

void check_width(int width) {
  if (width < 0 || width > 2) {
    throw PreconditionError("closed forms exist for honeycomb widths 0, 1, 2 only (got " + std::to_string(width) +
                            ")");
  }
}

DoubleDouble horner(const IntPoly& p, const DoubleDouble& z) {
  DoubleDouble acc(0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + CoeffTraits<mpz_class>::to_eval(*it);
  return acc;
}

// Smallest zero of one factor in (0, 1], by a sign-change scan and bisection.
DoubleDouble first_zero(const IntPoly& p) {
  constexpr int kGrid = 4000;
  DoubleDouble prev_z(0.0);
  DoubleDouble prev_v = horner(p, prev_z);
  for (int i = 1; i <= kGrid; ++i) {
    const DoubleDouble zi = DoubleDouble(i) / DoubleDouble(kGrid);
    const DoubleDouble vi = horner(p, zi);
    if (vi.hi == 0.0) return zi;
    if ((vi.hi < 0) != (prev_v.hi < 0)) {
      DoubleDouble lo = prev_z;
      DoubleDouble hi = zi;
      const bool lo_neg = prev_v.hi < 0;
      for (int it = 0; it < 120; ++it) {
        const DoubleDouble mid = ldexp(lo + hi, -1);
        if (mid == lo || mid == hi) break;
        const bool neg = horner(p, mid).hi < 0;
        (neg == lo_neg ? lo : hi) = mid;
      }
      return lo;
    }
    prev_z = zi;
    prev_v = vi;
  }
  return DoubleDouble(1.0);
}

}  // namespace

const RationalGF& honeycomb_rational(int width, WalkClass which) {
  static const std::array<RationalGF, 6> table = build_table();
  check_width(width);
  return table[static_cast<std::size_t>(2 * width + (which == WalkClass::A ? 0 : 1))];
}

DoubleDouble honeycomb_pole(int width) {
  const RationalGF& r = honeycomb_rational(width, WalkClass::A);
  DoubleDouble pole(1.0);
  for (const auto& factor : r.denominator.factors) {
    const DoubleDouble z0 = first_zero(IntPoly(factor.first.begin(), factor.first.end()));
    if (z0 < pole) pole = z0;
  }
  return pole;
}

DoubleDouble honeycomb_exact(int width, WalkClass which, const DoubleDouble& z) {
  const RationalGF& r = honeycomb_rational(width, which);
  if (z.hi < 0.0 || !(z < honeycomb_pole(width))) {
    throw DomainError("honeycomb_exact: z = " + to_decimal_string(z, 17) + " outside [0, dominant pole)");
  }
  return horner(r.numerator.expand(), z) / horner(r.denominator.expand(), z);
}

std::vector<mpz_class> honeycomb_exact_coeffs(int width, WalkClass which, int max_degree) {
  if (max_degree < 0) throw PreconditionError("max degree must be non-negative");
  const RationalGF& r = honeycomb_rational(width, which);
  const IntPoly num = r.numerator.expand();
  const IntPoly den = r.denominator.expand();
  if (den.front() != 1) throw PreconditionError("denominator must have constant term 1");
  // c_n = num_n - sum_{k>=1} den_k c_{n-k}
  std::vector<mpz_class> c(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    mpz_class v = n < num.size() ? num[n] : mpz_class(0);
    for (std::size_t k = 1; k < den.size() && k <= n; ++k) v -= den[k] * c[n - k];
    c[n] = v;
  }
  return c;
}

}  // namespace sawstrip
