#include "doctest.h"
#include "sawstrip/errors.hpp"
#include "sawstrip/series.hpp"

using namespace sawstrip;

namespace {

TruncatedSeries<double> monomials(int m, std::initializer_list<std::pair<int, double>> terms) {
  TruncatedSeries<double> s(m);
  for (const auto& [n, c] : terms) s[n] = c;
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("add: disjoint supports and identity") {
    const auto a = monomials(4, {{2, 2.0}});
    const auto b = monomials(4, {{4, 2.0}});
    CHECK(series_add(a, b) == monomials(4, {{2, 2.0}, {4, 2.0}}));
    CHECK(series_add(a, TruncatedSeries<double>(4)) == a);
  }

  TEST_CASE("add: B_0 truncated at M=6 is a sum of monomials") {
    auto b0 = series_add(series_add(monomials(6, {{2, 2.0}}), monomials(6, {{4, 2.0}})), monomials(6, {{6, 2.0}}));
    CHECK(b0 == monomials(6, {{2, 2}, {4, 2}, {6, 2}}));
  }

  TEST_CASE("add: mismatched degree or scale") {
    CHECK_THROWS_AS(series_add(TruncatedSeries<double>(3), TruncatedSeries<double>(4)), DegreeMismatchError);
    CHECK_THROWS_AS(series_add(TruncatedSeries<double>(3, 0), TruncatedSeries<double>(3, -1)), DegreeMismatchError);
  }

  TEST_CASE("length is M+1") {
    CHECK(TruncatedSeries<double>(0).coeffs().size() == 1);
    CHECK(TruncatedSeries<DoubleDouble>(7).coeffs().size() == 8);
    CHECK_THROWS_AS(TruncatedSeries<double>(-1), PreconditionError);
  }

  TEST_CASE("shift_scale") {
    CHECK(series_shift_scale(monomials(4, {{0, 1.0}}), 2, 2.0) == monomials(4, {{2, 2.0}}));
    const auto a = monomials(5, {{3, 2.0}, {5, 2.0}});
    CHECK(series_shift_scale(a, 0, 1.0) == a);
    CHECK(series_shift_scale(a, 2, 1.0) == monomials(5, {{5, 2.0}}));
    CHECK_THROWS_AS(series_shift_scale(a, -1, 1.0), PreconditionError);
  }

  TEST_CASE("shift_scale respects the coefficient scale") {
    TruncatedSeries<double> a(6, -1);
    a[1] = 0.5;  // c_1 = 1
    const auto s = series_shift_scale(a, 3, 3.0);
    CHECK(s.coefficient(4) == doctest::Approx(3.0));
    CHECK(s[4] == doctest::Approx(3.0 / 16.0));
  }

  TEST_CASE("eval: B_0 and A_0 closed forms") {
    TruncatedSeries<DoubleDouble> b0(400), a0(400);
    for (int n = 2; n <= 400; n += 2) b0[n] = 2.0;
    for (int n = 3; n <= 400; n += 2) a0[n] = 2.0;
    const DoubleDouble zc = parse_decimal("0.5411961001");
    CHECK(std::abs(static_cast<double>(series_eval(b0, zc)) - 0.8284271247) < 1e-9);
    CHECK(std::abs(static_cast<double>(series_eval(a0, DoubleDouble(0.5))) - 1.0 / 3.0) < 1e-9);
    CHECK(static_cast<double>(series_eval(TruncatedSeries<DoubleDouble>(10), DoubleDouble(0.3))) == 0.0);
  }

  TEST_CASE("eval: domain") {
    TruncatedSeries<double> a(3);
    CHECK_THROWS_AS(series_eval(a, 1.0), DomainError);
    CHECK_THROWS_AS(series_eval(a, -0.1), DomainError);
    CHECK_NOTHROW(series_eval(a, 0.0));
  }

  TEST_CASE("eval of scaled storage matches plain storage") {
    TruncatedSeries<double> plain(30, 0), scaled(30, -1);
    for (int n = 0; n <= 30; ++n) {
      plain[n] = n + 1.0;
      scaled[n] = std::ldexp(n + 1.0, -n);
    }
    CHECK(series_eval(plain, 0.7) == doctest::Approx(series_eval(scaled, 0.7)).epsilon(1e-14));
    CHECK(scaled.coefficient(17) == doctest::Approx(18.0));
  }

  TEST_CASE("property: shift then eval equals z^k times eval up to the tail") {
    TruncatedSeries<DoubleDouble> a(40);
    for (int n = 0; n <= 40; ++n) a[n] = DoubleDouble(1.0 + (n * 7) % 5);
    const int k = 3;
    const DoubleDouble z(0.6);
    const auto shifted = series_shift_scale(a, k, DoubleDouble(1.0));
    DoubleDouble tail(0.0);
    for (int n = 40 - k + 1; n <= 40; ++n) tail += a[n];
    const double bound = static_cast<double>(tail) * std::pow(0.6, 41);
    const double lhs = static_cast<double>(series_eval(shifted, z));
    const double rhs = std::pow(0.6, k) * static_cast<double>(series_eval(a, z));
    CHECK(std::abs(lhs - rhs) <= bound * 1.0000001 + 1e-15);
  }

  TEST_CASE("property: monotone in z for non-negative coefficients") {
    TruncatedSeries<DoubleDouble> a(50);
    for (int n = 0; n <= 50; ++n) a[n] = DoubleDouble((n * 13) % 7);
    DoubleDouble prev(-1.0);
    for (int i = 0; i < 100; ++i) {
      const DoubleDouble v = series_eval(a, DoubleDouble(i / 100.0));
      CHECK(prev <= v);
      prev = v;
    }
  }

  TEST_CASE("property: add is commutative, and associative for integers") {
    TruncatedSeries<mpz_class> a(5), b(5), c(5);
    for (int n = 0; n <= 5; ++n) {
      a[n] = n * 3;
      b[n] = mpz_class(1000000007) * n;
      c[n] = 17;
    }
    CHECK(series_add(a, b) == series_add(b, a));
    CHECK(series_add(series_add(a, b), c) == series_add(a, series_add(b, c)));
  }

  TEST_CASE("exact-mode traits") {
    CHECK(CoeffTraits<mpz_class>::is_nonnegative_integer(mpz_class(5)));
    CHECK_FALSE(CoeffTraits<mpz_class>::is_nonnegative_integer(mpz_class(-5)));
    CHECK_THROWS_AS(CoeffTraits<mpz_class>::scaled(mpz_class(1), -1), PreconditionError);
    CHECK(CoeffTraits<mpz_class>::parse("123456789012345678901234567890") ==
          mpz_class("123456789012345678901234567890"));
  }

  TEST_CASE("double-double text forms") {
    const DoubleDouble x = DoubleDouble(1.0) / DoubleDouble(3.0);
    CHECK(parse_exact(to_exact_string(x)) == x);
    const DoubleDouble y = parse_decimal("0.3826834323650897717284599840303988667613");
    CHECK(std::abs(static_cast<double>(y - cos_3pi_8())) < 1e-31);
    CHECK(to_decimal_string(DoubleDouble(0.5), 5).rfind("5.0000", 0) == 0);
    CHECK(parse_precision("fast") == PrecisionMode::fast);
    CHECK_THROWS_AS(parse_precision("quad"), SpecError);
  }
}
