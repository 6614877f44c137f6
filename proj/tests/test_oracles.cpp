#include <cmath>

#include "doctest.h"
#include "sawstrip/errors.hpp"
#include "sawstrip/oracles.hpp"

using namespace sawstrip;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

double d(const DoubleDouble& x) { return static_cast<double>(x); }

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("closed forms at sample points") {
    CHECK(std::abs(d(honeycomb_exact(0, WalkClass::A, DoubleDouble(0.5))) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(d(honeycomb_exact(0, WalkClass::B, parse_decimal("0.5411961001"))) - 0.8284271247) < 1e-9);
  }

  TEST_CASE("identity holds at z_c for widths 0..2") {
    for (int w = 0; w <= 2; ++w) {
      const DoubleDouble zc = honeycomb_zc();
      const DoubleDouble v = cos_3pi_8() * honeycomb_exact(w, WalkClass::A, zc) + honeycomb_exact(w, WalkClass::B, zc);
      CHECK(std::abs(d(v - DoubleDouble(1.0))) < 1e-12);
    }
  }

  TEST_CASE("closed-form coefficients") {
    CHECK(honeycomb_exact_coeffs(0, WalkClass::B, 6) == ints({0, 0, 2, 0, 2, 0, 2}));
    CHECK(honeycomb_exact_coeffs(0, WalkClass::A, 3) == ints({0, 0, 0, 2}));
    for (int w = 0; w <= 2; ++w) {
      CHECK(honeycomb_exact_coeffs(w, WalkClass::A, 0) == ints({0}));
      CHECK(honeycomb_exact_coeffs(w, WalkClass::B, 0) == ints({0}));
    }
    CHECK_THROWS_AS(honeycomb_exact_coeffs(3, WalkClass::A, 5), PreconditionError);
  }

  TEST_CASE("printed factorizations multiply out consistently") {
    // Q_2 = (1 - z^2 - z^4 + z^6 - z^8)^2 (degree-22 factor): degree 38, constant 1.
    const IntPoly q2 = honeycomb_rational(2, WalkClass::A).denominator.expand();
    CHECK(q2.size() == 39);
    CHECK(q2.front() == 1);
    CHECK(q2.back() == -1);
    // A and B of one width share a denominator.
    for (int w = 0; w <= 2; ++w) {
      CHECK(honeycomb_rational(w, WalkClass::A).denominator.expand() ==
            honeycomb_rational(w, WalkClass::B).denominator.expand());
    }
    // (1 - z^4)^2 (1 - 2z^2 + z^4 - z^6) expands to degree 14 with the right ends.
    const IntPoly q1 = honeycomb_rational(1, WalkClass::A).denominator.expand();
    CHECK(q1.size() == 15);
    CHECK(q1[0] == 1);
    CHECK(q1[2] == -2);
    CHECK(q1[14] == -1);
    // Numerator of B_2 has its lowest term 8 z^6 and all terms even powers.
    const IntPoly pb2 = honeycomb_rational(2, WalkClass::B).numerator.expand();
    CHECK(pb2[6] == 8);
    for (std::size_t n = 1; n < pb2.size(); n += 2) CHECK(pb2[n] == 0);
    // The leading coefficient of P_2^A is 2.
    const IntPoly pa2 = honeycomb_rational(2, WalkClass::A).numerator.expand();
    CHECK(pa2.size() == 40);
    CHECK(pa2[3] == 2);
    CHECK(pa2[39] == 2);
  }

  TEST_CASE("dominant pole and domain") {
    CHECK(d(honeycomb_pole(0)) == doctest::Approx(1.0));
    for (int w = 0; w <= 2; ++w) {
      const DoubleDouble p = honeycomb_pole(w);
      CHECK(honeycomb_zc() < p);
      CHECK_THROWS_AS(honeycomb_exact(w, WalkClass::A, p), DomainError);
      CHECK_THROWS_AS(honeycomb_exact(w, WalkClass::B, DoubleDouble(-0.1)), DomainError);
    }
    CHECK(honeycomb_pole(2) < honeycomb_pole(1));
    CHECK(honeycomb_pole(1) < honeycomb_pole(0));
  }

  TEST_CASE("property: coefficients reproduce the closed form within the geometric tail") {
    const int M = 400;
    for (int w = 0; w <= 2; ++w) {
      for (const WalkClass which : {WalkClass::A, WalkClass::B}) {
        const auto c = honeycomb_exact_coeffs(w, which, M);
        const double pole = d(honeycomb_pole(w));
        for (const double frac : {0.3, 0.6, 0.9}) {
          const double z = frac * pole;
          DoubleDouble sum(0.0);
          for (int n = M; n >= 0; --n) sum = sum * DoubleDouble(z) + CoeffTraits<mpz_class>::to_eval(c[static_cast<std::size_t>(n)]);
          const double exact = d(honeycomb_exact(w, which, DoubleDouble(z)));
          const double last = std::abs(c[static_cast<std::size_t>(M)].get_d()) * std::pow(z, M);
          const double bound = 50.0 * (last / (1.0 - frac)) + 1e-14 * exact;
          CHECK(std::abs(d(sum) - exact) <= bound);
        }
      }
    }
  }

  TEST_CASE("dfs agrees with the closed forms") {
    for (int w = 0; w <= 2; ++w) {
      StripSpec s;
      s.lattice = LatticeKind::honeycomb;
      s.width = w;
      s.half_length = 10;
      s.max_degree = 10;
      const DfsCounts c = dfs_count(s, 10);
      CHECK(c.A == honeycomb_exact_coeffs(w, WalkClass::A, 10));
      CHECK(c.B == honeycomb_exact_coeffs(w, WalkClass::B, 10));
    }
  }

  TEST_CASE("dfs: degree 0 is empty, order independence, budget") {
    for (const LatticeKind kind : {LatticeKind::honeycomb, LatticeKind::square, LatticeKind::triangular}) {
      StripSpec s;
      s.lattice = kind;
      s.width = 2;
      s.half_length = 11;
      const DfsCounts fwd = dfs_count(s, 11);
      const DfsCounts rev = dfs_count(s, 11, 500'000'000, true);
      CHECK(fwd.A[0] == 0);
      CHECK(fwd.B[0] == 0);
      CHECK(fwd.A == rev.A);
      CHECK(fwd.B == rev.B);
      CHECK_THROWS_AS(dfs_count(s, 11, 100), CapacityError);
    }
  }

  TEST_CASE("dfs agrees with exact enumeration, square T=2") {
    StripSpec s;
    s.lattice = LatticeKind::square;
    s.width = 2;
    s.max_degree = 12;
    s.half_length = 12;
    s.precision = PrecisionMode::exact;
    const GFRecord r = enumerate(s);
    const DfsCounts c = dfs_count(s, 12);
    CHECK(integer_coefficients(r.A) == c.A);
    CHECK(integer_coefficients(r.B) == c.B);
  }
}
