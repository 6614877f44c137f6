#include <cmath>

#include "doctest.h"
#include "sawstrip/analysis.hpp"
#include "sawstrip/errors.hpp"
#include "sawstrip/reference_data.hpp"

using namespace sawstrip;

namespace {

double d(const DD& x) { return static_cast<double>(x); }

GFRecord record(LatticeKind kind, int T, int M) {
  StripSpec s;
  s.lattice = kind;
  s.width = T;
  s.max_degree = M;
  s.half_length = M;
  s.precision = PrecisionMode::high;
  return enumerate(s);
}

StripEvaluator hc(int T) { return StripEvaluator::honeycomb_closed_form(T); }

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("constants") {
    CHECK(d(LatticeConstants::lambda_hc()) == doctest::Approx(0.3826834324).epsilon(1e-10));
    CHECK(d(LatticeConstants::zc_reference(LatticeKind::honeycomb)) == doctest::Approx(0.5411961001).epsilon(1e-10));
    CHECK(d(LatticeConstants::zc_reference(LatticeKind::square)) == doctest::Approx(0.37905227776).epsilon(1e-12));
    CHECK(d(LatticeConstants::zc_reference(LatticeKind::triangular)) == doctest::Approx(0.2409175745).epsilon(1e-12));
  }

  TEST_CASE("combo: honeycomb identity from enumeration") {
    const DD zc = parse_decimal("0.5411961001");
    for (int T = 0; T <= 3; ++T) {
      const auto ev = StripEvaluator::from_record(record(LatticeKind::honeycomb, T, 800));
      CHECK(std::abs(d(combo(ev, zc)) - 1.0) <= 1e-6);
    }
  }

  TEST_CASE("combo: closed form at z = 0.5") {
    CHECK(std::abs(d(combo(hc(0), DD(0.5))) - 0.7942278) < 1e-7);
  }

  TEST_CASE("combo: square T=1 from tabulated values") {
    const auto& ref = reference_data();
    const ReferenceRow* r = ref.critical_row(LatticeKind::square, 1);
    REQUIRE(r);
    CHECK(std::abs(d(cos_3pi_8() * r->first + r->second) - 1.022193) < 1e-5);
  }

  TEST_CASE("intersect_zc: honeycomb widths (0,1)") {
    const DD z = intersect_zc(hc(0), hc(1), default_bracket(LatticeKind::honeycomb), root_options_for(PrecisionMode::high));
    CHECK(std::abs(d(z - honeycomb_zc())) < 1e-10);
  }

  TEST_CASE("intersect_zc: identical inputs have no bracket") {
    CHECK_THROWS_AS(intersect_zc(hc(1), hc(1), default_bracket(LatticeKind::honeycomb), RootOptions{}), BracketError);
  }

  TEST_CASE("intersect_zc: square crossings increase toward z_c") {
    std::vector<StripEvaluator> gfs;
    for (int T = 1; T <= 4; ++T) gfs.push_back(StripEvaluator::from_record(record(LatticeKind::square, T, 400)));
    DD prev(0.0);
    for (std::size_t i = 0; i + 1 < gfs.size(); ++i) {
      const DD z = intersect_zc(gfs[i], gfs[i + 1], default_bracket(LatticeKind::square), RootOptions{});
      CHECK(d(z) > 0.3788);
      CHECK(d(z) < 0.37905227776);
      CHECK(prev < z);
      prev = z;
    }
  }

  TEST_CASE("solve_lambda_zc on the closed forms recovers (z_c, cos 3pi/8)") {
    const IntersectResult r = solve_lambda_zc(hc(0), hc(1), hc(2), default_bracket(LatticeKind::honeycomb),
                                              root_options_for(PrecisionMode::high));
    CHECK(r.T == 1);
    CHECK(std::abs(d(r.zc - honeycomb_zc())) < 1e-9);
    REQUIRE(r.lambda);
    CHECK(std::abs(d(*r.lambda - cos_3pi_8())) < 1e-9);
  }

  TEST_CASE("solve_lambda_zc: degenerate back substitution") {
    CHECK_THROWS(solve_lambda_zc(hc(1), hc(1), hc(2), default_bracket(LatticeKind::honeycomb), RootOptions{}));
  }

  TEST_CASE("fit_cab") {
    const FitResult h = fit_cab(hc(1), hc(2), honeycomb_zc());
    CHECK(std::abs(d(h.c_alpha) - 0.3826834) < 1e-6);
    CHECK(std::abs(d(h.c_beta) - 1.0) < 1e-6);
    const auto& ref = reference_data();
    const ReferenceRow* r1 = ref.critical_row(LatticeKind::square, 1);
    const ReferenceRow* r2 = ref.critical_row(LatticeKind::square, 2);
    const FitResult f = fit_cab(1, r1->first, r1->second, r2->first, r2->second);
    CHECK(std::abs(d(f.c_alpha) - 0.36838) < 1e-4);
    CHECK(std::abs(d(f.c_beta) - 0.98360) < 1e-4);
    // Residuals of both defining equations.
    CHECK(std::abs(d(f.c_alpha * r1->first + f.c_beta * r1->second - DD(1.0))) < 1e-12);
    CHECK(std::abs(d(f.c_alpha * r2->first + f.c_beta * r2->second - DD(1.0))) < 1e-12);
    CHECK_THROWS_AS(fit_cab(1, DD(1.0), DD(2.0), DD(2.0), DD(4.0)), SingularSystemError);
  }

  TEST_CASE("local_gradient") {
    IndexedSequence p, c;
    for (int T = 1; T <= 10; ++T) {
      p.T.push_back(T);
      p.values.push_back(DD(std::pow(T, -0.25)));
      c.T.push_back(T);
      c.values.push_back(DD(3.0));
    }
    for (const DD& g : local_gradient(p).values) CHECK(std::abs(d(g) + 0.25) < 1e-14);
    for (const DD& g : local_gradient(c).values) CHECK(d(g) == 0.0);
    CHECK(local_gradient(p).T.front() == 2.0);
    IndexedSequence bad = c;
    bad.values[3] = DD(-1.0);
    CHECK_THROWS_AS(local_gradient(bad), DomainError);
  }

  TEST_CASE("local_gradient of tabulated square B_T grows more negative") {
    IndexedSequence b;
    for (const ReferenceRow& r : reference_data().critical_values.at(LatticeKind::square)) {
      if (r.T < 2) continue;
      b.T.push_back(r.T);
      b.values.push_back(r.second);
    }
    const IndexedSequence g = local_gradient(b);
    for (std::size_t i = 1; i < g.values.size(); ++i) CHECK(g.values[i] < g.values[i - 1]);
  }

  TEST_CASE("property: local_gradient is scale invariant") {
    IndexedSequence s, t;
    for (int T = 1; T <= 8; ++T) {
      s.T.push_back(T);
      t.T.push_back(T);
      s.values.push_back(DD(1.0 / (T + 0.3)));
      t.values.push_back(DD(7.5) * DD(1.0 / (T + 0.3)));
    }
    const auto a = local_gradient(s).values, b = local_gradient(t).values;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(d(a[i] - b[i])) < 1e-13);
  }

  TEST_CASE("amplitude") {
    CHECK(std::abs(d(amplitude(DD(1.0))) - 2.6131259) < 1e-7);
    CHECK(std::abs(d(amplitude(parse_decimal("1.024966"))) - 2.678365) < 1e-6);
    CHECK(std::abs(d(amplitude(parse_decimal("1.901979"))) - 4.970111) < 1e-6);
    CHECK_THROWS_AS(amplitude(DD(0.0)), DomainError);
  }

  TEST_CASE("property: combo increases with z") {
    for (const auto& ev : {hc(0), hc(1), hc(2), StripEvaluator::from_record(record(LatticeKind::square, 2, 300))}) {
      const DD zc = LatticeConstants::zc_reference(ev.lattice());
      DD prev(-1.0);
      for (int i = 0; i <= 50; ++i) {
        const DD v = combo(ev, zc * DD(0.5 + i / 100.0));
        CHECK(prev < v);
        prev = v;
      }
    }
  }

  TEST_CASE("find_root: fallback scan and errors") {
    const auto f = [](const DD& z) { return (z - DD(0.3)) * (z - DD(0.5)); };
    const DD r = find_root(f, {DD(0.0), DD(0.4)}, RootOptions{});
    CHECK(std::abs(d(r) - 0.3) < 1e-20);
    const DD r2 = find_root(f, {DD(0.1), DD(0.8)}, RootOptions{});  // same sign at the ends
    CHECK(std::abs(d(r2) - 0.3) < 1e-20);
    CHECK_THROWS_AS(find_root([](const DD&) { return DD(1.0); }, {DD(0.0), DD(1.0)}, RootOptions{}), BracketError);
    CHECK_THROWS_AS(find_root(f, {DD(0.0), DD(0.4)}, RootOptions{DD(1e-24), 3}), SolverError);
  }

  TEST_CASE("solve_combo_level on A_0, B_0") {
    const DD z = solve_combo_level(hc(0), DD(1.0), default_bracket(LatticeKind::honeycomb),
                                   root_options_for(PrecisionMode::high));
    CHECK(std::abs(d(z - honeycomb_zc())) < 1e-25);
  }

  TEST_CASE("fit_line and fit_correction") {
    const LineFit f = fit_line({1, 2, 3}, {3, 5, 7});
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    IndexedSequence s;
    for (int T = 2; T <= 9; ++T) {
      s.T.push_back(T);
      s.values.push_back(DD(1.5) - DD(0.2) / DD(double(T) * T));
    }
    const CorrectionFit c = fit_correction(s, DD(1.5));
    CHECK(std::abs(d(c.c1) - 0.2) < 1e-14);
  }

  TEST_CASE("mixed lattices are refused") {
    const auto sq = StripEvaluator::from_record(record(LatticeKind::square, 1, 20));
    CHECK_THROWS_AS(intersect_zc(hc(1), sq, default_bracket(LatticeKind::square), RootOptions{}), InputError);
  }
}
