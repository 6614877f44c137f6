#include "sawstrip/analysis.hpp"

#include <cmath>

#include "sawstrip/errors.hpp"
#include "sawstrip/oracles.hpp"

namespace sawstrip {
namespace {

int sign(const DD& x) { return x.hi > 0.0 ? 1 : (x.hi < 0.0 ? -1 : 0); }

void check_pair(const StripEvaluator& a, const StripEvaluator& b) {
  if (a.lattice() != b.lattice()) throw InputError("records mix lattices");
  if (a.normalization() != b.normalization()) {
    throw InputError("records mix normalizations ('" + a.normalization() + "' vs '" + b.normalization() + "')");
  }
}

}  // namespace

DD LatticeConstants::lambda_hc() { return cos_3pi_8(); }

DD LatticeConstants::zc_reference(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::honeycomb:
      return honeycomb_zc();
    case LatticeKind::square:
      return parse_decimal("0.37905227776");
    case LatticeKind::triangular:
      return parse_decimal("0.2409175745");
  }
  return DD(0.0);
}

StripEvaluator StripEvaluator::from_record(GFRecord record) {
  StripEvaluator ev;
  ev.lattice_ = record.spec.lattice;
  ev.width_ = record.spec.width;
  ev.precision_ = record.spec.precision;
  ev.normalization_ = record.meta.normalization;
  auto shared = std::make_shared<const GFRecord>(std::move(record));
  ev.a_ = [shared](const DD& z) { return shared->eval_A(z); };
  ev.b_ = [shared](const DD& z) { return shared->eval_B(z); };
  return ev;
}

StripEvaluator StripEvaluator::honeycomb_closed_form(int width) {
  StripEvaluator ev;
  ev.lattice_ = LatticeKind::honeycomb;
  ev.width_ = width;
  ev.precision_ = PrecisionMode::high;
  ev.normalization_ = StripLattice(LatticeKind::honeycomb, width).normalization();
  honeycomb_rational(width, WalkClass::A);  // width check
  ev.a_ = [width](const DD& z) { return honeycomb_exact(width, WalkClass::A, z); };
  ev.b_ = [width](const DD& z) { return honeycomb_exact(width, WalkClass::B, z); };
  return ev;
}

Bracket default_bracket(LatticeKind kind) {
  const DD zc = LatticeConstants::zc_reference(kind);
  return {DD(0.9) * zc, DD(1.02) * zc};
}

RootOptions root_options_for(PrecisionMode mode) {
  RootOptions o;
  o.tolerance = mode == PrecisionMode::fast ? DD(1e-12) : DD(1e-24);
  return o;
}

DD find_root(const std::function<DD(const DD&)>& f, Bracket bracket, const RootOptions& options) {
  if (!(bracket.lo < bracket.hi)) throw BracketError("empty bracket");
  DD lo = bracket.lo;
  DD hi = bracket.hi;
  DD flo = f(lo);
  DD fhi = f(hi);
  if (sign(flo) == 0 && sign(fhi) == 0) {
    // A root at the endpoint, unless f vanishes on the whole bracket.
    constexpr int kGrid = 200;
    for (int i = 1; i < kGrid; ++i) {
      if (sign(f(bracket.lo + (bracket.hi - bracket.lo) * DD(i) / DD(kGrid))) != 0) return lo;
    }
    throw BracketError("function vanishes identically on the bracket");
  }
  if (sign(flo) == 0) return lo;
  if (sign(fhi) == 0) return hi;
  if (sign(flo) == sign(fhi)) {
    constexpr int kGrid = 200;
    bool found = false;
    bool all_zero = true;
    DD prev_z = lo;
    DD prev_f = flo;
    for (int i = 1; i <= kGrid && !found; ++i) {
      const DD zi = bracket.lo + (bracket.hi - bracket.lo) * DD(i) / DD(kGrid);
      const DD fi = f(zi);
      if (sign(fi) != 0) all_zero = false;
      if (sign(fi) != 0 && sign(fi) != sign(prev_f)) {
        lo = prev_z;
        flo = prev_f;
        hi = zi;
        fhi = fi;
        found = true;
      }
      prev_z = zi;
      prev_f = fi;
    }
    if (!found) {
      throw BracketError(all_zero ? "function vanishes identically on the bracket"
                                  : "no sign change on [" + to_decimal_string(bracket.lo, 12) + ", " +
                                        to_decimal_string(bracket.hi, 12) + "]");
    }
  }

  int iter = 0;
  // Bisection down to a coarse bracket.
  while (static_cast<double>(hi - lo) > 1e-6) {
    if (++iter > options.max_iterations) throw SolverError("root solver: iteration cap reached in bisection");
    const DD mid = ldexp(lo + hi, -1);
    const DD fm = f(mid);
    if (sign(fm) == 0) return mid;
    if (sign(fm) == sign(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  // Illinois secant on the bracket.
  int side = 0;
  DD last = lo;
  while (true) {
    if (++iter > options.max_iterations) throw SolverError("root solver: no convergence within iteration cap");
    DD x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = ldexp(lo + hi, -1);
    const DD fx = f(x);
    if (sign(fx) == 0) return x;
    const DD step = abs(x - last);
    last = x;
    if (sign(fx) == sign(flo)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi = ldexp(fhi, -1);
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo = ldexp(flo, -1);
      side = 1;
    }
    if (step < options.tolerance || hi - lo < options.tolerance) return x;
  }
}

DD combo(const StripEvaluator& gf, const DD& z, const DD& lambda) { return lambda * gf.A(z) + gf.B(z); }

DD solve_combo_level(const StripEvaluator& gf, const DD& level, Bracket bracket, const RootOptions& options,
                     const DD& lambda) {
  return find_root([&](const DD& z) { return combo(gf, z, lambda) - level; }, bracket, options);
}

DD intersect_zc(const StripEvaluator& gf_T, const StripEvaluator& gf_T1, Bracket bracket,
                const RootOptions& options) {
  check_pair(gf_T, gf_T1);
  return find_root([&](const DD& z) { return combo(gf_T, z) - combo(gf_T1, z); }, bracket, options);
}

IntersectResult solve_lambda_zc(const StripEvaluator& prev, const StripEvaluator& mid, const StripEvaluator& next,
                                Bracket bracket, const RootOptions& options) {
  check_pair(prev, mid);
  check_pair(mid, next);
  auto residual = [&](const DD& z) {
    const DD a0 = prev.A(z), a1 = mid.A(z), a2 = next.A(z);
    const DD b0 = prev.B(z), b1 = mid.B(z), b2 = next.B(z);
    return (a0 - a1) * (b2 - b1) - (a1 - a2) * (b1 - b0);
  };
  IntersectResult r;
  r.T = mid.width();
  r.zc = find_root(residual, bracket, options);
  const DD da = mid.A(r.zc) - prev.A(r.zc);
  if (std::abs(da.hi) < 1e-300 || std::abs(da.hi) < 1e-14 * std::abs(mid.A(r.zc).hi)) {
    throw SingularSystemError("back substitution for lambda divides by A_T - A_{T-1} = 0");
  }
  r.lambda = -(mid.B(r.zc) - prev.B(r.zc)) / da;
  return r;
}

FitResult fit_cab(int T, const DD& a_T, const DD& b_T, const DD& a_T1, const DD& b_T1) {
  const DD det = a_T * b_T1 - a_T1 * b_T;
  const double scale = std::abs((a_T * b_T1).hi) + std::abs((a_T1 * b_T).hi);
  if (!(std::abs(det.hi) > 1e-14 * scale)) {
    throw SingularSystemError("fit_cab: singular 2x2 system at T = " + std::to_string(T));
  }
  FitResult r;
  r.T = T;
  r.c_alpha = (b_T1 - b_T) / det;
  r.c_beta = (a_T - a_T1) / det;
  r.ratio = r.c_alpha / r.c_beta;
  return r;
}

FitResult fit_cab(const StripEvaluator& gf_T, const StripEvaluator& gf_T1, const DD& zc) {
  check_pair(gf_T, gf_T1);
  return fit_cab(gf_T.width(), gf_T.A(zc), gf_T.B(zc), gf_T1.A(zc), gf_T1.B(zc));
}

IndexedSequence local_gradient(const IndexedSequence& values) {
  const auto& s = values.values;
  if (s.size() != values.T.size()) throw PreconditionError("index and value lists differ in length");
  for (const DD& v : s) {
    if (!(v.hi > 0.0)) throw DomainError("local_gradient needs strictly positive values");
  }
  IndexedSequence out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(values.T[i - 1] > 0.0) || !(values.T[i] > values.T[i - 1])) {
      throw DomainError("local_gradient needs increasing positive widths");
    }
    const double num = std::log1p(static_cast<double>(s[i] / s[i - 1] - DD(1.0)));
    const double den = std::log1p(static_cast<double>(DD(values.T[i]) / DD(values.T[i - 1]) - DD(1.0)));
    out.T.push_back(values.T[i]);
    out.values.push_back(DD(num / den));
  }
  return out;
}

DD amplitude(const DD& c_limit) {
  if (!(c_limit.hi > 0.0)) throw DomainError("amplitude needs a positive limit");
  return c_limit / cos_3pi_8();
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("fit_line needs two or more points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw SingularSystemError("fit_line: all abscissae equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

CorrectionFit fit_correction(const IndexedSequence& values, const DD& limit, double exponent, int last) {
  const std::size_t n = values.values.size();
  if (n == 0) throw PreconditionError("fit_correction: empty sequence");
  const std::size_t start = last > 0 && static_cast<std::size_t>(last) < n ? n - static_cast<std::size_t>(last) : 0;
  DD sxx(0.0), sxy(0.0);
  for (std::size_t i = start; i < n; ++i) {
    const DD x(std::pow(values.T[i], -exponent));
    sxx += x * x;
    sxy += x * (limit - values.values[i]);
  }
  if (sxx.hi == 0.0) throw SingularSystemError("fit_correction: degenerate abscissae");
  return {limit, sxy / sxx, exponent};
}

}  // namespace sawstrip
