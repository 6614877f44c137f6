#pragma once

// Identity combinations, critical-point solvers, coefficient fits and
// exponent estimates built on evaluated strip generating functions.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sawstrip/accel.hpp"
#include "sawstrip/double_double.hpp"
#include "sawstrip/lattice.hpp"
#include "sawstrip/strip_enum.hpp"

namespace sawstrip {

using DD = DoubleDouble;

struct LatticeConstants {
  /// cos(3 pi / 8).
  static DD lambda_hc();
  /// Literature critical point per lattice (exact for honeycomb).
  static DD zc_reference(LatticeKind kind);
};

/// A_T(z) and B_T(z) of one width, from an enumerated record or from the
/// honeycomb closed forms.
class StripEvaluator {
 public:
  static StripEvaluator from_record(GFRecord record);
  static StripEvaluator honeycomb_closed_form(int width);

  LatticeKind lattice() const noexcept { return lattice_; }
  int width() const noexcept { return width_; }
  PrecisionMode precision() const noexcept { return precision_; }
  const std::string& normalization() const noexcept { return normalization_; }

  DD A(const DD& z) const { return a_(z); }
  DD B(const DD& z) const { return b_(z); }

 private:
  LatticeKind lattice_ = LatticeKind::honeycomb;
  int width_ = 0;
  PrecisionMode precision_ = PrecisionMode::high;
  std::string normalization_;
  std::function<DD(const DD&)> a_;
  std::function<DD(const DD&)> b_;
};

struct Bracket {
  DD lo;
  DD hi;
};

/// [0.9, 1.02] times the reference critical point.
Bracket default_bracket(LatticeKind kind);

struct RootOptions {
  DD tolerance = DD(1e-24);
  int max_iterations = 200;
};

/// 1e-12 for fast records, 1e-24 otherwise.
RootOptions root_options_for(PrecisionMode mode);

/// Root of f on the bracket: bisection to width 1e-6, then bracketed secant
/// (Illinois) refinement. Without a sign change at the endpoints the bracket
/// is scanned on a 200-point grid; still none gives BracketError.
DD find_root(const std::function<DD(const DD&)>& f, Bracket bracket, const RootOptions& options);

/// lambda * A_T(z) + B_T(z).
DD combo(const StripEvaluator& gf, const DD& z, const DD& lambda = LatticeConstants::lambda_hc());

/// z with combo(z) == level.
DD solve_combo_level(const StripEvaluator& gf, const DD& level, Bracket bracket, const RootOptions& options,
                     const DD& lambda = LatticeConstants::lambda_hc());

/// Crossing of combo for widths T and T+1.
DD intersect_zc(const StripEvaluator& gf_T, const StripEvaluator& gf_T1, Bracket bracket,
                const RootOptions& options);

struct IntersectResult {
  int T = 0;
  DD zc;
  std::optional<DD> lambda;
};

/// Lambda-free estimate from widths T-1, T, T+1: the z where the
/// increments of A and B between neighbouring widths are proportional, and
/// lambda(T) = -(B_T - B_{T-1}) / (A_T - A_{T-1}) there.
IntersectResult solve_lambda_zc(const StripEvaluator& prev, const StripEvaluator& mid, const StripEvaluator& next,
                                Bracket bracket, const RootOptions& options);

struct FitResult {
  int T = 0;
  DD c_alpha;
  DD c_beta;
  DD ratio;
};

/// Solves c_alpha A + c_beta B = 1 at widths T and T+1 for values given at zc.
FitResult fit_cab(int T, const DD& a_T, const DD& b_T, const DD& a_T1, const DD& b_T1);
FitResult fit_cab(const StripEvaluator& gf_T, const StripEvaluator& gf_T1, const DD& zc);

/// log(s_i / s_{i-1}) / log(T_i / T_{i-1}) for i >= 1, indexed by T_i.
IndexedSequence local_gradient(const IndexedSequence& values);

/// c / cos(3 pi / 8).
DD amplitude(const DD& c_limit);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares straight line.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct CorrectionFit {
  DD limit;
  DD c1;
  double exponent = 2.0;
};

/// Fits s_T ~ limit - c1 / T^exponent for c1 by least squares over the last
/// `last` entries (all if 0), with the limit held fixed.
CorrectionFit fit_correction(const IndexedSequence& values, const DD& limit, double exponent = 2.0, int last = 0);

}  // namespace sawstrip
