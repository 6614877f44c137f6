#pragma once

// Sequence extrapolation for width-indexed estimates s_T -> s_inf.
//
// Every method builds a triangular tableau whose column 0 is the input. The
// limit is the entry of the highest-order extrapolant column that uses the
// latest data, and the uncertainty is its distance to the same entry of the
// next-lower-order extrapolant column. Arithmetic is double-double throughout.
//
// A denominator smaller than 1e-30 times the sequence scale flags the entry;
// the tableau is then cut before that column.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sawstrip/double_double.hpp"

namespace sawstrip {

enum class AccelMethod { bulirsch_stoer, wynn_epsilon, levin_u, neville, brezinski_theta, barber_hamer };

std::string to_string(AccelMethod method);
/// Accepts the full names and the short forms bs, wynn, levin, neville, theta, barber.
AccelMethod parse_accel_method(std::string_view name);
int minimum_length(AccelMethod method);

struct IndexedSequence {
  std::vector<double> T;
  std::vector<DoubleDouble> values;

  static IndexedSequence consecutive(int first_T, std::vector<DoubleDouble> values);
};

struct AccelTableau {
  AccelMethod method = AccelMethod::bulirsch_stoer;
  /// columns[0] is the input; later columns are method-specific (odd Wynn
  /// and theta columns are auxiliary).
  std::vector<std::vector<DoubleDouble>> columns;
  /// Indices of the columns that hold extrapolants, in increasing order.
  std::vector<int> extrapolant_columns;
  DoubleDouble limit;
  DoubleDouble uncertainty;
  /// Set when a degenerate denominator cut the tableau short.
  bool truncated = false;
};

/// Rational extrapolation in the variable T^-w.
AccelTableau bulirsch_stoer(const IndexedSequence& seq, double w = 1.0);
AccelTableau wynn_epsilon(std::span<const DoubleDouble> seq);
/// Neville tables run in 1/T; Levin u uses weights (n+1) * (s_n - s_{n-1}).
/// Barber-Hamer is the generalized epsilon algorithm with parameter -1.
AccelTableau accelerate(const IndexedSequence& seq, AccelMethod method, double w = 1.0);

}  // namespace sawstrip
