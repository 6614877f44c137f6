#pragma once

// Independent ground truth for the enumeration: the closed-form honeycomb
// strip generating functions for widths 0, 1, 2 and a brute-force
// depth-first walk counter.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "sawstrip/boundary.hpp"
#include "sawstrip/double_double.hpp"
#include "sawstrip/strip_enum.hpp"

namespace sawstrip {

/// Integer polynomial in z, coefficient of z^n at index n.
using IntPoly = std::vector<mpz_class>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// A polynomial as printed: an integer constant times a product of factors,
/// each raised to a multiplicity.
struct FactoredPoly {
  long constant = 1;
  std::vector<std::pair<std::vector<long>, int>> factors;

  IntPoly expand() const;
};

struct RationalGF {
  FactoredPoly numerator;
  FactoredPoly denominator;
};

/// The closed forms for honeycomb widths 0, 1, 2 (A: which == WalkClass::A).
const RationalGF& honeycomb_rational(int width, WalkClass which);

/// Smallest zero of the denominator in (0, 1]: the dominant pole.
DoubleDouble honeycomb_pole(int width);

/// Evaluates the closed form; throws DomainError unless 0 <= z < pole.
DoubleDouble honeycomb_exact(int width, WalkClass which, const DoubleDouble& z);

/// Taylor coefficients through degree M by exact long division.
std::vector<mpz_class> honeycomb_exact_coeffs(int width, WalkClass which, int max_degree);

struct DfsCounts {
  std::vector<mpz_class> A;
  std::vector<mpz_class> B;
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first enumeration of the walks from the origin with at
/// most `n_max` in output degree (normalization applied), counting A-walks on
/// both sides of the origin directly. Columns are limited to |x| <= L.
/// Throws CapacityError once more than `node_budget` walks have been visited.
/// `reverse_order` explores neighbours in the opposite order.
DfsCounts dfs_count(const StripSpec& spec, int n_max, std::uint64_t node_budget = 500'000'000,
                    bool reverse_order = false);

}  // namespace sawstrip
