#pragma once

// Transfer-matrix enumeration of the strip generating functions A_T(z)
// (both endpoints on the top side) and B_T(z) (second endpoint on the bottom
// side) for walks starting at the top-row origin.
//
// The boundary line sweeps the 2L+1 columns -L..L bottom to top, column by
// column; each state carries a truncated series in z. A-walks are counted with
// the far endpoint strictly left of the origin and doubled.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sawstrip/boundary.hpp"
#include "sawstrip/lattice.hpp"
#include "sawstrip/series.hpp"

namespace sawstrip {

struct StripSpec {
  LatticeKind lattice = LatticeKind::square;
  int width = 1;
  int half_length = 100;
  int max_degree = 100;
  PrecisionMode precision = PrecisionMode::high;
  /// Largest admissible width; negative selects the per-lattice default.
  int width_bound = -1;
  /// Cap on the coefficient storage of the sweep, in bytes.
  std::size_t memory_budget = std::size_t{3} << 30;

  bool operator==(const StripSpec&) const = default;
};

int default_width_bound(LatticeKind kind);

/// Throws SpecError for an inconsistent spec and CapacityError for a width over
/// the feasibility bound.
void validate(const StripSpec& spec);

/// Binary scale of stored coefficients (see TruncatedSeries).
int coefficient_scale(LatticeKind kind, PrecisionMode mode);

using AnySeries =
    std::variant<TruncatedSeries<double>, TruncatedSeries<DoubleDouble>, TruncatedSeries<mpz_class>>;

int max_degree(const AnySeries& s);
int scale_log2(const AnySeries& s);
DoubleDouble evaluate(const AnySeries& s, const DoubleDouble& z);
/// Unscaled coefficient c_n as a double-double (rounded for huge integers).
DoubleDouble coefficient(const AnySeries& s, int n);
/// Unscaled coefficients as exact integers; throws PreconditionError unless
/// the series is exact or every value is an integer.
std::vector<mpz_class> integer_coefficients(const AnySeries& s);

struct GFMeta {
  std::string normalization;
  std::string generator;
  double wall_seconds = 0.0;
  std::size_t peak_states = 0;
};

struct GFRecord {
  StripSpec spec;
  AnySeries A;
  AnySeries B;
  GFMeta meta;

  DoubleDouble eval_A(const DoubleDouble& z) const { return evaluate(A, z); }
  DoubleDouble eval_B(const DoubleDouble& z) const { return evaluate(B, z); }
};

std::string generator_version();

struct EnumerateOptions {
  /// With two or more workers the A and B sweeps run concurrently; the result
  /// is identical to the single-worker run.
  int workers = 1;
};

GFRecord enumerate(const StripSpec& spec, const EnumerateOptions& options = {});

/// One column sweep: the signature map with a truncated series per state.
/// States are kept in ascending key order and targets are accumulated in that
/// order, so floating-point results are reproducible.
template <class Coeff>
class TransferSweep {
 public:
  /// `edge_degree` is the largest bond count kept; `budget` caps coefficient
  /// storage in bytes. With `windows` off every state keeps all degrees.
  TransferSweep(BoundaryRules rules, int edge_degree, int scale_log2, std::size_t budget,
                bool windows = true);

  const BoundaryRules& rules() const noexcept { return rules_; }

  /// Passes the kink over `site`.
  void advance(Site site);
  /// Moves the boundary from the top of one column to the bottom of the next.
  void next_column();

  std::size_t size() const noexcept { return keys_.size(); }
  std::size_t peak_size() const noexcept { return peak_; }
  const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
  /// Series of the i-th state (ascending key order), all degrees.
  TruncatedSeries<Coeff> series(std::size_t i) const;
  /// Completed walks, indexed by bond count.
  const TruncatedSeries<Coeff>& harvest() const noexcept { return harvest_; }

 private:
  struct Window {
    int lo;
    int hi;
  };
  Window window_after(Site site) const noexcept;

  BoundaryRules rules_;
  int edge_degree_;
  int scale_;
  std::size_t stride_;
  std::size_t budget_;
  bool windows_;
  Window window_{0, 0};
  std::size_t peak_ = 1;

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slot_;
  std::vector<int> first_;  // lowest possibly non-zero degree, per slot
  std::vector<Coeff> arena_;

  std::vector<Coeff> next_arena_;
  std::vector<int> next_first_;
  std::vector<Transition> scratch_;
  TruncatedSeries<Coeff> harvest_;
};

extern template class TransferSweep<double>;
extern template class TransferSweep<DoubleDouble>;
extern template class TransferSweep<mpz_class>;

/// Reference form of one kink move over an ordered map, without degree
/// windows or storage reuse. Completed walks are added to `harvest`.
template <class Coeff>
using StateMap = std::map<std::uint64_t, TruncatedSeries<Coeff>>;

template <class Coeff>
StateMap<Coeff> advance_boundary(const BoundaryRules& rules, const StateMap<Coeff>& states, Site site,
                                 TruncatedSeries<Coeff>& harvest) {
  StateMap<Coeff> out;
  std::vector<Transition> ts;
  for (const auto& [key, series] : states) {
    ts.clear();
    rules.expand(key, site, ts);
    for (const Transition& t : ts) {
      const TruncatedSeries<Coeff> shifted = series_shift_scale(series, t.bonds, Coeff(1));
      if (t.harvest()) {
        harvest = series_add(harvest, shifted);
        continue;
      }
      auto [it, inserted] = out.try_emplace(t.target, shifted);
      if (!inserted) it->second = series_add(it->second, shifted);
    }
  }
  return out;
}

}  // namespace sawstrip
