#pragma once

// Versioned literature values (critical points, tabulated A_T(z_c), B_T(z_c),
// lambda-free estimates). Used by tests and by the CLI's --compare-paper
// columns; no computation reads them implicitly.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sawstrip/double_double.hpp"
#include "sawstrip/lattice.hpp"

namespace sawstrip {

struct ReferenceRow {
  int T = 0;
  DoubleDouble first;
  DoubleDouble second;
};

struct ReferenceData {
  std::string version;
  DoubleDouble cos_3pi_8;
  std::map<LatticeKind, DoubleDouble> zc;
  std::map<LatticeKind, DoubleDouble> zc_extrapolated;
  std::map<LatticeKind, DoubleDouble> combo_limit;
  std::map<LatticeKind, DoubleDouble> amplitude;
  /// (T, A_T(z_c), B_T(z_c)).
  std::map<LatticeKind, std::vector<ReferenceRow>> critical_values;
  /// (T, z_c(T), lambda(T)).
  std::map<LatticeKind, std::vector<ReferenceRow>> lambda_free;

  const ReferenceRow* critical_row(LatticeKind kind, int T) const;
  const ReferenceRow* lambda_free_row(LatticeKind kind, int T) const;
};

/// Default location: $SAWSTRIP_DATA_DIR, else the source tree's data/.
std::filesystem::path reference_data_path();
ReferenceData load_reference_data(const std::filesystem::path& path);
/// Cached load from reference_data_path().
const ReferenceData& reference_data();

}  // namespace sawstrip
