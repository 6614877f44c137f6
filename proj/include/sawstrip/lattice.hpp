#pragma once

// Strip geometry shared by the transfer matrix and the brute-force oracle.
//
// A strip of width T has rows y = 0..T and unbounded columns x; the origin is
// the top-row vertex (0, T). A-walks end on the top row, B-walks on the bottom
// row. The honeycomb lattice is a brick wall: horizontal bonds everywhere and
// the vertical bond (x,y)-(x,y+1) present iff x + y - T is even, so the origin
// always carries an upward half-edge. The triangular lattice is the square
// lattice plus the diagonals (x,y)-(x+1,y-1).

#include <array>
#include <string>
#include <string_view>

namespace sawstrip {

enum class LatticeKind { honeycomb, square, triangular };

std::string to_string(LatticeKind kind);
LatticeKind parse_lattice(std::string_view name);

struct Site {
  int x = 0;
  int y = 0;
  bool operator==(const Site&) const = default;
};

/// Up to six neighbours; unused entries past `count` are unspecified.
struct Neighbours {
  std::array<Site, 6> sites{};
  int count = 0;
  const Site* begin() const { return sites.data(); }
  const Site* end() const { return sites.data() + count; }
};

class StripLattice {
 public:
  StripLattice(LatticeKind kind, int width);

  LatticeKind kind() const noexcept { return kind_; }
  int width() const noexcept { return width_; }
  Site origin() const noexcept { return {0, width_}; }

  bool in_strip(Site s) const noexcept { return s.y >= 0 && s.y <= width_; }
  bool has_bond(Site a, Site b) const noexcept;
  Neighbours neighbours(Site s) const noexcept;

  /// Site where an A-walk may end (top row, not the origin; on the honeycomb
  /// lattice only where an upward half-edge leaves the strip).
  bool is_top_end(Site s) const noexcept;
  /// Site where a B-walk may end.
  bool is_bottom_end(Site s) const noexcept;

  /// Extra power of z carried by every walk: the half-steps onto and off the
  /// boundary for honeycomb/square, none for triangular.
  int end_factor_degree() const noexcept { return kind_ == LatticeKind::triangular ? 0 : 1; }
  std::string normalization() const;

 private:
  bool vertical_bond_from(int x, int y) const noexcept;

  LatticeKind kind_;
  int width_;
};

}  // namespace sawstrip
