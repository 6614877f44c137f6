#include "sawstrip/lattice.hpp"

#include <cstdlib>

#include "sawstrip/errors.hpp"

namespace sawstrip {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::honeycomb:
      return "honeycomb";
    case LatticeKind::square:
      return "square";
    case LatticeKind::triangular:
      return "triangular";
  }
  return "?";
}

LatticeKind parse_lattice(std::string_view name) {
  if (name == "honeycomb" || name == "hc") return LatticeKind::honeycomb;
  if (name == "square" || name == "sq") return LatticeKind::square;
  if (name == "triangular" || name == "tri") return LatticeKind::triangular;
  throw SpecError("unknown lattice '" + std::string(name) + "' (expected honeycomb, square or triangular)");
}

StripLattice::StripLattice(LatticeKind kind, int width) : kind_(kind), width_(width) {
  const int min_width = kind == LatticeKind::honeycomb ? 0 : 1;
  if (width < min_width) {
    throw SpecError("width " + std::to_string(width) + " below the minimum " + std::to_string(min_width) +
                    " for the " + to_string(kind) + " lattice");
  }
}

// Whether the vertical bond (x,y)-(x,y+1) exists in the infinite lattice.
bool StripLattice::vertical_bond_from(int x, int y) const noexcept {
  if (kind_ != LatticeKind::honeycomb) return true;
  return ((x + y - width_) & 1) == 0;
}

bool StripLattice::has_bond(Site a, Site b) const noexcept {
  if (!in_strip(a) || !in_strip(b)) return false;
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  if (dy == 0) return std::abs(dx) == 1;
  if (dx == 0 && std::abs(dy) == 1) return vertical_bond_from(a.x, dy > 0 ? a.y : b.y);
  if (kind_ == LatticeKind::triangular) return (dx == 1 && dy == -1) || (dx == -1 && dy == 1);
  return false;
}

Neighbours StripLattice::neighbours(Site s) const noexcept {
  static constexpr std::array<std::array<int, 2>, 6> kSteps = {
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};
  Neighbours out;
  for (const auto& step : kSteps) {
    const Site t{s.x + step[0], s.y + step[1]};
    if (has_bond(s, t)) out.sites[static_cast<std::size_t>(out.count++)] = t;
  }
  return out;
}

bool StripLattice::is_top_end(Site s) const noexcept {
  if (s.y != width_ || s == origin()) return false;
  return vertical_bond_from(s.x, width_);
}

bool StripLattice::is_bottom_end(Site s) const noexcept {
  if (s.y != 0 || s == origin()) return false;
  return vertical_bond_from(s.x, -1);
}

std::string StripLattice::normalization() const {
  return end_factor_degree() == 1 ? "half-steps: z^(edges+1)" : "on-boundary: z^edges";
}

}  // namespace sawstrip
