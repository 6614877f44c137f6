#pragma once

// Local transfer-matrix update rules: given one source signature and the
// vertex the kink is about to pass, list the target signatures and the number
// of bonds each adds.
//
// Square and honeycomb use the edge boundary: T+2 slots (T+1 horizontal bonds
// plus the kink bond), where the vertex (c,k) consumes slots k (bond from
// below) and k+1 (bond from the left) and emits slots k (bond to the right)
// and k+1 (bond upward). The triangular lattice uses the through-vertex
// boundary of T+1 slots, one per row, each holding the state of the most
// recent vertex in that row; the new vertex (c,k) bonds back to the frontier
// vertices in slots k-1, k and k+1 and then replaces slot k.

#include <cstdint>
#include <limits>
#include <vector>

#include "sawstrip/lattice.hpp"
#include "sawstrip/signature.hpp"

namespace sawstrip {

/// A-walks end on the top side strictly left of the origin (the sweep counts
/// one side and doubles); B-walks end on the bottom side.
enum class WalkClass { A, B };

enum class VertexRole : std::uint8_t { regular, optional_end, origin };

struct Transition {
  static constexpr std::uint64_t kHarvest = ~std::uint64_t{0};
  std::uint64_t target = 0;
  int bonds = 0;

  bool harvest() const { return target == kHarvest; }
  bool operator==(const Transition&) const = default;
};

class BoundaryRules {
 public:
  BoundaryRules(const StripLattice& lattice, WalkClass walk_class);

  const StripLattice& lattice() const noexcept { return lattice_; }
  WalkClass walk_class() const noexcept { return class_; }
  bool through_vertex() const noexcept { return through_vertex_; }
  int slots() const noexcept { return slots_; }
  int bits() const noexcept { return bits_; }

  VertexRole role(Site site) const noexcept;
  Phase phase_after(Site site) const noexcept;

  /// Appends the successors of `key` at `site` to `out`.
  void expand(std::uint64_t key, Site site, std::vector<Transition>& out) const;

  /// Columns left of `column` lie outside the strip segment; the
  /// through-vertex rules then never bond back to them.
  void set_first_column(int column) noexcept { first_column_ = column; }

  /// Key relabelling between the top of one column and the bottom of the next.
  std::uint64_t next_column(std::uint64_t key) const noexcept;

 private:
  void expand_edge(std::uint64_t key, Site site, std::vector<Transition>& out) const;
  void expand_vertex(std::uint64_t key, Site site, std::vector<Transition>& out) const;
  bool admissible(const Frontier& f, Phase phase) const noexcept;

  StripLattice lattice_;
  WalkClass class_;
  bool through_vertex_;
  int slots_;
  int bits_;
  int first_column_ = std::numeric_limits<int>::min();
};

}  // namespace sawstrip
