#pragma once

// Boundary signatures of the transfer matrix.
//
// A signature lists, bottom to top, how the partial walk meets the boundary
// line: empty, lower or upper end of an arc whose two ends both cross the
// line, a free end (the arc's other end is a walk endpoint), or, for the
// through-vertex boundary of the triangular lattice, a touched vertex that is
// occupied but can take no further bonds. Arcs never cross, so the 1/2 labels
// nest like parentheses and the key determines the full connectivity.

#include <array>
#include <cstdint>
#include <vector>

namespace sawstrip {

enum class EdgeState : std::uint8_t { empty = 0, lower = 1, upper = 2, free_end = 3, touched = 4 };

/// Whether the origin vertex has already been processed. Before it at most one
/// free end may exist (the far endpoint), afterwards two.
enum class Phase : std::uint8_t { pre_origin, post_origin };

struct Signature {
  std::vector<EdgeState> states;
  Phase phase = Phase::pre_origin;
};

/// Parenthesis balance, free-end cap for the phase, and, unless
/// `allow_touched`, no touched states.
bool signature_valid(const Signature& sig, bool allow_touched = false);

/// Bits per slot in a packed key: 2 for edge boundaries, 3 for vertex boundaries.
std::uint64_t pack(const std::vector<EdgeState>& states, int bits);
std::vector<EdgeState> unpack(std::uint64_t key, int slots, int bits);

/// Decoded connectivity of one signature. link[i] is kEmpty, kTouched,
/// kFree (a free end) or the index of the partner slot of an arc end.
struct Frontier {
  static constexpr int kMaxSlots = 32;
  static constexpr std::int8_t kFree = -1;
  static constexpr std::int8_t kEmpty = -2;
  static constexpr std::int8_t kTouched = -3;

  std::array<std::int8_t, kMaxSlots> link{};
  int size = 0;

  bool open(int i) const { return link[static_cast<std::size_t>(i)] >= kFree; }
  int free_ends() const;
  int open_ends() const;

  static Frontier decode(std::uint64_t key, int slots, int bits);
  std::uint64_t encode(int bits) const;
};

}  // namespace sawstrip
