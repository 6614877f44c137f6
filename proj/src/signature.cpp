#include "sawstrip/signature.hpp"

#include <cassert>

#include "sawstrip/errors.hpp"

namespace sawstrip {

bool signature_valid(const Signature& sig, bool allow_touched) {
  int depth = 0;
  int free_ends = 0;
  for (const EdgeState s : sig.states) {
    switch (s) {
      case EdgeState::empty:
        break;
      case EdgeState::lower:
        ++depth;
        break;
      case EdgeState::upper:
        if (depth == 0) return false;
        --depth;
        break;
      case EdgeState::free_end:
        ++free_ends;
        break;
      case EdgeState::touched:
        if (!allow_touched) return false;
        break;
      default:
        return false;
    }
  }
  const int cap = sig.phase == Phase::pre_origin ? 1 : 2;
  return depth == 0 && free_ends <= cap;
}

std::uint64_t pack(const std::vector<EdgeState>& states, int bits) {
  if (static_cast<int>(states.size()) * bits > 64) throw CapacityError("signature does not fit a 64-bit key");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    key |= static_cast<std::uint64_t>(states[i]) << (bits * static_cast<int>(i));
  }
  return key;
}

std::vector<EdgeState> unpack(std::uint64_t key, int slots, int bits) {
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  std::vector<EdgeState> out(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) out[static_cast<std::size_t>(i)] = static_cast<EdgeState>((key >> (bits * i)) & mask);
  return out;
}

int Frontier::free_ends() const {
  int n = 0;
  for (int i = 0; i < size; ++i) n += link[static_cast<std::size_t>(i)] == kFree;
  return n;
}

int Frontier::open_ends() const {
  int n = 0;
  for (int i = 0; i < size; ++i) n += open(i);
  return n;
}

Frontier Frontier::decode(std::uint64_t key, int slots, int bits) {
  Frontier f;
  f.size = slots;
  std::array<std::int8_t, kMaxSlots> stack{};
  int top = 0;
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  for (int i = 0; i < slots; ++i) {
    const auto s = static_cast<EdgeState>((key >> (bits * i)) & mask);
    auto& slot = f.link[static_cast<std::size_t>(i)];
    switch (s) {
      case EdgeState::empty:
        slot = kEmpty;
        break;
      case EdgeState::lower:
        slot = kEmpty;
        stack[static_cast<std::size_t>(top++)] = static_cast<std::int8_t>(i);
        break;
      case EdgeState::upper: {
        assert(top > 0 && "unmatched upper loop-end");
        const std::int8_t j = stack[static_cast<std::size_t>(--top)];
        slot = j;
        f.link[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(i);
        break;
      }
      case EdgeState::free_end:
        slot = kFree;
        break;
      case EdgeState::touched:
        slot = kTouched;
        break;
    }
  }
  assert(top == 0 && "unmatched lower loop-end");
  return f;
}

std::uint64_t Frontier::encode(int bits) const {
  std::uint64_t key = 0;
  for (int i = 0; i < size; ++i) {
    const std::int8_t l = link[static_cast<std::size_t>(i)];
    EdgeState s = EdgeState::empty;
    if (l == kFree) {
      s = EdgeState::free_end;
    } else if (l == kTouched) {
      s = EdgeState::touched;
    } else if (l >= 0) {
      s = l > i ? EdgeState::lower : EdgeState::upper;
    }
    key |= static_cast<std::uint64_t>(s) << (bits * i);
  }
  return key;
}

}  // namespace sawstrip
