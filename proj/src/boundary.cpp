#include "sawstrip/boundary.hpp"

#include <array>
#include <cassert>

namespace sawstrip {
namespace {

using Link = std::int8_t;
constexpr Link kFree = Frontier::kFree;
constexpr Link kEmpty = Frontier::kEmpty;
constexpr Link kTouched = Frontier::kTouched;

Link& at(Frontier& f, int i) { return f.link[static_cast<std::size_t>(i)]; }
Link at(const Frontier& f, int i) { return f.link[static_cast<std::size_t>(i)]; }

// Adds the bond p-q between two occupied-or-empty slots of a through-vertex
// frontier. Returns false if the bond is illegal; sets `closed` when it joins
// the two free ends into a finished walk.
bool add_bond(Frontier& f, int p, int q, bool& closed) {
  const Link lp = at(f, p);
  const Link lq = at(f, q);
  if (lp == kTouched || lq == kTouched) return false;
  if (lp >= 0 && lp == q) return false;  // would close a polygon
  const bool open_p = lp != kEmpty;
  const bool open_q = lq != kEmpty;
  const int far_p = open_p ? lp : p;
  const int far_q = open_q ? lq : q;
  if (open_p) at(f, p) = kTouched;
  if (open_q) at(f, q) = kTouched;
  if (far_p == kFree && far_q == kFree) {
    closed = true;
  } else if (far_p == kFree) {
    at(f, far_q) = kFree;
  } else if (far_q == kFree) {
    at(f, far_p) = kFree;
  } else {
    at(f, far_p) = static_cast<Link>(far_q);
    at(f, far_q) = static_cast<Link>(far_p);
  }
  return true;
}

}  // namespace

BoundaryRules::BoundaryRules(const StripLattice& lattice, WalkClass walk_class)
    : lattice_(lattice),
      class_(walk_class),
      through_vertex_(lattice.kind() == LatticeKind::triangular),
      slots_(through_vertex_ ? lattice.width() + 1 : lattice.width() + 2),
      bits_(through_vertex_ ? 3 : 2) {}

VertexRole BoundaryRules::role(Site site) const noexcept {
  if (site == lattice_.origin()) return VertexRole::origin;
  if (class_ == WalkClass::A) {
    return site.x < 0 && lattice_.is_top_end(site) ? VertexRole::optional_end : VertexRole::regular;
  }
  return lattice_.is_bottom_end(site) ? VertexRole::optional_end : VertexRole::regular;
}

Phase BoundaryRules::phase_after(Site site) const noexcept {
  const Site o = lattice_.origin();
  return site.x > o.x || (site.x == o.x && site.y >= o.y) ? Phase::post_origin : Phase::pre_origin;
}

bool BoundaryRules::admissible(const Frontier& f, Phase phase) const noexcept {
  const int free_ends = f.free_ends();
  if (phase == Phase::pre_origin) return free_ends <= 1;
  // After the origin an A-walk has both endpoints placed already.
  if (class_ == WalkClass::A) return free_ends == 2;
  return free_ends >= 1 && free_ends <= 2;
}

std::uint64_t BoundaryRules::next_column(std::uint64_t key) const noexcept {
  return through_vertex_ ? key : key << 2;
}

void BoundaryRules::expand(std::uint64_t key, Site site, std::vector<Transition>& out) const {
  if (through_vertex_) {
    expand_vertex(key, site, out);
  } else {
    expand_edge(key, site, out);
  }
}

void BoundaryRules::expand_edge(std::uint64_t key, Site site, std::vector<Transition>& out) const {
  const Frontier f = Frontier::decode(key, slots_, 2);
  const int below = site.y;
  const int left = site.y + 1;
  const bool up = lattice_.has_bond(site, {site.x, site.y + 1});
  const VertexRole vrole = role(site);
  const Phase after = phase_after(site);

  auto emit = [&](const Frontier& g, int bonds) {
    if (admissible(g, after)) out.push_back({g.encode(2), bonds});
  };
  // A finished walk counts only if it contains the origin and nothing else is open.
  auto harvest = [&](const Frontier& g, int bonds) {
    if (after == Phase::post_origin && g.open_ends() == 0) out.push_back({Transition::kHarvest, bonds});
  };

  const bool occ_below = f.open(below);
  const bool occ_left = f.open(left);

  if (!occ_below && !occ_left) {
    if (vrole != VertexRole::origin) {
      emit(f, 0);
      if (up) {
        Frontier g = f;
        at(g, below) = static_cast<Link>(left);
        at(g, left) = static_cast<Link>(below);
        emit(g, 2);
      }
    }
    if (vrole != VertexRole::regular) {
      Frontier g = f;
      at(g, below) = kFree;
      emit(g, 1);
      if (up) {
        g = f;
        at(g, left) = kFree;
        emit(g, 1);
      }
    }
    return;
  }

  if (occ_below != occ_left) {
    const int s = occ_below ? below : left;
    const Link partner = at(f, s);
    if (vrole != VertexRole::origin) {
      for (const int o : {below, left}) {
        if (o == left && !up) continue;
        Frontier g = f;
        at(g, s) = kEmpty;
        at(g, o) = partner;
        if (partner >= 0) at(g, partner) = static_cast<Link>(o);
        emit(g, 1);
      }
    }
    if (vrole != VertexRole::regular) {
      Frontier g = f;
      at(g, s) = kEmpty;
      if (partner == kFree) {
        harvest(g, 0);
      } else {
        at(g, partner) = kFree;
        emit(g, 0);
      }
    }
    return;
  }

  // Both incoming bonds occupied: the vertex joins two arcs.
  if (vrole == VertexRole::origin) return;
  const Link pb = at(f, below);
  const Link pl = at(f, left);
  if (pb == left) return;  // closing a polygon
  Frontier g = f;
  at(g, below) = kEmpty;
  at(g, left) = kEmpty;
  if (pb == kFree && pl == kFree) {
    harvest(g, 0);
    return;
  }
  if (pb == kFree) {
    at(g, pl) = kFree;
  } else if (pl == kFree) {
    at(g, pb) = kFree;
  } else {
    at(g, pb) = pl;
    at(g, pl) = pb;
  }
  emit(g, 0);
}

void BoundaryRules::expand_vertex(std::uint64_t key, Site site, std::vector<Transition>& out) const {
  const Frontier f = Frontier::decode(key, slots_, 3);
  const int k = site.y;
  const int fresh = slots_;  // scratch slot for the new vertex
  const VertexRole vrole = role(site);
  const Phase after = phase_after(site);

  // Frontier slots the new vertex can bond to: below (same column), left and
  // up-left (previous column).
  std::array<int, 3> cand{};
  int ncand = 0;
  if (lattice_.has_bond(site, {site.x, site.y - 1})) cand[static_cast<std::size_t>(ncand++)] = k - 1;
  if (site.x - 1 >= first_column_) {
    if (lattice_.has_bond(site, {site.x - 1, site.y})) cand[static_cast<std::size_t>(ncand++)] = k;
    if (lattice_.has_bond(site, {site.x - 1, site.y + 1})) cand[static_cast<std::size_t>(ncand++)] = k + 1;
  }

  for (unsigned mask = 0; mask < (1u << ncand); ++mask) {
    const int bonds = __builtin_popcount(mask);
    for (int as_end = 0; as_end <= 1; ++as_end) {
      if (vrole == VertexRole::origin && !as_end) continue;
      if (vrole == VertexRole::regular && as_end) continue;
      if (bonds > (as_end ? 1 : 2)) continue;

      Frontier g = f;
      g.size = slots_ + 1;
      at(g, fresh) = as_end ? kFree : kEmpty;
      bool closed = false;
      bool ok = true;
      for (int i = 0; i < ncand && ok; ++i) {
        if (mask & (1u << i)) ok = add_bond(g, fresh, cand[static_cast<std::size_t>(i)], closed);
      }
      // The vertex leaving slot k takes no further bonds.
      if (!ok || g.open(k)) continue;

      const Link l = at(g, fresh);
      at(g, k) = l;
      if (l >= 0) at(g, l) = static_cast<Link>(k);
      at(g, fresh) = kEmpty;
      g.size = slots_;

      if (closed) {
        if (after == Phase::post_origin && g.open_ends() == 0) out.push_back({Transition::kHarvest, bonds});
        continue;
      }
      if (admissible(g, after)) out.push_back({g.encode(3), bonds});
    }
  }
}

}  // namespace sawstrip
