#include <vector>

#include "sawstrip/errors.hpp"
#include "sawstrip/oracles.hpp"

namespace sawstrip {
namespace {

class Walker {
 public:
  Walker(const StripLattice& lattice, int max_edges, int half_length, std::uint64_t budget, bool reverse)
      : lat_(lattice),
        max_edges_(max_edges),
        reach_(std::min(half_length, max_edges)),
        budget_(budget),
        reverse_(reverse),
        visited_(static_cast<std::size_t>(2 * reach_ + 1) * static_cast<std::size_t>(lattice.width() + 1), 0),
        a_(static_cast<std::size_t>(max_edges) + 1, 0),
        b_(static_cast<std::size_t>(max_edges) + 1, 0) {}

  void run() {
    const Site o = lat_.origin();
    mark(o, 1);
    visit(o, 0);
  }

  const std::vector<std::uint64_t>& a() const { return a_; }
  const std::vector<std::uint64_t>& b() const { return b_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  char& cell(Site s) {
    return visited_[static_cast<std::size_t>(s.x + reach_) * static_cast<std::size_t>(lat_.width() + 1) +
                    static_cast<std::size_t>(s.y)];
  }
  void mark(Site s, char v) { cell(s) = v; }

  void visit(Site s, int edges) {
    if (++nodes_ > budget_) {
      throw CapacityError("dfs_count: node budget of " + std::to_string(budget_) + " walks exhausted");
    }
    if (edges > 0) {
      if (lat_.is_top_end(s)) ++a_[static_cast<std::size_t>(edges)];
      if (lat_.is_bottom_end(s)) ++b_[static_cast<std::size_t>(edges)];
    }
    if (edges == max_edges_) return;
    const Neighbours nb = lat_.neighbours(s);
    for (int i = 0; i < nb.count; ++i) {
      const Site t = nb.sites[static_cast<std::size_t>(reverse_ ? nb.count - 1 - i : i)];
      if (t.x < -reach_ || t.x > reach_ || cell(t)) continue;
      mark(t, 1);
      visit(t, edges + 1);
      mark(t, 0);
    }
  }

  const StripLattice& lat_;
  int max_edges_;
  int reach_;
  std::uint64_t budget_;
  bool reverse_;
  std::vector<char> visited_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DfsCounts dfs_count(const StripSpec& spec, int n_max, std::uint64_t node_budget, bool reverse_order) {
  if (n_max < 0) throw PreconditionError("dfs_count: negative maximum length");
  if (spec.half_length < 1) throw SpecError("half-length L must be at least 1");
  const StripLattice lattice(spec.lattice, spec.width);
  const int f = lattice.end_factor_degree();
  DfsCounts out;
  out.A.assign(static_cast<std::size_t>(n_max) + 1, 0);
  out.B.assign(static_cast<std::size_t>(n_max) + 1, 0);
  const int max_edges = n_max - f;
  if (max_edges < 1) return out;

  Walker w(lattice, max_edges, spec.half_length, node_budget, reverse_order);
  w.run();
  for (int e = 1; e <= max_edges; ++e) {
    out.A[static_cast<std::size_t>(e + f)] = static_cast<unsigned long>(w.a()[static_cast<std::size_t>(e)]);
    out.B[static_cast<std::size_t>(e + f)] = static_cast<unsigned long>(w.b()[static_cast<std::size_t>(e)]);
  }
  out.nodes = w.nodes();
  return out;
}

}  // namespace sawstrip
