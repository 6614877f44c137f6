#include "sawstrip/strip_enum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <utility>

#include "sawstrip/errors.hpp"

namespace sawstrip {
namespace {

// dst += 2^(e*n) * src for one coefficient; `f` is that power of two.
inline void add_scaled(double& dst, const double& src, double f) { dst += src * f; }
inline void add_scaled(DoubleDouble& dst, const DoubleDouble& src, double f) {
  accumulate_same_sign(dst, DoubleDouble(src.hi * f, src.lo * f));
}
inline void add_scaled(mpz_class& dst, const mpz_class& src, double) { dst += src; }

template <class Coeff>
void zero(Coeff* p, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) p[i] = Coeff(0);
}

}  // namespace

int default_width_bound(LatticeKind kind) { return kind == LatticeKind::triangular ? 6 : 8; }

void validate(const StripSpec& spec) {
  const StripLattice lattice(spec.lattice, spec.width);  // width minimum
  if (spec.half_length < 1) throw SpecError("half-length L must be at least 1");
  if (spec.max_degree < 0) throw SpecError("max degree M must be non-negative");
  if (spec.half_length < spec.max_degree) {
    throw SpecError("half-length L = " + std::to_string(spec.half_length) + " is below max degree M = " +
                    std::to_string(spec.max_degree) + " (need L >= M)");
  }
  const int bound = spec.width_bound < 0 ? default_width_bound(spec.lattice) : spec.width_bound;
  if (spec.width > bound) {
    throw CapacityError("width T = " + std::to_string(spec.width) + " exceeds the feasibility bound " +
                        std::to_string(bound) + " for the " + to_string(spec.lattice) + " lattice");
  }
  const int slots = lattice.kind() == LatticeKind::triangular ? spec.width + 1 : spec.width + 2;
  const int bits = lattice.kind() == LatticeKind::triangular ? 3 : 2;
  if (slots * bits > 64 || slots > Frontier::kMaxSlots) {
    throw CapacityError("width T = " + std::to_string(spec.width) + " does not fit a 64-bit signature key");
  }
}

int coefficient_scale(LatticeKind kind, PrecisionMode mode) {
  if (mode == PrecisionMode::exact) return 0;
  return kind == LatticeKind::triangular ? -2 : -1;
}

int max_degree(const AnySeries& s) {
  return std::visit([](const auto& a) { return a.max_degree(); }, s);
}

int scale_log2(const AnySeries& s) {
  return std::visit([](const auto& a) { return a.scale_log2(); }, s);
}

DoubleDouble evaluate(const AnySeries& s, const DoubleDouble& z) {
  return std::visit(
      [&](const auto& a) -> DoubleDouble {
        using C = typename std::decay_t<decltype(a)>::coeff_type;
        if constexpr (std::is_same_v<C, double>) {
          // Horner in double-double over double coefficients.
          std::vector<DoubleDouble> widened(a.coeffs().begin(), a.coeffs().end());
          return series_eval(TruncatedSeries<DoubleDouble>(std::move(widened), a.scale_log2()), z);
        } else {
          return series_eval(a, z);
        }
      },
      s);
}

DoubleDouble coefficient(const AnySeries& s, int n) {
  return std::visit([&](const auto& a) { return DoubleDouble(a.coefficient(n)); }, s);
}

std::vector<mpz_class> integer_coefficients(const AnySeries& s) {
  return std::visit(
      [](const auto& a) {
        using C = typename std::decay_t<decltype(a)>::coeff_type;
        std::vector<mpz_class> out;
        out.reserve(a.coeffs().size());
        for (int n = 0; n <= a.max_degree(); ++n) {
          if constexpr (std::is_same_v<C, mpz_class>) {
            out.push_back(a[n]);
          } else {
            const DoubleDouble c = DoubleDouble(a.coefficient(n));
            if (!CoeffTraits<DoubleDouble>::is_nonnegative_integer(c)) {
              throw PreconditionError("coefficient " + std::to_string(n) + " is not an integer");
            }
            out.push_back(mpz_class(c.hi) + mpz_class(c.lo));
          }
        }
        return out;
      },
      s);
}

std::string generator_version() { return "sawstrip 1.0.0"; }

template <class Coeff>
TransferSweep<Coeff>::TransferSweep(BoundaryRules rules, int edge_degree, int scale_log2, std::size_t budget,
                                    bool windows)
    : rules_(std::move(rules)),
      edge_degree_(edge_degree),
      scale_(scale_log2),
      stride_(static_cast<std::size_t>(edge_degree) + 1),
      budget_(budget),
      windows_(windows),
      window_{0, edge_degree},
      keys_{0},
      slot_{0},
      first_{0},
      arena_(stride_),
      harvest_(edge_degree, scale_log2) {
  if (edge_degree < 0) throw PreconditionError("TransferSweep: negative degree");
  arena_[0] = Coeff(1);
}

template <class Coeff>
typename TransferSweep<Coeff>::Window TransferSweep<Coeff>::window_after(Site site) const noexcept {
  if (!windows_) return {0, edge_degree_};
  const int c = site.x;
  if (rules_.phase_after(site) == Phase::pre_origin) {
    // Any open end still has to reach the origin column.
    return {0, edge_degree_ - std::max(0, -c - 1)};
  }
  // Walks alive at column c > 0 already stretch back to the origin, and for
  // A-walks also to the far endpoint left of it.
  const int lo = rules_.walk_class() == WalkClass::A ? std::max(0, 2 * c - 4) : std::max(0, c - 2);
  return {lo, edge_degree_};
}

template <class Coeff>
void TransferSweep<Coeff>::advance(Site site) {
  const Window src_win = window_;
  const Window dst_win = window_after(site);
  double factor[4];
  for (int n = 0; n < 4; ++n) factor[n] = std::ldexp(1.0, scale_ * n);

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(keys_.size() * 2 + 16);
  std::vector<std::uint64_t> new_keys;
  new_keys.reserve(keys_.size() * 2 + 16);
  next_first_.clear();

  Coeff* hv = harvest_.coeffs().data();
  for (std::size_t s = 0; s < keys_.size(); ++s) {
    const Coeff* src = arena_.data() + slot_[s] * stride_;
    const int src_first = std::max(first_[slot_[s]], src_win.lo);
    if (src_first > src_win.hi) continue;
    scratch_.clear();
    rules_.expand(keys_[s], site, scratch_);
    for (const Transition& t : scratch_) {
      const int n = t.bonds;
      const double f = factor[n];
      if (t.harvest()) {
        const int hi = std::min(src_win.hi, edge_degree_ - n);
        for (int i = src_first; i <= hi; ++i) add_scaled(hv[i + n], src[i], f);
        continue;
      }
      const int lo = std::max(src_first, dst_win.lo - n);
      const int hi = std::min(src_win.hi, dst_win.hi - n);
      if (lo > hi) continue;
      auto [it, inserted] = index.try_emplace(t.target, static_cast<std::uint32_t>(new_keys.size()));
      const std::size_t d = it->second;
      if (inserted) {
        new_keys.push_back(t.target);
        next_first_.push_back(lo + n);
        const std::size_t need = new_keys.size() * stride_;
        if (need * sizeof(Coeff) * 2 > budget_) {
          throw CapacityError("signature storage exceeds the memory budget of " + std::to_string(budget_ >> 20) +
                              " MiB (" + std::to_string(new_keys.size()) + " states, degree " +
                              std::to_string(edge_degree_) + ")");
        }
        if (next_arena_.size() < need) next_arena_.resize(std::max(need, next_arena_.size() * 3 / 2));
        zero(next_arena_.data() + d * stride_, dst_win.lo, dst_win.hi);
      } else {
        next_first_[d] = std::min(next_first_[d], lo + n);
      }
      Coeff* dst = next_arena_.data() + d * stride_;
      for (int i = lo; i <= hi; ++i) add_scaled(dst[i + n], src[i], f);
    }
  }

  std::vector<std::uint32_t> order(new_keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return new_keys[a] < new_keys[b]; });
  keys_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) keys_[i] = new_keys[order[i]];
  slot_ = std::move(order);
  std::swap(arena_, next_arena_);
  std::swap(first_, next_first_);
  window_ = dst_win;
  peak_ = std::max(peak_, keys_.size());
}

template <class Coeff>
void TransferSweep<Coeff>::next_column() {
  for (auto& k : keys_) k = rules_.next_column(k);
}

template <class Coeff>
TruncatedSeries<Coeff> TransferSweep<Coeff>::series(std::size_t i) const {
  TruncatedSeries<Coeff> out(edge_degree_, scale_);
  const Coeff* src = arena_.data() + slot_[i] * stride_;
  for (int n = std::max(window_.lo, first_[slot_[i]]); n <= window_.hi; ++n) out[n] = src[n];
  return out;
}

template class TransferSweep<double>;
template class TransferSweep<DoubleDouble>;
template class TransferSweep<mpz_class>;

namespace {

struct SweepResult {
  AnySeries series;
  std::size_t peak = 0;
};

template <class Coeff>
SweepResult sweep_class(const StripSpec& spec, WalkClass walk_class) {
  const StripLattice lattice(spec.lattice, spec.width);
  const int scale = coefficient_scale(spec.lattice, spec.precision);
  const int f = lattice.end_factor_degree();
  const int m = spec.max_degree;
  TruncatedSeries<Coeff> out(m, scale);
  const int edge_degree = m - f;
  if (edge_degree < 1) return {out, 0};

  const int first = std::max(-spec.half_length, -(edge_degree + 1));
  BoundaryRules rules(lattice, walk_class);
  rules.set_first_column(first);
  TransferSweep<Coeff> sweep(rules, edge_degree, scale, spec.memory_budget);
  for (int c = first; c <= spec.half_length; ++c) {
    for (int k = 0; k <= spec.width; ++k) sweep.advance({c, k});
    if (c >= 0 && sweep.size() == 0) break;
    sweep.next_column();
  }

  // Endpoint half-steps and the left/right symmetry of A-walks.
  const TruncatedSeries<Coeff>& h = sweep.harvest();
  const Coeff mult(walk_class == WalkClass::A ? 2 : 1);
  const Coeff shift = CoeffTraits<Coeff>::scaled(Coeff(1), scale * f);
  for (int n = 0; n <= edge_degree; ++n) out[n + f] = mult * shift * h[n];
  return {out, sweep.peak_size()};
}

template <class Coeff>
void run_both(const StripSpec& spec, int workers, GFRecord& rec) {
  SweepResult a;
  SweepResult b;
  if (workers >= 2) {
    std::exception_ptr err;
    std::thread t([&] {
      try {
        a = sweep_class<Coeff>(spec, WalkClass::A);
      } catch (...) {
        err = std::current_exception();
      }
    });
    b = sweep_class<Coeff>(spec, WalkClass::B);
    t.join();
    if (err) std::rethrow_exception(err);
  } else {
    a = sweep_class<Coeff>(spec, WalkClass::A);
    b = sweep_class<Coeff>(spec, WalkClass::B);
  }
  rec.A = std::move(a.series);
  rec.B = std::move(b.series);
  rec.meta.peak_states = std::max(a.peak, b.peak);
}

}  // namespace

GFRecord enumerate(const StripSpec& spec, const EnumerateOptions& options) {
  validate(spec);
  const auto t0 = std::chrono::steady_clock::now();
  GFRecord rec;
  rec.spec = spec;
  rec.meta.normalization = StripLattice(spec.lattice, spec.width).normalization();
  rec.meta.generator = generator_version();
  switch (spec.precision) {
    case PrecisionMode::fast:
      run_both<double>(spec, options.workers, rec);
      break;
    case PrecisionMode::high:
      run_both<DoubleDouble>(spec, options.workers, rec);
      break;
    case PrecisionMode::exact:
      run_both<mpz_class>(spec, options.workers, rec);
      break;
  }
  rec.meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace sawstrip
