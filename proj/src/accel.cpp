#include "sawstrip/accel.hpp"

#include <algorithm>
#include <cmath>

#include "sawstrip/errors.hpp"

namespace sawstrip {
namespace {

using DD = DoubleDouble;
using Column = std::vector<DD>;

// Degenerate-denominator floor relative to the size of the input.
struct Floor {
  double value;
  explicit Floor(const std::vector<DD>& s) {
    double scale = 0.0;
    for (const DD& x : s) scale = std::max(scale, std::abs(x.hi));
    value = 1e-30 * (scale > 0.0 ? scale : 1.0);
  }
  bool degenerate(const DD& d) const { return std::abs(d.hi) < value; }
};

void require_length(std::size_t n, AccelMethod method) {
  if (n < static_cast<std::size_t>(minimum_length(method))) {
    throw PreconditionError(to_string(method) + " needs at least " + std::to_string(minimum_length(method)) +
                            " terms (got " + std::to_string(n) + ")");
  }
}

void finish(AccelTableau& t) {
  const auto& cols = t.extrapolant_columns;
  const Column& best = t.columns[static_cast<std::size_t>(cols.back())];
  t.limit = best.back();
  if (cols.size() >= 2) {
    t.uncertainty = abs(t.limit - t.columns[static_cast<std::size_t>(cols[cols.size() - 2])].back());
  } else {
    const Column& s = t.columns[0];
    t.uncertainty = s.size() >= 2 ? abs(s[s.size() - 1] - s[s.size() - 2]) : DD(0.0);
  }
}

// (T_{n+m} / T_n)^w, exact for integer w.
DD width_ratio(double t_hi, double t_lo, double w) {
  const DD r = DD(t_hi) / DD(t_lo);
  if (w == std::floor(w) && std::abs(w) <= 64) {
    DD out(1.0);
    for (int i = 0; i < static_cast<int>(std::abs(w)); ++i) out *= r;
    return w < 0 ? DD(1.0) / out : out;
  }
  return DD(std::pow(static_cast<double>(r), w));
}

// Shared epsilon-type recursion: odd columns get alpha times the entry two
// columns back (alpha = 1 is Wynn's algorithm).
AccelTableau generalized_epsilon(const std::vector<DD>& s, AccelMethod method, double alpha) {
  AccelTableau t;
  t.method = method;
  t.columns.push_back(s);
  t.extrapolant_columns.push_back(0);
  const Floor floor(s);
  Column before(s.size() + 1, DD(0.0));  // epsilon_{-1}
  for (std::size_t k = 1; k < s.size(); ++k) {
    const Column& prev = t.columns.back();
    Column cur(prev.size() - 1);
    bool bad = false;
    for (std::size_t n = 0; n < cur.size() && !bad; ++n) {
      const DD d = prev[n + 1] - prev[n];
      if (floor.degenerate(d)) {
        bad = true;
        break;
      }
      const DD back = before[n + 1];
      cur[n] = (k % 2 == 1 ? DD(alpha) * back : back) + DD(1.0) / d;
    }
    if (bad) {
      t.truncated = true;
      break;
    }
    before = prev;
    t.columns.push_back(std::move(cur));
    if (k % 2 == 0) t.extrapolant_columns.push_back(static_cast<int>(k));
  }
  finish(t);
  return t;
}

AccelTableau run_bulirsch_stoer(const IndexedSequence& seq, double w) {
  AccelTableau t;
  t.method = AccelMethod::bulirsch_stoer;
  const std::vector<DD>& s = seq.values;
  t.columns.push_back(s);
  t.extrapolant_columns.push_back(0);
  const Floor floor(s);
  Column older(s.size(), DD(0.0));  // T_{-1}
  for (std::size_t m = 1; m < s.size(); ++m) {
    const Column& prev = t.columns.back();
    Column cur(prev.size() - 1);
    bool bad = false;
    for (std::size_t n = 0; n < cur.size(); ++n) {
      const DD d = prev[n + 1] - prev[n];
      if (d.hi == 0.0 && d.lo == 0.0) {
        cur[n] = prev[n + 1];
        continue;
      }
      const DD d2 = prev[n + 1] - older[n + 1];
      if (floor.degenerate(d2)) {
        bad = true;
        break;
      }
      const DD den = width_ratio(seq.T[n + m], seq.T[n], w) * (DD(1.0) - d / d2) - DD(1.0);
      if (floor.degenerate(den)) {
        bad = true;
        break;
      }
      cur[n] = prev[n + 1] + d / den;
    }
    if (bad) {
      t.truncated = true;
      break;
    }
    older = prev;
    t.columns.push_back(std::move(cur));
    t.extrapolant_columns.push_back(static_cast<int>(m));
  }
  finish(t);
  return t;
}

AccelTableau run_neville(const IndexedSequence& seq) {
  AccelTableau t;
  t.method = AccelMethod::neville;
  const std::vector<DD>& s = seq.values;
  t.columns.push_back(s);
  t.extrapolant_columns.push_back(0);
  std::vector<DD> x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = DD(1.0) / DD(seq.T[i]);
  for (std::size_t m = 1; m < s.size(); ++m) {
    const Column& prev = t.columns.back();
    Column cur(prev.size() - 1);
    for (std::size_t n = 0; n < cur.size(); ++n) {
      cur[n] = (x[n] * prev[n + 1] - x[n + m] * prev[n]) / (x[n] - x[n + m]);
    }
    t.columns.push_back(std::move(cur));
    t.extrapolant_columns.push_back(static_cast<int>(m));
  }
  finish(t);
  return t;
}

AccelTableau run_levin_u(const std::vector<DD>& s) {
  AccelTableau t;
  t.method = AccelMethod::levin_u;
  t.columns.push_back(s);
  t.extrapolant_columns.push_back(0);
  const Floor floor(s);
  constexpr double beta = 1.0;
  // Remainder estimates omega_n = (n + beta) * (s_n - s_{n-1}), n >= 1.
  std::vector<DD> inv_omega(s.size(), DD(0.0));
  for (std::size_t n = 1; n < s.size(); ++n) {
    const DD a = s[n] - s[n - 1];
    if (floor.degenerate(a)) {
      t.truncated = true;
      finish(t);
      return t;
    }
    inv_omega[n] = DD(1.0) / (DD(static_cast<double>(n) + beta) * a);
  }
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    Column cur;
    bool bad = false;
    for (std::size_t n = 1; n + k < s.size(); ++n) {
      DD num(0.0);
      DD den(0.0);
      DD binom(1.0);
      for (std::size_t j = 0; j <= k; ++j) {
        DD ratio(1.0);
        const DD q = DD(static_cast<double>(n + j) + beta) / DD(static_cast<double>(n + k) + beta);
        for (std::size_t p = 1; p < k; ++p) ratio *= q;
        const DD c = (j % 2 == 0 ? binom : -binom) * ratio * inv_omega[n + j];
        num += c * s[n + j];
        den += c;
        binom = binom * DD(static_cast<double>(k - j)) / DD(static_cast<double>(j + 1));
      }
      if (std::abs(den.hi) < 1e-300 || !isfinite(num / den)) {
        bad = true;
        break;
      }
      cur.push_back(num / den);
    }
    if (bad) {
      t.truncated = true;
      break;
    }
    t.columns.push_back(std::move(cur));
    t.extrapolant_columns.push_back(static_cast<int>(k));
  }
  finish(t);
  return t;
}

AccelTableau run_theta(const std::vector<DD>& s) {
  AccelTableau t;
  t.method = AccelMethod::brezinski_theta;
  t.columns.push_back(s);
  t.extrapolant_columns.push_back(0);
  const Floor floor(s);
  Column before(s.size() + 1, DD(0.0));  // theta_{-1}
  for (;;) {
    const Column& even = t.columns.back();
    if (even.size() < 4) break;
    // theta_{2k+1}^{(n)} = theta_{2k-1}^{(n+1)} + 1 / delta theta_{2k}^{(n)}
    Column odd(even.size() - 1);
    bool bad = false;
    for (std::size_t n = 0; n < odd.size(); ++n) {
      const DD d = even[n + 1] - even[n];
      if (floor.degenerate(d)) {
        bad = true;
        break;
      }
      odd[n] = before[n + 1] + DD(1.0) / d;
    }
    if (bad) {
      t.truncated = true;
      break;
    }
    // theta_{2k+2}^{(n)} = theta_{2k}^{(n+1)}
    //   + delta theta_{2k}^{(n+1)} * delta theta_{2k+1}^{(n+1)} / delta^2 theta_{2k+1}^{(n)}
    Column next(odd.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      const DD d2 = odd[n + 2] - DD(2.0) * odd[n + 1] + odd[n];
      if (floor.degenerate(d2)) {
        bad = true;
        break;
      }
      next[n] = even[n + 1] + (even[n + 2] - even[n + 1]) * (odd[n + 2] - odd[n + 1]) / d2;
    }
    if (bad) {
      t.columns.push_back(std::move(odd));
      t.truncated = true;
      break;
    }
    before = odd;
    t.columns.push_back(std::move(odd));
    t.columns.push_back(std::move(next));
    t.extrapolant_columns.push_back(static_cast<int>(t.columns.size()) - 1);
  }
  finish(t);
  return t;
}

void check_indices(const IndexedSequence& seq, bool positive) {
  if (seq.T.size() != seq.values.size()) throw PreconditionError("index and value lists differ in length");
  for (std::size_t i = 1; i < seq.T.size(); ++i) {
    if (!(seq.T[i] > seq.T[i - 1])) throw PreconditionError("indices must be strictly increasing");
  }
  for (double x : seq.T) {
    if (positive && !(x > 0.0)) throw PreconditionError("indices must be positive");
  }
}

}  // namespace

std::string to_string(AccelMethod method) {
  switch (method) {
    case AccelMethod::bulirsch_stoer:
      return "bulirsch_stoer";
    case AccelMethod::wynn_epsilon:
      return "wynn_epsilon";
    case AccelMethod::levin_u:
      return "levin_u";
    case AccelMethod::neville:
      return "neville";
    case AccelMethod::brezinski_theta:
      return "brezinski_theta";
    case AccelMethod::barber_hamer:
      return "barber_hamer";
  }
  return "?";
}

AccelMethod parse_accel_method(std::string_view name) {
  if (name == "bs" || name == "bulirsch_stoer") return AccelMethod::bulirsch_stoer;
  if (name == "wynn" || name == "wynn_epsilon") return AccelMethod::wynn_epsilon;
  if (name == "levin" || name == "levin_u") return AccelMethod::levin_u;
  if (name == "neville") return AccelMethod::neville;
  if (name == "theta" || name == "brezinski_theta") return AccelMethod::brezinski_theta;
  if (name == "barber" || name == "barber_hamer") return AccelMethod::barber_hamer;
  throw SpecError("unknown extrapolation method '" + std::string(name) +
                  "' (expected bs, wynn, levin, neville, theta or barber)");
}

int minimum_length(AccelMethod method) {
  switch (method) {
    case AccelMethod::neville:
      return 2;
    case AccelMethod::brezinski_theta:
      return 4;
    default:
      return 3;
  }
}

IndexedSequence IndexedSequence::consecutive(int first_T, std::vector<DoubleDouble> values) {
  IndexedSequence s;
  for (std::size_t i = 0; i < values.size(); ++i) s.T.push_back(first_T + static_cast<double>(i));
  s.values = std::move(values);
  return s;
}

AccelTableau bulirsch_stoer(const IndexedSequence& seq, double w) {
  return accelerate(seq, AccelMethod::bulirsch_stoer, w);
}

AccelTableau wynn_epsilon(std::span<const DoubleDouble> seq) {
  require_length(seq.size(), AccelMethod::wynn_epsilon);
  return generalized_epsilon(std::vector<DD>(seq.begin(), seq.end()), AccelMethod::wynn_epsilon, 1.0);
}

AccelTableau accelerate(const IndexedSequence& seq, AccelMethod method, double w) {
  require_length(seq.values.size(), method);
  check_indices(seq, method == AccelMethod::bulirsch_stoer || method == AccelMethod::neville);
  switch (method) {
    case AccelMethod::bulirsch_stoer:
      return run_bulirsch_stoer(seq, w);
    case AccelMethod::wynn_epsilon:
      return generalized_epsilon(seq.values, method, 1.0);
    case AccelMethod::levin_u:
      return run_levin_u(seq.values);
    case AccelMethod::neville:
      return run_neville(seq);
    case AccelMethod::brezinski_theta:
      return run_theta(seq.values);
    case AccelMethod::barber_hamer:
      return generalized_epsilon(seq.values, method, -1.0);
  }
  throw PreconditionError("unknown method");
}

}  // namespace sawstrip
