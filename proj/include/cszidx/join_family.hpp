#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cszidx/csz_index.hpp"
#include "cszidx/graph.hpp"

namespace cszidx {

/// Raised when a sign condition that an analytic argument relies on fails.
class AssumptionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cM2(K_k + complement(K_{n-k})) = k(n-k)((n-1)^2 - k^2).
inline CszValue csz_join(std::size_t n, std::size_t k) {
  check_join_spec({n, k});
  if (n > kMaxOrder) throw PreconditionError("csz_join: order exceeds supported maximum");
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  return kk * (nn - kk) * ((nn - 1) * (nn - 1) - kk * kk);
}

struct KTableRow {
  std::size_t n = 0;
  std::vector<std::size_t> best_k;  // every maximizer, ascending
  CszValue best_value = 0;

  bool tied() const noexcept { return best_k.size() > 1; }

  friend bool operator==(const KTableRow&, const KTableRow&) = default;
};

/// Scans k in [1, n-2] exactly and returns every maximizer of cM2 over the
/// join family of order n.
inline KTableRow optimal_k(std::size_t n) {
  if (n < 3 || n > kMaxOrder) {
    throw PreconditionError("optimal_k: order must lie in [3, " +
                            std::to_string(kMaxOrder) + "], got " + std::to_string(n));
  }
  KTableRow row{n, {}, -1};
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    const CszValue value = csz_join(n, k);
    if (value > row.best_value) {
      row.best_value = value;
      row.best_k.assign(1, k);
    } else if (value == row.best_value) {
      row.best_k.push_back(k);
    }
  }
  return row;
}

inline std::vector<KTableRow> k_table(std::size_t n_min, std::size_t n_max) {
  if (n_min < 5 || n_max < n_min) {
    throw PreconditionError("k_table needs 5 <= n_min <= n_max");
  }
  std::vector<KTableRow> rows;
  rows.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) rows.push_back(optimal_k(n));
  return rows;
}

// Continuous relaxation f(x, y) = x(y-x)((y-1)^2 - x^2) of the join formula,
// with y standing for the order and x for the clique size.

inline double f_cont(double x, double y) {
  return x * (y - x) * ((y - 1) * (y - 1) - x * x);
}

inline double df_dx(double x, double y) {
  const double s = (y - 1) * (y - 1);
  return 4 * x * x * x - 3 * y * x * x - 2 * s * x + y * s;
}

struct Interval {
  double lo = 0;
  double hi = 0;

  double mid() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
};

/// Brackets the stationary point of f(., y) on [1, y-2] by bisection on
/// df_dx, down to width 1e-9 * y.
inline Interval bracket_continuous_max(double y) {
  if (!(y >= 11)) throw PreconditionError("bracket_continuous_max requires y >= 11");
  Interval iv{1.0, y - 2};
  if (!(df_dx(iv.lo, y) > 0) || !(df_dx(iv.hi, y) < 0)) {
    throw AssumptionViolation("df/dx does not change sign from + to - on [1, y-2] at y=" +
                              std::to_string(y));
  }
  const double tol = 1e-9 * y;
  while (iv.width() > tol) {
    const double m = iv.mid();
    if (df_dx(m, y) > 0) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace cszidx
