#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cszidx/csz_index.hpp"
#include "cszidx/graph.hpp"
#include "cszidx/join_family.hpp"

namespace cszidx {

using BoundNumber = std::variant<std::int64_t, double>;

inline double as_double(const BoundNumber& v) {
  return std::visit([](auto x) { return static_cast<double>(x); }, v);
}

/// Outcome of checking one inequality on one instance.
struct BoundReport {
  std::string name;
  std::string instance;
  BoundNumber lhs = std::int64_t{0};
  BoundNumber rhs = std::int64_t{0};
  bool holds = false;
  bool strict = false;
  bool equality = false;
  bool in_scope = true;  // false when the claim is only reported, not asserted
};

namespace detail {

inline bool compare(const BoundNumber& lhs, const BoundNumber& rhs, bool strict) {
  if (std::holds_alternative<std::int64_t>(lhs) && std::holds_alternative<std::int64_t>(rhs)) {
    const auto a = std::get<std::int64_t>(lhs);
    const auto b = std::get<std::int64_t>(rhs);
    return strict ? a < b : a <= b;
  }
  const double a = as_double(lhs);
  const double b = as_double(rhs);
  return strict ? a < b : a <= b;
}

inline bool equal(const BoundNumber& lhs, const BoundNumber& rhs) {
  if (std::holds_alternative<std::int64_t>(lhs) && std::holds_alternative<std::int64_t>(rhs)) {
    return std::get<std::int64_t>(lhs) == std::get<std::int64_t>(rhs);
  }
  return as_double(lhs) == as_double(rhs);
}

inline BoundReport make_report(std::string name, std::string instance, BoundNumber lhs,
                               BoundNumber rhs, bool strict) {
  BoundReport r{std::move(name), std::move(instance), lhs, rhs, false, strict, false, true};
  r.holds = compare(lhs, rhs, strict);
  r.equality = equal(lhs, rhs);
  return r;
}

inline std::string order_tag(std::size_t n) { return "n=" + std::to_string(n); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Number of maximum-degree vertices of an extremal graph

/// Upper bound -2n/3 + 3/2 + sqrt(52n^2 - 132n + 81)/6 on |M(G)|.
inline double mdeg_bound(std::size_t n) {
  if (n < 4) throw PreconditionError("mdeg_bound requires n >= 4");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t radicand = 52 * nn * nn - 132 * nn + 81;
  // One division keeps integer roots exact (n = 86 gives 276/6 = 46).
  return (std::sqrt(static_cast<double>(radicand)) - static_cast<double>(4 * nn - 9)) / 6.0;
}

/// 3k^2 + (4n-9)k - 3n^2 + 5n; k <= mdeg_bound(n) exactly when this is <= 0.
inline std::int64_t mdeg_quadratic(std::size_t n, std::size_t k) {
  if (n < 4) throw PreconditionError("mdeg_quadratic requires n >= 4");
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  return 3 * kk * kk + (4 * nn - 9) * kk - 3 * nn * nn + 5 * nn;
}

/// Exact test of k <= mdeg_bound(n) for k >= 0 (the quadratic's other root
/// is negative).
inline bool within_mdeg_bound(std::size_t n, std::size_t k) {
  return mdeg_quadratic(n, k) <= 0;
}

inline BoundReport mdeg_corollary_check(std::size_t n) {
  auto r = detail::make_report("mdeg_bound_below_5352n", detail::order_tag(n), mdeg_bound(n),
                               5352.0 * static_cast<double>(n) / 10000.0, true);
  return r;
}

/// Compares the exact quadratic test with the floating bound for k = 0..n.
/// lhs counts disagreements.
inline BoundReport mdeg_root_consistency_check(std::size_t n) {
  const double bound = mdeg_bound(n);
  std::int64_t mismatches = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const bool exact = within_mdeg_bound(n, k);
    const bool floating = static_cast<double>(k) <= bound;
    mismatches += (exact != floating);
  }
  return detail::make_report("mdeg_root_consistency", detail::order_tag(n), mismatches,
                             std::int64_t{0}, false);
}

/// |M(g)| against mdeg_bound(n), decided by the exact quadratic.
inline BoundReport mdeg_count_check(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t k = g.max_degree_vertices().size();
  auto r = detail::make_report("mdeg_count", detail::order_tag(n) + " |M|=" + std::to_string(k),
                               static_cast<double>(k), mdeg_bound(n), false);
  r.holds = within_mdeg_bound(n, k);
  return r;
}

// ---------------------------------------------------------------------------
// Join-family optimum location

/// 3n/10 < k for every maximizing k, compared as 3n < 10k.
inline BoundReport optimal_k_lower_check(const KTableRow& row) {
  const auto k = static_cast<std::int64_t>(row.best_k.front());
  auto r = detail::make_report("optimal_k_above_3n/10",
                               detail::order_tag(row.n) + " k=" + std::to_string(k),
                               static_cast<std::int64_t>(3 * row.n), 10 * k, true);
  r.in_scope = row.n >= 11;
  return r;
}

/// k < 4n/10 for every maximizing k, compared as 10k < 4n.
inline BoundReport optimal_k_upper_check(const KTableRow& row) {
  const auto k = static_cast<std::int64_t>(row.best_k.back());
  auto r = detail::make_report("optimal_k_below_4n/10",
                               detail::order_tag(row.n) + " k=" + std::to_string(k), 10 * k,
                               static_cast<std::int64_t>(4 * row.n), true);
  r.in_scope = row.n >= 11;
  return r;
}

/// k < ceil(n/2) for every maximizing k.
inline BoundReport optimal_k_half_check(const KTableRow& row) {
  const auto k = static_cast<std::int64_t>(row.best_k.back());
  return detail::make_report("optimal_k_below_ceil_half",
                             detail::order_tag(row.n) + " k=" + std::to_string(k), k,
                             static_cast<std::int64_t>((row.n + 1) / 2), true);
}

// ---------------------------------------------------------------------------
// Lemma on weighted differences of squares

inline constexpr double kLemma5RelTol = 1e-12;

/// a(z^2-y^2) + b(z^2-x^2) + c(y^2-x^2) <= (b + max(a,c))(z^2-x^2)
/// for 0 <= x <= y <= z and a, b, c >= 0.
inline BoundReport lemma5_check(double a, double b, double c, double x, double y, double z) {
  if (!(a >= 0 && b >= 0 && c >= 0)) {
    throw PreconditionError("lemma5_check: weights must be nonnegative");
  }
  if (!(0 <= x && x <= y && y <= z)) {
    throw PreconditionError("lemma5_check: requires 0 <= x <= y <= z");
  }
  const double lhs = a * (z * z - y * y) + b * (z * z - x * x) + c * (y * y - x * x);
  const double rhs = (b + std::max(a, c)) * (z * z - x * x);
  // Both sides are sums of terms bounded by (a + b + c) z^2, so rounding is
  // judged relative to that scale.
  const double slack = kLemma5RelTol * (a + b + c) * z * z;
  auto r = detail::make_report("lemma5",
                             "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                 " c=" + std::to_string(c) + " x=" + std::to_string(x) +
                                 " y=" + std::to_string(y) + " z=" + std::to_string(z),
                             lhs, rhs, false);
  r.holds = lhs <= rhs + slack;
  r.equality = std::abs(lhs - rhs) <= slack;
  return r;
}

// ---------------------------------------------------------------------------
// Bidegreed and tridegreed graphs with a universal vertex

/// cM2(g) <= k(n-k)((n-1)^2 - k^2) with k = |M(g)|, equality exactly for the
/// join K_k + complement(K_{n-k}). holds also requires the equality case to
/// coincide with join recognition.
inline BoundReport bidegreed_bound_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || !is_connected(g)) {
    throw PreconditionError("bidegreed_bound_check: graph must be connected with n >= 3");
  }
  if (degree_partition(g).classes() != 2) {
    throw PreconditionError("bidegreed_bound_check: graph must have exactly two degrees");
  }
  if (g.max_degree() != n - 1) {
    throw PreconditionError("bidegreed_bound_check: maximum degree must be n-1");
  }
  const std::size_t k = g.max_degree_vertices().size();
  auto r = detail::make_report("bidegreed_join_bound",
                               detail::order_tag(n) + " k=" + std::to_string(k), csz(g),
                               csz_join(n, k), false);
  const auto recognized = recognize_join(g);
  const bool is_join = recognized.has_value() && *recognized == k;
  r.holds = r.holds && (r.equality == is_join);
  return r;
}

/// cM2(g) < max_k cM2(K_k + complement(K_{n-k})). The inequality is claimed
/// for n >= 11; smaller orders are reported with in_scope = false.
inline BoundReport tridegreed_bound_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || !is_connected(g)) {
    throw PreconditionError("tridegreed_bound_check: graph must be connected with n >= 3");
  }
  if (degree_partition(g).classes() != 3) {
    throw PreconditionError("tridegreed_bound_check: graph must have exactly three degrees");
  }
  if (g.max_degree() != n - 1) {
    throw PreconditionError("tridegreed_bound_check: largest degree must be n-1");
  }
  const KTableRow best = optimal_k(n);
  auto r = detail::make_report("tridegreed_join_bound",
                               detail::order_tag(n) + " t=" + std::to_string(best.best_k.front()),
                               csz(g), best.best_value, true);
  r.in_scope = n >= 11;
  return r;
}

/// Every order-indexed check for n in [n_min, n_max]. Root consistency is
/// exhaustive in k, so it is limited to n <= root_limit.
inline std::vector<BoundReport> bound_sweep(std::size_t n_min, std::size_t n_max,
                                            std::size_t root_limit = 1000) {
  if (n_min < 4 || n_max < n_min) throw PreconditionError("bound_sweep needs 4 <= n_min <= n_max");
  std::vector<BoundReport> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    out.push_back(mdeg_corollary_check(n));
    if (n <= root_limit) out.push_back(mdeg_root_consistency_check(n));
    if (n >= 5) {
      const KTableRow row = optimal_k(n);
      if (n >= 11) {
        out.push_back(optimal_k_lower_check(row));
        out.push_back(optimal_k_upper_check(row));
      }
      out.push_back(optimal_k_half_check(row));
    }
  }
  return out;
}

}  // namespace cszidx
