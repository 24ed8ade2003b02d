#pragma once

#include <cstdint>
#include <string>

#include "cszidx/graph.hpp"

namespace cszidx {

/// Exact value of the complementary second Zagreb index.
using CszValue = std::int64_t;

namespace detail {

inline std::int64_t sq(std::int64_t d) { return d * d; }

inline std::int64_t abs_diff_sq(std::int64_t a, std::int64_t b) {
  const std::int64_t t = sq(a) - sq(b);
  return t < 0 ? -t : t;
}

inline CszValue checked_add(CszValue a, CszValue b) {
  CszValue out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("complementary Zagreb sum exceeds 64-bit range");
  }
  return out;
}

}  // namespace detail

/// cM2(G): sum over edges uv of |d_u^2 - d_v^2|.
inline CszValue csz(const Graph& g) {
  CszValue total = 0;
  const auto deg = g.degrees();
  for (Vertex u = 0; u < g.order(); ++u) {
    g.for_each_neighbor(u, [&](Vertex v) {
      if (u < v) total = detail::checked_add(total, detail::abs_diff_sq(deg[u], deg[v]));
    });
  }
  return total;
}

/// cM2 from class degrees and cross-class edge counts; edges inside a class
/// contribute nothing.
inline CszValue csz_via_partition(const DegreePartition& p) {
  CszValue total = 0;
  for (std::size_t i = 0; i < p.classes(); ++i) {
    for (std::size_t j = i + 1; j < p.classes(); ++j) {
      const auto a = static_cast<CszValue>(p.cross_edges(i, j));
      total = detail::checked_add(
          total, a * (detail::sq(p.degrees[j]) - detail::sq(p.degrees[i])));
    }
  }
  return total;
}

/// Exact change of cM2 when edge uv is toggled, in O(d_u + d_v).
inline CszValue toggle_delta(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("toggle_delta needs two distinct vertices");
  const bool present = g.adjacent(u, v);
  const std::int64_t step = present ? -1 : 1;
  const auto deg = g.degrees();
  const std::int64_t du = deg[u];
  const std::int64_t dv = deg[v];
  CszValue delta = 0;
  auto side = [&](Vertex a, std::int64_t da, Vertex other) {
    g.for_each_neighbor(a, [&](Vertex w) {
      if (w == other) return;
      delta += detail::abs_diff_sq(da + step, deg[w]) - detail::abs_diff_sq(da, deg[w]);
    });
  };
  side(u, du, v);
  side(v, dv, u);
  if (present) {
    delta -= detail::abs_diff_sq(du, dv);
  } else {
    delta += detail::abs_diff_sq(du + 1, dv + 1);
  }
  return delta;
}

/// Closed-form change of cM2 when a maximum-degree vertex v gains the edge uv:
///
///   D(2D+1) + (d_u - 2|N1|)(2d_u+1) + (D+1)^2 - (d_u+1)^2,
///
/// where D is the maximum degree and N1 = {y in N(u) : d_y > d_u}.
inline CszValue delta_add_edge_maxdeg(const Graph& g, Vertex v, Vertex u) {
  if (u == v) throw PreconditionError("delta_add_edge_maxdeg: u and v must differ");
  if (g.adjacent(u, v)) {
    throw PreconditionError("delta_add_edge_maxdeg: edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") already present");
  }
  const auto top = static_cast<std::int64_t>(g.max_degree());
  if (static_cast<std::int64_t>(g.degree(v)) != top) {
    throw PreconditionError("delta_add_edge_maxdeg: vertex " + std::to_string(v) +
                            " does not have maximum degree");
  }
  const auto du = static_cast<std::int64_t>(g.degree(u));
  std::int64_t higher = 0;
  g.for_each_neighbor(u, [&](Vertex y) { higher += (g.degree(y) > g.degree(u)); });
  return top * (2 * top + 1) + (du - 2 * higher) * (2 * du + 1) + detail::sq(top + 1) -
         detail::sq(du + 1);
}

/// Closed-form change of cM2 when an edge between two minimum-degree vertices
/// is removed: 2(d-1)(2d-1). Connectivity of the result is not required.
inline CszValue delta_remove_min_min(const Graph& g, Vertex x, Vertex y) {
  if (x == y || !g.adjacent(x, y)) {
    throw PreconditionError("delta_remove_min_min: (" + std::to_string(x) + "," +
                            std::to_string(y) + ") is not an edge");
  }
  const auto low = g.min_degree();
  if (g.degree(x) != low || g.degree(y) != low) {
    throw PreconditionError("delta_remove_min_min: both endpoints must have minimum degree");
  }
  const auto d = static_cast<std::int64_t>(low);
  return 2 * (d - 1) * (2 * d - 1);
}

/// Closed-form change of cM2 when the edge between a universal vertex x and a
/// minimum-degree vertex y is removed, with k = |M(G)|:
///
///   (2k - n)(2n - 3) + (d_y - 1)(2d_y - 1) + d_y^2 - (n-1)^2.
///
/// Valid when every maximum-degree vertex is universal and y is not one of
/// them (k < n); K_n breaks the identity.
inline CszValue delta_remove_max_min(const Graph& g, Vertex x, Vertex y) {
  const std::size_t n = g.order();
  if (x == y || !g.adjacent(x, y)) {
    throw PreconditionError("delta_remove_max_min: (" + std::to_string(x) + "," +
                            std::to_string(y) + ") is not an edge");
  }
  if (g.max_degree() != n - 1) {
    throw PreconditionError("delta_remove_max_min: maximum degree must be n-1");
  }
  if (g.degree(x) != n - 1) {
    throw PreconditionError("delta_remove_max_min: x must be a maximum-degree vertex");
  }
  if (g.degree(y) != g.min_degree()) {
    throw PreconditionError("delta_remove_max_min: y must have minimum degree");
  }
  if (g.degree(y) == n - 1) {
    throw PreconditionError("delta_remove_max_min: y must not have maximum degree (k < n)");
  }
  const auto nn = static_cast<std::int64_t>(n);
  const auto k = static_cast<std::int64_t>(g.max_degree_vertices().size());
  const auto dy = static_cast<std::int64_t>(g.degree(y));
  return (2 * k - nn) * (2 * nn - 3) + (dy - 1) * (2 * dy - 1) + detail::sq(dy) -
         detail::sq(nn - 1);
}

}  // namespace cszidx
