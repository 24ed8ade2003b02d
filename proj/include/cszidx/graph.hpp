#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cszidx/errors.hpp"

namespace cszidx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Largest order accepted anywhere in the library; keeps every exact index
// computation inside 64-bit range.
inline constexpr std::size_t kMaxOrder = 10000;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Graphs of order <= 64 keep one 64-bit adjacency word per vertex; larger
/// graphs keep a sorted neighbour list per vertex. Both layouts sit behind the
/// same interface, and transformations always return a new value.
class Graph {
 public:
  static constexpr std::size_t kBitsetOrder = 64;

  Graph() : Graph(0, {}) {}

  /// Builds a graph from an edge list. Duplicates and orientation are ignored.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > kMaxOrder) {
      throw PreconditionError("graph order " + std::to_string(n) +
                              " exceeds the supported maximum " +
                              std::to_string(kMaxOrder));
    }
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw PreconditionError("edge (" + std::to_string(u) + "," +
                                std::to_string(v) +
                                ") has an endpoint outside [0," +
                                std::to_string(n) + ")");
      }
      if (u == v) {
        throw PreconditionError("self-loop (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not allowed");
      }
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()),
                     normalized.end());
    return Graph(n, normalized);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  std::size_t degree(Vertex v) const { return degree_.at(v); }
  std::span<const std::uint32_t> degrees() const noexcept { return degree_; }

  bool compact() const noexcept { return std::holds_alternative<BitRows>(adj_); }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (const auto* bits = std::get_if<BitRows>(&adj_)) {
      return (bits->rows[u] >> v) & 1U;
    }
    const auto& row = std::get<ListRows>(adj_).rows[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Calls f(w) for every neighbour w of v in increasing order.
  template <typename F>
  void for_each_neighbor(Vertex v, F&& f) const {
    check_vertex(v);
    if (const auto* bits = std::get_if<BitRows>(&adj_)) {
      for (std::uint64_t w = bits->rows[v]; w != 0; w &= w - 1) {
        f(static_cast<Vertex>(std::countr_zero(w)));
      }
      return;
    }
    for (Vertex w : std::get<ListRows>(adj_).rows[v]) f(w);
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  /// Adjacency word of v; only available for the compact layout.
  std::uint64_t row_bits(Vertex v) const {
    check_vertex(v);
    const auto* bits = std::get_if<BitRows>(&adj_);
    if (bits == nullptr) {
      throw PreconditionError("row_bits requires order <= 64");
    }
    return bits->rows[v];
  }

  /// Edges as (u,v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  std::size_t max_degree() const noexcept {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }
  std::size_t min_degree() const noexcept {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
  }

  /// M(G): vertices attaining the maximum degree.
  std::vector<Vertex> max_degree_vertices() const {
    std::vector<Vertex> out;
    const std::size_t top = max_degree();
    for (Vertex v = 0; v < n_; ++v) {
      if (degree_[v] == top) out.push_back(v);
    }
    return out;
  }

  /// Copy of this graph with edge uv flipped.
  Graph toggled(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw PreconditionError("cannot toggle self-loop (" + std::to_string(u) +
                              "," + std::to_string(v) + ")");
    }
    Graph out = *this;
    const bool present = adjacent(u, v);
    if (auto* bits = std::get_if<BitRows>(&out.adj_)) {
      bits->rows[u] ^= std::uint64_t{1} << v;
      bits->rows[v] ^= std::uint64_t{1} << u;
    } else {
      auto& rows = std::get<ListRows>(out.adj_).rows;
      auto flip = [present](std::vector<Vertex>& row, Vertex w) {
        auto it = std::lower_bound(row.begin(), row.end(), w);
        if (present) {
          row.erase(it);
        } else {
          row.insert(it, w);
        }
      };
      flip(rows[u], v);
      flip(rows[v], u);
    }
    if (present) {
      --out.degree_[u];
      --out.degree_[v];
      --out.m_;
    } else {
      ++out.degree_[u];
      ++out.degree_[v];
      ++out.m_;
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.degree_ == b.degree_ &&
           a.edges() == b.edges();
  }

 private:
  struct BitRows {
    std::vector<std::uint64_t> rows;
  };
  struct ListRows {
    std::vector<std::vector<Vertex>> rows;
  };

  // edges must be normalized (u < v), sorted and unique.
  Graph(std::size_t n, std::span<const Edge> edges)
      : n_(n), m_(edges.size()), degree_(n, 0) {
    if (n <= kBitsetOrder) {
      BitRows bits{std::vector<std::uint64_t>(n, 0)};
      for (auto [u, v] : edges) {
        bits.rows[u] |= std::uint64_t{1} << v;
        bits.rows[v] |= std::uint64_t{1} << u;
      }
      adj_ = std::move(bits);
    } else {
      ListRows lists{std::vector<std::vector<Vertex>>(n)};
      for (auto [u, v] : edges) {
        lists.rows[u].push_back(v);
        lists.rows[v].push_back(u);
      }
      for (auto& row : lists.rows) std::sort(row.begin(), row.end());
      adj_ = std::move(lists);
    }
    for (auto [u, v] : edges) {
      ++degree_[u];
      ++degree_[v];
    }
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::variant<BitRows, ListRows> adj_;
  std::vector<std::uint32_t> degree_;
};

inline Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph toggle_edge(const Graph& g, Vertex u, Vertex v) { return g.toggled(u, v); }

/// Relabels g so that new vertex i is old vertex order[i].
inline Graph relabeled(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.order()) {
    throw PreconditionError("relabeling must list every vertex exactly once");
  }
  std::vector<Vertex> position(g.order(), static_cast<Vertex>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.order() || position[order[i]] != g.order()) {
      throw PreconditionError("relabeling must list every vertex exactly once");
    }
    position[order[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph::from_edges(g.order(), edges);
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("is_connected requires at least one vertex");
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.for_each_neighbor(u, [&](Vertex w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    });
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// Join graphs K_k + complement(K_{n-k})

struct JoinSpec {
  std::size_t n = 0;
  std::size_t k = 0;
};

inline void check_join_spec(const JoinSpec& spec) {
  if (spec.n < 3 || spec.k < 1 || spec.k + 2 > spec.n) {
    throw PreconditionError("join requires 1 <= k <= n-2, got n=" +
                            std::to_string(spec.n) + " k=" + std::to_string(spec.k));
  }
}

/// Vertices 0..k-1 form the clique part, k..n-1 the independent part.
inline Graph make_join(const JoinSpec& spec) {
  check_join_spec(spec);
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(spec.n);
  const auto k = static_cast<Vertex>(spec.k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(spec.n, edges);
}

/// Returns k when g is K_k + complement(K_{n-k}) for some 1 <= k <= n-2.
///
/// The degree sequence (k vertices of degree n-1, n-k of degree k) forces the
/// structure: the universal vertices already give every other vertex degree k.
inline std::optional<std::size_t> recognize_join(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  std::size_t k = 0;
  for (auto d : g.degrees()) k += (d == n - 1);
  if (k < 1 || k + 2 > n) return std::nullopt;
  for (auto d : g.degrees()) {
    if (d != n - 1 && d != k) return std::nullopt;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Degree partition

/// Vertices grouped by degree: classes V_0..V_{l-1} with strictly increasing
/// degrees, their sizes and the number of edges running between each pair.
struct DegreePartition {
  std::vector<std::uint32_t> degrees;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> cross;  // classes() x classes(), row-major, i < j used
  std::size_t within_edges = 0;

  std::size_t classes() const noexcept { return degrees.size(); }

  std::size_t cross_edges(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (i == j || j >= classes()) {
      throw PreconditionError("cross_edges needs two distinct class indices");
    }
    return cross[i * classes() + j];
  }
};

inline DegreePartition degree_partition(const Graph& g) {
  DegreePartition p;
  std::vector<std::uint32_t> sorted(g.degrees().begin(), g.degrees().end());
  std::sort(sorted.begin(), sorted.end());
  for (auto d : sorted) {
    if (p.degrees.empty() || p.degrees.back() != d) {
      p.degrees.push_back(d);
      p.class_sizes.push_back(0);
    }
    ++p.class_sizes.back();
  }
  const std::size_t l = p.classes();
  p.cross.assign(l * l, 0);
  auto class_of = [&](Vertex v) {
    const auto it = std::lower_bound(p.degrees.begin(), p.degrees.end(), g.degree(v));
    return static_cast<std::size_t>(it - p.degrees.begin());
  };
  for (auto [u, v] : g.edges()) {
    std::size_t i = class_of(u);
    std::size_t j = class_of(v);
    if (i == j) {
      ++p.within_edges;
    } else {
      if (i > j) std::swap(i, j);
      ++p.cross[i * l + j];
    }
  }
  return p;
}

}  // namespace cszidx
