#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cszidx/bounds.hpp"
#include "cszidx/csz_index.hpp"
#include "cszidx/graph.hpp"
#include "cszidx/graph_io.hpp"
#include "cszidx/join_family.hpp"

namespace cszidx {

// ---------------------------------------------------------------------------
// Configuration

enum class SearchMode { unrestricted, universal_vertex };

inline std::string to_string(SearchMode mode) {
  return mode == SearchMode::unrestricted ? "unrestricted" : "universal-vertex";
}

inline SearchMode parse_search_mode(const std::string& text) {
  if (text == "unrestricted") return SearchMode::unrestricted;
  if (text == "universal-vertex" || text == "universal") return SearchMode::universal_vertex;
  throw PreconditionError("unknown search mode '" + text + "'");
}

// Default order caps: 2^21 labeled graphs unrestricted at n = 7 and 2^28
// universal-vertex graphs at n = 9. kHardCap keeps edge masks in 64 bits.
inline constexpr std::size_t kUnrestrictedCap = 7;
inline constexpr std::size_t kUniversalCap = 9;
inline constexpr std::size_t kHardCap = 11;

struct SearchConfig {
  std::size_t n = 0;
  SearchMode mode = SearchMode::universal_vertex;
  std::size_t shard_count = 1;
  std::size_t shard_index = 0;
  std::uint64_t seed = 0;
  std::size_t max_steps = 100000;
  std::size_t restarts = 0;
  bool cap_override = false;
};

inline std::size_t mode_cap(SearchMode mode) {
  return mode == SearchMode::unrestricted ? kUnrestrictedCap : kUniversalCap;
}

inline void check_enumeration_config(const SearchConfig& cfg) {
  if (cfg.n < 2) throw PreconditionError("enumeration needs n >= 2");
  if (cfg.shard_count == 0 || cfg.shard_index >= cfg.shard_count) {
    throw PreconditionError("shard_index must lie in [0, shard_count)");
  }
  if (cfg.n > kHardCap) {
    throw PreconditionError("enumeration supports n <= " + std::to_string(kHardCap));
  }
  if (cfg.n > mode_cap(cfg.mode) && !cfg.cap_override) {
    throw PreconditionError("n=" + std::to_string(cfg.n) + " exceeds the " + to_string(cfg.mode) +
                            " cap of " + std::to_string(mode_cap(cfg.mode)) +
                            "; use universal-vertex mode or pass the cap override");
  }
}

// ---------------------------------------------------------------------------
// Edge masks over all vertex pairs; pair (i, j), i < j, has index j(j-1)/2 + i.

namespace detail {

inline constexpr std::size_t pair_index(std::size_t i, std::size_t j) {
  return j * (j - 1) / 2 + i;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if ((mask >> pair_index(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

struct FreeEdges {
  std::vector<std::array<std::uint8_t, 2>> pairs;
  std::uint64_t base_mask = 0;
};

inline FreeEdges free_edges(std::size_t n, SearchMode mode) {
  FreeEdges fe;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (mode == SearchMode::universal_vertex && i == 0) {
        fe.base_mask |= std::uint64_t{1} << pair_index(i, j);
      } else {
        fe.pairs.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
      }
    }
  }
  return fe;
}

inline constexpr std::size_t kPrefixBits = 8;

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Partial result of one enumeration shard. Witnesses are keyed by sorted
/// degree sequence; each key keeps the smallest canonical edge mask, where the
/// canonical labeling orders vertices by decreasing degree (ties by index).
struct ShardResult {
  std::size_t n = 0;
  SearchMode mode = SearchMode::universal_vertex;
  CszValue max_value = -1;
  std::map<std::uint64_t, std::uint64_t> witnesses;
  std::uint64_t scanned = 0;
};

namespace detail {

class ShardScanner {
 public:
  ShardScanner(std::size_t n, SearchMode mode) : n_(n), mode_(mode), fe_(free_edges(n, mode)) {
    for (std::size_t d = 0; d < sq_.size(); ++d) sq_[d] = static_cast<std::int64_t>(d * d);
    result_.n = n;
    result_.mode = mode;
  }

  void scan_prefix(std::uint64_t prefix, std::size_t prefix_bits) {
    const std::size_t m = fe_.pairs.size();
    const std::size_t low = m - prefix_bits;
    load(fe_.base_mask);
    for (std::size_t b = 0; b < prefix_bits; ++b) {
      if ((prefix >> b) & 1U) flip(low + b);
    }
    visit();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t s = 1; s < steps; ++s) {
      flip(static_cast<std::size_t>(std::countr_zero(s)));
      visit();
    }
  }

  ShardResult take() { return std::move(result_); }

 private:
  void load(std::uint64_t mask) {
    rows_.fill(0);
    deg_.fill(0);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if ((mask >> pair_index(i, j)) & 1U) {
          rows_[i] |= 1U << j;
          rows_[j] |= 1U << i;
          ++deg_[i];
          ++deg_[j];
        }
      }
    }
    value_ = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::uint32_t w = rows_[u]; w != 0; w &= w - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(w));
        if (u < v) value_ += absdiff(deg_[u], deg_[v]);
      }
    }
  }

  std::int64_t absdiff(std::size_t a, std::size_t b) const {
    const std::int64_t t = sq_[a] - sq_[b];
    return t < 0 ? -t : t;
  }

  // Toggles free edge e and updates the value in O(d_u + d_v).
  void flip(std::size_t e) {
    const std::size_t u = fe_.pairs[e][0];
    const std::size_t v = fe_.pairs[e][1];
    const bool present = (rows_[u] >> v) & 1U;
    const std::size_t du = deg_[u];
    const std::size_t dv = deg_[v];
    const std::size_t nu = present ? du - 1 : du + 1;
    const std::size_t nv = present ? dv - 1 : dv + 1;
    std::int64_t delta = 0;
    for (std::uint32_t w = rows_[u] & ~(1U << v); w != 0; w &= w - 1) {
      const std::size_t x = deg_[static_cast<std::size_t>(std::countr_zero(w))];
      delta += absdiff(nu, x) - absdiff(du, x);
    }
    for (std::uint32_t w = rows_[v] & ~(1U << u); w != 0; w &= w - 1) {
      const std::size_t x = deg_[static_cast<std::size_t>(std::countr_zero(w))];
      delta += absdiff(nv, x) - absdiff(dv, x);
    }
    delta += present ? -absdiff(du, dv) : absdiff(nu, nv);
    value_ += delta;
    rows_[u] ^= 1U << v;
    rows_[v] ^= 1U << u;
    deg_[u] = nu;
    deg_[v] = nv;
  }

  bool connected() const {
    std::uint32_t reach = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t w = frontier; w != 0; w &= w - 1) {
        next |= rows_[static_cast<std::size_t>(std::countr_zero(w))];
      }
      frontier = next & ~reach;
      reach |= next;
    }
    return reach == (std::uint32_t{1} << n_) - 1;
  }

  void visit() {
    if (mode_ == SearchMode::unrestricted && !connected()) return;
    ++result_.scanned;
    if (value_ < result_.max_value) return;
    if (value_ > result_.max_value) {
      result_.max_value = value_;
      result_.witnesses.clear();
    }
    record();
  }

  void record() {
    std::array<std::uint8_t, 16> order{};
    for (std::size_t i = 0; i < n_; ++i) order[i] = static_cast<std::uint8_t>(i);
    std::stable_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_),
                     [&](std::uint8_t a, std::uint8_t b) { return deg_[a] > deg_[b]; });
    std::array<std::uint8_t, 16> pos{};
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      pos[order[i]] = static_cast<std::uint8_t>(i);
      key = (key << 4) | deg_[order[i]];
    }
    std::uint64_t canon = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::uint32_t w = rows_[u]; w != 0; w &= w - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(w));
        if (u < v) {
          const std::size_t a = std::min(pos[u], pos[v]);
          const std::size_t b = std::max(pos[u], pos[v]);
          canon |= std::uint64_t{1} << pair_index(a, b);
        }
      }
    }
    auto [it, inserted] = result_.witnesses.emplace(key, canon);
    if (!inserted) it->second = std::min(it->second, canon);
  }

  std::size_t n_;
  SearchMode mode_;
  FreeEdges fe_;
  std::array<std::int64_t, 16> sq_{};
  std::array<std::uint32_t, 16> rows_{};
  std::array<std::size_t, 16> deg_{};
  std::int64_t value_ = 0;
  ShardResult result_;
};

}  // namespace detail

/// Scans the part of the search space owned by cfg.shard_index: the edge-mask
/// prefixes (top bits) congruent to shard_index modulo shard_count, each
/// walked in Gray-code order.
inline ShardResult enumerate_shard(const SearchConfig& cfg) {
  check_enumeration_config(cfg);
  detail::ShardScanner scanner(cfg.n, cfg.mode);
  const std::size_t m = detail::free_edges(cfg.n, cfg.mode).pairs.size();
  const std::size_t prefix_bits = std::min(m, detail::kPrefixBits);
  const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
  for (std::uint64_t p = cfg.shard_index; p < prefixes; p += cfg.shard_count) {
    scanner.scan_prefix(p, prefix_bits);
  }
  return scanner.take();
}

inline ShardResult merge_shards(const std::vector<ShardResult>& shards) {
  if (shards.empty()) throw PreconditionError("merge_shards needs at least one shard");
  ShardResult out;
  out.n = shards.front().n;
  out.mode = shards.front().mode;
  for (const auto& s : shards) {
    out.scanned += s.scanned;
    out.max_value = std::max(out.max_value, s.max_value);
  }
  for (const auto& s : shards) {
    if (s.max_value != out.max_value) continue;
    for (auto [key, canon] : s.witnesses) {
      auto [it, inserted] = out.witnesses.emplace(key, canon);
      if (!inserted) it->second = std::min(it->second, canon);
    }
  }
  return out;
}

/// Outcome of an exhaustive extremal search.
struct ExtremalReport {
  std::size_t n = 0;
  SearchMode mode = SearchMode::universal_vertex;
  CszValue max_value = 0;
  std::vector<std::string> witnesses;  // graph6, canonical labeling
  bool all_witnesses_are_joins = false;
  std::vector<std::size_t> witness_k;
  bool prop1_holds = false;  // maximum degree n-1
  bool prop2_holds = false;  // no two adjacent minimum-degree vertices
  bool prop3_holds = false;  // |M| within the quadratic bound and below 5352n/10000
  std::uint64_t graphs_scanned = 0;

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

inline bool has_adjacent_min_degree_pair(const Graph& g) {
  const std::size_t low = g.min_degree();
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == low && g.degree(v) == low) return true;
  }
  return false;
}

inline ExtremalReport make_report(const ShardResult& merged) {
  if (merged.witnesses.empty()) throw PreconditionError("no connected graph was scanned");
  ExtremalReport r;
  r.n = merged.n;
  r.mode = merged.mode;
  r.max_value = merged.max_value;
  r.graphs_scanned = merged.scanned;
  r.all_witnesses_are_joins = true;
  r.prop1_holds = r.prop2_holds = r.prop3_holds = true;
  for (auto [key, canon] : merged.witnesses) {
    const Graph g = detail::graph_from_mask(merged.n, canon);
    r.witnesses.push_back(to_graph6(g));
    if (auto k = recognize_join(g)) {
      r.witness_k.push_back(*k);
    } else {
      r.all_witnesses_are_joins = false;
    }
    const std::size_t n = g.order();
    r.prop1_holds = r.prop1_holds && g.max_degree() == n - 1;
    r.prop2_holds = r.prop2_holds && !has_adjacent_min_degree_pair(g);
    if (n >= 4) {
      const std::size_t top = g.max_degree_vertices().size();
      r.prop3_holds = r.prop3_holds && within_mdeg_bound(n, top) && 10000 * top < 5352 * n;
    }
  }
  std::sort(r.witness_k.begin(), r.witness_k.end());
  r.witness_k.erase(std::unique(r.witness_k.begin(), r.witness_k.end()), r.witness_k.end());
  return r;
}

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every shard of (n, mode) on up to `threads` workers and merges them.
/// The report does not depend on shard_count or threads.
inline ExtremalReport enumerate_extremal(SearchConfig cfg, std::size_t threads = 1,
                                         const ProgressFn& progress = {}) {
  cfg.shard_index = 0;
  check_enumeration_config(cfg);
  std::vector<ShardResult> parts(cfg.shard_count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t s = next++; s < cfg.shard_count; s = next++) {
      SearchConfig shard = cfg;
      shard.shard_index = s;
      parts[s] = enumerate_shard(shard);
      const std::size_t finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, cfg.shard_count);
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, cfg.shard_count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return make_report(merge_shards(parts));
}

struct ConjectureVerdict {
  bool holds = false;
  ExtremalReport report;
};

/// Every extremal graph is a join K_k + complement(K_{n-k}) with k < ceil(n/2),
/// and for n >= 5 the witnessed k are exactly the join-family maximizers.
inline ConjectureVerdict verify_conjecture(const SearchConfig& cfg, std::size_t threads = 1,
                                           const ProgressFn& progress = {}) {
  ConjectureVerdict v{false, enumerate_extremal(cfg, threads, progress)};
  const auto& r = v.report;
  bool ok = r.all_witnesses_are_joins && !r.witness_k.empty();
  for (auto k : r.witness_k) ok = ok && k < (r.n + 1) / 2;
  if (r.n >= 5) ok = ok && r.witness_k == optimal_k(r.n).best_k;
  v.holds = ok;
  return v;
}

// ---------------------------------------------------------------------------
// Corpus access

/// Calls f(graph) for every connected labeled graph of the class, in edge-mask
/// order.
template <typename F>
void for_each_connected_graph(std::size_t n, SearchMode mode, F&& f) {
  if (n < 1 || n > kHardCap) throw PreconditionError("corpus order out of range");
  if (n == 1) {
    f(Graph::from_edges(1, {}));
    return;
  }
  const auto fe = detail::free_edges(n, mode);
  const std::uint64_t total = std::uint64_t{1} << fe.pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::uint64_t mask = fe.base_mask;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
      const auto& p = fe.pairs[static_cast<std::size_t>(std::countr_zero(b))];
      mask |= std::uint64_t{1} << detail::pair_index(p[0], p[1]);
    }
    const Graph g = detail::graph_from_mask(n, mask);
    if (mode == SearchMode::universal_vertex || is_connected(g)) f(g);
  }
}

inline std::size_t write_corpus(std::size_t n, SearchMode mode, std::ostream& out) {
  std::size_t count = 0;
  for_each_connected_graph(n, mode, [&](const Graph& g) {
    out << to_graph6(g) << '\n';
    ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Random graphs

namespace detail {

inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // Plain rejection sampling; std distributions differ between library
  // implementations and would break pinned fixtures.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace detail

inline constexpr std::size_t kConnectRetries = 10000;

/// Erdos-Renyi G(n, p) draw, redrawn until connected. Pairs are visited in
/// lexicographic order; results depend only on (n, p, seed).
inline Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0 && p <= 1)) throw PreconditionError("random_connected needs 0 < p <= 1");
  if (n < 1 || n > kMaxOrder) throw PreconditionError("random_connected: order out of range");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < kConnectRetries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (detail::unit_draw(rng) < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected: no connected draw after " +
                           std::to_string(kConnectRetries) + " attempts (n=" +
                           std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

/// Random tridegreed graph with a universal vertex: K_t joined with the
/// disjoint union of an r_a-regular circulant on a vertices and an r_b-regular
/// circulant on b vertices (r_a != r_b), randomly relabeled.
inline Graph random_tridegreed(std::size_t n, std::uint64_t seed) {
  if (n < 5 || n > kMaxOrder) throw PreconditionError("random_tridegreed needs n >= 5");
  std::mt19937_64 rng(seed);
  auto feasible = [](std::size_t size, std::size_t r) {
    return r < size && (r % 2 == 0 || size % 2 == 0);
  };
  for (;;) {
    const std::size_t t = 1 + detail::below(rng, n - 4);  // leaves a + b >= 3
    const std::size_t rest = n - t;
    const std::size_t a = 1 + detail::below(rng, rest - 2);
    const std::size_t b = rest - a;
    const std::size_t ra = detail::below(rng, a);
    const std::size_t rb = detail::below(rng, b);
    if (ra == rb || !feasible(a, ra) || !feasible(b, rb)) continue;

    std::vector<Edge> edges;
    for (Vertex u = 0; u < t; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    auto circulant = [&](std::size_t base, std::size_t size, std::size_t r) {
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t off = 1; off <= r / 2; ++off) {
          edges.emplace_back(static_cast<Vertex>(base + i),
                             static_cast<Vertex>(base + (i + off) % size));
        }
        if (r % 2 == 1 && i < size / 2) {
          edges.emplace_back(static_cast<Vertex>(base + i),
                             static_cast<Vertex>(base + i + size / 2));
        }
      }
    };
    circulant(t, a, ra);
    circulant(t + a, b, rb);

    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[detail::below(rng, i + 1)]);
    }
    return relabeled(Graph::from_edges(n, edges), order);
  }
}

// ---------------------------------------------------------------------------
// Local search

enum class MoveKind { add_from_max, remove_min_min, remove_max_min, other };

inline std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::add_from_max: return "add_from_max";
    case MoveKind::remove_min_min: return "remove_min_min";
    case MoveKind::remove_max_min: return "remove_max_min";
    case MoveKind::other: return "other";
  }
  return "other";
}

struct Move {
  Vertex u = 0;
  Vertex v = 0;
  bool added = false;
  MoveKind kind = MoveKind::other;
  CszValue delta = 0;
  std::optional<CszValue> closed_form;  // set for add_from_max / remove_* moves
};

struct LocalSearchResult {
  Graph graph;
  CszValue value = 0;
  std::vector<Move> trace;  // moves of the run that produced `graph`
  std::size_t runs = 0;
  bool local_maximum = false;  // false if the run stopped on max_steps
};

namespace detail {

inline Move classify(const Graph& g, Vertex u, Vertex v, CszValue delta) {
  Move m{u, v, !g.adjacent(u, v), MoveKind::other, delta, std::nullopt};
  const std::size_t n = g.order();
  const std::size_t top = g.max_degree();
  const std::size_t low = g.min_degree();
  if (m.added) {
    if (g.degree(u) == top || g.degree(v) == top) {
      const Vertex hub = g.degree(u) == top ? u : v;
      const Vertex other = hub == u ? v : u;
      m.kind = MoveKind::add_from_max;
      m.closed_form = delta_add_edge_maxdeg(g, hub, other);
    }
  } else if (g.degree(u) == low && g.degree(v) == low) {
    m.kind = MoveKind::remove_min_min;
    m.closed_form = delta_remove_min_min(g, u, v);
  } else if (top == n - 1) {
    for (auto [x, y] : {Edge{u, v}, Edge{v, u}}) {
      if (g.degree(x) == n - 1 && g.degree(y) == low && low != n - 1) {
        m.kind = MoveKind::remove_max_min;
        m.closed_form = delta_remove_max_min(g, x, y);
        break;
      }
    }
  }
  if (m.closed_form && *m.closed_form != delta) {
    throw std::logic_error("closed-form delta " + std::to_string(*m.closed_form) +
                           " disagrees with recomputed delta " + std::to_string(delta));
  }
  return m;
}

struct RunOutcome {
  Graph graph;
  CszValue value = 0;
  std::vector<Move> trace;
  bool local_maximum = false;
};

inline RunOutcome climb(Graph g, std::size_t max_steps) {
  RunOutcome out{g, csz(g), {}, false};
  const std::size_t n = g.order();
  for (std::size_t step = 0; step < max_steps; ++step) {
    struct Candidate {
      CszValue delta;
      Vertex u, v;
    };
    std::vector<Candidate> improving;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const CszValue d = toggle_delta(g, u, v);
        if (d > 0) improving.push_back({d, u, v});
      }
    }
    std::sort(improving.begin(), improving.end(), [](const Candidate& a, const Candidate& b) {
      if (a.delta != b.delta) return a.delta > b.delta;
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    bool moved = false;
    for (const auto& c : improving) {
      Graph next = g.toggled(c.u, c.v);
      if (!next.adjacent(c.u, c.v) && !is_connected(next)) continue;
      out.trace.push_back(classify(g, c.u, c.v, c.delta));
      out.value += c.delta;
      g = std::move(next);
      moved = true;
      break;
    }
    if (!moved) {
      out.local_maximum = true;
      break;
    }
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace detail

inline constexpr double kRestartEdgeProbability = 0.5;

/// Steepest-ascent hill climbing over single edge toggles that keep the graph
/// connected; equal deltas are broken by the lexicographically smallest pair.
/// The first run starts from seed_graph (or a random connected graph), each
/// restart from random_connected(n, 0.5, cfg.seed + restart index).
inline LocalSearchResult local_search(const SearchConfig& cfg,
                                      const std::optional<Graph>& seed_graph = std::nullopt) {
  const std::size_t n = seed_graph ? seed_graph->order() : cfg.n;
  if (n < 1 || n > kMaxOrder) throw PreconditionError("local_search: order out of range");
  if (seed_graph && !is_connected(*seed_graph)) {
    throw PreconditionError("local_search: seed graph must be connected");
  }
  LocalSearchResult best;
  best.value = -1;
  const std::size_t runs = 1 + cfg.restarts;
  for (std::size_t r = 0; r < runs; ++r) {
    Graph start = (r == 0 && seed_graph)
                      ? *seed_graph
                      : random_connected(n, kRestartEdgeProbability, cfg.seed + r);
    auto outcome = detail::climb(std::move(start), cfg.max_steps);
    if (outcome.value > best.value) {
      best.graph = std::move(outcome.graph);
      best.value = outcome.value;
      best.trace = std::move(outcome.trace);
      best.local_maximum = outcome.local_maximum;
    }
  }
  best.runs = runs;
  return best;
}

}  // namespace cszidx
