#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "edgebasis/permutation.hpp"

namespace edgebasis {

/// Set of vertices drawn from [1, 64], stored as a bitmask (bit v-1 for vertex v).
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet without(int v) const { return without(VertexSet(std::uint64_t{1} << (v - 1))); }

  /// Members in increasing order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph. Vertex labels live in [1, n]; `vertices()` is the
/// actual vertex set, which is all of [n] unless the graph is an induced subgraph.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Edges may be given in either orientation; duplicates collapse. Loops and
  /// endpoints outside [n] are rejected with InvalidInput.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  VertexSet neighbors(int v) const { return adjacency_[v - 1]; }
  bool adjacent(int u, int v) const { return adjacency_[u - 1].contains(v); }
  bool has_vertex(int v) const { return v >= 1 && v <= n_ && vertices_.contains(v); }

  /// Edges as (i, j) with i < j, sorted.
  std::vector<Edge> edges() const;
  int edge_count() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend Graph induced_subgraph(const Graph& g, VertexSet w);

  int n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
};

/// A vertex sequence (i_0, ..., i_r). Consecutive vertices are expected to be
/// adjacent in some host graph; operations that take a graph check this.
class Walk {
public:
  Walk() = default;
  explicit Walk(std::vector<int> vertices);
  Walk(std::initializer_list<int> vertices) : Walk(std::vector<int>(vertices)) {}

  int start() const { return vertices_.front(); }
  int end() const { return vertices_.back(); }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  bool is_odd() const { return length() % 2 == 1; }
  int parity() const { return length() % 2; }

  /// Vertex set minus the endpoint set. A revisited endpoint stays excluded.
  VertexSet interior() const;
  VertexSet vertex_set() const;
  bool is_simple() const;
  Walk inverse() const;

  const std::vector<int>& vertices() const { return vertices_; }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk& a, const Walk& b) { return a.vertices_ <=> b.vertices_; }

private:
  std::vector<int> vertices_;
};

Graph induced_subgraph(const Graph& g, VertexSet w);

/// Connected components, each a vertex set, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Length of a shortest (v, w)-walk; nullopt when w is unreachable from v.
std::optional<int> shortest_path_length(const Graph& g, int v, int w);

bool is_walk_in(const Graph& g, const Walk& pi);

/// Simple path with no proper vertex subset carrying another path between
/// the same endpoints.
bool is_weakly_admissible(const Graph& g, const Walk& pi);

/// Weak admissibility plus: every interior vertex ranks before the start or
/// after the end under sigma. Requires sigma to rank the start before the end.
bool is_sigma_admissible(const Graph& g, const Permutation& sigma, const Walk& pi);

/// All weakly admissible paths, including length-0 paths. A path and its
/// inverse are listed separately. Sorted.
std::vector<Walk> enumerate_weakly_admissible_paths(const Graph& g);

/// Minimality in the parity sense: (i) deleting any interior vertex destroys
/// every same-parity walk between the endpoints, and (ii) no strictly shorter
/// same-parity walk has the same endpoints and interior.
bool is_minimal_path(const Graph& g, const Walk& pi);

struct MinimalPathEnumeration {
  std::vector<Walk> walks;        // minimal walks of length <= length_bound, sorted
  int length_bound = 0;
  int longest_minimal_length = 0; // over all minimal walks, bound or not
  int omitted = 0;                // minimal walks longer than length_bound
};

/// Enumerates minimal walks. Minimality depends only on the signature
/// (start, end, interior, parity) plus the walk being shortest for that
/// signature, so the complete set is finite and is computed exactly; walks
/// above `length_bound` are counted in `omitted` rather than dropped silently.
MinimalPathEnumeration enumerate_minimal_paths(const Graph& g, int length_bound);

/// True when some (start, end)-walk of the given parity exists inside g.
bool has_walk_with_parity(const Graph& g, int start, int end, int parity);

} // namespace edgebasis
