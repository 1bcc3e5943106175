#include "edgebasis/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "edgebasis/error.hpp"

namespace edgebasis {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [0," + std::to_string(kMaxVertices) + "]");
  vertices_ = VertexSet::range(n);
  adjacency_.assign(n, VertexSet{});
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw InvalidInput("edge {" + std::to_string(i) + "," + std::to_string(j) + "} has an endpoint outside [1," +
                         std::to_string(n) + "]");
    if (i == j) throw InvalidInput("loop at vertex " + std::to_string(i));
    adjacency_[i - 1].insert(j);
    adjacency_[j - 1].insert(i);
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(1, n);
  return Graph(n, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i : vertices_.members())
    for (int j : adjacency_[i - 1].members())
      if (i < j) out.emplace_back(i, j);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v : vertices_.members()) twice += adjacency_[v - 1].size();
  return twice / 2;
}

bool Graph::is_connected() const { return connected_components(*this).size() <= 1; }

Walk::Walk(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("a walk needs at least one vertex");
  for (int v : vertices_)
    if (v < 1 || v > Graph::kMaxVertices) throw InvalidInput("walk vertex " + std::to_string(v) + " out of range");
}

VertexSet Walk::vertex_set() const {
  VertexSet s;
  for (int v : vertices_) s.insert(v);
  return s;
}

VertexSet Walk::interior() const { return vertex_set().without(VertexSet{start(), end()}); }

bool Walk::is_simple() const { return vertex_set().size() == static_cast<int>(vertices_.size()); }

Walk Walk::inverse() const { return Walk(std::vector<int>(vertices_.rbegin(), vertices_.rend())); }

Graph induced_subgraph(const Graph& g, VertexSet w) {
  for (int v : w.members())
    if (!g.has_vertex(v)) throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
  Graph h = g;
  h.vertices_ = w;
  for (int v = 1; v <= g.n(); ++v)
    h.adjacency_[v - 1] = w.contains(v) ? (g.adjacency_[v - 1] & w) : VertexSet{};
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet component;
    VertexSet frontier{unseen.members().front()};
    while (!frontier.empty()) {
      component = component | frontier;
      VertexSet next;
      for (int v : frontier.members()) next = next | g.neighbors(v);
      frontier = next.without(component);
    }
    out.push_back(component);
    unseen = unseen.without(component);
  }
  return out;
}

std::optional<int> shortest_path_length(const Graph& g, int v, int w) {
  if (!g.has_vertex(v) || !g.has_vertex(w)) throw InvalidInput("shortest_path_length: vertex not in graph");
  VertexSet seen{v};
  VertexSet frontier{v};
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(w)) return d;
    VertexSet next;
    for (int u : frontier.members()) next = next | g.neighbors(u);
    frontier = next.without(seen);
    seen = seen | frontier;
  }
  return std::nullopt;
}

bool is_walk_in(const Graph& g, const Walk& pi) {
  const auto& vs = pi.vertices();
  for (int v : vs)
    if (!g.has_vertex(v)) return false;
  for (std::size_t k = 0; k + 1 < vs.size(); ++k)
    if (!g.adjacent(vs[k], vs[k + 1])) return false;
  return true;
}

namespace {

void require_walk(const Graph& g, const Walk& pi) {
  if (!is_walk_in(g, pi)) throw InvalidInput("sequence is not a walk in the graph");
}

bool connected_within(const Graph& g, VertexSet allowed, int s, int t) {
  if (!allowed.contains(s) || !allowed.contains(t)) return false;
  VertexSet reached{s};
  VertexSet frontier{s};
  while (!frontier.empty()) {
    if (reached.contains(t)) return true;
    VertexSet next;
    for (int u : frontier.members()) next = next | (g.neighbors(u) & allowed);
    frontier = next.without(reached);
    reached = reached | frontier;
  }
  return reached.contains(t);
}

bool weakly_admissible_unchecked(const Graph& g, const Walk& pi) {
  if (!pi.is_simple()) return false;
  const VertexSet span = pi.vertex_set();
  for (int k : pi.interior().members())
    if (connected_within(g, span.without(k), pi.start(), pi.end())) return false;
  return true;
}

void extend_weakly_admissible(const Graph& g, std::vector<int>& prefix, VertexSet used, std::vector<Walk>& out) {
  const int last = prefix.back();
  for (int next : g.neighbors(last).without(used).members()) {
    prefix.push_back(next);
    Walk candidate(prefix);
    // Prefixes of weakly admissible paths are weakly admissible: a shortcut
    // inside a prefix is also a shortcut for the whole path.
    if (weakly_admissible_unchecked(g, candidate)) {
      out.push_back(std::move(candidate));
      VertexSet grown = used;
      grown.insert(next);
      extend_weakly_admissible(g, prefix, grown, out);
    }
    prefix.pop_back();
  }
}

// Breadth-first layer structure over states (vertex, visited interior
// subset, parity) for walks from `start` that stay inside interior + {start, end}.
class SignatureSearch {
public:
  SignatureSearch(const Graph& g, int start, int end, VertexSet interior)
      : g_(g), start_(start), end_(end), interior_(interior), allowed_(interior | VertexSet{start, end}) {
    members_ = interior.members();
    const int k = static_cast<int>(members_.size());
    full_mask_ = (1U << k) - 1;
    bit_of_.assign(g.n() + 1, -1);
    for (int b = 0; b < k; ++b) bit_of_[members_[b]] = b;
    dist_.assign(static_cast<std::size_t>(g.n() + 1) << (k + 1), -1);
  }

  // Runs BFS, stopping early once every state at distance `horizon` is expanded.
  void run(int horizon) {
    std::deque<std::size_t> queue;
    const std::size_t s0 = index(start_, 0, 0);
    dist_[s0] = 0;
    queue.push_back(s0);
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      const int d = dist_[s];
      if (d >= horizon) continue;
      auto [v, mask, parity] = decode(s);
      for (int u : (g_.neighbors(v) & allowed_).members()) {
        const unsigned m = bit_of_[u] >= 0 ? (mask | (1U << bit_of_[u])) : mask;
        const std::size_t t = index(u, m, parity ^ 1);
        if (dist_[t] < 0) {
          dist_[t] = d + 1;
          queue.push_back(t);
        }
      }
    }
  }

  int target_distance(int parity) const { return dist_[index(end_, full_mask_, parity)]; }

  // Every walk of minimum length that ends at the target state.
  void collect_shortest(int parity, std::vector<Walk>& out) const {
    const std::size_t target = index(end_, full_mask_, parity);
    if (dist_[target] < 0) return;
    std::vector<int> reversed{end_};
    collect_back(target, reversed, out);
  }

private:
  std::size_t index(int v, unsigned mask, int parity) const {
    return ((static_cast<std::size_t>(v) << members_.size()) | mask) << 1 | static_cast<std::size_t>(parity);
  }
  std::tuple<int, unsigned, int> decode(std::size_t s) const {
    const int parity = static_cast<int>(s & 1U);
    s >>= 1;
    const unsigned mask = static_cast<unsigned>(s & full_mask_);
    return {static_cast<int>(s >> members_.size()), mask, parity};
  }

  void collect_back(std::size_t s, std::vector<int>& reversed, std::vector<Walk>& out) const {
    const int d = dist_[s];
    if (d == 0) {
      out.emplace_back(std::vector<int>(reversed.rbegin(), reversed.rend()));
      return;
    }
    auto [v, mask, parity] = decode(s);
    std::vector<unsigned> masks{mask};
    if (bit_of_[v] >= 0 && (mask >> bit_of_[v]) & 1U) masks.push_back(mask & ~(1U << bit_of_[v]));
    for (int u : (g_.neighbors(v) & allowed_).members()) {
      // u must already be recorded in any predecessor mask when it is interior.
      for (unsigned pm : masks) {
        if (bit_of_[u] >= 0 && !((pm >> bit_of_[u]) & 1U)) continue;
        const std::size_t p = index(u, pm, parity ^ 1);
        if (dist_[p] != d - 1) continue;
        reversed.push_back(u);
        collect_back(p, reversed, out);
        reversed.pop_back();
      }
    }
  }

  const Graph& g_;
  int start_;
  int end_;
  VertexSet interior_;
  VertexSet allowed_;
  std::vector<int> members_;
  unsigned full_mask_ = 0;
  std::vector<int> bit_of_;
  std::vector<int> dist_;
};

bool parity_shortcut_exists(const Graph& g, int start, int end, VertexSet interior, int parity) {
  const VertexSet span = interior | VertexSet{start, end};
  for (int k : interior.members())
    if (has_walk_with_parity(induced_subgraph(g, span.without(k)), start, end, parity)) return true;
  return false;
}

} // namespace

bool is_weakly_admissible(const Graph& g, const Walk& pi) {
  require_walk(g, pi);
  return weakly_admissible_unchecked(g, pi);
}

bool is_sigma_admissible(const Graph& g, const Permutation& sigma, const Walk& pi) {
  require_walk(g, pi);
  if (sigma.size() != g.n()) throw InvalidInput("permutation size does not match the graph");
  const int i = pi.start();
  const int j = pi.end();
  if (!sigma.precedes(i, j))
    throw InvalidInput("sigma must rank the start vertex " + std::to_string(i) + " before the end vertex " +
                       std::to_string(j));
  if (!weakly_admissible_unchecked(g, pi)) return false;
  for (int k : pi.interior().members())
    if (!(sigma.precedes(k, i) || sigma.precedes(j, k))) return false;
  return true;
}

std::vector<Walk> enumerate_weakly_admissible_paths(const Graph& g) {
  std::vector<Walk> out;
  for (int i : g.vertices().members()) {
    std::vector<int> prefix{i};
    out.emplace_back(prefix);
    extend_weakly_admissible(g, prefix, VertexSet{i}, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_walk_with_parity(const Graph& g, int start, int end, int parity) {
  if (!g.has_vertex(start) || !g.has_vertex(end)) return false;
  // Bipartite double cover: reached[p] holds vertices reachable by a walk of parity p.
  VertexSet reached[2] = {VertexSet{start}, VertexSet{}};
  VertexSet frontier[2] = {VertexSet{start}, VertexSet{}};
  while (!frontier[0].empty() || !frontier[1].empty()) {
    VertexSet next[2];
    for (int p = 0; p < 2; ++p)
      for (int v : frontier[p].members()) next[p ^ 1] = next[p ^ 1] | g.neighbors(v);
    for (int p = 0; p < 2; ++p) {
      frontier[p] = next[p].without(reached[p]);
      reached[p] = reached[p] | frontier[p];
    }
  }
  return reached[parity & 1].contains(end);
}

bool is_minimal_path(const Graph& g, const Walk& pi) {
  require_walk(g, pi);
  const int i = pi.start();
  const int j = pi.end();
  const VertexSet interior = pi.interior();
  if (parity_shortcut_exists(g, i, j, interior, pi.parity())) return false;
  SignatureSearch search(g, i, j, interior);
  search.run(pi.length());
  return search.target_distance(pi.parity()) == pi.length();
}

MinimalPathEnumeration enumerate_minimal_paths(const Graph& g, int length_bound) {
  if (length_bound < 1) throw InvalidInput("length bound must be at least 1");
  MinimalPathEnumeration result;
  result.length_bound = length_bound;
  const auto vertices = g.vertices().members();
  for (int i : vertices) {
    for (int j : vertices) {
      const VertexSet rest = g.vertices().without(VertexSet{i, j});
      // Enumerate every subset of `rest` as an interior candidate.
      const std::uint64_t rest_bits = rest.bits();
      std::uint64_t sub = 0;
      do {
        const VertexSet interior(sub);
        SignatureSearch search(g, i, j, interior);
        bool searched = false;
        for (int parity = 0; parity < 2; ++parity) {
          if (parity_shortcut_exists(g, i, j, interior, parity)) continue;
          if (!searched) {
            search.run(1 << 30);
            searched = true;
          }
          const int d = search.target_distance(parity);
          if (d < 0) continue;
          std::vector<Walk> walks;
          search.collect_shortest(parity, walks);
          result.longest_minimal_length = std::max(result.longest_minimal_length, d);
          if (d > length_bound) {
            result.omitted += static_cast<int>(walks.size());
            continue;
          }
          for (auto& w : walks) result.walks.push_back(std::move(w));
        }
        sub = (sub - rest_bits) & rest_bits;
      } while (sub != 0);
    }
  }
  std::sort(result.walks.begin(), result.walks.end());
  return result;
}

} // namespace edgebasis
