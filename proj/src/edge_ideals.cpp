#include "edgebasis/edge_ideals.hpp"

#include <algorithm>
#include <cctype>

#include "edgebasis/error.hpp"

namespace edgebasis {

std::string to_string(IdealKind kind) { return kind == IdealKind::Bei ? "bei" : "pbei"; }

IdealKind parse_ideal_kind(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "bei") return IdealKind::Bei;
  if (lower == "pbei") return IdealKind::Pbei;
  throw InvalidInput("unknown ideal kind '" + text + "' (expected bei or pbei)");
}

namespace {

Monomial term(int n, std::initializer_list<std::pair<Letter, int>> factors) {
  Monomial m(n);
  for (auto [letter, v] : factors) m.set(letter, v, m.exponent(letter, v) + 1);
  return m;
}

// x_i y_j and x_j y_i
std::pair<Monomial, Monomial> mixed_terms(int n, int i, int j) {
  return {term(n, {{Letter::X, i}, {Letter::Y, j}}), term(n, {{Letter::X, j}, {Letter::Y, i}})};
}

void require_walk(const Graph& g, const Walk& pi) {
  if (!is_walk_in(g, pi)) throw InvalidInput("sequence is not a walk in the graph");
}

void collect_sigma_admissible(const Graph& g, const Permutation& sigma, int i, int j, std::vector<int>& prefix,
                              VertexSet used, std::vector<Walk>& out) {
  const int last = prefix.back();
  for (int next : g.neighbors(last).without(used).members()) {
    // Interior vertices must sit outside the sigma-interval [i, j].
    if (next != j && !(sigma.precedes(next, i) || sigma.precedes(j, next))) continue;
    prefix.push_back(next);
    Walk candidate(prefix);
    if (is_weakly_admissible(g, candidate)) {
      if (next == j) {
        out.push_back(candidate);
      } else {
        VertexSet grown = used;
        grown.insert(next);
        collect_sigma_admissible(g, sigma, i, j, prefix, grown, out);
      }
    }
    prefix.pop_back();
  }
}

} // namespace

std::vector<Binomial> generators(const IdealSpec& spec) {
  const int n = spec.graph.n();
  std::vector<Binomial> out;
  for (auto [i, j] : spec.graph.edges()) {
    if (spec.kind == IdealKind::Bei) {
      auto [lead, trail] = mixed_terms(n, i, j);
      out.emplace_back(lead, trail);
    } else {
      out.emplace_back(term(n, {{Letter::X, i}, {Letter::X, j}}), term(n, {{Letter::Y, i}, {Letter::Y, j}}));
    }
  }
  return canonical(std::move(out));
}

Monomial interior_product(int n, VertexSet interior, VertexSet x_letters) {
  if (!x_letters.is_subset_of(interior)) throw InvalidInput("letter assignment names a non-interior vertex");
  Monomial t(n);
  for (int k : interior.members()) t.set(x_letters.contains(k) ? Letter::X : Letter::Y, k, 1);
  return t;
}

Monomial u_pi(int n, const Permutation& sigma, const Walk& pi) {
  const int i = pi.start();
  const int j = pi.end();
  if (!sigma.precedes(i, j)) throw InvalidInput("u_pi: sigma must rank the start before the end");
  Monomial u(n);
  for (int k : pi.interior().members()) {
    if (sigma.precedes(k, i))
      u.set(Letter::Y, k, 1);
    else if (sigma.precedes(j, k))
      u.set(Letter::X, k, 1);
    else
      throw InvalidInput("u_pi: interior vertex " + std::to_string(k) + " lies between the endpoints under sigma");
  }
  return u;
}

std::vector<Binomial> closed_form_gb_bei(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.n()) throw InvalidInput("permutation size does not match the graph");
  const int n = g.n();
  std::vector<Binomial> out;
  for (int i : g.vertices().members()) {
    for (int j : g.vertices().members()) {
      if (!sigma.precedes(i, j)) continue;
      std::vector<Walk> paths;
      std::vector<int> prefix{i};
      collect_sigma_admissible(g, sigma, i, j, prefix, VertexSet{i}, paths);
      for (const Walk& pi : paths) {
        const Monomial u = u_pi(n, sigma, pi);
        auto [xi_yj, xj_yi] = mixed_terms(n, i, j);
        out.emplace_back(u * xi_yj, u * xj_yi);
      }
    }
  }
  return canonical(std::move(out));
}

std::vector<Binomial> s_set_bei(const Graph& g) {
  const int n = g.n();
  std::vector<Binomial> out;
  for (const Walk& pi : enumerate_weakly_admissible_paths(g)) {
    if (pi.length() == 0) continue;
    auto [xi_yj, xj_yi] = mixed_terms(n, pi.start(), pi.end());
    const VertexSet interior = pi.interior();
    const std::uint64_t bits = interior.bits();
    std::uint64_t sub = 0;
    do {
      const Monomial t = interior_product(n, interior, VertexSet(sub));
      out.emplace_back(t * xi_yj, t * xj_yi);
      sub = (sub - bits) & bits;
    } while (sub != 0);
  }
  return canonical(std::move(out));
}

BinomialOrZero path_binomial_pbei(int n, const Walk& pi, VertexSet x_letters) {
  const int i = pi.start();
  const int j = pi.end();
  const Monomial t = interior_product(n, pi.interior(), x_letters);
  if (pi.is_odd())
    return make_binomial(t * term(n, {{Letter::X, i}, {Letter::X, j}}), t * term(n, {{Letter::Y, i}, {Letter::Y, j}}));
  return make_binomial(t * term(n, {{Letter::X, i}, {Letter::Y, j}}), t * term(n, {{Letter::Y, i}, {Letter::X, j}}));
}

SSetPbei s_set_pbei(const Graph& g, int length_bound) {
  SSetPbei result{{}, enumerate_minimal_paths(g, length_bound)};
  const int n = g.n();
  for (const Walk& pi : result.paths.walks) {
    const VertexSet interior = pi.interior();
    const std::uint64_t bits = interior.bits();
    std::uint64_t sub = 0;
    do {
      if (BinomialOrZero f = path_binomial_pbei(n, pi, VertexSet(sub))) {
        result.binomials.push_back(*f);
        // Odd walks contribute both sign classes; for even walks the inverse
        // walk supplies the negation.
        if (pi.is_odd()) result.binomials.push_back(f->negated());
      }
      sub = (sub - bits) & bits;
    } while (sub != 0);
  }
  result.binomials = canonical(std::move(result.binomials));
  return result;
}

bool membership_bei(const Graph& g, const Binomial& f) {
  if (f.n() != g.n()) throw InvalidInput("binomial ring does not match the graph");
  if (!is_homogeneous_bei(f))
    throw InvalidInput("membership_bei: binomial is not multi-homogeneous, so it cannot lie in the ideal");
  const Graph support = induced_subgraph(g, f.lead().support());
  for (VertexSet component : connected_components(support))
    if (mdeg_bei(restrict_to(f.lead(), component)) != mdeg_bei(restrict_to(f.trail(), component))) return false;
  return true;
}

Permutation step1_witness_sigma(const Graph& g, const Walk& pi, VertexSet x_letters) {
  require_walk(g, pi);
  if (!pi.is_simple() || pi.length() == 0) throw InvalidInput("witness order needs a simple path of positive length");
  const VertexSet interior = pi.interior();
  if (!x_letters.is_subset_of(interior)) throw InvalidInput("letter assignment names a non-interior vertex");
  std::vector<int> images = interior.without(x_letters).members();
  images.push_back(pi.start());
  images.push_back(pi.end());
  for (int v : x_letters.members()) images.push_back(v);
  const VertexSet placed = pi.vertex_set();
  for (int v = 1; v <= g.n(); ++v)
    if (!placed.contains(v)) images.push_back(v);
  return Permutation(std::move(images));
}

} // namespace edgebasis
