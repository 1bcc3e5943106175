#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgebasis/edge_ideals.hpp"
#include "edgebasis/monomial.hpp"

namespace edgebasis {

/// Primitive binomials of an ideal up to a degree bound. Complete only up to
/// `degree_bound`: no algorithm bounds the Graver degree of these ideals.
struct GraverBasis {
  std::vector<Binomial> elements;          // canonical order, closed under negation
  int degree_bound = 0;
  std::vector<std::int64_t> by_degree;     // by_degree[d] = primitive elements of degree d
  std::int64_t ideal_binomials = 0;        // ordered pairs in the ideal that were examined
};

/// Every lead - trail in the ideal with both terms of degree <= degree_bound.
/// Terms are paired only inside a multidegree fiber; membership is decided by
/// normal forms modulo the reduced basis for (id, {}).
std::vector<Binomial> enumerate_ideal_binomials(const IdealSpec& spec, int degree_bound);

/// No other nonzero ideal binomial u' - v' has u' | lead and v' | trail.
/// Throws InvalidInput when f is not in the ideal.
bool is_primitive(const Binomial& f, const IdealSpec& spec);

/// Minimal elements, under termwise divisibility, among the ideal binomials of
/// degree <= degree_bound. `jobs` threads share the work; the result does not
/// depend on it. Limited to n <= 8 and degree_bound <= 127.
GraverBasis graver_basis(const IdealSpec& spec, int degree_bound, int jobs = 1);

/// Default (sigma, L) grid: all sigma for n <= 5 (otherwise 200 seeded
/// samples); L = {} for bei, every L for pbei.
std::vector<LexOrder> default_order_grid(const IdealSpec& spec);

/// Union of reduced Groebner bases over the given orders. A lower bound for the
/// universal Groebner basis, which ranges over all monomial orders.
std::vector<Binomial> ugb_lex_family(const IdealSpec& spec, std::span<const LexOrder> orders, int jobs = 1);

int default_length_bound(const Graph& g);
int default_degree_bound(const IdealSpec& spec, int length_bound);

struct Witness {
  std::string relation;
  Binomial element;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of comparing the path-built set S, the Graver oracle and the
/// lex-family UGB for one ideal.
struct BasisReport {
  std::string graph;
  IdealKind kind = IdealKind::Bei;
  int degree_bound = 0;
  std::optional<int> length_bound;        // pbei only
  bool connected = true;
  int order_count = 0;
  int longest_minimal_path = 0;           // pbei only
  int minimal_paths_omitted = 0;          // pbei only; nonzero means S is truncated
  std::vector<Binomial> s_set;
  std::vector<Binomial> graver;
  std::vector<Binomial> ugb;
  std::vector<Binomial> degree_sufficiency_extra;  // primitives of degree degree_bound + 1
  bool s_equals_graver = false;
  bool ugb_subset_s = false;
  bool s_subset_ugb = false;
  bool ugb_subset_graver = false;
  std::vector<Witness> witnesses;

  bool all_equal() const { return s_equals_graver && ugb_subset_s && s_subset_ugb; }
  bool passed() const { return all_equal() && ugb_subset_graver; }

  friend bool operator==(const BasisReport&, const BasisReport&) = default;
};

/// Recomputes verdicts and witnesses from the stored sets.
void recompute_verdicts(BasisReport& report);

std::string graph_label(const Graph& g);

struct CheckOptions {
  std::optional<int> degree_bound;
  std::optional<int> length_bound;
  int jobs = 1;
};

BasisReport check(const IdealSpec& spec, const CheckOptions& options = {});

} // namespace edgebasis
