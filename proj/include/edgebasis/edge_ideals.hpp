#pragma once

#include <string>
#include <vector>

#include "edgebasis/graph.hpp"
#include "edgebasis/monomial.hpp"

namespace edgebasis {

enum class IdealKind { Bei, Pbei };

std::string to_string(IdealKind kind);
/// Accepts "bei" / "pbei" (case-insensitive).
IdealKind parse_ideal_kind(const std::string& text);

/// The binomial edge ideal (x_i y_j - x_j y_i per edge) or the parity binomial
/// edge ideal (x_i x_j - y_i y_j per edge) of a graph.
struct IdealSpec {
  Graph graph;
  IdealKind kind = IdealKind::Bei;
};

/// One generator per edge {i, j}, i < j, in canonical order.
std::vector<Binomial> generators(const IdealSpec& spec);

/// prod_{k in interior} t_k with t_k = x_k for k in x_letters, y_k otherwise.
Monomial interior_product(int n, VertexSet interior, VertexSet x_letters);

/// The monomial multiplier of a sigma-admissible path: y_k for interior
/// vertices ranked before the start, x_k for those ranked after the end.
Monomial u_pi(int n, const Permutation& sigma, const Walk& pi);

/// { u_pi (x_i y_j - x_j y_i) : pi a sigma-admissible (i, j)-path, i before j }.
/// Each element is written lead-first for the order (sigma, L = {}).
std::vector<Binomial> closed_form_gb_bei(const Graph& g, const Permutation& sigma);

/// Union over weakly admissible (i, j)-paths, i != j, of
/// t (x_i y_j - x_j y_i) for every interior letter assignment t.
std::vector<Binomial> s_set_bei(const Graph& g);

/// (x_i x_j - y_i y_j) t for odd walks, (x_i y_j - y_i x_j) t for even walks,
/// with t the interior product. Zero for an even closed walk.
BinomialOrZero path_binomial_pbei(int n, const Walk& pi, VertexSet x_letters);

struct SSetPbei {
  std::vector<Binomial> binomials;
  MinimalPathEnumeration paths;
};

/// Union over minimal walks (up to length_bound) of their binomial families:
/// both signs for odd walks, the single even family otherwise.
SSetPbei s_set_pbei(const Graph& g, int length_bound);

/// Component criterion for the binomial edge ideal: a multi-homogeneous f lies
/// in J_G iff its terms have equal multidegree on every connected component of
/// G restricted to the support of the lead. Throws InvalidInput when f is not
/// multi-homogeneous.
bool membership_bei(const Graph& g, const Binomial& f);

/// A permutation under which t (x_i y_j - x_j y_i) is a closed-form basis
/// element: y-assigned interior vertices, then i, then j, then x-assigned
/// interior vertices, then everything else (each block ascending).
Permutation step1_witness_sigma(const Graph& g, const Walk& pi, VertexSet x_letters);

} // namespace edgebasis
