#pragma once

#include <vector>

#include "edgebasis/monomial.hpp"

namespace edgebasis {

/// Per-vertex sign and letter induced by a (sigma, L) lex order:
/// c_v = +1, r_v = y_v when sigma^{-1}(v) is outside L; c_v = -1, r_v = x_v inside.
class SignedOrderContext {
public:
  explicit SignedOrderContext(LexOrder order) : order_(std::move(order)) {}

  const LexOrder& order() const { return order_; }
  int n() const { return order_.n(); }
  int sign(int v) const { return order_.vertex_flipped(v) ? -1 : 1; }
  Letter r_letter(int v) const { return order_.vertex_flipped(v) ? Letter::X : Letter::Y; }
  Monomial r(int v) const { return Monomial::variable(n(), r_letter(v), v); }
  /// u > v in the vertex ranking (sigma^{-1}(u) < sigma^{-1}(v)).
  bool above(int u, int v) const { return order_.sigma().precedes(u, v); }

private:
  LexOrder order_;
};

/// The excluded triples: c_i (x_i y_j - y_i x_j) r_k with i > k > j and exactly
/// one of i, k flipped by L.
std::vector<Binomial> gamma_set(const SignedOrderContext& ctx);

/// Closed-form reduced Groebner basis of the parity binomial edge ideal of K_n:
///   c_i (x_i x_j - y_i y_j)              for i > j
///   c_i (x_i y_j - y_i x_j) r_k          for i, k > j
///   c_i (x_i^2 - y_i^2) r_k r_l          for k, l > i
/// minus gamma_set. The sign c_i is applied by orientation, so each element
/// is returned with its initial monomial as lead. Requires n >= 2.
std::vector<Binomial> lambda_basis(const SignedOrderContext& ctx);

/// Normal form modulo the K_n basis for sigma = id, L = {}. With k the largest
/// support vertex and gamma the total x-degree: supports above two vertices
/// collapse to prod y_v^{d_v+e_v}, with one x_k swapped in when gamma is odd;
/// supports of at most two vertices {i, j} shift q = min(d_i, d_j) from x to y.
Monomial normal_form_kn(const Monomial& m);

/// Membership in the parity binomial edge ideal of K_n (n = f.n()). Supports
/// above two vertices: multi-homogeneity in Z_2^2 x N^n. Otherwise: the trail
/// is the lead shifted by some nonzero q,
///   x_i^{d_i-q} y_i^{e_i+q} x_j^{d_j-q} y_j^{e_j+q},
/// where nonnegativity of the exponents confines q to [-min(e_i,e_j), min(d_i,d_j)].
bool membership_pbei_kn(const Binomial& f);

struct CoprimeClassification {
  enum class Family {
    PurePlus,    //  x_i^p x_j^q - y_i^p y_j^q
    PureMinus,   //  y_i^p y_j^q - x_i^p x_j^q
    MixedPlus,   //  x_i^p y_j^q - y_i^p x_j^q
    MixedMinus,  //  y_i^p x_j^q - x_i^p y_j^q
  };
  Family family;
  int i;  // smaller support vertex
  int j;
  int p;  // exponent at i
  int q;  // exponent at j
};

/// Identifies the family of a coprime multi-homogeneous binomial supported on
/// two vertices. Throws InvalidInput when the preconditions fail or the
/// binomial fits no family.
CoprimeClassification classify_coprime_two_vertex(const Binomial& f);

} // namespace edgebasis
