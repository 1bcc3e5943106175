#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "edgebasis/graph.hpp"
#include "edgebasis/permutation.hpp"

namespace edgebasis {

/// Letter of a variable: every vertex i carries the pair x_i, y_i.
enum class Letter : std::uint8_t { X, Y };

/// Index into the 2n variables: x_1..x_n occupy 0..n-1, y_1..y_n occupy n..2n-1.
inline int variable_index(int n, Letter letter, int vertex) {
  return (letter == Letter::X ? 0 : n) + vertex - 1;
}

/// Monomial x_1^{d_1} y_1^{e_1} ... x_n^{d_n} y_n^{e_n}.
class Monomial {
public:
  Monomial() = default;
  /// The unit monomial of the ring in 2n variables.
  explicit Monomial(int n) : n_(n), exps_(2 * static_cast<std::size_t>(n), 0) {}
  Monomial(std::vector<int> xexp, std::vector<int> yexp);

  static Monomial variable(int n, Letter letter, int vertex);

  int n() const { return n_; }
  int x(int vertex) const { return exps_[vertex - 1]; }
  int y(int vertex) const { return exps_[n_ + vertex - 1]; }
  int exponent(Letter letter, int vertex) const { return exps_[variable_index(n_, letter, vertex)]; }
  int exponent(int var) const { return exps_[var]; }
  void set(Letter letter, int vertex, int e) { exps_[variable_index(n_, letter, vertex)] = e; }

  std::vector<int> xexp() const { return {exps_.begin(), exps_.begin() + n_}; }
  std::vector<int> yexp() const { return {exps_.begin() + n_, exps_.end()}; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  int x_degree() const;
  int y_degree() const;
  bool is_one() const;

  /// V(m): vertices carrying a nonzero x- or y-exponent.
  VertexSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws InvalidInput unless divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial& operator*=(const Monomial& other);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Exponent-vector lexicographic comparison (x block then y block); used for
  /// canonical sorting, not as a monomial order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
  int n_ = 0;
  std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Keeps exponents on vertices of w; zero elsewhere.
Monomial restrict_to(const Monomial& m, VertexSet w);

/// lead - trail with distinct monic monomials. The zero polynomial is never a
/// Binomial; see BinomialOrZero.
class Binomial {
public:
  Binomial() = default;
  Binomial(Monomial lead, Monomial trail);

  const Monomial& lead() const { return lead_; }
  const Monomial& trail() const { return trail_; }
  int n() const { return lead_.n(); }
  int degree() const;

  Binomial negated() const { return Binomial(trail_, lead_); }
  /// Product of both terms by m.
  Binomial operator*(const Monomial& m) const { return Binomial(lead_ * m, trail_ * m); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial& a, const Binomial& b) {
    if (auto c = a.lead_ <=> b.lead_; c != 0) return c;
    return a.trail_ <=> b.trail_;
  }

private:
  Monomial lead_;
  Monomial trail_;
};

using BinomialOrZero = std::optional<Binomial>;

/// Builds lead - trail, or zero when the monomials coincide.
BinomialOrZero make_binomial(Monomial lead, Monomial trail);

/// Sorts by (lead, trail) exponent vectors and drops duplicates.
std::vector<Binomial> canonical(std::vector<Binomial> set);
bool is_negation_closed(const std::vector<Binomial>& canonical_set);

/// Lexicographic order on the 2n variables determined by a permutation sigma
/// and a set L of priority positions:
///   t_{sigma(1)} > ... > t_{sigma(n)} > t'_{sigma(1)} > ... > t'_{sigma(n)}
/// with (t, t') = (x, y) at positions outside L and (y, x) at positions in L.
class LexOrder {
public:
  LexOrder() = default;
  LexOrder(Permutation sigma, std::vector<int> positions_in_l);

  static LexOrder standard(int n) { return LexOrder(Permutation::identity(n), {}); }

  int n() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  /// Sorted 1-based priority positions.
  const std::vector<int>& positions_in_l() const { return l_positions_; }
  bool position_in_l(int position) const { return l_mask_.contains(position); }
  /// sigma^{-1}(v) in L.
  bool vertex_flipped(int v) const { return position_in_l(sigma_.position(v)); }

  /// Variable indices from highest to lowest priority.
  const std::vector<int>& priority() const { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const LexOrder& a, const LexOrder& b) {
    return a.sigma_ == b.sigma_ && a.l_positions_ == b.l_positions_;
  }

private:
  Permutation sigma_;
  std::vector<int> l_positions_;
  VertexSet l_mask_;
  std::vector<int> priority_;
};

/// The larger term of f under the order.
const Monomial& initial_monomial(const LexOrder& order, const Binomial& f);
/// Reorients f so that its lead is the initial monomial.
Binomial normalize(const LexOrder& order, const Binomial& f);

/// N^2 x N^n grading: (x-degree, y-degree) and per-vertex degree.
struct MultidegreeBei {
  int x_total = 0;
  int y_total = 0;
  std::vector<int> vertex;
  friend bool operator==(const MultidegreeBei&, const MultidegreeBei&) = default;
};

/// Z_2^2 x N^n grading: letter degrees mod 2 and per-vertex degree.
struct MultidegreePbei {
  int x_bit = 0;
  int y_bit = 0;
  std::vector<int> vertex;
  friend bool operator==(const MultidegreePbei&, const MultidegreePbei&) = default;
};

MultidegreeBei mdeg_bei(const Monomial& m);
MultidegreePbei mdeg_pbei(const Monomial& m);
bool is_homogeneous_bei(const Binomial& f);
bool is_homogeneous_pbei(const Binomial& f);

} // namespace edgebasis
