#pragma once

#include <functional>
#include <span>
#include <vector>

#include "edgebasis/monomial.hpp"

namespace edgebasis {

/// lcm/in(f) * f - lcm/in(g) * g for f, g normalized under `order`.
/// Two monic terms cancel at the lcm, so the result is a difference of the
/// two remaining monomials, or zero.
BinomialOrZero spolynomial(const Binomial& f, const Binomial& g, const LexOrder& order);

/// Rewrites m by the first basis element (in the given order) whose lead
/// divides it until no lead divides it. Elements of `basis` must be normalized.
Monomial normal_form(const Monomial& m, std::span<const Binomial> basis);

/// Reduces both terms of f to normal form. Keeps f's orientation; returns zero
/// when the two normal forms meet.
BinomialOrZero reduce(const BinomialOrZero& f, std::span<const Binomial> basis, const LexOrder& order);

/// One entry per intermediate polynomial produced during completion.
struct CompletionEvent {
  enum class Kind { SPolynomial, Remainder };
  Kind kind;
  const Binomial* first;   // the pair the S-polynomial came from
  const Binomial* second;
  const BinomialOrZero* value;
};
using CompletionTrace = std::function<void(const CompletionEvent&)>;

/// Buchberger completion with the normal selection strategy (smallest lcm
/// first) and the coprime-lead criterion, followed by minimization and
/// inter-reduction. Returns the reduced Groebner basis, every element
/// normalized, sorted by (lead, trail).
std::vector<Binomial> buchberger(std::span<const Binomial> generators, const LexOrder& order,
                                 const CompletionTrace& trace = {});

/// True when no lead of the basis divides a term of another element and
/// every lead is the initial monomial of its element.
bool is_reduced_basis(std::span<const Binomial> basis, const LexOrder& order);

/// f in the ideal generated by a Groebner basis.
bool in_ideal(const Binomial& f, std::span<const Binomial> groebner_basis, const LexOrder& order);

} // namespace edgebasis
