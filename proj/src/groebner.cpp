#include "edgebasis/groebner.hpp"

#include <algorithm>
#include <queue>

#include "edgebasis/error.hpp"

namespace edgebasis {

BinomialOrZero spolynomial(const Binomial& f, const Binomial& g, const LexOrder& order) {
  if (order.greater(f.trail(), f.lead()) || order.greater(g.trail(), g.lead()))
    throw InvalidInput("spolynomial: arguments must be normalized");
  const Monomial l = lcm(f.lead(), g.lead());
  // (l/a)(a - b) - (l/c)(c - d) = (l/c) d - (l/a) b
  return make_binomial((l / g.lead()) * g.trail(), (l / f.lead()) * f.trail());
}

Monomial normal_form(const Monomial& m, std::span<const Binomial> basis) {
  Monomial current = m;
  for (bool rewritten = true; rewritten;) {
    rewritten = false;
    for (const Binomial& b : basis) {
      if (b.lead().divides(current)) {
        current = (current / b.lead()) * b.trail();
        rewritten = true;
        break;
      }
    }
  }
  return current;
}

BinomialOrZero reduce(const BinomialOrZero& f, std::span<const Binomial> basis, const LexOrder& order) {
  if (!f) return f;
  for (const Binomial& b : basis)
    if (order.greater(b.trail(), b.lead())) throw InvalidInput("reduce: basis element is not normalized");
  return make_binomial(normal_form(f->lead(), basis), normal_form(f->trail(), basis));
}

namespace {

struct PendingPair {
  Monomial lcm;
  std::size_t first;
  std::size_t second;
};

} // namespace

std::vector<Binomial> buchberger(std::span<const Binomial> generators, const LexOrder& order,
                                 const CompletionTrace& trace) {
  std::vector<Binomial> basis;
  for (const Binomial& g : generators) {
    if (g.n() != order.n()) throw InvalidInput("generator ring does not match the order");
    basis.push_back(normalize(order, g));
  }
  basis = canonical(std::move(basis));

  auto later = [&order](const PendingPair& a, const PendingPair& b) {
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c > 0;
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  };
  std::priority_queue<PendingPair, std::vector<PendingPair>, decltype(later)> pairs(later);
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (coprime(basis[i].lead(), basis[k].lead())) continue;
      pairs.push({lcm(basis[i].lead(), basis[k].lead()), i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    const PendingPair p = pairs.top();
    pairs.pop();
    const BinomialOrZero s = spolynomial(basis[p.first], basis[p.second], order);
    if (trace) trace({CompletionEvent::Kind::SPolynomial, &basis[p.first], &basis[p.second], &s});
    BinomialOrZero r = reduce(s, basis, order);
    if (trace) trace({CompletionEvent::Kind::Remainder, &basis[p.first], &basis[p.second], &r});
    if (!r) continue;
    basis.push_back(normalize(order, *r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimize: drop elements whose lead is divisible by another surviving lead.
  std::vector<Binomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t i = 0; i < basis.size() && !redundant; ++i) {
      if (i == k || !basis[i].lead().divides(basis[k].lead())) continue;
      // Equal leads: keep the earliest.
      redundant = basis[i].lead() != basis[k].lead() || i < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }

  // Inter-reduce the trailing terms; leads are already mutually irreducible.
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.size());
  for (const Binomial& g : minimal) {
    Monomial tail = normal_form(g.trail(), minimal);
    if (tail == g.lead()) throw InternalError("inter-reduction collapsed a basis element");
    reduced.emplace_back(g.lead(), std::move(tail));
  }
  return canonical(std::move(reduced));
}

bool is_reduced_basis(std::span<const Binomial> basis, const LexOrder& order) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (order.greater(basis[k].trail(), basis[k].lead())) return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == k) continue;
      if (basis[i].lead().divides(basis[k].lead()) || basis[i].lead().divides(basis[k].trail())) return false;
    }
  }
  return true;
}

bool in_ideal(const Binomial& f, std::span<const Binomial> groebner_basis, const LexOrder& order) {
  return !reduce(f, groebner_basis, order).has_value();
}

} // namespace edgebasis
