#include <doctest.h>

#include <random>

#include "edgebasis/edge_ideals.hpp"
#include "edgebasis/error.hpp"
#include "edgebasis/groebner.hpp"
#include "oracles.hpp"

using namespace edgebasis;

namespace {

constexpr Letter X = Letter::X;
constexpr Letter Y = Letter::Y;

Monomial mono(int n, std::initializer_list<std::tuple<Letter, int, int>> factors) {
  Monomial m(n);
  for (auto [l, v, e] : factors) m.set(l, v, e);
  return m;
}

std::vector<LexOrder> sample_orders(int n, std::mt19937& rng, int count) {
  std::vector<LexOrder> out{LexOrder::standard(n)};
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (int k = 1; k < count; ++k) {
    std::shuffle(images.begin(), images.end(), rng);
    std::vector<int> l;
    for (int p = 1; p <= n; ++p)
      if (rng() % 2) l.push_back(p);
    out.emplace_back(Permutation(images), l);
  }
  return out;
}

std::vector<IdealSpec> small_specs() {
  std::vector<IdealSpec> out;
  for (const Graph& g : {Graph::complete(3), Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}), Graph::cycle(4), Graph::path(4),
                         Graph::cycle(5)})
    for (IdealKind kind : {IdealKind::Bei, IdealKind::Pbei}) out.push_back({g, kind});
  return out;
}

} // namespace

TEST_CASE("s-polynomial") {
  const LexOrder id = LexOrder::standard(3);
  const Binomial f(mono(3, {{X, 1, 1}, {X, 2, 1}}), mono(3, {{Y, 1, 1}, {Y, 2, 1}}));
  const Binomial g(mono(3, {{X, 1, 1}, {X, 3, 1}}), mono(3, {{Y, 1, 1}, {Y, 3, 1}}));
  // x3 f - x2 g = x2 y1 y3 - x3 y1 y2
  const BinomialOrZero s = spolynomial(f, g, id);
  REQUIRE(s.has_value());
  CHECK(*s == Binomial(mono(3, {{X, 2, 1}, {Y, 1, 1}, {Y, 3, 1}}), mono(3, {{X, 3, 1}, {Y, 1, 1}, {Y, 2, 1}})));
  CHECK(oracle::poly(s) == oracle::spoly(f, g, id));
  CHECK_FALSE(spolynomial(f, f, id).has_value());
  CHECK_THROWS_AS(spolynomial(f.negated(), g, id), InvalidInput);
}

TEST_CASE("reduction basics") {
  const LexOrder id = LexOrder::standard(2);
  const Binomial gen(mono(2, {{X, 1, 1}, {Y, 2, 1}}), mono(2, {{X, 2, 1}, {Y, 1, 1}}));
  const std::vector<Binomial> basis{gen};
  CHECK_FALSE(reduce(gen, basis, id).has_value());
  CHECK(reduce(gen, {}, id) == BinomialOrZero(gen));
  CHECK(buchberger(basis, id) == basis);
  CHECK(normal_form(mono(2, {{X, 1, 2}, {Y, 2, 1}}), basis) == mono(2, {{X, 1, 1}, {X, 2, 1}, {Y, 1, 1}}));
  CHECK_FALSE(reduce(std::nullopt, basis, id).has_value());
}

TEST_CASE("completion never leaves the binomial shape") {
  std::mt19937 rng(11);
  int events = 0;
  for (const IdealSpec& spec : small_specs()) {
    const auto gens = generators(spec);
    for (const LexOrder& order : sample_orders(spec.graph.n(), rng, 4)) {
      buchberger(gens, order, [&](const CompletionEvent& e) {
        ++events;
        if (e.kind == CompletionEvent::Kind::SPolynomial) {
          // the generic integer computation has at most two terms, coefficients +-1
          const oracle::Poly p = oracle::spoly(*e.first, *e.second, order);
          CHECK(p.size() <= 2);
          for (const auto& [t, c] : p) CHECK((c == 1 || c == -1));
          CHECK(oracle::poly(*e.value) == p);
        } else if (e.value->has_value()) {
          CHECK(oracle::connected_in_fiber(**e.value, gens));
        }
      });
    }
  }
  CHECK(events > 1000);
}

TEST_CASE("reduced basis properties") {
  std::mt19937 rng(5);
  for (const IdealSpec& spec : small_specs()) {
    const auto gens = generators(spec);
    for (const LexOrder& order : sample_orders(spec.graph.n(), rng, 3)) {
      const auto gb = buchberger(gens, order);
      CHECK(is_reduced_basis(gb, order));
      CHECK(std::is_sorted(gb.begin(), gb.end()));
      for (const Binomial& f : gb) {
        CHECK(initial_monomial(order, f) == f.lead());
        CHECK(oracle::connected_in_fiber(f, gens));
      }
      for (const Binomial& g : gens) CHECK_FALSE(reduce(g, gb, order).has_value());
    }
  }
}

TEST_CASE("reduce is idempotent and keeps multidegrees") {
  std::mt19937 rng(17);
  for (const IdealSpec& spec : small_specs()) {
    const int n = spec.graph.n();
    const LexOrder order = sample_orders(n, rng, 2).back();
    const auto gb = buchberger(generators(spec), order);
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = oracle::random_homogeneous(rng, n, 2 + trial % 4, spec.kind);
      if (!f) continue;
      const BinomialOrZero once = reduce(*f, gb, order);
      CHECK(reduce(once, gb, order) == once);
      if (!once) continue;
      if (spec.kind == IdealKind::Bei) {
        CHECK(mdeg_bei(once->lead()) == mdeg_bei(f->lead()));
        CHECK(mdeg_bei(once->trail()) == mdeg_bei(f->lead()));
      } else {
        CHECK(mdeg_pbei(once->lead()) == mdeg_pbei(f->lead()));
        CHECK(mdeg_pbei(once->trail()) == mdeg_pbei(f->lead()));
      }
    }
  }
}

TEST_CASE("membership is order independent") {
  std::mt19937 rng(23);
  for (const IdealSpec& spec : small_specs()) {
    const int n = spec.graph.n();
    const auto gens = generators(spec);
    std::vector<std::pair<LexOrder, std::vector<Binomial>>> bases;
    for (const LexOrder& order : sample_orders(n, rng, 4)) bases.emplace_back(order, buchberger(gens, order));
    for (int trial = 0; trial < 60; ++trial) {
      const auto f = oracle::random_homogeneous(rng, n, 2 + trial % 3, spec.kind);
      if (!f) continue;
      const bool expected = oracle::connected_in_fiber(*f, gens);
      for (const auto& [order, gb] : bases) CHECK(in_ideal(*f, gb, order) == expected);
    }
  }
}
