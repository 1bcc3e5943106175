#include <doctest.h>

#include <map>

#include "edgebasis/error.hpp"
#include "edgebasis/graver.hpp"
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

Graph fig1() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}); }

// Primitive binomials by fiber components: monomials of each degree are
// joined by generator moves with union-find, and a pair is primitive when no
// other same-component pair divides it termwise.
std::vector<Binomial> brute_graver(const IdealSpec& spec, int degree_bound) {
  const int n = spec.graph.n();
  const auto gens = generators(spec);
  std::map<Monomial, Monomial> parent;
  auto find = [&](Monomial m) {
    while (parent.at(m) != m) m = parent.at(m);
    return m;
  };
  std::vector<Monomial> all;
  for (int d = 0; d <= degree_bound; ++d)
    for (const Monomial& m : oracle::monomials_of_degree(n, d)) {
      parent.emplace(m, m);
      all.push_back(m);
    }
  for (const Monomial& m : all)
    for (const Binomial& g : gens)
      if (g.lead().divides(m)) {
        const Monomial a = find(m);
        const Monomial b = find(m / g.lead() * g.trail());
        if (a != b) parent[a] = b;
      }
  auto divisors = [&](const Monomial& m) {
    std::vector<Monomial> out;
    for (const Monomial& d : all)
      if (d.divides(m)) out.push_back(d);
    return out;
  };
  std::vector<Binomial> out;
  for (int d = 2; d <= degree_bound; ++d) {
    const auto level = oracle::monomials_of_degree(n, d);
    for (const Monomial& u : level)
      for (const Monomial& v : level) {
        if (u == v || find(u) != find(v)) continue;
        bool primitive = true;
        for (const Monomial& du : divisors(u)) {
          for (const Monomial& dv : divisors(v)) {
            if (du == dv || (du == u && dv == v) || du.degree() != dv.degree()) continue;
            if (find(du) == find(dv)) {
              primitive = false;
              break;
            }
          }
          if (!primitive) break;
        }
        if (primitive) out.emplace_back(u, v);
      }
  }
  return canonical(out);
}

} // namespace

TEST_CASE("graver oracle agrees with the union-find oracle") {
  const std::vector<std::pair<IdealSpec, int>> cases{
      {{Graph::complete(2), IdealKind::Bei}, 4},  {{Graph::complete(3), IdealKind::Bei}, 4},
      {{Graph::path(3), IdealKind::Bei}, 4},      {{fig1(), IdealKind::Bei}, 4},
      {{Graph::complete(2), IdealKind::Pbei}, 5}, {{Graph::complete(3), IdealKind::Pbei}, 5},
      {{Graph::path(3), IdealKind::Pbei}, 5},     {{Graph::cycle(4), IdealKind::Bei}, 4},
  };
  for (const auto& [spec, bound] : cases) {
    CAPTURE(graph_label(spec.graph));
    CAPTURE(to_string(spec.kind));
    CHECK(graver_basis(spec, bound).elements == brute_graver(spec, bound));
  }
}

TEST_CASE("graver examples") {
  CHECK(graver_basis({Graph::complete(2), IdealKind::Bei}, 2).elements.size() == 2);
  CHECK(graver_basis({Graph::complete(2), IdealKind::Bei}, 6).elements.size() == 2);
  const GraverBasis bei = graver_basis({fig1(), IdealKind::Bei}, 4);
  CHECK(bei.elements == s_set_bei(fig1()));
  CHECK(bei.elements.size() == 16);
  CHECK(bei.by_degree[2] == 8);
  CHECK(bei.by_degree[3] == 8);
  const GraverBasis pbei = graver_basis({fig1(), IdealKind::Pbei}, 7);
  CHECK(pbei.elements.size() == 92);
  CHECK(pbei.elements == s_set_pbei(fig1(), 8).binomials);
  CHECK(is_negation_closed(pbei.elements));
  CHECK_THROWS_AS(graver_basis({fig1(), IdealKind::Bei}, 1), InvalidInput);
  CHECK_THROWS_AS(graver_basis({Graph::complete(9), IdealKind::Bei}, 3), InvalidInput);
}

TEST_CASE("graver result does not depend on the thread count") {
  const IdealSpec spec{fig1(), IdealKind::Pbei};
  const GraverBasis one = graver_basis(spec, 8, 1);
  const GraverBasis four = graver_basis(spec, 8, 4);
  CHECK(one.elements == four.elements);
  CHECK(one.by_degree == four.by_degree);
  CHECK(one.ideal_binomials == four.ideal_binomials);
}

TEST_CASE("ideal binomials") {
  const IdealSpec k2{Graph::complete(2), IdealKind::Bei};
  const auto gen = generators(k2).front();
  CHECK(enumerate_ideal_binomials(k2, 2) == canonical({gen, gen.negated()}));
  const auto three = enumerate_ideal_binomials(k2, 3);
  CHECK(three.size() == 2 + 2 * 4);  // the generator times each of the four variables, both signs
  for (const Binomial& f : three) CHECK(oracle::connected_in_fiber(f, generators(k2)));

  const IdealSpec p{fig1(), IdealKind::Pbei};
  const auto ideal = enumerate_ideal_binomials(p, 5);
  for (const Binomial& f : s_set_pbei(fig1(), 8).binomials)
    if (f.degree() <= 5) CHECK(std::binary_search(ideal.begin(), ideal.end(), f));
}

TEST_CASE("primitivity") {
  const IdealSpec bei{fig1(), IdealKind::Bei};
  for (const Binomial& g : generators(bei)) {
    CHECK(is_primitive(g, bei));
    CHECK(is_primitive(g.negated(), bei));
  }
  const Binomial x1y2(mono(4, {{X, 1, 1}, {Y, 2, 1}}), mono(4, {{X, 2, 1}, {Y, 1, 1}}));
  CHECK_FALSE(is_primitive(x1y2 * Monomial::variable(4, X, 4), bei));
  const Binomial x1y4(mono(4, {{X, 1, 1}, {Y, 4, 1}}), mono(4, {{X, 4, 1}, {Y, 1, 1}}));
  CHECK(is_primitive(x1y4 * Monomial::variable(4, Y, 2), bei));
  CHECK_THROWS_AS(is_primitive(x1y4, bei), InvalidInput);

  for (const Graph& g : {fig1(), Graph::cycle(4), Graph::complete(4)}) {
    const IdealSpec spec{g, IdealKind::Pbei};
    for (const Binomial& f : s_set_pbei(g, 2 * g.n()).binomials) {
      CHECK(is_primitive(f, spec));
      CHECK(is_primitive(f.negated(), spec) == is_primitive(f, spec));
    }
  }
}

TEST_CASE("order grid and lex-family UGB") {
  CHECK(default_order_grid({fig1(), IdealKind::Bei}).size() == 24);
  CHECK(default_order_grid({Graph::complete(3), IdealKind::Pbei}).size() == 6 * 8);
  const auto big = default_order_grid({Graph::path(6), IdealKind::Bei});
  CHECK(big.size() == 200);
  CHECK(big == default_order_grid({Graph::path(6), IdealKind::Bei}));

  const IdealSpec bei{fig1(), IdealKind::Bei};
  CHECK(ugb_lex_family(bei, default_order_grid(bei)) == s_set_bei(fig1()));
  const IdealSpec k3{Graph::complete(3), IdealKind::Pbei};
  CHECK(ugb_lex_family(k3, default_order_grid(k3)) == s_set_pbei(Graph::complete(3), 6).binomials);
  const std::vector<LexOrder> single{LexOrder(Permutation({3, 1, 2}), {2})};
  CHECK(ugb_lex_family(k3, single) == buchberger(generators(k3), single.front()));
  CHECK(ugb_lex_family(k3, default_order_grid(k3), 3) == ugb_lex_family(k3, default_order_grid(k3), 1));
}

TEST_CASE("check reports") {
  const BasisReport bei = check({fig1(), IdealKind::Bei});
  CHECK(bei.passed());
  CHECK(bei.s_set.size() == 16);
  CHECK(bei.degree_bound == 5);
  CHECK(bei.order_count == 24);
  CHECK(bei.degree_sufficiency_extra.empty());
  CHECK(bei.witnesses.empty());
  CHECK_FALSE(bei.length_bound.has_value());

  const BasisReport pbei = check({fig1(), IdealKind::Pbei}, {.degree_bound = 8, .length_bound = std::nullopt, .jobs = 2});
  CHECK(pbei.passed());
  CHECK(pbei.s_set.size() == 92);
  CHECK(pbei.length_bound == 8);
  CHECK(pbei.longest_minimal_path == 5);
  CHECK(pbei.order_count == 24 * 16);

  BasisReport broken = bei;
  broken.s_set.erase(broken.s_set.begin());
  recompute_verdicts(broken);
  CHECK_FALSE(broken.passed());
  CHECK_FALSE(broken.s_equals_graver);
  CHECK_FALSE(broken.ugb_subset_s);
  CHECK(broken.ugb_subset_graver);
  REQUIRE(broken.witnesses.size() == 2);
  CHECK(broken.witnesses[0].relation == "Graver subset S");
  CHECK(broken.witnesses[0].element == bei.s_set.front());

  BasisReport again = broken;
  recompute_verdicts(again);
  CHECK(again == broken);
}

TEST_CASE("a lowered degree bound is a visible failure") {
  const BasisReport r = check({fig1(), IdealKind::Pbei}, {.degree_bound = 3, .length_bound = std::nullopt, .jobs = 1});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.s_equals_graver);
  CHECK_FALSE(r.degree_sufficiency_extra.empty());
  CHECK_FALSE(r.witnesses.empty());
}
