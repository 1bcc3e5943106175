// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "edgebasis/cli.hpp"
#include "edgebasis/complete_graph.hpp"
#include "edgebasis/edge_ideals.hpp"
#include "edgebasis/graver.hpp"
#include "edgebasis/groebner.hpp"
#include "edgebasis/io.hpp"
#include "oracles.hpp"

using namespace edgebasis;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail = what;
    ok = false;
  }
};

const std::string kExampleEdges = "1-2,1-3,2-3,2-4";

Graph example_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}); }

std::vector<Walk> with_inverses(const std::vector<Walk>& walks) {
  std::vector<Walk> out;
  for (const Walk& w : walks) {
    out.push_back(w);
    if (w.length() > 0) out.push_back(w.inverse());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json run_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  try {
    return Json::parse(out.str());
  } catch (const Json::exception&) {
    return Json();
  }
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

std::vector<int> random_positions(std::mt19937& rng, int n) {
  std::vector<int> l;
  for (int p = 1; p <= n; ++p)
    if (rng() % 2) l.push_back(p);
  return l;
}

std::vector<std::vector<int>> all_position_sets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> l;
    for (int p = 1; p <= n; ++p)
      if (mask >> (p - 1) & 1u) l.push_back(p);
    out.push_back(l);
  }
  return out;
}

// Sets produced by criteria 3 and 8, reused by the property suite.
struct Instance {
  std::string label;
  std::vector<Binomial> s_set;
  std::vector<Binomial> graver;
  std::vector<Binomial> ugb;
};
std::vector<Instance> g_instances;

Outcome example_bei() {
  Outcome o;
  int code = 0;
  const Json j = run_json({"sset", "--edges", kExampleEdges, "--kind", "bei", "--format", "json"}, code);
  o.require(code == kExitPass, "sset exited " + std::to_string(code));
  o.require(j.is_object() && j["count"] == 16, "expected 16 binomials, got " + j.value("count", Json()).dump());
  const std::vector<Walk> listed{{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 2, 4}, {3, 2, 4}};
  o.require(enumerate_weakly_admissible_paths(example_graph()) == with_inverses(listed),
            "weakly admissible paths differ from the 10 listed plus inverses");
  if (o.ok) o.detail = "|S| = 16 from 10 listed paths plus inverses";
  return o;
}

Outcome example_pbei() {
  Outcome o;
  int code = 0;
  const Json j = run_json({"sset", "--edges", kExampleEdges, "--kind", "pbei", "--format", "json"}, code);
  o.require(code == kExitPass, "sset exited " + std::to_string(code));
  o.require(j.is_object() && j["count"] == 92, "expected 92 binomials, got " + j.value("count", Json()).dump());
  o.require(j.is_object() && j["omitted"] == 0, "minimal walks were omitted by the length bound");
  const std::vector<Walk> listed{{1},          {2},          {3},          {4},          {1, 2},
                                 {1, 3},       {2, 3},       {2, 4},       {1, 2, 3},    {1, 2, 4},
                                 {1, 3, 2},    {2, 1, 3},    {3, 2, 4},    {1, 2, 3, 1}, {1, 3, 2, 4},
                                 {2, 1, 3, 2}, {3, 1, 2, 3}, {3, 1, 2, 4}, {2, 1, 3, 2, 4}, {2, 3, 1, 2, 4},
                                 {4, 2, 1, 3, 2, 4}};
  const auto minimal = enumerate_minimal_paths(example_graph(), 2 * 4);
  o.require(minimal.walks == with_inverses(listed), "minimal walks differ from the 21 listed plus inverses");
  if (o.ok) o.detail = "|S| = 92 from 21 listed minimal walks plus inverses";
  return o;
}

Outcome main_theorem_bei() {
  Outcome o;
  int graphs = 0;
  for (const Graph& g : oracle::connected_graphs(4)) {
    const IdealSpec spec{g, IdealKind::Bei};
    const auto s = s_set_bei(g);
    const auto graver = graver_basis(spec, g.n() + 1, jobs()).elements;
    std::vector<LexOrder> orders;
    for (const Permutation& sigma : Permutation::all(g.n())) orders.emplace_back(sigma, std::vector<int>{});
    const auto ugb = ugb_lex_family(spec, orders, jobs());
    o.require(s == graver, "S != Graver on " + graph_label(g));
    o.require(s == ugb, "S != UGB on " + graph_label(g));
    g_instances.push_back({"bei " + graph_label(g), s, graver, ugb});
    ++graphs;
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs, zero violations";
  return o;
}

Outcome closed_form_bei() {
  Outcome o;
  int comparisons = 0;
  auto compare = [&](const Graph& g, const Permutation& sigma) {
    const bool same = canonical(closed_form_gb_bei(g, sigma)) ==
                      buchberger(generators({g, IdealKind::Bei}), LexOrder(sigma, {}));
    o.require(same, "mismatch on " + graph_label(g));
    ++comparisons;
  };
  for (const Graph& g : oracle::connected_graphs(4))
    for (const Permutation& sigma : Permutation::all(g.n())) compare(g, sigma);
  std::mt19937 rng(5);
  for (const Graph& g : oracle::connected_graphs(5)) {
    if (g.n() != 5) continue;
    for (int k = 0; k < 20; ++k) compare(g, random_permutation(rng, 5));
  }
  if (o.ok) o.detail = std::to_string(comparisons) + " (graph, order) pairs";
  return o;
}

Outcome kn_parity() {
  Outcome o;
  int comparisons = 0;
  auto compare = [&](int n, const LexOrder& order) {
    const bool same =
        lambda_basis(SignedOrderContext(order)) == buchberger(generators({Graph::complete(n), IdealKind::Pbei}), order);
    o.require(same, "mismatch on K_" + std::to_string(n));
    ++comparisons;
  };
  for (int n = 2; n <= 4; ++n)
    for (const Permutation& sigma : Permutation::all(n))
      for (const auto& l : all_position_sets(n)) compare(n, LexOrder(sigma, l));
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) compare(5, LexOrder(random_permutation(rng, 5), random_positions(rng, 5)));
  if (o.ok) o.detail = std::to_string(comparisons) + " orders";
  return o;
}

Outcome kn_normal_forms() {
  Outcome o;
  long monomials = 0;
  for (int n = 2; n <= 4; ++n) {
    const LexOrder id = LexOrder::standard(n);
    const auto basis = buchberger(generators({Graph::complete(n), IdealKind::Pbei}), id);
    for (int d = 0; d <= 6; ++d)
      for (const Monomial& m : oracle::monomials_of_degree(n, d)) {
        o.require(normal_form_kn(m) == normal_form(m, basis), "mismatch at " + to_string(m));
        ++monomials;
      }
  }
  if (o.ok) o.detail = std::to_string(monomials) + " monomials";
  return o;
}

Outcome membership_lemma() {
  Outcome o;
  const std::vector<Graph> corpus{example_graph(),
                                  Graph::path(4),
                                  Graph::cycle(4),
                                  Graph::complete(4),
                                  Graph::cycle(5),
                                  Graph::path(5),
                                  Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}),
                                  Graph(5, {{1, 2}, {3, 4}, {4, 5}}),
                                  Graph(4, {{1, 2}, {2, 3}, {1, 3}}),
                                  Graph(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}})};
  std::mt19937 rng(11);
  long members = 0;
  for (const Graph& g : corpus) {
    const LexOrder id = LexOrder::standard(g.n());
    const auto basis = buchberger(generators({g, IdealKind::Bei}), id);
    int tested = 0;
    while (tested < 1000) {
      const auto f = oracle::random_homogeneous(rng, g.n(), 2 + tested % 5, IdealKind::Bei);
      if (!f) continue;
      const bool expected = in_ideal(*f, basis, id);
      o.require(membership_bei(g, *f) == expected, "disagreement on " + to_string(*f) + " in " + graph_label(g));
      members += expected;
      ++tested;
    }
  }
  if (o.ok) o.detail = "10000 binomials, " + std::to_string(members) + " members";
  return o;
}

Outcome pbei_replication() {
  Outcome o;
  int graphs = 0;
  for (const Graph& g : oracle::connected_graphs(4)) {
    int code = 0;
    std::vector<std::string> args{"check", "--kind", "pbei", "--format", "json", "--jobs", std::to_string(jobs())};
    if (g.edge_count() > 0) {
      std::string edges;
      for (const auto& [a, b] : g.edges()) edges += (edges.empty() ? "" : ",") + std::to_string(a) + "-" + std::to_string(b);
      args.insert(args.end(), {"--edges", edges});
    } else {
      args.insert(args.end(), {"--complete", "1"});
    }
    const Json j = run_json(args, code);
    const std::string label = graph_label(g);
    o.require(code == kExitPass, "check exited " + std::to_string(code) + " on " + label);
    if (!j.is_object()) continue;
    const BasisReport r = report_from_json(j);
    o.require(r.passed() && r.all_equal(), "sets differ on " + label);
    o.require(r.graph == label, "report is for " + r.graph + ", expected " + label);
    g_instances.push_back({"pbei " + label, r.s_set, r.graver, r.ugb});
    ++graphs;
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs, all three sets equal";
  return o;
}

Outcome property_suite() {
  Outcome o;
  long events = 0;
  std::mt19937 rng(13);
  std::vector<IdealSpec> specs;
  for (const Graph& g : {example_graph(), Graph::cycle(4), Graph::complete(4), Graph::cycle(5)})
    for (IdealKind kind : {IdealKind::Bei, IdealKind::Pbei}) specs.push_back({g, kind});
  for (const IdealSpec& spec : specs) {
    const int n = spec.graph.n();
    const auto gens = generators(spec);
    for (int k = 0; k < 6; ++k) {
      const LexOrder order = k == 0 ? LexOrder::standard(n) : LexOrder(random_permutation(rng, n), random_positions(rng, n));
      const auto basis = buchberger(gens, order, [&](const CompletionEvent& e) {
        ++events;
        if (e.kind != CompletionEvent::Kind::SPolynomial) return;
        const oracle::Poly generic = oracle::spoly(*e.first, *e.second, order);
        std::size_t terms = 0;
        for (const auto& [m, c] : generic)
          if (c != 0) ++terms;
        o.require(terms <= 2, "non-binomial S-polynomial in " + graph_label(spec.graph));
        o.require(oracle::poly(*e.value) == generic, "S-polynomial differs from the generic one");
      });
      for (int t = 0; t < 50; ++t) {
        const auto f = oracle::random_homogeneous(rng, n, 2 + t % 4, spec.kind);
        if (!f) continue;
        const BinomialOrZero once = reduce(*f, basis, order);
        o.require(reduce(once, basis, order) == once, "reduce is not idempotent on " + to_string(*f));
        const Monomial nf = normal_form(f->lead(), basis);
        o.require(normal_form(nf, basis) == nf, "normal form is not idempotent");
      }
    }
  }
  for (const Instance& in : g_instances) {
    o.require(is_negation_closed(in.s_set), "S not closed under negation for " + in.label);
    o.require(is_negation_closed(in.graver), "Graver not closed under negation for " + in.label);
    o.require(std::includes(in.graver.begin(), in.graver.end(), in.ugb.begin(), in.ugb.end()),
              "UGB not inside Graver for " + in.label);
  }
  o.require(g_instances.size() == 88, "expected 88 instances from criteria 3 and 8, got " +
                                          std::to_string(g_instances.size()));
  if (o.ok)
    o.detail = std::to_string(events) + " completion events, " + std::to_string(g_instances.size()) + " instances";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example graph, binomial edge ideal count", 1, example_bei},
      {2, "example graph, parity ideal count", 5, example_pbei},
      {3, "S = Graver = UGB for binomial edge ideals, n <= 4", 120, main_theorem_bei},
      {4, "closed-form basis equals Buchberger", 0, closed_form_bei},
      {5, "K_n parity basis equals Buchberger", 0, kn_parity},
      {6, "K_n normal forms equal generic reduction", 0, kn_normal_forms},
      {7, "membership by components equals normal-form membership", 0, membership_lemma},
      {8, "parity ideal check passes on all graphs, n <= 4", 0, pbei_replication},
      {9, "property suite", 0, property_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the time budget";
    }
    failures += !o.ok;
    std::printf("%s %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
