#include "edgebasis/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "edgebasis/complete_graph.hpp"
#include "edgebasis/error.hpp"
#include "edgebasis/groebner.hpp"
#include "edgebasis/io.hpp"

namespace edgebasis {

namespace {

struct Options {
  std::string graph_file;
  std::string edges;
  int n = 0;
  int complete = 0;
  std::string kind = "bei";
  std::string format = "text";
  std::vector<int> sigma;
  std::vector<int> l_positions;
  std::optional<int> bound;
  std::optional<int> length_bound;
  int jobs = 1;
  std::string monomial;
  std::string binomial;
  std::string path_class = "weak";
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;
  IdealSpec spec;
  bool json() const { return opt.format == "json"; }
  int n() const { return spec.graph.n(); }
};

Graph graph_from_edge_list(const std::string& text, int n) {
  std::vector<Edge> edges;
  int max_vertex = 0;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidInput("edge '" + item + "' must look like i-j");
    int a = 0;
    int b = 0;
    try {
      a = std::stoi(item.substr(0, dash));
      b = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw InvalidInput("edge '" + item + "' must look like i-j");
    }
    max_vertex = std::max({max_vertex, a, b});
    edges.emplace_back(a, b);
  }
  return Graph(n > 0 ? n : max_vertex, edges);
}

Graph resolve_graph(const Options& opt) {
  const int sources = !opt.graph_file.empty() + !opt.edges.empty() + (opt.complete > 0);
  if (sources != 1) throw InvalidInput("give exactly one of --graph, --edges, --complete");
  if (!opt.graph_file.empty()) return load_graph(opt.graph_file);
  if (opt.complete > 0) return Graph::complete(opt.complete);
  return graph_from_edge_list(opt.edges, opt.n);
}

LexOrder resolve_order(const Context& c) {
  Permutation sigma = c.opt.sigma.empty() ? Permutation::identity(c.n()) : Permutation(c.opt.sigma);
  if (sigma.size() != c.n()) throw InvalidInput("--sigma must list all " + std::to_string(c.n()) + " vertices");
  return LexOrder(std::move(sigma), c.opt.l_positions);
}

bool is_complete_graph(const Graph& g) { return g.n() >= 2 && g.edge_count() == g.n() * (g.n() - 1) / 2; }

int length_bound(const Context& c) {
  const int fallback = default_length_bound(c.spec.graph);
  if (!c.opt.length_bound) return fallback;
  if (*c.opt.length_bound < fallback)
    c.err << "warning: --length-bound " << *c.opt.length_bound << " is below the default " << fallback
          << "; minimal walks may be omitted\n";
  return *c.opt.length_bound;
}

int degree_bound(const Context& c, int lb) {
  const int fallback = default_degree_bound(c.spec, lb);
  if (!c.opt.bound) return fallback;
  if (*c.opt.bound < fallback)
    c.err << "warning: --bound " << *c.opt.bound << " is below the default " << fallback
          << "; Graver elements of higher degree are not searched\n";
  return *c.opt.bound;
}

void warn_if_disconnected(const Context& c) {
  if (!c.spec.graph.is_connected())
    c.err << "warning: graph is disconnected; results are computed per ideal but connectivity is assumed by the "
             "path constructions\n";
}

void print_set(const Context& c, const std::string& label, const std::vector<Binomial>& set, Json extra = Json::object()) {
  if (c.json()) {
    Json j;
    j["graph"] = graph_label(c.spec.graph);
    j["kind"] = to_string(c.spec.kind);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    j["count"] = set.size();
    j["binomials"] = to_json(set);
    c.out << j.dump(2) << "\n";
    return;
  }
  c.out << label << " (" << to_string(c.spec.kind) << ", " << graph_label(c.spec.graph) << "): " << set.size()
        << " binomials\n";
  for (auto it = extra.begin(); it != extra.end(); ++it) c.out << "  " << it.key() << ": " << it.value().dump() << "\n";
  for (const Binomial& f : set) c.out << to_string(f) << "\n";
}

Json walk_list(const std::vector<Walk>& walks) {
  Json j = Json::array();
  for (const Walk& w : walks) j.push_back(w.vertices());
  return j;
}

int cmd_paths(const Context& c) {
  std::vector<Walk> walks;
  Json extra = Json::object();
  if (c.opt.path_class == "weak") {
    walks = enumerate_weakly_admissible_paths(c.spec.graph);
  } else if (c.opt.path_class == "sigma") {
    const LexOrder order = resolve_order(c);
    for (Walk& w : enumerate_weakly_admissible_paths(c.spec.graph))
      if (order.sigma().precedes(w.start(), w.end()) && is_sigma_admissible(c.spec.graph, order.sigma(), w))
        walks.push_back(std::move(w));
  } else if (c.opt.path_class == "minimal") {
    MinimalPathEnumeration e = enumerate_minimal_paths(c.spec.graph, length_bound(c));
    extra["length_bound"] = e.length_bound;
    extra["longest"] = e.longest_minimal_length;
    extra["omitted"] = e.omitted;
    if (e.omitted > 0) c.err << "warning: " << e.omitted << " minimal walks exceed the length bound\n";
    walks = std::move(e.walks);
  } else {
    throw InvalidInput("--class must be weak, sigma or minimal");
  }
  if (c.json()) {
    Json j;
    j["graph"] = graph_label(c.spec.graph);
    j["class"] = c.opt.path_class;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    j["count"] = walks.size();
    j["walks"] = walk_list(walks);
    c.out << j.dump(2) << "\n";
  } else {
    c.out << c.opt.path_class << " paths (" << graph_label(c.spec.graph) << "): " << walks.size() << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it) c.out << "  " << it.key() << ": " << it.value().dump() << "\n";
    for (const Walk& w : walks) c.out << to_string(w) << "\n";
  }
  return kExitPass;
}

int cmd_gens(const Context& c) {
  print_set(c, "generators", generators(c.spec));
  return kExitPass;
}

// The closed-form basis for this ideal and order, when one is known.
std::optional<std::vector<Binomial>> closed_form(const Context& c, const LexOrder& order) {
  if (c.spec.kind == IdealKind::Bei && order.positions_in_l().empty())
    return canonical(closed_form_gb_bei(c.spec.graph, order.sigma()));
  if (c.spec.kind == IdealKind::Pbei && is_complete_graph(c.spec.graph))
    return lambda_basis(SignedOrderContext(order));
  return std::nullopt;
}

int cmd_gb(const Context& c) {
  const LexOrder order = resolve_order(c);
  const std::vector<Binomial> gb = buchberger(generators(c.spec), order);
  const auto expected = closed_form(c, order);
  Json extra = Json::object();
  extra["order"] = {{"sigma", std::vector<int>(order.sigma().images().begin(), order.sigma().images().end())}, {"L", order.positions_in_l()}};
  extra["closed_form_agrees"] = expected ? Json(*expected == gb) : Json(nullptr);
  print_set(c, "reduced Groebner basis", gb, extra);
  if (expected && *expected != gb) {
    c.err << "FAIL: closed-form basis (" << expected->size() << " elements) differs from Buchberger ("
          << gb.size() << " elements)\n";
    for (const Binomial& f : gb)
      if (!std::binary_search(expected->begin(), expected->end(), f)) c.err << "  only in Buchberger: " << to_string(f) << "\n";
    for (const Binomial& f : *expected)
      if (!std::binary_search(gb.begin(), gb.end(), f)) c.err << "  only in closed form: " << to_string(f) << "\n";
    return kExitVerdictFail;
  }
  return kExitPass;
}

int cmd_nf(const Context& c) {
  const LexOrder order = resolve_order(c);
  const std::vector<Binomial> gb = buchberger(generators(c.spec), order);
  if (c.opt.monomial.empty() == c.opt.binomial.empty()) throw InvalidInput("give exactly one of --monomial, --binomial");
  Json j;
  j["graph"] = graph_label(c.spec.graph);
  j["kind"] = to_string(c.spec.kind);
  if (!c.opt.monomial.empty()) {
    const Monomial m = parse_monomial(c.opt.monomial, c.n());
    const Monomial nf = normal_form(m, gb);
    j["input"] = to_string(m);
    j["normal_form"] = to_string(nf);
    const bool closed = c.spec.kind == IdealKind::Pbei && is_complete_graph(c.spec.graph) && order == LexOrder::standard(c.n());
    j["closed_form_agrees"] = closed ? Json(normal_form_kn(m) == nf) : Json(nullptr);
    if (closed && normal_form_kn(m) != nf) {
      c.err << "FAIL: closed-form normal form " << to_string(normal_form_kn(m)) << " differs from reduction "
            << to_string(nf) << "\n";
      c.out << (c.json() ? j.dump(2) : to_string(nf)) << "\n";
      return kExitVerdictFail;
    }
  } else {
    const Binomial f = parse_binomial(c.opt.binomial, c.n());
    const BinomialOrZero r = reduce(f, gb, order);
    j["input"] = to_string(f);
    j["normal_form"] = r ? to_string(*r) : "0";
  }
  if (c.json())
    c.out << j.dump(2) << "\n";
  else
    c.out << j["normal_form"].get<std::string>() << "\n";
  return kExitPass;
}

int cmd_sset(const Context& c) {
  warn_if_disconnected(c);
  if (c.spec.kind == IdealKind::Bei) {
    print_set(c, "S-set", s_set_bei(c.spec.graph));
    return kExitPass;
  }
  const SSetPbei s = s_set_pbei(c.spec.graph, length_bound(c));
  Json extra = Json::object();
  extra["minimal_walks"] = s.paths.walks.size();
  extra["length_bound"] = s.paths.length_bound;
  extra["longest_minimal_walk"] = s.paths.longest_minimal_length;
  extra["omitted"] = s.paths.omitted;
  if (s.paths.omitted > 0) c.err << "warning: " << s.paths.omitted << " minimal walks exceed the length bound; S is truncated\n";
  print_set(c, "S-set", s.binomials, extra);
  return kExitPass;
}

int cmd_graver(const Context& c) {
  const int lb = c.spec.kind == IdealKind::Pbei ? length_bound(c) : default_length_bound(c.spec.graph);
  const GraverBasis g = graver_basis(c.spec, degree_bound(c, lb), c.opt.jobs);
  Json extra = Json::object();
  extra["degree_bound"] = g.degree_bound;
  extra["by_degree"] = g.by_degree;
  extra["ideal_binomials_examined"] = g.ideal_binomials;
  print_set(c, "Graver basis", g.elements, extra);
  return kExitPass;
}

int cmd_ugb(const Context& c) {
  const std::vector<LexOrder> orders = default_order_grid(c.spec);
  Json extra = Json::object();
  extra["orders"] = orders.size();
  print_set(c, "lex-family universal Groebner basis", ugb_lex_family(c.spec, orders, c.opt.jobs), extra);
  return kExitPass;
}

int cmd_member(const Context& c) {
  if (c.opt.binomial.empty()) throw InvalidInput("member needs --binomial");
  const Binomial f = parse_binomial(c.opt.binomial, c.n());
  bool verdict = false;
  std::string rule;
  if (c.spec.kind == IdealKind::Bei) {
    if (!is_homogeneous_bei(f)) {
      rule = "not multi-homogeneous";
    } else {
      verdict = membership_bei(c.spec.graph, f);
      rule = "component multidegree criterion";
    }
  } else if (is_complete_graph(c.spec.graph)) {
    verdict = membership_pbei_kn(f);
    rule = f.lead().support().members().size() > 2 ? "complete graph: multi-homogeneity" : "complete graph: two-vertex shift";
  } else {
    rule = "normal form";
  }
  const LexOrder order = LexOrder::standard(c.n());
  const bool by_reduction = in_ideal(f, buchberger(generators(c.spec), order), order);
  if (rule == "normal form") verdict = by_reduction;
  if (verdict != by_reduction)
    throw InternalError("membership rule '" + rule + "' disagrees with normal-form reduction on " + to_string(f));
  if (c.json()) {
    Json j;
    j["graph"] = graph_label(c.spec.graph);
    j["kind"] = to_string(c.spec.kind);
    j["binomial"] = to_string(f);
    j["member"] = verdict;
    j["rule"] = rule;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << (verdict ? "member" : "not a member") << " (" << rule << ")\n";
  }
  return kExitPass;
}

int cmd_check(const Context& c) {
  warn_if_disconnected(c);
  CheckOptions options;
  options.jobs = c.opt.jobs;
  if (c.spec.kind == IdealKind::Pbei) options.length_bound = length_bound(c);
  options.degree_bound = degree_bound(c, options.length_bound.value_or(default_length_bound(c.spec.graph)));
  const BasisReport r = check(c.spec, options);
  if (c.json()) {
    c.out << to_json(r).dump(2) << "\n";
  } else {
    c.out << "check " << to_string(r.kind) << " " << r.graph << "\n"
          << "  degree bound " << r.degree_bound;
    if (r.length_bound) c.out << ", length bound " << *r.length_bound;
    c.out << ", orders " << r.order_count << "\n"
          << "  |S| = " << r.s_set.size() << ", |Graver| = " << r.graver.size() << ", |UGB| = " << r.ugb.size() << "\n"
          << "  S = Graver: " << (r.s_equals_graver ? "yes" : "no") << "\n"
          << "  UGB in S: " << (r.ugb_subset_s ? "yes" : "no") << "\n"
          << "  S in UGB: " << (r.s_subset_ugb ? "yes" : "no") << "\n"
          << "  UGB in Graver: " << (r.ugb_subset_graver ? "yes" : "no") << "\n";
    if (!r.degree_sufficiency_extra.empty())
      c.out << "  primitive elements of degree " << r.degree_bound + 1 << ": " << r.degree_sufficiency_extra.size() << "\n";
    c.out << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  if (r.minimal_paths_omitted > 0)
    c.err << "warning: " << r.minimal_paths_omitted << " minimal walks exceed the length bound; S is truncated\n";
  if (!r.passed()) {
    c.err << "FAIL: " << to_string(r.kind) << " " << r.graph << "\n";
    for (const Witness& w : r.witnesses) c.err << "  " << w.relation << " fails at " << to_string(w.element) << "\n";
    return kExitVerdictFail;
  }
  return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner, Graver and path-built bases of binomial edge ideals", "edgebasis"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_kind) {
    auto* file = sub->add_option("--graph", opt.graph_file, "Graph file (text or JSON)");
    auto* edges = sub->add_option("--edges", opt.edges, "Edge list such as 1-2,1-3");
    sub->add_option("--n", opt.n, "Vertex count for --edges (default: largest vertex)")->needs(edges);
    auto* complete = sub->add_option("--complete", opt.complete, "Complete graph on N vertices");
    file->excludes(edges)->excludes(complete);
    edges->excludes(complete);
    if (with_kind) sub->add_option("--kind", opt.kind, "bei or pbei")->check(CLI::IsMember({"bei", "pbei"}, CLI::ignore_case));
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_order = [&](CLI::App* sub, bool required) {
    sub->add_option("--sigma", opt.sigma, "Permutation as the image list sigma(1),...,sigma(n)")
        ->delimiter(',')
        ->required(required);
    sub->add_option("--L", opt.l_positions, "Priority positions whose letters are swapped, e.g. 1,3")->delimiter(',');
  };

  auto* paths = app.add_subcommand("paths", "List weakly admissible, sigma-admissible or minimal paths");
  add_common(paths, false);
  add_order(paths, false);
  paths->add_option("--class", opt.path_class, "weak, sigma or minimal")->check(CLI::IsMember({"weak", "sigma", "minimal"}));
  paths->add_option("--length-bound", opt.length_bound, "Longest minimal walk to list");

  auto* gens = app.add_subcommand("gens", "List the edge generators");
  add_common(gens, true);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis for a lex order, compared with the closed form");
  add_common(gb, true);
  add_order(gb, true);

  auto* nf = app.add_subcommand("nf", "Normal form of a monomial or binomial");
  add_common(nf, true);
  add_order(nf, true);
  nf->add_option("--monomial", opt.monomial, "Monomial such as x1*y2^2");
  nf->add_option("--binomial", opt.binomial, "Binomial such as 'x1*y2 - x2*y1'");

  auto* sset = app.add_subcommand("sset", "Path-built set S");
  add_common(sset, true);
  sset->add_option("--length-bound", opt.length_bound, "Longest minimal walk used (pbei)");

  auto* graver = app.add_subcommand("graver", "Primitive binomials up to a degree bound");
  add_common(graver, true);
  graver->add_option("--bound", opt.bound, "Degree bound");
  graver->add_option("--length-bound", opt.length_bound, "Length bound used to derive the default degree bound (pbei)");
  graver->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* ugb = app.add_subcommand("ugb", "Union of reduced Groebner bases over the default lex order grid");
  add_common(ugb, true);
  ugb->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* member = app.add_subcommand("member", "Ideal membership of a binomial");
  add_common(member, true);
  member->add_option("--binomial", opt.binomial, "Binomial such as 'x1*x2 - y1*y2'")->required();

  auto* chk = app.add_subcommand("check", "Compare S, the Graver basis and the lex-family UGB");
  add_common(chk, true);
  chk->add_option("--bound", opt.bound, "Degree bound for the Graver oracle");
  chk->add_option("--length-bound", opt.length_bound, "Longest minimal walk used (pbei)");
  chk->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Context c{opt, out, err, IdealSpec{resolve_graph(opt), parse_ideal_kind(opt.kind)}};
    if (*paths) return cmd_paths(c);
    if (*gens) return cmd_gens(c);
    if (*gb) return cmd_gb(c);
    if (*nf) return cmd_nf(c);
    if (*sset) return cmd_sset(c);
    if (*graver) return cmd_graver(c);
    if (*ugb) return cmd_ugb(c);
    if (*member) return cmd_member(c);
    if (*chk) return cmd_check(c);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

} // namespace edgebasis
