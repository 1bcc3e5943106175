#include "edgebasis/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "edgebasis/error.hpp"

namespace edgebasis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const std::string& what) {
  token = trim(token);
  if (token.empty()) throw InvalidInput("missing " + what);
  int value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad " + what + " '" + std::string(token) + "'");
    value = value * 10 + (c - '0');
    if (value > 1000000) throw InvalidInput(what + " is too large");
  }
  return value;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InvalidInput("graph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InvalidInput("graph JSON: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InvalidInput("graph JSON: each edge must be a pair of integers");
    const int a = e[0].get<int>();
    const int b = e[1].get<int>();
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw InvalidInput("graph JSON: repeated edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

} // namespace

Graph parse_graph(std::string_view text) {
  if (!trim(text).empty() && trim(text).front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }

  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw InvalidInput("graph text is empty");
  if (rows[0].size() != 2) throw InvalidInput("graph header must be \"n m\"");
  const int n = parse_int(rows[0][0], "vertex count");
  const int m = parse_int(rows[0][1], "edge count");
  if (static_cast<int>(rows.size()) - 1 != m)
    throw InvalidInput("header announces " + std::to_string(m) + " edges but " + std::to_string(rows.size() - 1) +
                       " edge lines follow");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) throw InvalidInput("edge line " + std::to_string(r) + " must be \"i j\"");
    const int i = parse_int(rows[r][0], "vertex");
    const int j = parse_int(rows[r][1], "vertex");
    if (!(1 <= i && i < j && j <= n))
      throw InvalidInput("edge line " + std::to_string(r) + " needs 1 <= i < j <= n");
    if (!seen.insert({i, j}).second) throw InvalidInput("repeated edge " + std::to_string(i) + " " + std::to_string(j));
    edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [i, j] : edges) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (Letter letter : {Letter::X, Letter::Y}) {
    for (int v = 1; v <= m.n(); ++v) {
      const int e = m.exponent(letter, v);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += letter == Letter::X ? 'x' : 'y';
      out += std::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& f) { return to_string(f.lead()) + " - " + to_string(f.trail()); }

std::string to_string(const Walk& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.vertices().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(w.vertices()[k]);
  }
  return out + ")";
}

Monomial parse_monomial(std::string_view text, int n) {
  text = trim(text);
  Monomial m(n);
  if (text == "1") return m;
  if (text.empty()) throw InvalidInput("empty monomial");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    const std::string_view factor = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.empty()) throw InvalidInput("empty factor in monomial '" + std::string(text) + "'");
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(factor.front())));
    if (c != 'x' && c != 'y') throw InvalidInput("factor '" + std::string(factor) + "' must start with x or y");
    const std::size_t caret = factor.find('^');
    const int vertex = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
                                 "variable index");
    const int e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
    if (vertex < 1 || vertex > n) throw InvalidInput("variable index " + std::to_string(vertex) + " outside [1," + std::to_string(n) + "]");
    const Letter letter = c == 'x' ? Letter::X : Letter::Y;
    m.set(letter, vertex, m.exponent(letter, vertex) + e);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

Binomial parse_binomial(std::string_view text, int n) {
  const std::size_t minus = text.find('-');
  if (minus == std::string_view::npos || text.find('-', minus + 1) != std::string_view::npos)
    throw InvalidInput("binomial must have the form '<monomial> - <monomial>'");
  return Binomial(parse_monomial(text.substr(0, minus), n), parse_monomial(text.substr(minus + 1), n));
}

Json to_json(const Monomial& m) {
  Json j;
  j["x"] = m.xexp();
  j["y"] = m.yexp();
  return j;
}

Json to_json(const Binomial& f) {
  Json j;
  j["lead"] = to_json(f.lead());
  j["trail"] = to_json(f.trail());
  return j;
}

Json to_json(const std::vector<Binomial>& set) {
  Json j = Json::array();
  for (const Binomial& f : set) j.push_back(to_json(f));
  return j;
}

Json to_json(const BasisReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["kind"] = to_string(r.kind);
  j["degree_bound"] = r.degree_bound;
  j["length_bound"] = r.length_bound ? Json(*r.length_bound) : Json(nullptr);
  j["connected"] = r.connected;
  j["order_count"] = r.order_count;
  j["longest_minimal_path"] = r.longest_minimal_path;
  j["minimal_paths_omitted"] = r.minimal_paths_omitted;
  j["sizes"] = {{"s_set", r.s_set.size()}, {"graver", r.graver.size()}, {"ugb_lex_family", r.ugb.size()}};
  j["verdicts"] = {{"s_equals_graver", r.s_equals_graver},
                   {"ugb_subset_s", r.ugb_subset_s},
                   {"s_subset_ugb", r.s_subset_ugb},
                   {"ugb_subset_graver", r.ugb_subset_graver},
                   {"all_equal", r.all_equal()}};
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back({{"relation", w.relation}, {"binomial", to_json(w.element)}});
  j["witnesses"] = witnesses;
  j["s_set"] = to_json(r.s_set);
  j["graver"] = to_json(r.graver);
  j["ugb_lex_family"] = to_json(r.ugb);
  j["degree_sufficiency_extra"] = to_json(r.degree_sufficiency_extra);
  return j;
}

Monomial monomial_from_json(const Json& j) {
  return Monomial(j.at("x").get<std::vector<int>>(), j.at("y").get<std::vector<int>>());
}

Binomial binomial_from_json(const Json& j) {
  return Binomial(monomial_from_json(j.at("lead")), monomial_from_json(j.at("trail")));
}

std::vector<Binomial> binomials_from_json(const Json& j) {
  std::vector<Binomial> out;
  for (const auto& e : j) out.push_back(binomial_from_json(e));
  return out;
}

BasisReport report_from_json(const Json& j) {
  BasisReport r;
  r.graph = j.at("graph").get<std::string>();
  r.kind = parse_ideal_kind(j.at("kind").get<std::string>());
  r.degree_bound = j.at("degree_bound").get<int>();
  if (!j.at("length_bound").is_null()) r.length_bound = j.at("length_bound").get<int>();
  r.connected = j.at("connected").get<bool>();
  r.order_count = j.at("order_count").get<int>();
  r.longest_minimal_path = j.at("longest_minimal_path").get<int>();
  r.minimal_paths_omitted = j.at("minimal_paths_omitted").get<int>();
  const Json& v = j.at("verdicts");
  r.s_equals_graver = v.at("s_equals_graver").get<bool>();
  r.ugb_subset_s = v.at("ugb_subset_s").get<bool>();
  r.s_subset_ugb = v.at("s_subset_ugb").get<bool>();
  r.ugb_subset_graver = v.at("ugb_subset_graver").get<bool>();
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("relation").get<std::string>(), binomial_from_json(w.at("binomial"))});
  r.s_set = binomials_from_json(j.at("s_set"));
  r.graver = binomials_from_json(j.at("graver"));
  r.ugb = binomials_from_json(j.at("ugb_lex_family"));
  r.degree_sufficiency_extra = binomials_from_json(j.at("degree_sufficiency_extra"));
  return r;
}

} // namespace edgebasis
