#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "edgebasis/graph.hpp"
#include "edgebasis/graver.hpp"
#include "edgebasis/monomial.hpp"

namespace edgebasis {

using Json = nlohmann::ordered_json;

/// Text format: a header line "n m", then m lines "i j" with 1 <= i < j <= n.
/// '#' starts a comment. Text beginning with '{' is read as
/// {"n": int, "edges": [[i, j], ...]}.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

/// "x1*x3*y2^2"; x factors before y factors, "1" for the unit.
std::string to_string(const Monomial& m);
/// "<lead> - <trail>"
std::string to_string(const Binomial& f);
/// "(1,2,4)"
std::string to_string(const Walk& w);

Monomial parse_monomial(std::string_view text, int n);
Binomial parse_binomial(std::string_view text, int n);

Json to_json(const Monomial& m);
Json to_json(const Binomial& f);
Json to_json(const std::vector<Binomial>& set);
Json to_json(const BasisReport& report);

Monomial monomial_from_json(const Json& j);
Binomial binomial_from_json(const Json& j);
std::vector<Binomial> binomials_from_json(const Json& j);
BasisReport report_from_json(const Json& j);

} // namespace edgebasis
