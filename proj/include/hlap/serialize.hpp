#ifndef HLAP_SERIALIZE_HPP
#define HLAP_SERIALIZE_HPP

#include "hlap/graphs.hpp"
#include "hlap/rewrite.hpp"
#include "hlap/weylpoly.hpp"

#include <json.hpp>

namespace hlap {

using Json = nlohmann::ordered_json;

/// [{coefficient: "p/q", word: "..."}] in canonical word order.
Json to_json(const WordCombination& c);
WordCombination combination_from_json(const Json& j, int m);

Json to_json(const RewriteTrace& t);

/// {ordering: [names], terms: [{monomial: [positions in ordering], coeff}]}.
Json to_json(const EnvQ& e);

/// {vars, terms: [{exps, coeff}]}, highest degree first.
Json to_json(const PolyQ& p);
PolyQ polynomial_from_json(const Json& j);

/// {leading, remainder} plus the solver flags.
Json to_json(const LaplacianDecomposition& d);

/// Vertex/edge lists and the classification flags.
Json graph_json(const Word& w);

}  // namespace hlap

#endif
