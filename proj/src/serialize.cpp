#include "hlap/serialize.hpp"

namespace hlap {

Json to_json(const WordCombination& c) {
  Json out = Json::array();
  for (const auto& [w, coeff] : c.terms()) out.push_back({{"coefficient", to_string(coeff)}, {"word", to_string(w)}});
  return out;
}

WordCombination combination_from_json(const Json& j, int m) {
  if (!j.is_array()) throw std::invalid_argument("combination JSON must be an array");
  WordCombination out;
  for (const auto& t : j) {
    if (!t.contains("coefficient") || !t.contains("word"))
      throw std::invalid_argument("combination term needs coefficient and word");
    out.add(parse_word(t.at("word").get<std::string>(), m), parse_rational(t.at("coefficient").get<std::string>()));
  }
  return out;
}

Json to_json(const RewriteTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps)
    out.push_back({{"rule", to_string(s.rule)}, {"position", s.position}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
  return out;
}

Json to_json(const EnvQ& e) {
  Json ordering = Json::array();
  for (const auto& n : e.algebra()->ordered_names()) ordering.push_back(n);
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::array();
    for (auto p : m) mono.push_back(static_cast<int>(p));
    terms.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
  }
  return {{"ordering", ordering}, {"terms", terms}};
}

Json to_json(const PolyQ& p) {
  std::vector<std::pair<PolyQ::Exponents, Rational>> items(p.terms().begin(), p.terms().end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int da = PolyQ::total(a.first), db = PolyQ::total(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  Json terms = Json::array();
  for (const auto& [e, c] : items) terms.push_back({{"exps", e}, {"coeff", to_string(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

PolyQ polynomial_from_json(const Json& j) {
  const int r = j.at("vars").get<int>();
  PolyQ p(r);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exps").get<PolyQ::Exponents>();
    if (static_cast<int>(e.size()) != r) throw std::invalid_argument("exponent vector has the wrong length");
    p.add_term(e, parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

Json to_json(const LaplacianDecomposition& d) {
  return {{"m", d.m},
          {"leading", to_string(d.leading)},
          {"remainder", to_json(d.remainder)},
          {"representation", to_json(d.representation)},
          {"consistent", d.consistent},
          {"unique", d.unique},
          {"remainder_in_lower", d.remainder_in_lower}};
}

Json graph_json(const Word& w) {
  const WordGraph g = build_graph(w);
  Json vertices = Json::array();
  for (const auto& l : g.labels) vertices.push_back(l);
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"index", e.index}, {"from", e.from + 1}, {"to", e.to + 1}, {"loop", e.is_loop()}});
  return {{"word", to_string(w)},
          {"canonical", to_string(canonical_form(w))},
          {"vertices", vertices},
          {"edges", edges},
          {"components", g.component_count()},
          {"irreducible", is_irreducible(w)},
          {"factorized", is_factorized(w)},
          {"tree", is_tree(w)},
          {"cycle", has_cycle(w)},
          {"product", is_product(w)}};
}

}  // namespace hlap
