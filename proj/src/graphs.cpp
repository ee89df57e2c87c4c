#include "hlap/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hlap {

namespace {

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

WordGraph build_graph(const Word& w) {
  WordGraph g;
  g.vertex_count = w.length();
  std::map<int, size_t> x_at, y_at;
  for (size_t i = 0; i < w.length(); ++i) {
    g.labels.push_back(to_string(w[i]));
    for (auto s : w[i].symbols()) (s.sign == Sign::Plus ? x_at : y_at)[s.index] = i;
  }
  for (const auto& [j, pos] : x_at) g.edges.push_back({j, pos, y_at.at(j)});
  return g;
}

std::vector<int> WordGraph::components() const {
  UnionFind uf(vertex_count);
  for (const auto& e : edges) uf.unite(e.from, e.to);
  std::map<size_t, int> id;
  std::vector<int> out(vertex_count);
  for (size_t v = 0; v < vertex_count; ++v) {
    auto [it, _] = id.try_emplace(uf.find(v), static_cast<int>(id.size()));
    out[v] = it->second;
  }
  return out;
}

int WordGraph::component_count() const {
  const auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool WordGraph::is_connected() const { return component_count() == 1; }

bool WordGraph::has_cycle() const {
  UnionFind uf(vertex_count);
  for (const auto& e : edges)
    if (!uf.unite(e.from, e.to)) return true;
  return false;
}

bool is_irreducible(const Word& w) { return build_graph(w).is_connected(); }

bool is_factorized(const Word& w) {
  const auto comp = build_graph(w).components();
  // Components are numbered by first occurrence, so contiguity means the
  // sequence never returns to an earlier id.
  for (size_t i = 1; i < comp.size(); ++i)
    if (comp[i] != comp[i - 1] && comp[i] != comp[i - 1] + 1) return false;
  return true;
}

bool is_tree(const Word& w) {
  const auto g = build_graph(w);
  return g.is_connected() && g.vertex_count == g.edges.size() + 1;
}

bool has_cycle(const Word& w) { return build_graph(w).has_cycle(); }

bool is_product(const Word& w) {
  std::map<int, int> balance;  // 1 while only one symbol of pair j has been seen
  int open = 0;
  for (size_t i = 0; i + 1 < w.length(); ++i) {
    for (auto s : w[i].symbols()) {
      int& b = balance[s.index];
      open += b == 0 ? 1 : -1;
      b ^= 1;
    }
    if (open == 0) return true;
  }
  return false;
}

std::string to_dot(const WordGraph& g) {
  std::ostringstream os;
  os << "graph word {\n";
  for (size_t v = 0; v < g.vertex_count; ++v) os << "  v" << v + 1 << " [label=\"" << g.labels[v] << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.from + 1 << " -- v" << e.to + 1 << " [label=\"" << e.index << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hlap
