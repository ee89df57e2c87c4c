#ifndef HLAP_GRAPHS_HPP
#define HLAP_GRAPHS_HPP

#include "hlap/words.hpp"

#include <string>
#include <vector>

namespace hlap {

/// Pseudo-multigraph of a word: one vertex per letter position, one edge per
/// pair index j joining the letter holding x_j to the letter holding y_j.
/// Loops and parallel edges are kept.
struct WordGraph {
  struct Edge {
    int index;   // j
    size_t from; // position of x_j (0-based)
    size_t to;   // position of y_j
    bool is_loop() const { return from == to; }
  };

  size_t vertex_count = 0;
  std::vector<Edge> edges;  // ascending j
  std::vector<std::string> labels;

  /// Component id per vertex, numbered by first vertex occurrence.
  std::vector<int> components() const;
  int component_count() const;
  bool is_connected() const;
  /// Any loop, parallel edge or longer cycle.
  bool has_cycle() const;
};

WordGraph build_graph(const Word& w);

bool is_irreducible(const Word& w);
bool is_factorized(const Word& w);
bool is_tree(const Word& w);
bool has_cycle(const Word& w);

/// w = w1 w2 with w1, w2 in W_m (some proper prefix is pair-closed).
bool is_product(const Word& w);

/// Byte-stable Graphviz rendering.
std::string to_dot(const WordGraph& g);

}  // namespace hlap

#endif
