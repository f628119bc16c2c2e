// graph.hpp - Graph descriptions and their Laplacian Hamiltonians.
//
// Vertices are labeled 1..n externally (files, CLI, reports) and 0..n-1
// internally (matrix indices). Edges are either undirected or directed u->v;
// self-loops, duplicate ordered pairs and weighted edges are rejected.

#ifndef PHWALK_GRAPH_HPP
#define PHWALK_GRAPH_HPP

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "phwalk/errors.hpp"

namespace phwalk {

struct Edge {
  int u = 0;
  int v = 0;
  bool directed = false; // true: u->v only; false: both orientations

  friend bool operator==(const Edge &, const Edge &) = default;
};

struct Graph {
  int n = 0; // vertex count, labels 1..n
  std::vector<Edge> edges;

  friend bool operator==(const Graph &, const Graph &) = default;
};

// Laplacian of a graph together with the sign/degree convention it was built
// under. Columns sum to zero, so that exp(-Ht) maps probability vectors to
// probability vectors.
struct Hamiltonian {
  Eigen::MatrixXd matrix;

  static constexpr std::string_view convention =
      "H = D_in - A, A[i][j] = 1 iff edge i->j";
};

// Throws ParseError when an invariant is violated (index range, self-loop,
// duplicate or conflicting edge).
void validate_graph(const Graph &g);

// Graph file format: optional '#' comments, first payload line
// "vertices <n>", then one edge per line, "u -- v" or "u -> v".
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph &g);

// A[i][j] = 1 iff there is an edge from i to j; undirected edges contribute
// both orientations; zero diagonal.
Eigen::MatrixXd adjacency_matrix(const Graph &g);

// H = D_in - A with D_in[j][j] the j-th column sum of A.
Hamiltonian laplacian_hamiltonian(const Graph &g);

bool is_undirected(const Graph &g);

} // namespace phwalk

#endif
