// graph.cpp - Graph parsing, validation and Laplacian construction.

#include "phwalk/graph.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace phwalk {

namespace {

[[noreturn]] void fail(size_t lineno, const std::string &message) {
  throw ParseError("line " + std::to_string(lineno) + ": " + message);
}

int parse_vertex_count(const std::string &token, size_t lineno) {
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(token, &used);
    if (used != token.size()) {
      fail(lineno, "invalid vertex count '" + token + "'");
    }
  } catch (const std::exception &) {
    fail(lineno, "invalid vertex count '" + token + "'");
  }
  if (n < 1) {
    fail(lineno, "vertex count must be positive, got " + token);
  }
  return n;
}

int parse_vertex_label(const std::string &token, size_t lineno) {
  try {
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used == token.size()) {
      return v;
    }
  } catch (const std::exception &) {
  }
  fail(lineno, "invalid vertex label '" + token + "'");
}

} // namespace

void validate_graph(const Graph &g) {
  if (g.n < 1) {
    throw ParseError("vertex count must be positive, got " +
                     std::to_string(g.n));
  }
  // Ordered pairs already occupied by an edge; an undirected edge occupies
  // both orientations.
  std::set<std::pair<int, int>> taken;
  for (const Edge &e : g.edges) {
    if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n) {
      throw ParseError("vertex index out of range in edge " +
                       std::to_string(e.u) + (e.directed ? " -> " : " -- ") +
                       std::to_string(e.v) + " (n = " + std::to_string(g.n) +
                       ")");
    }
    if (e.u == e.v) {
      throw ParseError("self-loop at vertex " + std::to_string(e.u));
    }
    bool fresh = taken.insert({e.u, e.v}).second;
    if (!e.directed) {
      fresh = taken.insert({e.v, e.u}).second && fresh;
    }
    if (!fresh) {
      throw ParseError("duplicate or conflicting edge " + std::to_string(e.u) +
                       (e.directed ? " -> " : " -- ") + std::to_string(e.v));
    }
  }
}

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::vector<std::string> toks;
    std::string tok;
    while (tokens >> tok) {
      toks.push_back(tok);
    }
    if (toks.empty()) {
      continue;
    }
    if (!have_header) {
      if (toks[0] != "vertices" || toks.size() != 2) {
        fail(lineno, "expected 'vertices <n>'");
      }
      g.n = parse_vertex_count(toks[1], lineno);
      have_header = true;
      continue;
    }
    if (toks.size() != 3 || (toks[1] != "--" && toks[1] != "->")) {
      fail(lineno, "expected 'u -- v' or 'u -> v'");
    }
    Edge e;
    e.u = parse_vertex_label(toks[0], lineno);
    e.v = parse_vertex_label(toks[2], lineno);
    e.directed = (toks[1] == "->");
    g.edges.push_back(e);
  }
  if (!have_header) {
    throw ParseError("missing 'vertices <n>' line");
  }
  validate_graph(g);
  return g;
}

std::string format_graph(const Graph &g) {
  std::string out = "vertices " + std::to_string(g.n) + "\n";
  for (const Edge &e : g.edges) {
    out += std::to_string(e.u);
    out += e.directed ? " -> " : " -- ";
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd adjacency_matrix(const Graph &g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (const Edge &e : g.edges) {
    a(e.u - 1, e.v - 1) = 1.0;
    if (!e.directed) {
      a(e.v - 1, e.u - 1) = 1.0;
    }
  }
  return a;
}

Hamiltonian laplacian_hamiltonian(const Graph &g) {
  Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::MatrixXd h = -a;
  h.diagonal() += a.colwise().sum().transpose(); // in-degrees
  return Hamiltonian{std::move(h)};
}

bool is_undirected(const Graph &g) {
  for (const Edge &e : g.edges) {
    if (e.directed) {
      return false;
    }
  }
  return true;
}

} // namespace phwalk
