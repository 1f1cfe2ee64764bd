#pragma once

#include <compare>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nullcert/monomial.hpp"

namespace nullcert {

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  /// Orientation is ignored and duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw GraphError.
  explicit Graph(int n, std::span<const Edge> edges = {});
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);

  [[nodiscard]] int num_vertices() const { return n_; }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::vector<Vertex> vertices() const;
  /// Sorted neighbor list.
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_{1};  // index 0 unused
};

/// A subset of edges together with a vertex set containing every endpoint.
struct Subgraph {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  static Subgraph from_edges(std::span<const Edge> edges);
  [[nodiscard]] bool contains(Vertex v) const;
  bool operator==(const Subgraph&) const = default;
};

[[nodiscard]] Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
[[nodiscard]] Subgraph whole_graph(const Graph& g);
[[nodiscard]] bool is_forest(const Subgraph& h);

/// Reads DIMACS "col" text: `c` comments, one `p edge n m` line, then `e u v` lines.
[[nodiscard]] Graph parse_dimacs(std::istream& in);
[[nodiscard]] Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g);

/// Length of a shortest cycle; std::nullopt when the graph is acyclic.
[[nodiscard]] std::optional<int> girth(const Graph& g);

}  // namespace nullcert
