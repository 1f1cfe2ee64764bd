#include "nullcert/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace nullcert {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 1.." +
                       std::to_string(n));
    edges_.push_back(Edge::of(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return Graph(n, e);
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> v(static_cast<std::size_t>(n_));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

Subgraph Subgraph::from_edges(std::span<const Edge> edges) {
  Subgraph h;
  for (const auto& e : edges) {
    h.edges.push_back(Edge::of(e.u, e.v));
    h.vertices.push_back(e.u);
    h.vertices.push_back(e.v);
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  return h;
}

bool Subgraph::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph h;
  h.vertices.assign(vertices.begin(), vertices.end());
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex v : h.vertices) in[v] = 1;
  for (Vertex u : h.vertices)
    for (Vertex w : g.neighbors(u))
      if (w > u && in[w]) h.edges.push_back({u, w});
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

Subgraph whole_graph(const Graph& g) { return {g.vertices(), g.edges()}; }

bool is_forest(const Subgraph& h) {
  // Union-find over positions in the vertex list.
  std::vector<std::size_t> parent(h.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) - h.vertices.begin());
  };
  for (const auto& e : h.edges) {
    auto a = find(index(e.u));
    auto b = find(index(e.v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == 'c';
  }
  return true;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared_edges = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      std::string format;
      std::string extra;
      if (!(ss >> format >> n >> declared_edges) || (format != "edge" && format != "col") || n < 0 ||
          declared_edges < 0 || (ss >> extra))
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem line");
      long u = 0;
      long v = 0;
      std::string extra;
      if (!(ss >> u >> v) || (ss >> extra)) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge (x,y) closes a cycle of length
  // dist[x] + dist[y] + 1, and the minimum over all roots is the girth.
  const int n = g.num_vertices();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1);
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (best && 2 * dist[x] + 1 >= *best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace nullcert
