#include "nullcert/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace nullcert {

bool is_proper(const Graph& g, const ProperColoring& c) {
  if (static_cast<int>(c.color.size()) != g.num_vertices() + 1) return false;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (c.color[v] < 1 || c.color[v] > c.num_colors) return false;
  for (const auto& e : g.edges())
    if (c.color[e.u] == c.color[e.v]) return false;
  return true;
}

ProperColoring greedy_coloring(const Graph& g) {
  const int n = g.num_vertices();
  ProperColoring c{std::vector<int>(static_cast<std::size_t>(n) + 1, 0), 0};
  std::vector<std::set<int>> seen(static_cast<std::size_t>(n) + 1);
  for (int step = 0; step < n; ++step) {
    Vertex pick = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (c.color[v] != 0) continue;
      if (pick == 0) {
        pick = v;
        continue;
      }
      const auto sv = seen[v].size();
      const auto sp = seen[pick].size();
      if (sv > sp || (sv == sp && g.degree(v) > g.degree(pick))) pick = v;
    }
    int color = 1;
    while (seen[pick].contains(color)) ++color;
    c.color[pick] = color;
    c.num_colors = std::max(c.num_colors, color);
    for (Vertex w : g.neighbors(pick)) seen[w].insert(color);
  }
  return c;
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> labels(static_cast<std::size_t>(n) + 1);
  std::iota(labels.begin(), labels.end(), 0);
  return from_new_labels(std::move(labels));
}

VertexOrdering VertexOrdering::from_new_labels(std::vector<Vertex> new_label) {
  if (new_label.empty()) new_label.push_back(0);
  const int n = static_cast<int>(new_label.size()) - 1;
  VertexOrdering o;
  o.to_old_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex old = 1; old <= n; ++old) {
    const Vertex fresh = new_label[old];
    if (fresh < 1 || fresh > n || o.to_old_[fresh] != 0)
      throw GraphError("vertex ordering is not a bijection on 1.." + std::to_string(n));
    o.to_old_[fresh] = old;
  }
  new_label[0] = 0;
  o.to_new_ = std::move(new_label);
  return o;
}

VertexOrdering ordering_from_coloring(const Graph& g, const ProperColoring& c) {
  if (!is_proper(g, c)) throw GraphError("coloring is not proper");
  const int n = g.num_vertices();
  std::vector<Vertex> by_class(static_cast<std::size_t>(n));
  std::iota(by_class.begin(), by_class.end(), 1);
  std::stable_sort(by_class.begin(), by_class.end(), [&](Vertex a, Vertex b) { return c.color[a] < c.color[b]; });
  std::vector<Vertex> new_label(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) new_label[by_class[i]] = i + 1;
  return VertexOrdering::from_new_labels(std::move(new_label));
}

VertexOrdering greedy_ordering(const Graph& g) { return ordering_from_coloring(g, greedy_coloring(g)); }

Graph relabel(const Graph& g, const VertexOrdering& order) {
  if (order.size() != g.num_vertices()) throw GraphError("ordering size does not match graph");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back(Edge::of(order.new_label(e.u), order.new_label(e.v)));
  return Graph(g.num_vertices(), edges);
}

int longest_increasing_path(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> longest(static_cast<std::size_t>(n) + 1, 0);
  int best = 0;
  for (Vertex v = n; v >= 1; --v) {
    for (Vertex w : g.neighbors(v))
      if (w > v) longest[v] = std::max(longest[v], longest[w] + 1);
    best = std::max(best, longest[v]);
  }
  return best;
}

std::vector<Vertex> descendant_closure(const Graph& g, std::span<const Vertex> seeds) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  std::vector<Vertex> stack;
  for (Vertex s : seeds) {
    if (!in[s]) {
      in[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (y > x && !in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Subgraph descendant_graph(const Graph& g, const ExponentVector& m) {
  const auto support = m.support();
  return induced_subgraph(g, descendant_closure(g, support));
}

namespace {

// Connected components of h, each a sorted vertex list; components ordered by
// their smallest vertex.
std::vector<std::vector<Vertex>> components(const Subgraph& h) {
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
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> comps;
  std::vector<long> slot(h.vertices.size(), -1);
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(h.vertices[i]);
  }
  return comps;
}

std::vector<Vertex> parents_of(const Graph& g, const std::vector<Vertex>& comp) {
  std::vector<Vertex> ps;
  for (Vertex w : comp)
    for (Vertex p : g.neighbors(w)) {
      if (p >= w) break;  // neighbors are sorted
      ps.push_back(p);
    }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

struct MergePair {
  Vertex a = 0;
  Vertex b = 0;
};

std::optional<MergePair> find_merge(const Graph& g, const Subgraph& h) {
  const auto comps = components(h);
  std::vector<std::vector<Vertex>> parents;
  parents.reserve(comps.size());
  for (const auto& c : comps) parents.push_back(parents_of(g, c));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (Vertex p : parents[i])
        for (Vertex q : parents[j])
          if (p == q || g.has_edge(p, q)) return MergePair{p, q};
  return std::nullopt;
}

}  // namespace

bool has_mergeable_components(const Graph& g, const Subgraph& h) { return find_merge(g, h).has_value(); }

Subgraph essential_graph(const Graph& g, const ExponentVector& m) {
  auto h = descendant_graph(g, m);
  while (auto merge = find_merge(g, h)) {
    std::vector<Vertex> seeds = h.vertices;
    seeds.push_back(merge->a);
    seeds.push_back(merge->b);
    h = induced_subgraph(g, descendant_closure(g, seeds));
  }
  return h;
}

}  // namespace nullcert
