// Brute-force reference computations used to check the library. Nothing here
// calls into the code under test beyond plain data types.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "nullcert/field.hpp"
#include "nullcert/graph.hpp"

namespace oracle {

using nullcert::Edge;
using nullcert::Graph;
using nullcert::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(g.num_vertices()) + 1,
                                   std::vector<bool>(static_cast<std::size_t>(g.num_vertices()) + 1, false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

/// Shortest cycle by enumerating every simple cycle through its smallest vertex.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  const auto adj = adjacency(g);
  int best = 0;
  std::vector<bool> on(static_cast<std::size_t>(n) + 1, false);
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex at, int len) {
    for (Vertex w = start; w <= n; ++w) {
      if (!adj[at][w]) continue;
      if (w == start && len >= 3) {
        if (best == 0 || len < best) best = len;
      } else if (w > start && !on[w]) {
        on[w] = true;
        walk(start, w, len + 1);
        on[w] = false;
      }
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    on[s] = true;
    walk(s, s, 1);
    on[s] = false;
  }
  if (best == 0) return std::nullopt;
  return best;
}

/// Edge count of a longest label-increasing path, by trying every path.
inline int longest_increasing_path(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.num_vertices();
  std::function<int(Vertex)> from = [&](Vertex v) {
    int best = 0;
    for (Vertex w = v + 1; w <= n; ++w)
      if (adj[v][w]) best = std::max(best, 1 + from(w));
    return best;
  };
  int best = 0;
  for (Vertex v = 1; v <= n; ++v) best = std::max(best, from(v));
  return best;
}

/// Every map V -> {0..k-1} that is proper on the given edges.
inline std::vector<std::vector<int>> proper_colorings(int n, const std::vector<Edge>& edges, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int)> go = [&](int v) {
    if (v > n) {
      out.push_back(c);
      return;
    }
    for (int col = 0; col < k; ++col) {
      c[v] = col;
      bool ok = true;
      for (const auto& e : edges)
        if ((e.u == v && e.v < v && c[e.v] == col) || (e.v == v && e.u < v && c[e.u] == col)) ok = false;
      if (ok) go(v + 1);
    }
  };
  go(1);
  return out;
}

/// All exponent tuples in {0..k-1}^n with total degree <= D, as dense vectors.
inline std::vector<std::vector<int>> dense_monomials(int n, int k, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int i, int deg) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (int x = 0; x < k && deg + x <= D; ++x) {
      e[static_cast<std::size_t>(i)] = x;
      go(i + 1, deg + x);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  go(0, 0);
  return out;
}

/// Dense matrix over a field with textbook Gaussian elimination.
template <class F>
struct Dense {
  using V = typename F::value_type;
  F field;
  std::vector<std::vector<V>> a;

  /// Rank after elimination; pivots chosen as the first nonzero in each column.
  std::size_t rank() const {
    auto m = a;
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && field.is_zero(m[p][c])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      const V inv = field.inv(m[r][c]);
      for (auto& x : m[r]) x = field.mul(x, inv);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || field.is_zero(m[i][c])) continue;
        const V f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
      }
      ++r;
    }
    return r;
  }

  /// Pivot columns of the reduced row echelon form, left to right.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    auto m = a;
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && field.is_zero(m[p][c])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      const V inv = field.inv(m[r][c]);
      for (auto& x : m[r]) x = field.mul(x, inv);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || field.is_zero(m[i][c])) continue;
        const V f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
      }
      out.push_back(c);
      ++r;
    }
    return out;
  }

  Dense transposed() const {
    Dense t{field, {}};
    if (a.empty()) return t;
    t.a.assign(a[0].size(), std::vector<V>(a.size(), field.zero()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j) t.a[j][i] = a[i][j];
    return t;
  }

  /// Basis of {y : y A = 0}, from the null space of A^T.
  std::vector<std::vector<V>> left_null_space() const {
    const Dense t = transposed();
    const std::size_t n = a.size();
    auto m = t.a;
    std::vector<long> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && field.is_zero(m[p][c])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      const V inv = field.inv(m[r][c]);
      for (auto& x : m[r]) x = field.mul(x, inv);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || field.is_zero(m[i][c])) continue;
        const V f = m[i][c];
        for (std::size_t j = 0; j < n; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
      }
      pivot_col_of_row.push_back(static_cast<long>(c));
      ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (long c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<V>> basis;
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      std::vector<V> y(n, field.zero());
      y[free] = field.one();
      for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row)
        y[static_cast<std::size_t>(pivot_col_of_row[row])] = field.neg(m[row][free]);
      basis.push_back(std::move(y));
    }
    return basis;
  }
};

template <class F>
bool consistent(const Dense<F>& a, const std::vector<typename F::value_type>& b) {
  Dense<F> aug = a;
  for (std::size_t i = 0; i < aug.a.size(); ++i) aug.a[i].push_back(b[i]);
  return a.rank() == aug.rank();
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph random_forest(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(0.8);
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> parent(1, v - 1);
    if (keep(rng)) edges.push_back(Edge::of(parent(rng), v));
  }
  return Graph(n, edges);
}

/// Vertices (v,0) -> v and (v,1) -> v+n; edge uv gives (u,0)(v,1) and (v,0)(u,1).
inline Graph bipartite_double(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back(Edge::of(e.u, e.v + n));
    edges.push_back(Edge::of(e.v, e.u + n));
  }
  return Graph(2 * n, edges);
}

/// Tree on 10 vertices: root 1 with children 2,3,4, each with two leaf children.
inline Graph tree10() {
  return Graph(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}});
}

}  // namespace oracle
