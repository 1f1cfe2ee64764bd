#pragma once

#include <span>
#include <vector>

#include "nullcert/graph.hpp"
#include "nullcert/monomial.hpp"

namespace nullcert {

/// color[v] in 1..num_colors for v in 1..n (color[0] unused).
struct ProperColoring {
  std::vector<int> color;
  int num_colors = 0;
};

[[nodiscard]] bool is_proper(const Graph& g, const ProperColoring& c);

/// DSATUR: pick the uncolored vertex of highest saturation, then highest
/// degree, then lowest label; give it the smallest color not used by its
/// neighbors.
[[nodiscard]] ProperColoring greedy_coloring(const Graph& g);

/// Bijection between old labels and new labels on 1..n.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  static VertexOrdering identity(int n);
  /// new_label[old] for old in 1..n; index 0 ignored. Throws unless bijective.
  static VertexOrdering from_new_labels(std::vector<Vertex> new_label);

  [[nodiscard]] int size() const { return static_cast<int>(to_new_.size()) - 1; }
  [[nodiscard]] Vertex new_label(Vertex old) const { return to_new_[old]; }
  [[nodiscard]] Vertex old_label(Vertex fresh) const { return to_old_[fresh]; }
  [[nodiscard]] std::span<const Vertex> to_new() const { return to_new_; }
  [[nodiscard]] std::span<const Vertex> to_old() const { return to_old_; }

  bool operator==(const VertexOrdering&) const = default;

 private:
  std::vector<Vertex> to_new_{0};
  std::vector<Vertex> to_old_{0};
};

/// Color class 1 gets labels 1..n_1, class 2 the next n_2 labels, and so on;
/// ties inside a class go by ascending old label. Throws GraphError if the
/// coloring is not proper.
[[nodiscard]] VertexOrdering ordering_from_coloring(const Graph& g, const ProperColoring& c);

/// Ordering from greedy_coloring, the default used by the patching construction.
[[nodiscard]] VertexOrdering greedy_ordering(const Graph& g);

[[nodiscard]] Graph relabel(const Graph& g, const VertexOrdering& order);

/// Number of edges on a longest path whose labels strictly increase.
[[nodiscard]] int longest_increasing_path(const Graph& g);

// The functions below read parent/child structure off g's labels: in an edge
// {u,v} with u < v, v is a child of u. Relabel first to use another ordering.

/// Seeds together with every vertex reachable along label-increasing paths, sorted.
[[nodiscard]] std::vector<Vertex> descendant_closure(const Graph& g, std::span<const Vertex> seeds);

/// Subgraph induced by supp(m) and all descendants.
[[nodiscard]] Subgraph descendant_graph(const Graph& g, const ExponentVector& m);

/// Descendant graph grown until no two components have common or adjacent
/// parents. Component pairs are scanned by ascending smallest vertex; the
/// first qualifying pair of parents (ascending) is merged in with all their
/// descendants, and the scan restarts.
[[nodiscard]] Subgraph essential_graph(const Graph& g, const ExponentVector& m);

/// True if two distinct components of h have parents in g that coincide or are adjacent.
[[nodiscard]] bool has_mergeable_components(const Graph& g, const Subgraph& h);

}  // namespace nullcert
