#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nullcert/field.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/linsys.hpp"
#include "nullcert/monomial.hpp"
#include "nullcert/ordering.hpp"

namespace nullcert {

enum class Execution { serial, parallel };

/// DCOL system over `vertices`: for every alpha with |alpha| <= d
/// (GLEX-descending) and every edge in the given order, the row
/// sum_r lambda[alpha + r e_u + (k-1-r) e_v] = 0; then lambda_0 = 1 as the last
/// row. Columns are all monomials of degree <= d+k-1, GLEX-descending, and
/// carry them as labels.
template <CoefficientField F>
[[nodiscard]] SparseLinearSystem<F> build_dual_system(std::span<const Vertex> vertices, std::span<const Edge> edges,
                                                      int k, int d, const F& field);
template <CoefficientField F>
[[nodiscard]] SparseLinearSystem<F> build_dual_system(const Graph& g, int k, int d, const F& field) {
  const auto vs = g.vertices();
  return build_dual_system(vs, g.edges(), k, d, field);
}
template <CoefficientField F>
[[nodiscard]] SparseLinearSystem<F> build_dual_system(const Subgraph& h, int k, int d, const F& field) {
  return build_dual_system(h.vertices, h.edges, k, d, field);
}

/// Which constraint a DCOL row index refers to.
struct DualRow {
  std::optional<ExponentVector> alpha;  // empty for the lambda_0 = 1 row
  Edge edge;
  [[nodiscard]] std::string to_string() const;
};
[[nodiscard]] DualRow describe_dual_row(const Graph& g, int k, int d, std::size_t row);

/// A functional lambda on monomials of degree <= d+k-1; absent entries are 0.
template <CoefficientField F>
struct DualCertificate {
  using value_type = typename F::value_type;

  F field;
  int k = 0;
  int d = 0;
  std::map<ExponentVector, value_type, GlexGreater> values;

  [[nodiscard]] value_type at(const ExponentVector& m) const {
    auto it = values.find(m);
    return it == values.end() ? field.zero() : it->second;
  }
  void set(const ExponentVector& m, const value_type& v) {
    if (field.is_zero(v))
      values.erase(m);
    else
      values.insert_or_assign(m, v);
  }
};

/// Basic solution of the DCOL system; nullopt when a degree-d certificate exists instead.
template <CoefficientField F>
[[nodiscard]] std::optional<DualCertificate<F>> find_dual_certificate(const Graph& g, int k, int d, const F& field);

/// Pivot-column monomials of the DCOL system of h, GLEX-descending. Always
/// contains the constant monomial.
template <CoefficientField F>
[[nodiscard]] std::vector<ExponentVector> leading_basis(const Subgraph& h, int k, int d, const F& field);

/// First DCOL row of g violated by lambda (rows numbered as in
/// build_dual_system), or nullopt if lambda satisfies all of them.
template <CoefficientField F>
[[nodiscard]] std::optional<std::size_t> find_dcol_violation(const DualCertificate<F>& lambda, const Graph& g,
                                                             Execution exec = Execution::serial);

/// Every DCOL row holds, lambda_0 = 1 and no entry exceeds degree d+k-1.
template <CoefficientField F>
[[nodiscard]] bool verify_dual_certificate(const DualCertificate<F>& lambda, const Graph& g,
                                           Execution exec = Execution::serial);

struct PatchFailure {
  enum class Kind { essential_graph_not_forest, local_infeasible, verification_failed };
  Kind kind = Kind::essential_graph_not_forest;
  ExponentVector monomial;  // offending monomial (original labels)
  std::size_t row = 0;      // violated DCOL row, for verification_failed
  std::string detail;

  [[nodiscard]] std::string kind_name() const;
  [[nodiscard]] std::string to_string() const;
};

class PatchError : public std::runtime_error {
 public:
  explicit PatchError(PatchFailure f) : std::runtime_error(f.to_string()), failure_(std::move(f)) {}
  [[nodiscard]] const PatchFailure& failure() const { return failure_; }

 private:
  PatchFailure failure_;
};

/// Columns the local system is built on: the essential graph's own vertices,
/// or every vertex of g (same essential edges). Both give the same value at m.
enum class LocalScope { essential_vertices, all_vertices };

template <CoefficientField F>
struct LocalSolution {
  Subgraph essential;
  std::vector<ExponentVector> columns;
  BasicSolution<F> solution;

  /// mu_m; zero for monomials outside the local column set.
  [[nodiscard]] typename F::value_type at(const ExponentVector& m, const F& field) const;
};

/// Basic solution mu^(m) of the DCOL system on the essential graph of m. The
/// ordering is read off g's labels. Throws PatchError when the essential graph
/// is not a forest or the local system is infeasible.
template <CoefficientField F>
[[nodiscard]] LocalSolution<F> local_basic_solution(const Graph& g, int k, int d, const F& field,
                                                    const ExponentVector& m,
                                                    LocalScope scope = LocalScope::essential_vertices);

template <CoefficientField F>
struct PatchResult {
  std::optional<DualCertificate<F>> certificate;  // verified when present
  std::optional<PatchFailure> failure;
  VertexOrdering ordering;
  std::size_t monomials = 0;
  std::size_t largest_essential_graph = 0;  // vertex count

  [[nodiscard]] bool ok() const { return certificate.has_value(); }
};

/// lambda_alpha := mu^(alpha)_alpha for every |alpha| <= d+k-1, computed under
/// `ordering` (greedy-coloring ordering when absent) and reported in g's
/// original labels. Reports the GLEX-smallest failing monomial, or the first
/// violated row if the assembled lambda does not verify.
template <CoefficientField F>
[[nodiscard]] PatchResult<F> patch_dual_certificate(const Graph& g, int k, int d, const F& field,
                                                    std::optional<VertexOrdering> ordering = std::nullopt,
                                                    Execution exec = Execution::parallel);

}  // namespace nullcert
