#include "nullcert/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "nullcert/quotient_poly.hpp"

namespace nullcert {

template <CoefficientField F>
SparseLinearSystem<F> build_dual_system(std::span<const Vertex> vertices, std::span<const Edge> edges, int k, int d,
                                        const F& field) {
  require_colors_supported(field, k);
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  auto columns = enumerate_monomials(vertices, k, d + k - 1);
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> col_of;
  col_of.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) col_of.emplace(columns[i], i);
  const auto alphas = enumerate_monomials(vertices, k, d);
  SparseLinearSystem<F> sys(field, std::move(columns));
  for (const auto& alpha : alphas)
    for (const auto& e : edges) {
      SparseRow<F> row;
      row.reserve(static_cast<std::size_t>(k));
      for (int r = 0; r < k; ++r) row.push_back({col_of.at(edge_term(alpha, e.u, e.v, r, k)), field.one()});
      sys.add_row(std::move(row), field.zero());
    }
  sys.add_row({{col_of.at(ExponentVector{}), field.one()}}, field.one());
  return sys;
}

std::string DualRow::to_string() const {
  if (!alpha) return "lambda_0 = 1";
  return "alpha=" + alpha->to_string() + " edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v);
}

DualRow describe_dual_row(const Graph& g, int k, int d, std::size_t row) {
  const auto alphas = enumerate_monomials(g.vertices(), k, d);
  const std::size_t m = g.num_edges();
  if (row >= alphas.size() * m) return {};
  return {alphas[row / m], g.edges()[row % m]};
}

template <CoefficientField F>
std::optional<DualCertificate<F>> find_dual_certificate(const Graph& g, int k, int d, const F& field) {
  const auto sys = build_dual_system(g, k, d, field);
  const auto sol = solve_basic(sys);
  if (!sol) return std::nullopt;
  DualCertificate<F> cert{field, k, d, {}};
  for (std::size_t c : sol->basis) cert.set(sys.labels()[c], sol->values[c]);
  return cert;
}

template <CoefficientField F>
std::vector<ExponentVector> leading_basis(const Subgraph& h, int k, int d, const F& field) {
  const auto sys = build_dual_system(h, k, d, field);
  std::vector<ExponentVector> out;
  for (std::size_t c : pivot_columns(sys)) out.push_back(sys.labels()[c]);
  return out;
}

template <CoefficientField F>
std::optional<std::size_t> find_dcol_violation(const DualCertificate<F>& lambda, const Graph& g, Execution exec) {
  const F& field = lambda.field;
  const int k = lambda.k;
  require_colors_supported(field, k);
  const auto alphas = enumerate_monomials(g.vertices(), k, lambda.d);
  const auto& edges = g.edges();
  std::unordered_map<ExponentVector, typename F::value_type, ExponentVectorHash> value_of(lambda.values.begin(),
                                                                                         lambda.values.end());
  auto row_holds = [&](const ExponentVector& alpha, const Edge& e) {
    auto sum = field.zero();
    for (int r = 0; r < k; ++r) {
      auto it = value_of.find(edge_term(alpha, e.u, e.v, r, k));
      if (it != value_of.end()) sum = field.add(sum, it->second);
    }
    return field.is_zero(sum);
  };
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::size_t first = none;
  const auto count = static_cast<std::int64_t>(alphas.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
    for (std::int64_t a = 0; a < count; ++a)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (!row_holds(alphas[a], edges[e])) {
          first = std::min(first, static_cast<std::size_t>(a) * edges.size() + e);
          break;
        }
  } else {
    for (std::int64_t a = 0; a < count && first == none; ++a)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (!row_holds(alphas[a], edges[e])) {
          first = static_cast<std::size_t>(a) * edges.size() + e;
          break;
        }
  }
  if (first != none) return first;
  if (!field.equal(lambda.at(ExponentVector{}), field.one())) return alphas.size() * edges.size();
  return std::nullopt;
}

template <CoefficientField F>
bool verify_dual_certificate(const DualCertificate<F>& lambda, const Graph& g, Execution exec) {
  if (lambda.k < 2 || lambda.d < 0) return false;
  for (const auto& [m, v] : lambda.values) {
    if (m.degree() > lambda.d + lambda.k - 1) return false;
    for (const auto& f : m.factors())
      if (f.exponent >= lambda.k || f.vertex < 1 || f.vertex > g.num_vertices()) return false;
  }
  return !find_dcol_violation(lambda, g, exec).has_value();
}

std::string PatchFailure::kind_name() const {
  switch (kind) {
    case Kind::essential_graph_not_forest:
      return "EssentialGraphNotForest";
    case Kind::local_infeasible:
      return "LocalInfeasible";
    case Kind::verification_failed:
      return "PatchVerificationFailed";
  }
  return "unknown";
}

std::string PatchFailure::to_string() const {
  std::string s = kind_name() + "(";
  s += kind == Kind::verification_failed ? "row " + std::to_string(row) : monomial.to_string();
  s += ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

template <CoefficientField F>
typename F::value_type LocalSolution<F>::at(const ExponentVector& m, const F& field) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), m, GlexGreater{});
  if (it == columns.end() || !(*it == m)) return field.zero();
  return solution.values[static_cast<std::size_t>(it - columns.begin())];
}

template <CoefficientField F>
LocalSolution<F> local_basic_solution(const Graph& g, int k, int d, const F& field, const ExponentVector& m,
                                      LocalScope scope) {
  if (m.degree() > d + k - 1) throw std::invalid_argument("monomial degree exceeds d+k-1");
  auto h = essential_graph(g, m);
  if (!is_forest(h))
    throw PatchError({PatchFailure::Kind::essential_graph_not_forest, m, 0,
                      "essential graph on " + std::to_string(h.vertices.size()) + " vertices has a cycle"});
  const auto vertices = scope == LocalScope::essential_vertices ? h.vertices : g.vertices();
  auto sys = build_dual_system(std::span<const Vertex>(vertices), h.edges, k, d, field);
  auto sol = solve_basic(sys);
  if (!sol) throw PatchError({PatchFailure::Kind::local_infeasible, m, 0, "local DCOL system has no solution"});
  return {std::move(h), sys.labels(), std::move(*sol)};
}

template <CoefficientField F>
PatchResult<F> patch_dual_certificate(const Graph& g, int k, int d, const F& field,
                                      std::optional<VertexOrdering> ordering, Execution exec) {
  require_colors_supported(field, k);
  PatchResult<F> out;
  out.ordering = ordering ? *ordering : greedy_ordering(g);
  const Graph h = relabel(g, out.ordering);
  const auto monomials = enumerate_monomials(h.vertices(), k, d + k - 1);
  out.monomials = monomials.size();

  const auto count = static_cast<std::int64_t>(monomials.size());
  std::vector<typename F::value_type> values(monomials.size(), field.zero());
  std::vector<std::optional<PatchFailure>> failures(monomials.size());
  std::vector<std::size_t> sizes(monomials.size(), 0);
  auto solve_one = [&](std::int64_t i) {
    try {
      const auto local = local_basic_solution(h, k, d, field, monomials[i]);
      values[i] = local.at(monomials[i], field);
      sizes[i] = local.essential.vertices.size();
    } catch (const PatchError& e) {
      failures[i] = e.failure();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) solve_one(i);
  } else {
    // Ascending GLEX, stopping at the first failure.
    for (std::int64_t i = count - 1; i >= 0; --i) {
      solve_one(i);
      if (failures[i]) break;
    }
  }
  for (std::int64_t i = count - 1; i >= 0; --i)
    if (failures[i]) {
      out.failure = *failures[i];
      out.failure->monomial = out.failure->monomial.relabeled(out.ordering.to_old());
      return out;
    }
  out.largest_essential_graph = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());

  DualCertificate<F> lambda{field, k, d, {}};
  for (std::size_t i = 0; i < monomials.size(); ++i)
    lambda.set(monomials[i].relabeled(out.ordering.to_old()), values[i]);
  if (auto row = find_dcol_violation(lambda, g, exec)) {
    out.failure = PatchFailure{PatchFailure::Kind::verification_failed, {}, *row,
                               describe_dual_row(g, k, d, *row).to_string()};
    return out;
  }
  out.certificate = std::move(lambda);
  return out;
}

#define NULLCERT_INSTANTIATE_DUAL(F)                                                                               \
  template SparseLinearSystem<F> build_dual_system<F>(std::span<const Vertex>, std::span<const Edge>, int, int,   \
                                                      const F&);                                                  \
  template std::optional<DualCertificate<F>> find_dual_certificate<F>(const Graph&, int, int, const F&);         \
  template std::vector<ExponentVector> leading_basis<F>(const Subgraph&, int, int, const F&);                    \
  template std::optional<std::size_t> find_dcol_violation<F>(const DualCertificate<F>&, const Graph&, Execution); \
  template bool verify_dual_certificate<F>(const DualCertificate<F>&, const Graph&, Execution);                  \
  template struct LocalSolution<F>;                                                                               \
  template LocalSolution<F> local_basic_solution<F>(const Graph&, int, int, const F&, const ExponentVector&,      \
                                                    LocalScope);                                                  \
  template PatchResult<F> patch_dual_certificate<F>(const Graph&, int, int, const F&,                            \
                                                    std::optional<VertexOrdering>, Execution);

NULLCERT_INSTANTIATE_DUAL(PrimeField)
NULLCERT_INSTANTIATE_DUAL(RationalField)

}  // namespace nullcert
