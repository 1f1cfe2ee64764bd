#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nullcert/field.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/linsys.hpp"
#include "nullcert/quotient_poly.hpp"

namespace nullcert {

/// A degree-d certificate search for the k-coloring system of `graph`,
/// restricted to `edges` when given.
template <CoefficientField F>
struct CertificateQuery {
  Graph graph;
  int k = 3;
  int degree = 0;
  F field;
  std::optional<std::vector<Edge>> edges;

  [[nodiscard]] std::vector<Edge> active_edges() const { return edges ? *edges : graph.edges(); }
};

/// Multipliers r_uv with sum r_uv q_uv = 1 in the quotient ring.
template <CoefficientField F>
struct NullstellensatzCertificate {
  int k = 0;
  int degree = 0;  // max over edges of deg r_uv
  std::vector<std::pair<Edge, QuotientPolynomial<F>>> multipliers;
};

/// Columns: coefficient of x^beta in r_uv, edges outer in query order, beta
/// GLEX-descending with |beta| <= d. Rows: monomials gamma with
/// |gamma| <= d+k-1, GLEX-descending; rhs is 1 on the constant row only.
template <CoefficientField F>
[[nodiscard]] SparseLinearSystem<F> build_primal_system(const CertificateQuery<F>& q);

/// Solves the primal system; any returned certificate has passed verify_certificate.
template <CoefficientField F>
[[nodiscard]] std::optional<NullstellensatzCertificate<F>> find_certificate(const CertificateQuery<F>& q);

template <CoefficientField F>
[[nodiscard]] bool verify_certificate(const NullstellensatzCertificate<F>& cert, const CertificateQuery<F>& q);

template <CoefficientField F>
struct MinDegreeResult {
  std::optional<int> degree;  // empty: nothing found up to searched_up_to
  int searched_up_to = 0;
  std::optional<NullstellensatzCertificate<F>> certificate;
};

/// Tries d = 0, 1, ..., d_max in turn.
template <CoefficientField F>
[[nodiscard]] MinDegreeResult<F> min_certificate_degree(const Graph& g, int k, const F& field, int d_max);

struct DegreeBounds {
  mpz_class kollar;
  long lazard = 0;
};

/// kollar = max(3,k)^min(n, n+|E|), lazard = n(k-1). Informational only.
[[nodiscard]] DegreeBounds degree_bounds(const Graph& g, int k);

}  // namespace nullcert
