#include "nullcert/primal.hpp"

#include <algorithm>
#include <unordered_map>

#include "nullcert/monomial.hpp"

namespace nullcert {

namespace {

using MonomialIndex = std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash>;

MonomialIndex index_of(const std::vector<ExponentVector>& monomials) {
  MonomialIndex idx;
  idx.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
  return idx;
}

}  // namespace

template <CoefficientField F>
SparseLinearSystem<F> build_primal_system(const CertificateQuery<F>& q) {
  require_colors_supported(q.field, q.k);
  if (q.degree < 0) throw std::invalid_argument("degree must be non-negative");
  const auto vertices = q.graph.vertices();
  const auto edges = q.active_edges();
  const auto betas = enumerate_monomials(vertices, q.k, q.degree);
  const auto gammas = enumerate_monomials(vertices, q.k, q.degree + q.k - 1);
  const auto row_of = index_of(gammas);

  std::vector<SparseRow<F>> rows(gammas.size());
  std::size_t col = 0;
  for (const auto& e : edges) {
    if (!q.graph.has_edge(e.u, e.v)) throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
    for (const auto& beta : betas) {
      for (int r = 0; r < q.k; ++r) rows[row_of.at(edge_term(beta, e.u, e.v, r, q.k))].push_back({col, q.field.one()});
      ++col;
    }
  }
  SparseLinearSystem<F> sys(q.field, col);
  for (std::size_t i = 0; i < gammas.size(); ++i)
    sys.add_row(std::move(rows[i]), gammas[i].is_one() ? q.field.one() : q.field.zero());
  return sys;
}

template <CoefficientField F>
std::optional<NullstellensatzCertificate<F>> find_certificate(const CertificateQuery<F>& q) {
  const auto sys = build_primal_system(q);
  const auto sol = solve_basic(sys);
  if (!sol) return std::nullopt;
  const auto betas = enumerate_monomials(q.graph.vertices(), q.k, q.degree);
  NullstellensatzCertificate<F> cert;
  cert.k = q.k;
  std::size_t col = 0;
  for (const auto& e : q.active_edges()) {
    QuotientPolynomial<F> r(q.field, q.k);
    for (const auto& beta : betas) r.add_term(beta, sol->values[col++]);
    cert.degree = std::max(cert.degree, r.degree());
    cert.multipliers.emplace_back(e, std::move(r));
  }
  if (!verify_certificate(cert, q)) throw std::logic_error("primal solution failed verification");
  return cert;
}

template <CoefficientField F>
bool verify_certificate(const NullstellensatzCertificate<F>& cert, const CertificateQuery<F>& q) {
  if (cert.k != q.k) return false;
  const auto allowed = q.active_edges();
  QuotientPolynomial<F> total(q.field, q.k);
  for (const auto& [e, r] : cert.multipliers) {
    if (r.k() != q.k || r.degree() > q.degree) return false;
    if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) return false;
    total += r * edge_polynomial(q.field, q.k, e.u, e.v);
  }
  return total == QuotientPolynomial<F>::constant(q.field, q.k, q.field.one());
}

template <CoefficientField F>
MinDegreeResult<F> min_certificate_degree(const Graph& g, int k, const F& field, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be non-negative");
  MinDegreeResult<F> out;
  for (int d = 0; d <= d_max; ++d) {
    out.searched_up_to = d;
    if (auto cert = find_certificate(CertificateQuery<F>{g, k, d, field, std::nullopt})) {
      out.degree = d;
      out.certificate = std::move(cert);
      break;
    }
  }
  return out;
}

DegreeBounds degree_bounds(const Graph& g, int k) {
  const long n = g.num_vertices();
  const long m = n + static_cast<long>(g.num_edges());
  DegreeBounds b;
  mpz_ui_pow_ui(b.kollar.get_mpz_t(), static_cast<unsigned long>(std::max(3, k)), static_cast<unsigned long>(std::min(n, m)));
  b.lazard = n * (k - 1);
  return b;
}

#define NULLCERT_INSTANTIATE_PRIMAL(F)                                                                     \
  template SparseLinearSystem<F> build_primal_system<F>(const CertificateQuery<F>&);                       \
  template std::optional<NullstellensatzCertificate<F>> find_certificate<F>(const CertificateQuery<F>&);   \
  template bool verify_certificate<F>(const NullstellensatzCertificate<F>&, const CertificateQuery<F>&);   \
  template MinDegreeResult<F> min_certificate_degree<F>(const Graph&, int, const F&, int);

NULLCERT_INSTANTIATE_PRIMAL(PrimeField)
NULLCERT_INSTANTIATE_PRIMAL(RationalField)

}  // namespace nullcert
