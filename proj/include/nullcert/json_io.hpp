#pragma once

#include <json.hpp>

#include "nullcert/dual.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/primal.hpp"
#include "nullcert/quotient_poly.hpp"

namespace nullcert {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json graph_to_json(const Graph& g);
[[nodiscard]] Graph graph_from_json(const Json& j);

/// {"u": e, ...} keyed by vertex label in ascending order.
[[nodiscard]] Json exponents_to_json(const ExponentVector& m);
[[nodiscard]] ExponentVector exponents_from_json(const Json& j);

/// {k, terms: [{exps, coeff}]}, terms GLEX-descending, coefficients as strings.
template <CoefficientField F>
[[nodiscard]] Json polynomial_to_json(const QuotientPolynomial<F>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exps", exponents_to_json(m)}, {"coeff", p.field().to_string(c)}});
  return {{"k", p.k()}, {"terms", std::move(terms)}};
}

template <CoefficientField F>
[[nodiscard]] QuotientPolynomial<F> polynomial_from_json(const Json& j, const F& field) {
  QuotientPolynomial<F> p(field, j.at("k").get<int>());
  for (const auto& t : j.at("terms")) p.add_term(exponents_from_json(t.at("exps")), field.parse(t.at("coeff").get<std::string>()));
  return p;
}

template <CoefficientField F>
[[nodiscard]] Json certificate_to_json(const NullstellensatzCertificate<F>& cert, const F& field) {
  Json edges = Json::array();
  for (const auto& [e, r] : cert.multipliers)
    if (!r.is_zero()) edges.push_back({{"u", e.u}, {"v", e.v}, {"poly", polynomial_to_json(r)}});
  return {{"k", cert.k}, {"field", field.name()}, {"degree", cert.degree}, {"edges", std::move(edges)}};
}

template <CoefficientField F>
[[nodiscard]] NullstellensatzCertificate<F> certificate_from_json(const Json& j, const F& field) {
  NullstellensatzCertificate<F> cert;
  cert.k = j.at("k").get<int>();
  cert.degree = j.at("degree").get<int>();
  for (const auto& e : j.at("edges"))
    cert.multipliers.emplace_back(Edge::of(e.at("u").get<Vertex>(), e.at("v").get<Vertex>()),
                                  polynomial_from_json(e.at("poly"), field));
  return cert;
}

template <CoefficientField F>
[[nodiscard]] Json dual_to_json(const DualCertificate<F>& lambda, bool verified) {
  Json entries = Json::array();
  for (const auto& [m, v] : lambda.values)
    entries.push_back({{"exps", exponents_to_json(m)}, {"value", lambda.field.to_string(v)}});
  return {{"k", lambda.k}, {"d", lambda.d}, {"field", lambda.field.name()}, {"entries", std::move(entries)}, {"verified", verified}};
}

template <CoefficientField F>
[[nodiscard]] DualCertificate<F> dual_from_json(const Json& j, const F& field) {
  DualCertificate<F> lambda{field, j.at("k").get<int>(), j.at("d").get<int>(), {}};
  for (const auto& e : j.at("entries"))
    lambda.set(exponents_from_json(e.at("exps")), field.parse(e.at("value").get<std::string>()));
  return lambda;
}

}  // namespace nullcert
