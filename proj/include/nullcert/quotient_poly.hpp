#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nullcert/field.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/monomial.hpp"

namespace nullcert {

/// Element of R_{V,k} = K[x_v] / <x_v^k - 1>: a combination of exponent
/// vectors with entries in {0..k-1}. Zero coefficients are never stored.
template <CoefficientField F>
class QuotientPolynomial {
 public:
  using value_type = typename F::value_type;
  using TermMap = std::map<ExponentVector, value_type, GlexGreater>;

  QuotientPolynomial(F field, int k) : field_(std::move(field)), k_(k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
  }

  static QuotientPolynomial constant(F field, int k, const value_type& c) {
    QuotientPolynomial p(std::move(field), k);
    p.add_term({}, c);
    return p;
  }
  static QuotientPolynomial monomial(F field, int k, const ExponentVector& m, const value_type& c) {
    QuotientPolynomial p(std::move(field), k);
    p.add_term(m, c);
    return p;
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] value_type coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// GLEX-largest monomial of the support; nullopt for the zero polynomial.
  [[nodiscard]] std::optional<ExponentVector> leading_monomial() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  /// Highest total degree in the support (-1 for the zero polynomial).
  [[nodiscard]] int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Adds c * x^m; exponents of m must already lie in {0..k-1}.
  void add_term(const ExponentVector& m, const value_type& c) {
    for (const auto& f : m.factors())
      if (f.exponent >= k_) throw std::invalid_argument("exponent " + std::to_string(f.exponent) + " >= k");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  QuotientPolynomial& operator+=(const QuotientPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  QuotientPolynomial& operator-=(const QuotientPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend QuotientPolynomial operator+(QuotientPolynomial a, const QuotientPolynomial& b) { return a += b; }
  friend QuotientPolynomial operator-(QuotientPolynomial a, const QuotientPolynomial& b) { return a -= b; }

  [[nodiscard]] QuotientPolynomial scaled(const value_type& s) const {
    QuotientPolynomial out(field_, k_);
    for (const auto& [m, c] : terms_) out.add_term(m, field_.mul(c, s));
    return out;
  }

  /// Product in R_{V,k}: exponents add coordinatewise mod k.
  friend QuotientPolynomial operator*(const QuotientPolynomial& a, const QuotientPolynomial& b) {
    a.check_compatible(b);
    std::unordered_map<ExponentVector, value_type, ExponentVectorHash> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto m = ma.times(mb, a.k_);
        auto prod = a.field_.mul(ca, cb);
        auto [it, inserted] = acc.try_emplace(std::move(m), prod);
        if (!inserted) it->second = a.field_.add(it->second, prod);
      }
    QuotientPolynomial out(a.field_, a.k_);
    for (auto& [m, c] : acc)
      if (!a.field_.is_zero(c)) out.terms_.emplace(m, c);
    return out;
  }

  /// Value at a point; point[v] supplies x_v for every support vertex.
  template <class Point>
  [[nodiscard]] value_type evaluate(const Point& point) const {
    value_type total = field_.zero();
    for (const auto& [m, c] : terms_) {
      value_type term = c;
      for (const auto& f : m.factors()) {
        auto x = lookup(point, f.vertex);
        for (int i = 0; i < f.exponent; ++i) term = field_.mul(term, x);
      }
      total = field_.add(total, term);
    }
    return total;
  }

  bool operator==(const QuotientPolynomial& o) const {
    if (k_ != o.k_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
      if (!(m == it->first) || !field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += field_.to_string(c);
      if (!m.is_one()) s += "*" + m.to_string();
    }
    return s;
  }

 private:
  void check_compatible(const QuotientPolynomial& o) const {
    if (k_ != o.k_) throw std::invalid_argument("polynomials over different k");
  }

  template <class Point>
  value_type lookup(const Point& point, Vertex v) const {
    if constexpr (requires { point.find(v); }) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("no value assigned to x_" + std::to_string(v));
      return it->second;
    } else {
      if (v < 0 || static_cast<std::size_t>(v) >= point.size())
        throw std::invalid_argument("no value assigned to x_" + std::to_string(v));
      return point[static_cast<std::size_t>(v)];
    }
  }

  F field_;
  int k_;
  TermMap terms_;
};

/// q_uv = sum_{r=0}^{k-1} x_u^{k-1-r} x_v^r, the edge polynomial of the
/// coloring encoding. The vertex polynomials x_u^k - 1 are implicit in R_{V,k}.
template <CoefficientField F>
[[nodiscard]] QuotientPolynomial<F> edge_polynomial(const F& field, int k, Vertex u, Vertex v) {
  QuotientPolynomial<F> q(field, k);
  for (int r = 0; r < k; ++r) q.add_term(ExponentVector({{u, k - 1 - r}, {v, r}}), field.one());
  return q;
}

/// x^alpha * x_u^(k-1-r) x_v^r in the quotient ring, the r-th monomial of x^alpha q_uv.
[[nodiscard]] inline ExponentVector edge_term(const ExponentVector& alpha, Vertex u, Vertex v, int r, int k) {
  return alpha.with_exponent(u, alpha.exponent(u) + k - 1 - r, k).with_exponent(v, alpha.exponent(v) + r, k);
}

template <CoefficientField F>
struct BayerGenerators {
  std::vector<Vertex> vertices;  // one implicit x_u^k - 1 per vertex
  std::vector<std::pair<Edge, QuotientPolynomial<F>>> edge_polynomials;
};

template <CoefficientField F>
[[nodiscard]] BayerGenerators<F> bayer_generators(const Graph& g, int k, const F& field) {
  require_colors_supported(field, k);
  BayerGenerators<F> out;
  out.vertices = g.vertices();
  for (const auto& e : g.edges()) out.edge_polynomials.emplace_back(e, edge_polynomial(field, k, e.u, e.v));
  return out;
}

}  // namespace nullcert
