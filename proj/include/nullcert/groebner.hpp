#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nullcert/field.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/monomial.hpp"

namespace nullcert {

/// Monomial of K[x_1..x_n] with unbounded exponents; exps[i] belongs to x_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}
  Monomial(int nvars, const ExponentVector& m);

  [[nodiscard]] int nvars() const { return static_cast<int>(exps_.size()); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int exponent(Vertex v) const { return exps_[static_cast<std::size_t>(v - 1)]; }
  [[nodiscard]] const std::vector<std::uint16_t>& exponents() const { return exps_; }
  void set_exponent(Vertex v, int e);

  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime(const Monomial& other) const;
  [[nodiscard]] Monomial operator*(const Monomial& other) const;
  /// this / other; other must divide this.
  [[nodiscard]] Monomial operator/(const Monomial& other) const;
  [[nodiscard]] Monomial lcm(const Monomial& other) const;

  [[nodiscard]] ExponentVector to_exponent_vector() const;
  [[nodiscard]] std::string to_string() const { return to_exponent_vector().to_string(); }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

[[nodiscard]] std::strong_ordering glex_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return glex_compare(a, b) > 0; }
};

/// Polynomial in K[x_1..x_n], terms GLEX-descending with nonzero coefficients.
template <CoefficientField F>
class FullRingPolynomial {
 public:
  using value_type = typename F::value_type;
  using Term = std::pair<Monomial, value_type>;

  FullRingPolynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {}
  /// Terms in any order; repeated monomials are summed.
  FullRingPolynomial(F field, int nvars, std::vector<Term> terms);

  static FullRingPolynomial constant(F field, int nvars, const value_type& c);
  /// x_v^e.
  static FullRingPolynomial variable(F field, int nvars, Vertex v, int e = 1);

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Requires a nonzero polynomial.
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.front().first; }
  [[nodiscard]] const value_type& leading_coefficient() const { return terms_.front().second; }
  [[nodiscard]] int degree() const;

  [[nodiscard]] FullRingPolynomial scaled(const value_type& c) const;
  [[nodiscard]] FullRingPolynomial monic() const;
  /// c * m * this.
  [[nodiscard]] FullRingPolynomial times_term(const Monomial& m, const value_type& c) const;

  FullRingPolynomial& operator+=(const FullRingPolynomial& o);
  FullRingPolynomial& operator-=(const FullRingPolynomial& o);
  friend FullRingPolynomial operator+(FullRingPolynomial a, const FullRingPolynomial& b) { return a += b; }
  friend FullRingPolynomial operator-(FullRingPolynomial a, const FullRingPolynomial& b) { return a -= b; }
  friend FullRingPolynomial operator*(const FullRingPolynomial& a, const FullRingPolynomial& b) {
    FullRingPolynomial out(a.field_, a.nvars_);
    for (const auto& [m, c] : b.terms_) out += a.times_term(m, c);
    return out;
  }

  /// point[v] is the value of x_v (index 0 unused).
  [[nodiscard]] value_type evaluate(const std::vector<value_type>& point) const;

  bool operator==(const FullRingPolynomial& o) const;
  [[nodiscard]] std::string to_string() const;

 private:
  F field_;
  int nvars_;
  std::vector<Term> terms_;
};

/// {x_v^k - 1 : v in h.vertices} together with {q_uv : uv in h.edges}, in
/// K[x_1..x_nvars].
template <CoefficientField F>
struct ColoringIdeal {
  F field;
  int k = 3;
  int nvars = 0;
  Subgraph subgraph;
  std::vector<FullRingPolynomial<F>> generators;

  static ColoringIdeal of(const Subgraph& h, int k, int nvars, const F& field);
};

/// Reduced Groebner basis for GLEX with x_1 most significant: monic, sorted
/// by ascending leading monomial.
template <CoefficientField F>
struct GroebnerBasis {
  F field;
  int nvars = 0;
  std::vector<FullRingPolynomial<F>> polynomials;

  [[nodiscard]] std::vector<Monomial> leading_monomials() const;
};

template <CoefficientField F>
[[nodiscard]] FullRingPolynomial<F> s_polynomial(const FullRingPolynomial<F>& f, const FullRingPolynomial<F>& g);

/// Buchberger's algorithm: the pair with the GLEX-smallest lcm goes first
/// (ties by creation order); pairs with coprime leading monomials are skipped.
template <CoefficientField F>
[[nodiscard]] GroebnerBasis<F> buchberger(const F& field, int nvars, const std::vector<FullRingPolynomial<F>>& generators);

template <CoefficientField F>
[[nodiscard]] GroebnerBasis<F> buchberger(const ColoringIdeal<F>& ideal) {
  return buchberger(ideal.field, ideal.nvars, ideal.generators);
}

/// Remainder of full multivariate division by `divisors`, tried in order.
/// Unique when the divisors form a Groebner basis.
template <CoefficientField F>
[[nodiscard]] FullRingPolynomial<F> normal_form(const FullRingPolynomial<F>& f,
                                                const std::vector<FullRingPolynomial<F>>& divisors);

template <CoefficientField F>
[[nodiscard]] FullRingPolynomial<F> normal_form(const FullRingPolynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb.polynomials);
}

/// Some leading monomial of gb divides m.
template <CoefficientField F>
[[nodiscard]] bool is_reducible(const Monomial& m, const GroebnerBasis<F>& gb);

template <CoefficientField F>
[[nodiscard]] bool ideal_membership(const FullRingPolynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb).is_zero();
}

/// Leading monomials one per line ("x_4x_9") in ascending GLEX order, the
/// layout of the published lists (x_4x_9 before x_4^2 before x_3x_7).
[[nodiscard]] std::vector<std::string> leading_monomial_report(std::vector<Monomial> monomials);

}  // namespace nullcert
