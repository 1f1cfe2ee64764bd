#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nullcert {

using Vertex = int;

/// One factor x_v^e of a monomial.
struct VarPower {
  Vertex vertex;
  int exponent;
  bool operator==(const VarPower&) const = default;
};

/// A monomial of the quotient ring K[x_v]/<x_v^k - 1>: a sparse vector of
/// exponents, sorted by vertex, with no stored zeros. The number of colors k
/// lives with the enclosing polynomial or system; arithmetic that wraps
/// exponents takes it explicitly.
class ExponentVector {
 public:
  ExponentVector() = default;  // the constant monomial 1
  ExponentVector(std::initializer_list<VarPower> factors);
  explicit ExponentVector(std::vector<VarPower> factors);

  static ExponentVector variable(Vertex v, int exponent = 1) { return ExponentVector(std::vector<VarPower>{{v, exponent}}); }

  [[nodiscard]] const std::vector<VarPower>& factors() const { return factors_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] int exponent(Vertex v) const;
  [[nodiscard]] std::vector<Vertex> support() const;

  /// Copy with the exponent of v replaced by e mod k.
  [[nodiscard]] ExponentVector with_exponent(Vertex v, int e, int k) const;
  /// Coordinatewise sum mod k.
  [[nodiscard]] ExponentVector times(const ExponentVector& other, int k) const;
  /// Vertex labels mapped through relabel[v] (relabel is indexed by old label).
  [[nodiscard]] ExponentVector relabeled(std::span<const Vertex> relabel) const;

  /// Human notation, e.g. "x_1^2x_3"; the constant monomial prints as "1".
  [[nodiscard]] std::string to_string() const;

  bool operator==(const ExponentVector&) const = default;

 private:
  void normalize();

  std::vector<VarPower> factors_;
  int degree_ = 0;
};

/// Graded lexicographic comparison with x_1 the most significant variable.
[[nodiscard]] std::strong_ordering glex_compare(const ExponentVector& a, const ExponentVector& b);

struct GlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return glex_compare(a, b) > 0; }
};
struct GlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return glex_compare(a, b) < 0; }
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& m) const noexcept;
};

/// All exponent vectors over `vertices` with entries in {0,...,k-1} and total
/// degree at most max_degree, GLEX-descending (index 0 is the largest, the
/// constant monomial is last). `vertices` must be sorted ascending.
[[nodiscard]] std::vector<ExponentVector> enumerate_monomials(std::span<const Vertex> vertices, int k, int max_degree);

/// Parses "x_1^2x_3" / "1" back into an exponent vector.
[[nodiscard]] ExponentVector parse_monomial(const std::string& text);

}  // namespace nullcert
