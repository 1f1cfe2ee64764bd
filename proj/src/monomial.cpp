#include "nullcert/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nullcert {

ExponentVector::ExponentVector(std::initializer_list<VarPower> factors) : factors_(factors) { normalize(); }

ExponentVector::ExponentVector(std::vector<VarPower> factors) : factors_(std::move(factors)) { normalize(); }

void ExponentVector::normalize() {
  std::sort(factors_.begin(), factors_.end(),
            [](const VarPower& a, const VarPower& b) { return a.vertex < b.vertex; });
  std::vector<VarPower> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.exponent < 0) throw std::invalid_argument("negative exponent");
    if (!merged.empty() && merged.back().vertex == f.vertex)
      merged.back().exponent += f.exponent;
    else
      merged.push_back(f);
  }
  std::erase_if(merged, [](const VarPower& f) { return f.exponent == 0; });
  factors_ = std::move(merged);
  degree_ = 0;
  for (const auto& f : factors_) degree_ += f.exponent;
}

int ExponentVector::exponent(Vertex v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const VarPower& f, Vertex x) { return f.vertex < x; });
  return (it != factors_.end() && it->vertex == v) ? it->exponent : 0;
}

std::vector<Vertex> ExponentVector::support() const {
  std::vector<Vertex> s;
  s.reserve(factors_.size());
  for (const auto& f : factors_) s.push_back(f.vertex);
  return s;
}

ExponentVector ExponentVector::with_exponent(Vertex v, int e, int k) const {
  e %= k;
  if (e < 0) e += k;
  ExponentVector out;
  out.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.vertex >= v) {
      if (e != 0) out.factors_.push_back({v, e});
      placed = true;
      if (f.vertex == v) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && e != 0) out.factors_.push_back({v, e});
  out.degree_ = degree_ - exponent(v) + e;
  return out;
}

ExponentVector ExponentVector::times(const ExponentVector& other, int k) const {
  ExponentVector out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->vertex < b->vertex)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->vertex < a->vertex) {
      out.factors_.push_back(*b++);
    } else {
      int e = (a->exponent + b->exponent) % k;
      if (e != 0) out.factors_.push_back({a->vertex, e});
      ++a;
      ++b;
    }
  }
  for (const auto& f : out.factors_) out.degree_ += f.exponent;
  return out;
}

ExponentVector ExponentVector::relabeled(std::span<const Vertex> relabel) const {
  std::vector<VarPower> moved;
  moved.reserve(factors_.size());
  for (const auto& f : factors_) moved.push_back({relabel[f.vertex], f.exponent});
  return ExponentVector(std::move(moved));
}

std::string ExponentVector::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    s += "x_" + std::to_string(f.vertex);
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

std::strong_ordering glex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    // The vector holding the smaller vertex has a positive exponent where the
    // other has zero, and that vertex is the more significant one.
    if (fa[i].vertex != fb[i].vertex) return fa[i].vertex < fb[i].vertex ? std::strong_ordering::greater
                                                                          : std::strong_ordering::less;
    if (fa[i].exponent != fb[i].exponent) return fa[i].exponent <=> fb[i].exponent;
  }
  // Equal degree and equal common prefix force equal length.
  return fa.size() <=> fb.size();
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& f : m.factors()) {
    h ^= static_cast<std::size_t>(f.vertex) * 0x100000001b3ull + static_cast<std::size_t>(f.exponent) +
         (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Emits, in lex-descending order, every vector over vertices[pos..] with the
// given remaining degree exactly.
void emit_exact(std::span<const Vertex> vertices, std::size_t pos, int k, int remaining,
                std::vector<VarPower>& prefix, std::vector<ExponentVector>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (pos == vertices.size()) return;
  const int rest = static_cast<int>(vertices.size() - pos - 1);
  const int hi = std::min(k - 1, remaining);
  for (int e = hi; e >= 0; --e) {
    if (remaining - e > rest * (k - 1)) break;
    if (e > 0) prefix.push_back({vertices[pos], e});
    emit_exact(vertices, pos + 1, k, remaining - e, prefix, out);
    if (e > 0) prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(std::span<const Vertex> vertices, int k, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  if (!std::is_sorted(vertices.begin(), vertices.end())) throw std::invalid_argument("vertices must be sorted");
  std::vector<ExponentVector> out;
  std::vector<VarPower> prefix;
  const int top = std::min<long>(max_degree, static_cast<long>(vertices.size()) * (k - 1));
  for (int deg = top; deg >= 0; --deg) emit_exact(vertices, 0, k, deg, prefix, out);
  return out;
}

ExponentVector parse_monomial(const std::string& text) {
  if (text == "1") return {};
  std::vector<VarPower> factors;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("bad monomial '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  while (i < text.size()) {
    if (text.compare(i, 2, "x_") != 0) throw std::invalid_argument("bad monomial '" + text + "'");
    i += 2;
    const int v = read_int(i);
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = read_int(i);
    }
    factors.push_back({v, e});
  }
  return ExponentVector(std::move(factors));
}

}  // namespace nullcert
