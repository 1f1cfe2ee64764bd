#include "nullcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nullcert {

Monomial::Monomial(int nvars, const ExponentVector& m) : Monomial(nvars) {
  for (const auto& f : m.factors()) {
    if (f.vertex < 1 || f.vertex > nvars) throw std::out_of_range("variable x_" + std::to_string(f.vertex) + " out of range");
    set_exponent(f.vertex, f.exponent);
  }
}

void Monomial::set_exponent(Vertex v, int e) {
  auto& slot = exps_[static_cast<std::size_t>(v - 1)];
  degree_ += e - slot;
  slot = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] + other.exps_[i]);
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::invalid_argument("monomial does not divide");
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

ExponentVector Monomial::to_exponent_vector() const {
  std::vector<VarPower> f;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) f.push_back({static_cast<Vertex>(i + 1), exps_[i]});
  return ExponentVector(std::move(f));
}

std::strong_ordering glex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] != y[i]) return x[i] <=> y[i];
  return x.size() <=> y.size();
}

template <CoefficientField F>
FullRingPolynomial<F>::FullRingPolynomial(F field, int nvars, std::vector<Term> terms)
    : field_(std::move(field)), nvars_(nvars) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return glex_compare(a.first, b.first) > 0; });
  for (auto& t : terms) {
    if (t.first.nvars() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second = field_.add(terms_.back().second, t.second);
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [&](const Term& t) { return field_.is_zero(t.second); });
}

template <CoefficientField F>
FullRingPolynomial<F> FullRingPolynomial<F>::constant(F field, int nvars, const value_type& c) {
  std::vector<Term> t;
  t.emplace_back(Monomial(nvars), c);
  return FullRingPolynomial(std::move(field), nvars, std::move(t));
}

template <CoefficientField F>
FullRingPolynomial<F> FullRingPolynomial<F>::variable(F field, int nvars, Vertex v, int e) {
  Monomial m(nvars);
  m.set_exponent(v, e);
  std::vector<Term> t;
  t.emplace_back(std::move(m), field.one());
  return FullRingPolynomial(std::move(field), nvars, std::move(t));
}

template <CoefficientField F>
int FullRingPolynomial<F>::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

template <CoefficientField F>
FullRingPolynomial<F> FullRingPolynomial<F>::scaled(const value_type& c) const {
  FullRingPolynomial out(field_, nvars_);
  if (field_.is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, a] : terms_) out.terms_.emplace_back(m, field_.mul(a, c));
  return out;
}

template <CoefficientField F>
FullRingPolynomial<F> FullRingPolynomial<F>::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(leading_coefficient()));
}

template <CoefficientField F>
FullRingPolynomial<F> FullRingPolynomial<F>::times_term(const Monomial& m, const value_type& c) const {
  FullRingPolynomial out(field_, nvars_);
  if (field_.is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [t, a] : terms_) out.terms_.emplace_back(t * m, field_.mul(a, c));
  return out;
}

template <CoefficientField F>
FullRingPolynomial<F>& FullRingPolynomial<F>::operator+=(const FullRingPolynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      merged.push_back(*b++);
      continue;
    }
    const auto cmp = glex_compare(a->first, b->first);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      auto s = field_.add(a->second, b->second);
      if (!field_.is_zero(s)) merged.emplace_back(std::move(a->first), std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

template <CoefficientField F>
FullRingPolynomial<F>& FullRingPolynomial<F>::operator-=(const FullRingPolynomial& o) {
  return *this += o.scaled(field_.neg(field_.one()));
}

template <CoefficientField F>
typename F::value_type FullRingPolynomial<F>::evaluate(const std::vector<value_type>& point) const {
  if (static_cast<int>(point.size()) <= nvars_) throw std::invalid_argument("point has too few coordinates");
  value_type total = field_.zero();
  for (const auto& [m, c] : terms_) {
    value_type t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exponents()[static_cast<std::size_t>(i)]; ++e) t = field_.mul(t, point[static_cast<std::size_t>(i) + 1]);
    total = field_.add(total, t);
  }
  return total;
}

template <CoefficientField F>
bool FullRingPolynomial<F>::operator==(const FullRingPolynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || !field_.equal(terms_[i].second, o.terms_[i].second)) return false;
  return true;
}

template <CoefficientField F>
std::string FullRingPolynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += field_.to_string(c);
    if (m.degree() > 0) s += "*" + m.to_string();
  }
  return s;
}

template <CoefficientField F>
ColoringIdeal<F> ColoringIdeal<F>::of(const Subgraph& h, int k, int nvars, const F& field) {
  require_colors_supported(field, k);
  ColoringIdeal out{field, k, nvars, h, {}};
  using Poly = FullRingPolynomial<F>;
  for (Vertex v : h.vertices)
    out.generators.push_back(Poly::variable(field, nvars, v, k) - Poly::constant(field, nvars, field.one()));
  for (const auto& e : h.edges) {
    std::vector<typename Poly::Term> terms;
    for (int r = 0; r < k; ++r) {
      Monomial m(nvars);
      m.set_exponent(e.u, k - 1 - r);
      m.set_exponent(e.v, r);
      terms.emplace_back(std::move(m), field.one());
    }
    out.generators.emplace_back(field, nvars, std::move(terms));
  }
  return out;
}

template <CoefficientField F>
std::vector<Monomial> GroebnerBasis<F>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : polynomials) out.push_back(p.leading_monomial());
  return out;
}

template <CoefficientField F>
FullRingPolynomial<F> s_polynomial(const FullRingPolynomial<F>& f, const FullRingPolynomial<F>& g) {
  const F& field = f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), field.inv(f.leading_coefficient())) -
         g.times_term(l / g.leading_monomial(), field.inv(g.leading_coefficient()));
}

template <CoefficientField F>
FullRingPolynomial<F> normal_form(const FullRingPolynomial<F>& f, const std::vector<FullRingPolynomial<F>>& divisors) {
  using value_type = typename F::value_type;
  const F& field = f.field();
  std::map<Monomial, value_type, MonomialGreater> work;
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  std::vector<typename FullRingPolynomial<F>::Term> rest;
  while (!work.empty()) {
    auto top = work.begin();
    const FullRingPolynomial<F>* divisor = nullptr;
    for (const auto& g : divisors)
      if (!g.is_zero() && g.leading_monomial().divides(top->first)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      rest.emplace_back(top->first, top->second);
      work.erase(top);
      continue;
    }
    const Monomial q = top->first / divisor->leading_monomial();
    const value_type factor = field.mul(top->second, field.inv(divisor->leading_coefficient()));
    work.erase(top);
    for (auto t = divisor->terms().begin() + 1; t != divisor->terms().end(); ++t) {
      const value_type delta = field.neg(field.mul(factor, t->second));
      auto [it, inserted] = work.try_emplace(t->first * q, delta);
      if (!inserted) {
        it->second = field.add(it->second, delta);
        if (field.is_zero(it->second)) work.erase(it);
      }
    }
  }
  return FullRingPolynomial<F>(field, f.nvars(), std::move(rest));
}

template <CoefficientField F>
GroebnerBasis<F> buchberger(const F& field, int nvars, const std::vector<FullRingPolynomial<F>>& generators) {
  using Poly = FullRingPolynomial<F>;
  std::vector<Poly> basis;
  struct Pair {
    Monomial lcm;
    std::size_t seq;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    const auto c = glex_compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.seq < b.seq;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  std::size_t seq = 0;
  auto add = [&](Poly p) {
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i)
      pairs.insert({basis[i].leading_monomial().lcm(p.leading_monomial()), seq++, i, j});
    basis.push_back(std::move(p));
  };
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator has the wrong number of variables");
    if (!g.is_zero()) add(g.monic());
  }
  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (basis[p.i].leading_monomial().coprime(basis[p.j].leading_monomial())) continue;
    auto h = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (!h.is_zero()) add(h.monic());
  }

  // Minimize: drop elements whose leading monomial is divisible by another's
  // (the earlier one survives among equal leading monomials).
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return glex_compare(a.leading_monomial(), b.leading_monomial()) < 0; });

  // Interreduce: reduce each tail modulo the other elements.
  GroebnerBasis<F> out{field, nvars, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& p = minimal[i];
    Poly lead(field, nvars, {{p.leading_monomial(), p.leading_coefficient()}});
    out.polynomials.push_back((lead + normal_form(p - lead, others)).monic());
  }
  return out;
}

template <CoefficientField F>
bool is_reducible(const Monomial& m, const GroebnerBasis<F>& gb) {
  for (const auto& p : gb.polynomials)
    if (p.leading_monomial().divides(m)) return true;
  return false;
}

std::vector<std::string> leading_monomial_report(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return glex_compare(a, b) < 0; });
  std::vector<std::string> out;
  for (const auto& m : monomials) out.push_back(m.to_string());
  return out;
}

#define NULLCERT_INSTANTIATE_GROEBNER(F)                                                                            \
  template class FullRingPolynomial<F>;                                                                            \
  template struct ColoringIdeal<F>;                                                                                \
  template struct GroebnerBasis<F>;                                                                                \
  template FullRingPolynomial<F> s_polynomial<F>(const FullRingPolynomial<F>&, const FullRingPolynomial<F>&);     \
  template FullRingPolynomial<F> normal_form<F>(const FullRingPolynomial<F>&, const std::vector<FullRingPolynomial<F>>&); \
  template GroebnerBasis<F> buchberger<F>(const F&, int, const std::vector<FullRingPolynomial<F>>&);              \
  template bool is_reducible<F>(const Monomial&, const GroebnerBasis<F>&);

NULLCERT_INSTANTIATE_GROEBNER(PrimeField)
NULLCERT_INSTANTIATE_GROEBNER(RationalField)

}  // namespace nullcert
