#include "nullcert/field.hpp"

#include <charconv>

namespace nullcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw FieldError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw FieldError("inverse of zero in " + name());
  return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw FieldError("not an integer: '" + std::string(text) + "'");
  return from_int(v);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw FieldError("inverse of zero in qq");
  return 1 / a;
}

RationalField::value_type RationalField::parse(std::string_view text) const {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0)
    throw FieldError("not a rational: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  PrimeField check(p);  // validates
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.starts_with("gf:")) {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw FieldError("bad field modulus in '" + std::string(text) + "'");
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected gf:<p> or qq)");
}

std::string FieldSpec::to_string() const { return kind == Kind::prime ? "gf:" + std::to_string(p) : "qq"; }

bool FieldSpec::supports_colors(int k) const {
  if (k < 2) return false;
  return kind == Kind::rationals || k % static_cast<int>(p) != 0;
}

bool FieldSpec::has_roots_of_unity(int k) const {
  if (kind == Kind::rationals) return k <= 2;
  return k >= 1 && (p - 1) % static_cast<std::uint32_t>(k) == 0;
}

std::uint32_t smallest_prime_not_dividing(int k) {
  for (std::uint32_t p = 2;; ++p)
    if (is_prime(p) && k % static_cast<int>(p) != 0) return p;
}

std::uint32_t smallest_prime_one_mod(int k) {
  for (std::uint32_t p = 2;; ++p)
    if (is_prime(p) && (p - 1) % static_cast<std::uint32_t>(k) == 0) return p;
}

namespace {

bool is_primitive_root(const PrimeField& f, std::uint32_t g) {
  const std::uint32_t order = f.modulus() - 1;
  std::uint32_t m = order;
  for (std::uint32_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    if (f.pow(g, order / q) == 1) return false;
    while (m % q == 0) m /= q;
  }
  if (m > 1 && f.pow(g, order / m) == 1) return false;
  return true;
}

}  // namespace

std::vector<std::uint32_t> kth_roots_of_unity(const PrimeField& field, int k) {
  const std::uint32_t p = field.modulus();
  if (k < 1 || (p - 1) % static_cast<std::uint32_t>(k) != 0)
    throw FieldError("gf:" + std::to_string(p) + " has no primitive " + std::to_string(k) +
                     "-th root of unity (need p = 1 mod k)");
  std::uint32_t g = 1;
  if (p > 2) {
    g = 2;
    while (!is_primitive_root(field, g)) ++g;
  }
  const auto h = field.pow(g, (p - 1) / static_cast<std::uint32_t>(k));
  std::vector<std::uint32_t> roots;
  roots.reserve(k);
  std::uint32_t cur = 1;
  for (int i = 0; i < k; ++i) {
    roots.push_back(cur);
    cur = field.mul(cur, h);
  }
  return roots;
}

}  // namespace nullcert
