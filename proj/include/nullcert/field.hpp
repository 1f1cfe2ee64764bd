#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nullcert {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requirements shared by every coefficient field the library is instantiated with.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, std::int64_t i) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(i) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
};

/// GF(p) for a prime p < 2^31, elements kept reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] std::uint64_t characteristic() const { return p_; }

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  [[nodiscard]] value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;  // p < 2^31 keeps this in range
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const;
  [[nodiscard]] value_type inv(value_type a) const;
  [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }
  [[nodiscard]] bool equal(value_type a, value_type b) const { return a == b; }

  [[nodiscard]] std::string to_string(value_type a) const { return std::to_string(a); }
  [[nodiscard]] value_type parse(std::string_view text) const;
  [[nodiscard]] std::string name() const { return "gf:" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using value_type = mpq_class;

  [[nodiscard]] std::uint64_t characteristic() const { return 0; }

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  [[nodiscard]] value_type inv(const value_type& a) const;
  [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }

  [[nodiscard]] std::string to_string(const value_type& a) const { return a.get_str(); }
  [[nodiscard]] value_type parse(std::string_view text) const;
  [[nodiscard]] std::string name() const { return "qq"; }

  bool operator==(const RationalField&) const = default;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

/// Runtime description of a coefficient field ("gf:p" or "qq").
struct FieldSpec {
  enum class Kind { prime, rationals };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return {}; }
  static FieldSpec parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::uint64_t characteristic() const { return kind == Kind::prime ? p : 0; }
  // The coloring encoding needs char(K) not dividing k.
  [[nodiscard]] bool supports_colors(int k) const;
  // k distinct k-th roots of unity exist in the field.
  [[nodiscard]] bool has_roots_of_unity(int k) const;

  bool operator==(const FieldSpec&) const = default;
};

/// Calls fn with a concrete PrimeField or RationalField.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) return fn(PrimeField(spec.p));
  return fn(RationalField{});
}

[[nodiscard]] bool is_prime(std::uint64_t n);
[[nodiscard]] std::uint32_t smallest_prime_not_dividing(int k);
[[nodiscard]] std::uint32_t smallest_prime_one_mod(int k);

/// Throws FieldError unless char(field) does not divide k and k >= 2.
template <CoefficientField F>
void require_colors_supported(const F& field, int k) {
  if (k < 2) throw FieldError("number of colors must be at least 2, got " + std::to_string(k));
  const auto c = field.characteristic();
  if (c != 0 && static_cast<std::uint64_t>(k) % c == 0)
    throw FieldError("field characteristic " + std::to_string(c) + " divides k=" + std::to_string(k));
}

/// All k-th roots of unity in GF(p), as successive powers of g^((p-1)/k) for the
/// smallest primitive root g. Requires p = 1 (mod k).
[[nodiscard]] std::vector<std::uint32_t> kth_roots_of_unity(const PrimeField& field, int k);

}  // namespace nullcert
