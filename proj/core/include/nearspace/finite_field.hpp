#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nearspace {

/// A field (or nearfield) element, identified by its canonical index: the
/// coefficient vector (x^0 first) read as a base-p integer. Ascending index
/// order is the canonical element order used throughout the library.
struct Elem {
  std::uint32_t index = 0;

  constexpr bool is_zero() const noexcept { return index == 0; }
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
};

/// Returns (p, l) with n = p^l, or nullopt if n is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// GF(p^l) with log/antilog tables. Immutable after construction.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree l (comparing (c_{l-1}, ..., c_0)); the generator is the smallest
/// element, in canonical order, of multiplicative order p^l - 1.
class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  static FiniteField build(std::uint32_t p, std::uint32_t l,
                           std::uint64_t cap = kDefaultCap);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return l_; }
  std::uint32_t order() const noexcept { return order_; }

  /// Monic modulus, ascending coefficients c_0..c_l (c_l = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }

  static constexpr Elem zero() noexcept { return Elem{0}; }
  static constexpr Elem one() noexcept { return Elem{1}; }

  bool contains(Elem a) const noexcept { return a.index < order_; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  /// Coefficients are reduced mod p; more than l of them is an error.
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  /// Table multiplication via discrete logs.
  Elem mul(Elem a, Elem b) const noexcept;
  /// Schoolbook multiplication reduced mod the modulus; must agree with mul().
  Elem mul_poly(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Index i in [0, order-1) with generator^i = a.
  std::uint32_t dlog(Elem a) const;
  /// generator^i, i taken mod (order - 1).
  Elem exp(std::uint64_t i) const noexcept {
    return Elem{exp_table_[i % (order_ - 1)]};
  }

  std::span<const std::uint32_t> exp_table() const noexcept { return exp_table_; }
  std::span<const std::uint32_t> log_table() const noexcept { return log_table_; }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t l_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
  Elem generator_{};
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;  // log_table_[0] unused
};

}  // namespace nearspace
