#include "nearspace/finite_field.hpp"

#include <algorithm>
#include <string>

#include "nearspace/error.hpp"

namespace nearspace {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Poly out(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  out[degree] = 1;
  return out;
}

// Full irreducibility test by trial division with every monic polynomial of
// degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t l = 0;
  while (n > 1) {
    n /= factors.front();
    ++l;
  }
  return PrimePower{factors.front(), l};
}

FiniteField FiniteField::build(std::uint32_t p, std::uint32_t l, std::uint64_t cap) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  }
  if (l < 1) throw Error(ErrorCode::BadRange, "extension degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < l; ++i) {
    order *= p;
    if (order > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "field order " + std::to_string(p) + "^" + std::to_string(l) +
                      " exceeds cap " + std::to_string(cap));
    }
  }

  FiniteField f;
  f.p_ = p;
  f.l_ = l;
  f.order_ = static_cast<std::uint32_t>(order);
  f.digit_weight_.resize(l);
  std::uint32_t w = 1;
  for (std::uint32_t i = 0; i < l; ++i) {
    f.digit_weight_[i] = w;
    w *= p;
  }

  // The lexicographic order on (c_{l-1}, ..., c_0) is the numeric order of the
  // base-p code with c_{l-1} as the most significant digit.
  for (std::uint64_t code = 0; code < order; ++code) {
    Poly candidate = monic_from_code(code, l, p);
    if (is_irreducible(candidate, p)) {
      f.modulus_ = std::move(candidate);
      break;
    }
  }
  if (f.modulus_.empty()) {
    throw Error(ErrorCode::InternalError, "no irreducible polynomial found");
  }

  const std::uint64_t group_order = order - 1;
  const auto factors = prime_factors(group_order);
  auto poly_pow = [&](const Poly& base, std::uint64_t e) {
    Poly result{1};
    Poly b = base;
    while (e > 0) {
      if (e & 1) result = poly_mod(poly_mul(result, b, p), f.modulus_, p);
      b = poly_mod(poly_mul(b, b, p), f.modulus_, p);
      e >>= 1;
    }
    return result;
  };
  auto has_full_order = [&](std::uint32_t idx) {
    Poly a = f.coefficients(Elem{idx});
    trim(a);
    for (auto q : factors) {
      Poly r = poly_pow(a, group_order / q);
      if (r.size() == 1 && r[0] == 1) return false;
    }
    return true;
  };
  if (group_order == 1) {
    f.generator_ = Elem{1};
  } else {
    for (std::uint32_t idx = 1; idx < order; ++idx) {
      if (has_full_order(idx)) {
        f.generator_ = Elem{idx};
        break;
      }
    }
  }
  if (f.generator_.is_zero()) {
    throw Error(ErrorCode::InternalError, "no primitive element found");
  }

  f.exp_table_.resize(group_order);
  f.log_table_.assign(order, 0);
  Elem acc = one();
  for (std::uint64_t i = 0; i < group_order; ++i) {
    f.exp_table_[i] = acc.index;
    f.log_table_[acc.index] = static_cast<std::uint32_t>(i);
    acc = f.mul_poly(acc, f.generator_);
  }
  if (acc != one()) {
    throw Error(ErrorCode::InternalError, "generator order mismatch");
  }
  return f;
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
  std::vector<std::uint32_t> out(l_);
  std::uint32_t v = a.index;
  for (std::uint32_t i = 0; i < l_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Elem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > l_) {
    throw Error(ErrorCode::DegreeTooHigh, "too many coefficients for degree " +
                                              std::to_string(l_));
  }
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    idx += (coeffs[i] % p_) * digit_weight_[i];
  }
  return Elem{idx};
}

Elem FiniteField::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return Elem{a.index ^ b.index};
  std::uint32_t out = 0;
  std::uint32_t x = a.index, y = b.index;
  for (std::uint32_t i = 0; i < l_; ++i) {
    out += ((x % p_ + y % p_) % p_) * digit_weight_[i];
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem FiniteField::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < l_; ++i) {
    out += ((p_ - x % p_) % p_) * digit_weight_[i];
    x /= p_;
  }
  return Elem{out};
}

Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const noexcept {
  if (a.is_zero() || b.is_zero()) return zero();
  const std::uint64_t s = std::uint64_t{log_table_[a.index]} + log_table_[b.index];
  return Elem{exp_table_[s % (order_ - 1)]};
}

Elem FiniteField::mul_poly(Elem a, Elem b) const {
  Poly prod = poly_mul(coefficients(a), coefficients(b), p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  return from_coefficients(r);
}

Elem FiniteField::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  const std::uint32_t n = order_ - 1;
  return Elem{exp_table_[(n - log_table_[a.index]) % n]};
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t n = order_ - 1;
  const std::uint64_t s = (log_table_[a.index] * (e % n)) % n;
  return Elem{exp_table_[s]};
}

std::uint32_t FiniteField::dlog(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  return log_table_[a.index];
}

}  // namespace nearspace
