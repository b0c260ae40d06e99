#include "nearspace/dickson_nearfield.hpp"

#include <algorithm>
#include <random>

#include "nearspace/error.hpp"

namespace nearspace {

namespace {

PrimePower require_prime_power(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return *pp;
}

}  // namespace

std::optional<std::string> dickson_pair_violation(std::uint64_t q, std::uint32_t m) {
  require_prime_power(q);
  if (m < 1) throw Error(ErrorCode::BadRange, "grade must be >= 1");
  for (auto r : prime_factors(m)) {
    if ((q - 1) % r != 0) {
      return "prime divisor " + std::to_string(r) + " of n does not divide q-1";
    }
  }
  if (q % 4 == 3 && m % 4 == 0) return "q ≡ 3 mod 4 and 4 | n";
  return std::nullopt;
}

bool is_dickson_pair(std::uint64_t q, std::uint32_t m) {
  return !dickson_pair_violation(q, m).has_value();
}

Nearfield Nearfield::build(std::uint64_t q, std::uint32_t m, std::uint64_t cap) {
  if (auto why = dickson_pair_violation(q, m)) {
    throw Error(ErrorCode::NotDicksonPair, "(" + std::to_string(q) + ", " +
                                               std::to_string(m) + ") is not a Dickson pair: " + *why);
  }
  const PrimePower pp = require_prime_power(q);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= q;
    if (order > cap) {
      throw Error(ErrorCode::CapExceeded, "nearfield order exceeds cap " + std::to_string(cap));
    }
  }

  Nearfield R(DicksonPair{q, m},
              FiniteField::build(static_cast<std::uint32_t>(pp.prime), pp.exponent * m, cap));

  R.mu_.resize(m);
  R.coset_k_.assign(m, m);  // m marks "unassigned"
  std::uint64_t partial = 0;  // 1 + q + ... + q^{k-1} mod m
  std::uint64_t q_pow = 1;    // q^k mod m
  for (std::uint32_t k = 0; k < m; ++k) {
    R.mu_[k] = static_cast<std::uint32_t>(partial);
    if (R.coset_k_[partial] != m) {
      throw Error(ErrorCode::InternalError, "coset exponent map is not a bijection");
    }
    R.coset_k_[partial] = k;
    partial = (partial + q_pow) % m;
    q_pow = q_pow * (q % m) % m;
  }

  const std::uint64_t group_order = order - 1;
  R.frob_.resize(m);
  std::uint64_t f = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    R.frob_[k] = f;
    f = f * (q % group_order) % group_order;
  }

  const std::uint32_t n = R.order();
  if (n <= kTableOrderLimit) {
    R.neg_.resize(n);
    R.add_.resize(std::size_t{n} * n);
    R.mul_.resize(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      R.neg_[a] = R.field_.neg(Elem{a}).index;
      for (std::uint32_t b = 0; b < n; ++b) {
        R.add_[a * n + b] = R.field_.add(Elem{a}, Elem{b}).index;
        R.mul_[a * n + b] = R.mul_untabled(Elem{a}, Elem{b}).index;
      }
    }
  }

  R.verify_axioms();
  if (m > 1) R.triple_ = find_nd_triple(R);
  return R;
}

std::uint32_t Nearfield::twist_exponent(Elem a) const {
  if (a.is_zero()) return 0;
  return coset_k_[field_.dlog(a) % pair_.m];
}

Elem Nearfield::mul_untabled(Elem a, Elem b) const noexcept {
  if (a.is_zero() || b.is_zero()) return Elem{0};
  const auto log_table = field_.log_table();
  const std::uint64_t la = log_table[a.index];
  const std::uint64_t lb = log_table[b.index];
  const std::uint32_t k = coset_k_[la % pair_.m];
  return field_.exp(la + lb * frob_[k]);
}

Elem Nearfield::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  const std::uint64_t group_order = order() - 1;
  const std::uint64_t la = field_.dlog(a);
  const std::uint32_t k = twist_exponent(a);
  const std::uint64_t undo = frob_[(pair_.m - k) % pair_.m];
  const Elem b = field_.exp(((group_order - la) % group_order) * undo);
  if (mul(a, b) != Elem{1} || mul(b, a) != Elem{1}) {
    throw Error(ErrorCode::InternalError, "nearfield inverse check failed");
  }
  return b;
}

std::vector<Elem> Nearfield::elements() const {
  std::vector<Elem> out(order());
  for (std::uint32_t i = 0; i < order(); ++i) out[i] = Elem{i};
  return out;
}

void Nearfield::verify_axioms() const {
  const std::uint32_t n = order();
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
      throw Error(ErrorCode::InternalError, "left distributivity fails");
    }
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw Error(ErrorCode::InternalError, "associativity fails");
    }
  };
  auto check_single = [&](Elem a) {
    if (mul(Elem{1}, a) != a || mul(a, Elem{1}) != a) {
      throw Error(ErrorCode::InternalError, "1 is not a two-sided identity");
    }
    if (!mul(Elem{0}, a).is_zero() || !mul(a, Elem{0}).is_zero()) {
      throw Error(ErrorCode::InternalError, "zero is not absorbing");
    }
    if (!a.is_zero()) inv(a);
  };

  if (n <= kExhaustiveCheckLimit) {
    for (std::uint32_t a = 0; a < n; ++a) {
      check_single(Elem{a});
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t c = 0; c < n; ++c) check_triple(Elem{a}, Elem{b}, Elem{c});
      }
    }
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (int i = 0; i < 20000; ++i) {
    const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    check_single(a);
    check_triple(a, b, c);
  }
}

Elem distributivity_defect(const Nearfield& R, const NDTriple& t) noexcept {
  const Elem lhs = R.mul(R.add(t.alpha, t.beta), t.lambda);
  return R.sub(R.sub(lhs, R.mul(t.alpha, t.lambda)), R.mul(t.beta, t.lambda));
}

std::vector<Elem> distributive_elements(const Nearfield& R) {
  const std::uint32_t n = R.order();
  std::vector<Elem> out;
  for (std::uint32_t z = 0; z < n; ++z) {
    bool distributive = true;
    for (std::uint32_t x = 0; x < n && distributive; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (!is_nd_triple(R, NDTriple{Elem{x}, Elem{y}, Elem{z}})) continue;
        distributive = false;
        break;
      }
    }
    if (distributive) out.push_back(Elem{z});
  }

  if (out.size() != R.q()) {
    throw Error(ErrorCode::InternalError, "distributive elements do not number q");
  }
  auto member = [&](Elem e) { return std::binary_search(out.begin(), out.end(), e); };
  for (Elem a : out) {
    if (!a.is_zero() && !member(R.inv(a))) {
      throw Error(ErrorCode::InternalError, "distributive elements not closed under inverses");
    }
    for (Elem b : out) {
      if (!member(R.add(a, b)) || !member(R.mul(a, b))) {
        throw Error(ErrorCode::InternalError, "distributive elements not closed");
      }
    }
  }
  return out;
}

NDTriple find_nd_triple(const Nearfield& R) {
  if (R.is_field()) {
    throw Error(ErrorCode::FullyDistributive, "DN(q,1) is a field; no non-distributive triple");
  }
  const std::uint32_t n = R.order();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        NDTriple t{Elem{a}, Elem{b}, Elem{c}};
        if (is_nd_triple(R, t)) return t;
      }
    }
  }
  throw Error(ErrorCode::InternalError, "no non-distributive triple found for m > 1");
}

CayleyTable cayley_table(const Nearfield& R, std::uint32_t cap) {
  const std::uint32_t n = R.order();
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded, "Cayley table of order " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(cap));
  }
  CayleyTable t;
  t.labels = R.elements();
  t.entries.reserve(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) t.entries.push_back(R.mul(Elem{a}, Elem{b}));
  }
  return t;
}

}  // namespace nearspace
