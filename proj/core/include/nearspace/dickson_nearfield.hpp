#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearspace/finite_field.hpp"

namespace nearspace {

struct DicksonPair {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  friend bool operator==(const DicksonPair&, const DicksonPair&) = default;
};

/// Throws NotPrimePower if q is not a prime power.
bool is_dickson_pair(std::uint64_t q, std::uint32_t m);

/// Human-readable reason the pair fails, or nullopt if it is a Dickson pair.
std::optional<std::string> dickson_pair_violation(std::uint64_t q, std::uint32_t m);

/// A triple with (alpha + beta) o lambda != alpha o lambda + beta o lambda.
struct NDTriple {
  Elem alpha;
  Elem beta;
  Elem lambda;
  friend bool operator==(const NDTriple&, const NDTriple&) = default;
};

/// The finite Dickson nearfield DN(q, m): GF(q^m) with multiplication
///
///   a o b = a * b^(q^k),  k such that dlog(a) = (q^k - 1)/(q - 1)  (mod m),
///
/// and 0 o b = 0. The twist is selected by the left operand, so the result is
/// left distributive: a o (b + c) = a o b + a o c. For m = 1 it is the field.
class Nearfield {
 public:
  /// Orders up to this bound get dense add/mul tables.
  static constexpr std::uint32_t kTableOrderLimit = 1024;
  /// Orders up to this bound get exhaustive axiom checks at build time.
  static constexpr std::uint32_t kExhaustiveCheckLimit = 81;

  static Nearfield build(std::uint64_t q, std::uint32_t m,
                         std::uint64_t cap = FiniteField::kDefaultCap);

  const DicksonPair& pair() const noexcept { return pair_; }
  std::uint64_t q() const noexcept { return pair_.q; }
  std::uint32_t grade() const noexcept { return pair_.m; }
  bool is_field() const noexcept { return pair_.m == 1; }
  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_.order(); }
  bool contains(Elem a) const noexcept { return field_.contains(a); }

  /// mu(k) = (q^k - 1)/(q - 1) mod m for k in [0, m).
  const std::vector<std::uint32_t>& mu_table() const noexcept { return mu_; }
  /// Frobenius exponent k for each residue class dlog(a) mod m.
  const std::vector<std::uint32_t>& coset_exponent() const noexcept { return coset_k_; }
  /// The k used when a is the left operand (0 for a = 0).
  std::uint32_t twist_exponent(Elem a) const;

  Elem add(Elem a, Elem b) const noexcept {
    return add_.empty() ? field_.add(a, b) : Elem{add_[a.index * order() + b.index]};
  }
  Elem neg(Elem a) const noexcept {
    return neg_.empty() ? field_.neg(a) : Elem{neg_[a.index]};
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    return mul_.empty() ? mul_untabled(a, b) : Elem{mul_[a.index * order() + b.index]};
  }
  /// The unique b with a o b = 1 (which also satisfies b o a = 1).
  Elem inv(Elem a) const;

  /// All elements in canonical order.
  std::vector<Elem> elements() const;

  /// First non-distributive triple in canonical order, cached at build time.
  /// Empty for m = 1.
  const std::optional<NDTriple>& canonical_triple() const noexcept { return triple_; }

 private:
  Nearfield(DicksonPair pair, FiniteField field)
      : pair_(pair), field_(std::move(field)) {}
  Elem mul_untabled(Elem a, Elem b) const noexcept;
  void verify_axioms() const;

  DicksonPair pair_;
  FiniteField field_;
  std::vector<std::uint32_t> mu_;
  std::vector<std::uint32_t> coset_k_;
  std::vector<std::uint64_t> frob_;  // q^k mod (order - 1)
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> mul_;
  std::optional<NDTriple> triple_;
};

/// (alpha + beta) o lambda - alpha o lambda - beta o lambda.
Elem distributivity_defect(const Nearfield& R, const NDTriple& t) noexcept;

inline bool is_nd_triple(const Nearfield& R, const NDTriple& t) noexcept {
  return !distributivity_defect(R, t).is_zero();
}

/// R_d = { z : (x + y) o z = x o z + y o z for all x, y }, by exhaustive
/// search. Checks that the result is a subfield of size q.
std::vector<Elem> distributive_elements(const Nearfield& R);

/// First triple in lexicographic (alpha, beta, lambda) order with a nonzero
/// distributivity defect. Throws FullyDistributive when m = 1.
NDTriple find_nd_triple(const Nearfield& R);

struct CayleyTable {
  std::vector<Elem> labels;   // canonical order
  std::vector<Elem> entries;  // row-major, entry(a, b) = a o b

  std::size_t size() const noexcept { return labels.size(); }
  Elem at(std::size_t row, std::size_t col) const { return entries[row * size() + col]; }
};

CayleyTable cayley_table(const Nearfield& R, std::uint32_t cap = Nearfield::kTableOrderLimit);

}  // namespace nearspace
