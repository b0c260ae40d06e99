#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearspace/span_engine.hpp"

namespace nearspace::oracle {

/// Size limits on R^n for brute-force closures. The subspace predicate
/// quantifies over all of R^n, hence its smaller default.
struct Config {
  std::uint64_t cap = 100'000;
  std::uint64_t span_cap = 1'000;
};

/// A deduplicated set of vectors of R^n, stored as sorted base-|R| codes.
class VectorSet {
 public:
  VectorSet(std::size_t n, std::uint32_t order, std::vector<std::uint64_t> sorted_codes,
            std::string stage, std::size_t rounds = 0);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
  /// "LC_<i>" for linear-combination stages, "closure" for fixpoints.
  const std::string& stage() const noexcept { return stage_; }
  /// Worklist rounds (or LC stages) until nothing new appeared.
  std::size_t rounds() const noexcept { return rounds_; }

  bool contains(const NfVector& v) const;
  bool includes(const VectorSet& other) const;
  std::vector<NfVector> vectors() const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.n_ == b.n_ && a.codes_ == b.codes_;
  }

 private:
  std::size_t n_;
  std::uint32_t order_;
  std::vector<std::uint64_t> codes_;
  std::string stage_;
  std::size_t rounds_;
};

/// Base-|R| code of v, coordinate 0 least significant.
std::uint64_t encode(const Nearfield& R, const NfVector& v);
NfVector decode(const Nearfield& R, std::size_t n, std::uint64_t code);

/// LC_0 = the inputs; LC_{i+1} = sums of w o lambda over w in LC_i.
VectorSet lc_stage(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                   std::size_t i, const Config& cfg = {});

/// Iterates LC_i until LC_{i+1} = LC_i; rounds() is the stabilizing index.
VectorSet lc_union(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                   const Config& cfg = {});

/// Smallest R-subgroup containing the inputs, as a worklist fixpoint under
/// addition and right scalar multiplication.
VectorSet gen_bruteforce(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                         const Config& cfg = {});

/// Smallest subspace containing the inputs: gen closure plus
/// (m + s) o r - m o r for every m in R^n, s in the set, r in R, to fixpoint.
VectorSet span_bruteforce(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                          const Config& cfg = {});

bool is_rsubgroup_set(const Nearfield& R, const VectorSet& set, const Config& cfg = {});

/// (m + s) o r - m o r, not in the set.
struct SubspaceWitness {
  NfVector m;
  NfVector s;
  Elem r;
  NfVector value;
};

struct SubspaceCheck {
  bool holds = false;
  std::optional<SubspaceWitness> witness;
};

SubspaceCheck is_subspace_set(const Nearfield& R, const VectorSet& set, const Config& cfg = {});

/// All sums u_1 o r_1 + ... + u_k o r_k. Throws NotDirect when the result has
/// fewer than |R|^k elements.
VectorSet enumerate_basis(const Nearfield& R, const GenBasis& basis, const Config& cfg = {});
VectorSet enumerate_basis(const Nearfield& R, const CoordMask& mask, const Config& cfg = {});

/// Every vector of R^n in canonical code order.
std::vector<NfVector> all_vectors(const Nearfield& R, std::size_t n, const Config& cfg = {});

}  // namespace nearspace::oracle
