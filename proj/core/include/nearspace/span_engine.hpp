#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nearspace/gen_engine.hpp"

namespace nearspace {

/// The coordinate subspace S_1 x ... x S_n with S_i = R for included
/// positions and {0} otherwise. Positions are 0-based.
class CoordMask {
 public:
  explicit CoordMask(std::size_t n = 0) : included_(n, false) {}

  std::size_t n() const noexcept { return included_.size(); }
  bool contains(std::size_t i) const { return included_.at(i); }
  void include(std::size_t i) { included_.at(i) = true; }
  std::size_t dimension() const noexcept;
  std::vector<std::size_t> positions() const;

  friend bool operator==(const CoordMask&, const CoordMask&) = default;

 private:
  std::vector<bool> included_;
};

/// One adjustment-trick application on a row u at positions j1 < j2:
///   a = u o ((u^{j2})^{-1} o beta), m = alpha at j2,
///   v = (m + a) o lambda - m o lambda,
/// so v - a o lambda is gamma at j2 and zero elsewhere.
struct AdjustmentStep {
  std::size_t row = 0;
  std::size_t j1 = 0;
  std::size_t j2 = 0;
  NDTriple triple;
  NfVector a;
  NfVector v;
  Elem gamma;
  NfVector unit;     // e_{j2} = (v - a o lambda) o gamma^{-1}
  NfVector reduced;  // u - e_{j2} o u^{j2}

  friend bool operator==(const AdjustmentStep&, const AdjustmentStep&) = default;
};

/// A single-support row scaled to a unit vector.
struct NormalizeStep {
  std::size_t row = 0;
  Elem by;
  friend bool operator==(const NormalizeStep&, const NormalizeStep&) = default;
};

using SpanStep = std::variant<AdjustmentStep, NormalizeStep>;

struct SpanCertificate {
  GenCertificate gen;
  std::vector<SpanStep> steps;
  friend bool operator==(const SpanCertificate&, const SpanCertificate&) = default;
};

AdjustmentStep adjustment_trick(const Nearfield& R, const NfVector& u, std::size_t j1,
                                std::size_t j2, const NDTriple& triple);

struct SpanResult {
  bool field_mode = false;
  /// Empty (n = 0) in field mode.
  CoordMask mask;
  /// Unit vectors e_j for the mask, ascending by position. In field mode, the
  /// classical row-space basis instead.
  std::vector<NfVector> rows;
  GenBasis gen_basis;
  SpanCertificate certificate;
};

/// Adjusted expanded Gaussian elimination. Throws FullyDistributive for m = 1.
SpanResult aege(const Nearfield& R, const NfMatrix& M);

/// aege for m > 1; for m = 1 the classical row space with field_mode set.
SpanResult span(const Nearfield& R, const NfMatrix& M);

/// Union of the supports of the input rows. Throws FullyDistributive for m = 1.
CoordMask span_mask_shortcut(const Nearfield& R, const NfMatrix& M);

/// Replays the gen certificate and every adjustment step, returning the mask
/// spanned by the certified unit vectors.
CoordMask replay_span(const Nearfield& R, const NfMatrix& input, const SpanCertificate& cert);

struct SubspaceVerdict {
  bool is_subspace = false;
  bool field_mode = false;
};

/// True iff every basis row has exactly one nonzero entry, i.e. gen = span.
/// In a field every R-subgroup is a subspace: {true, field_mode = true}.
SubspaceVerdict is_subspace(const Nearfield& R, const GenBasis& basis);

/// binomial(n, k), or 2^n when k is omitted. Throws BadRange for k > n or n > 63.
std::uint64_t subspace_count(std::uint32_t n, std::optional<std::uint32_t> k = std::nullopt);

}  // namespace nearspace
