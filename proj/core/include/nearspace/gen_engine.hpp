#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nearspace/vector_space.hpp"

namespace nearspace {

/// Rows u_1..u_k' with gen(inputs) = u_1 R + ... + u_k' R, the sum direct.
/// Outside field mode every column has at most one nonzero entry; in field
/// mode (m = 1) the rows are the classical RREF row-space basis.
struct GenBasis {
  std::size_t n = 0;
  std::vector<NfVector> rows;
  bool field_mode = false;

  std::size_t rank() const noexcept { return rows.size(); }
  friend bool operator==(const GenBasis&, const GenBasis&) = default;
};

/// Every column carries at most one nonzero entry and no row is zero.
bool satisfies_column_condition(const GenBasis& basis);

/// One application of the distributivity trick to rows r and s at column j.
struct TrickRecord {
  std::size_t row_r = 0;
  std::size_t row_s = 0;
  std::size_t column = 0;
  NDTriple triple;
  NfVector theta;
  Elem gamma;
  NfVector phi;

  friend bool operator==(const TrickRecord&, const TrickRecord&) = default;
};

/// theta = (w_r a' + w_s b') o lambda - w_r o (a' o lambda) - w_s o (b' o lambda)
/// with a' = (w_r^j)^{-1} o alpha and b' = (w_s^j)^{-1} o beta. Requires
/// w_r^j, w_s^j nonzero and, in every column before j, at least one of the
/// two rows zero. theta vanishes before j and theta^j = gamma is the
/// triple's distributivity defect; phi = theta o gamma^{-1}.
TrickRecord distributivity_trick(const Nearfield& R, const NfVector& w_r, const NfVector& w_s,
                                 std::size_t j, const NDTriple& triple);

struct TrickStep {
  TrickRecord record;
  friend bool operator==(const TrickStep&, const TrickStep&) = default;
};
struct AppendRow {
  NfVector row;
  friend bool operator==(const AppendRow&, const AppendRow&) = default;
};
struct DropRow {
  std::size_t row;
  friend bool operator==(const DropRow&, const DropRow&) = default;
};

using GenStep = std::variant<SwapRows, ScaleRow, AddMultiple, TrickStep, AppendRow, DropRow>;

struct GenCertificate {
  std::vector<GenStep> steps;
  friend bool operator==(const GenCertificate&, const GenCertificate&) = default;
};

struct GenResult {
  GenBasis basis;
  GenCertificate certificate;
};

/// Expanded Gaussian elimination: RREF, then for the leftmost column holding
/// two or more nonzeros apply the distributivity trick to its two topmost
/// rows, append phi and clear that column in every other row with phi.
/// Repeats until every column is settled, then drops zero rows.
/// For m = 1 this is plain RREF and the basis is flagged field_mode.
GenResult ege(const Nearfield& R, const NfMatrix& M);

/// Replays a certificate against the input matrix, recomputing every trick
/// from the rows current at that point. Throws CertificateMismatch on any
/// disagreement; returns the resulting basis.
GenBasis replay(const Nearfield& R, const NfMatrix& input, const GenCertificate& cert);

/// Coefficients r_i with v = sum u_i o r_i, or nullopt if v is not in the
/// R-subgroup the basis represents.
std::optional<std::vector<Elem>> gen_membership(const Nearfield& R, const GenBasis& basis,
                                                const NfVector& v);

/// e_1 + e_2, e_1 + e_3, ..., e_1 + e_n. Their gen is R^n once n >= 3; for
/// n = 2 the single vector only reaches the diagonal.
std::vector<NfVector> spanning_vectors(const Nearfield& R, std::size_t n);

/// Searches pairs of vectors (in canonical order) whose gen is all of R^n,
/// trying at most `limit` pairs.
std::optional<std::pair<NfVector, NfVector>> search_two_generators(const Nearfield& R,
                                                                   std::size_t n,
                                                                   std::uint64_t limit);

}  // namespace nearspace
