#pragma once

#include <cstddef>
#include <initializer_list>
#include <variant>
#include <vector>

#include "nearspace/dickson_nearfield.hpp"

namespace nearspace {

/// An element of R^n. Scalars always act on the right:
/// (x_1, ..., x_n) r = (x_1 o r, ..., x_n o r).
class NfVector {
 public:
  NfVector() = default;
  explicit NfVector(std::size_t n) : entries_(n) {}
  explicit NfVector(std::vector<Elem> entries) : entries_(std::move(entries)) {}
  NfVector(std::initializer_list<Elem> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }
  Elem& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const noexcept;
  /// Indices of the nonzero entries, ascending.
  std::vector<std::size_t> support() const;

  friend auto operator<=>(const NfVector&, const NfVector&) = default;

 private:
  std::vector<Elem> entries_;
};

NfVector unit_vector(std::size_t n, std::size_t position);

/// A stack of rows of common length.
class NfMatrix {
 public:
  explicit NfMatrix(std::size_t cols = 0) : cols_(cols) {}
  /// Throws DimMismatch unless every row has length `cols`.
  NfMatrix(std::size_t cols, std::vector<NfVector> rows);
  /// Column count taken from the first row; rows must be non-empty.
  explicit NfMatrix(std::vector<NfVector> rows);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<NfVector>& rows() const noexcept { return rows_; }
  std::vector<NfVector>& rows() noexcept { return rows_; }
  const NfVector& row(std::size_t i) const { return rows_.at(i); }
  NfVector& row(std::size_t i) { return rows_.at(i); }

  void append(NfVector v);
  void erase_row(std::size_t i);

  friend bool operator==(const NfMatrix&, const NfMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<NfVector> rows_;
};

/// Throws unless every entry is an element of R.
void validate(const Nearfield& R, const NfVector& v);
void validate(const Nearfield& R, const NfMatrix& M);

NfVector add(const Nearfield& R, const NfVector& u, const NfVector& v);
NfVector sub(const Nearfield& R, const NfVector& u, const NfVector& v);
NfVector neg(const Nearfield& R, const NfVector& v);
/// v o r, entrywise.
NfVector scale(const Nearfield& R, const NfVector& v, Elem r);

// Row operations that leave gen(rows) unchanged.
struct SwapRows {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const SwapRows&, const SwapRows&) = default;
};
/// row <- row o by, by != 0.
struct ScaleRow {
  std::size_t row;
  Elem by;
  friend bool operator==(const ScaleRow&, const ScaleRow&) = default;
};
/// target <- target + source o coef.
struct AddMultiple {
  std::size_t target;
  std::size_t source;
  Elem coef;
  friend bool operator==(const AddMultiple&, const AddMultiple&) = default;
};
using RowOp = std::variant<SwapRows, ScaleRow, AddMultiple>;

void apply(const Nearfield& R, NfMatrix& M, const RowOp& op);

/// Reduced row-echelon form using only swaps, right scaling by nonzero
/// scalars and adding right multiples of one row to another. Pivots are the
/// first nonzero column, topmost candidate row; zero rows end up at the
/// bottom. Each operation performed is appended to `log` when given.
NfMatrix rref(const Nearfield& R, const NfMatrix& M, std::vector<RowOp>* log = nullptr);

}  // namespace nearspace
