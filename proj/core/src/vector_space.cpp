#include "nearspace/vector_space.hpp"

#include <algorithm>
#include <string>

#include "nearspace/error.hpp"

namespace nearspace {

namespace {

void require_same_length(const NfVector& u, const NfVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimMismatch, "vector lengths differ: " + std::to_string(u.size()) +
                                            " vs " + std::to_string(v.size()));
  }
}

void require_row(const NfMatrix& M, std::size_t i) {
  if (i >= M.row_count()) {
    throw Error(ErrorCode::BadRange, "row index " + std::to_string(i) + " out of range");
  }
}

}  // namespace

bool NfVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e.is_zero(); });
}

std::vector<std::size_t> NfVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) out.push_back(i);
  }
  return out;
}

NfVector unit_vector(std::size_t n, std::size_t position) {
  if (position >= n) throw Error(ErrorCode::BadRange, "unit vector position out of range");
  NfVector e(n);
  e[position] = Elem{1};
  return e;
}

NfMatrix::NfMatrix(std::size_t cols, std::vector<NfVector> rows) : cols_(cols) {
  for (auto& r : rows) append(std::move(r));
}

NfMatrix::NfMatrix(std::vector<NfVector> rows) {
  if (rows.empty()) throw Error(ErrorCode::DimMismatch, "cannot infer column count of empty matrix");
  cols_ = rows.front().size();
  for (auto& r : rows) append(std::move(r));
}

void NfMatrix::append(NfVector v) {
  if (v.size() != cols_) {
    throw Error(ErrorCode::DimMismatch, "row of length " + std::to_string(v.size()) +
                                            " in matrix with " + std::to_string(cols_) + " columns");
  }
  rows_.push_back(std::move(v));
}

void NfMatrix::erase_row(std::size_t i) {
  require_row(*this, i);
  rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
}

void validate(const Nearfield& R, const NfVector& v) {
  for (Elem e : v) {
    if (!R.contains(e)) {
      throw Error(ErrorCode::BadRange, "element index " + std::to_string(e.index) +
                                           " outside nearfield of order " + std::to_string(R.order()));
    }
  }
}

void validate(const Nearfield& R, const NfMatrix& M) {
  for (const auto& r : M.rows()) validate(R, r);
}

NfVector add(const Nearfield& R, const NfVector& u, const NfVector& v) {
  require_same_length(u, v);
  NfVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = R.add(u[i], v[i]);
  return out;
}

NfVector sub(const Nearfield& R, const NfVector& u, const NfVector& v) {
  require_same_length(u, v);
  NfVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = R.sub(u[i], v[i]);
  return out;
}

NfVector neg(const Nearfield& R, const NfVector& v) {
  NfVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.neg(v[i]);
  return out;
}

NfVector scale(const Nearfield& R, const NfVector& v, Elem r) {
  NfVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.mul(v[i], r);
  return out;
}

void apply(const Nearfield& R, NfMatrix& M, const RowOp& op) {
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          require_row(M, o.a);
          require_row(M, o.b);
          std::swap(M.row(o.a), M.row(o.b));
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          require_row(M, o.row);
          if (o.by.is_zero()) throw Error(ErrorCode::PivotZero, "scaling a row by zero");
          M.row(o.row) = scale(R, M.row(o.row), o.by);
        } else {
          require_row(M, o.target);
          require_row(M, o.source);
          if (o.target == o.source) {
            throw Error(ErrorCode::BadRange, "row cannot absorb a multiple of itself");
          }
          M.row(o.target) = add(R, M.row(o.target), scale(R, M.row(o.source), o.coef));
        }
      },
      op);
}

NfMatrix rref(const Nearfield& R, const NfMatrix& M, std::vector<RowOp>* log) {
  NfMatrix W = M;
  auto perform = [&](const RowOp& op) {
    apply(R, W, op);
    if (log) log->push_back(op);
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < W.cols() && pivot_row < W.row_count(); ++col) {
    std::size_t candidate = pivot_row;
    while (candidate < W.row_count() && W.row(candidate)[col].is_zero()) ++candidate;
    if (candidate == W.row_count()) continue;
    if (candidate != pivot_row) perform(SwapRows{pivot_row, candidate});

    const Elem pivot = W.row(pivot_row)[col];
    if (pivot != Elem{1}) perform(ScaleRow{pivot_row, R.inv(pivot)});

    for (std::size_t s = 0; s < W.row_count(); ++s) {
      if (s == pivot_row || W.row(s)[col].is_zero()) continue;
      // row_s - row_r o x with x = pivot^{-1} o entry; the pivot is now 1.
      const Elem x = R.mul(R.inv(W.row(pivot_row)[col]), W.row(s)[col]);
      perform(AddMultiple{s, pivot_row, R.neg(x)});
    }
    ++pivot_row;
  }
  return W;
}

}  // namespace nearspace
