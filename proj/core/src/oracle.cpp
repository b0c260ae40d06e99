#include "nearspace/oracle.hpp"

#include <algorithm>

#include "nearspace/error.hpp"

namespace nearspace::oracle {

namespace {

std::uint64_t encode_with_order(std::uint32_t order, const NfVector& v) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * order + v[i].index;
  return code;
}

std::uint64_t power_checked(std::uint32_t base, std::size_t exponent, std::uint64_t cap,
                            const char* what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    total *= base;
    if (total > cap) {
      throw Error(ErrorCode::CapExceeded, std::string(what) + " exceeds oracle cap " +
                                              std::to_string(cap));
    }
  }
  return total;
}

// Vectors of R^n handled directly as base-|R| codes.
class CodeSpace {
 public:
  CodeSpace(const Nearfield& R, std::size_t n, std::uint64_t cap)
      : R_(R), n_(n), order_(R.order()), total_(power_checked(R.order(), n, cap, "|R|^n")) {}

  const Nearfield& nearfield() const noexcept { return R_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t total() const noexcept { return total_; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept {
    std::uint64_t out = 0, weight = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += R_.add(Elem{digit(x)}, Elem{digit(y)}).index * weight;
      x /= order_;
      y /= order_;
      weight *= order_;
    }
    return out;
  }
  std::uint64_t neg(std::uint64_t x) const noexcept {
    std::uint64_t out = 0, weight = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += R_.neg(Elem{digit(x)}).index * weight;
      x /= order_;
      weight *= order_;
    }
    return out;
  }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept { return add(x, neg(y)); }
  std::uint64_t scale(std::uint64_t x, Elem r) const noexcept {
    std::uint64_t out = 0, weight = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += R_.mul(Elem{digit(x)}, r).index * weight;
      x /= order_;
      weight *= order_;
    }
    return out;
  }
  std::uint64_t encode(const NfVector& v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimMismatch, "vector length does not match n");
    validate(R_, v);
    return encode_with_order(order_, v);
  }

 private:
  std::uint32_t digit(std::uint64_t x) const noexcept {
    return static_cast<std::uint32_t>(x % order_);
  }

  const Nearfield& R_;
  std::size_t n_;
  std::uint32_t order_;
  std::uint64_t total_;
};

// An additive subgroup of R^n grown one generator at a time, optionally
// closed under right scalar multiplication with a layered worklist.
class Closure {
 public:
  explicit Closure(const CodeSpace& space)
      : space_(space), member_(space.total(), 0), list_{0} {
    member_[0] = 1;
  }

  bool has(std::uint64_t x) const { return member_[x] != 0; }
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<std::uint64_t>& elements() const noexcept { return list_; }
  std::size_t rounds() const noexcept { return rounds_; }

  // The group is elementary abelian of exponent p, so the subgroup generated
  // by S and g is the union of the cosets S + t g for t in [0, p).
  void extend(std::uint64_t g) {
    if (has(g)) return;
    const std::size_t base = list_.size();
    const std::uint32_t p = space_.nearfield().field().characteristic();
    std::uint64_t multiple = 0;
    for (std::uint32_t t = 1; t < p; ++t) {
      multiple = space_.add(multiple, g);
      for (std::size_t i = 0; i < base; ++i) {
        const std::uint64_t x = space_.add(list_[i], multiple);
        if (!member_[x]) {
          member_[x] = 1;
          list_.push_back(x);
        }
      }
    }
  }

  void close_under_scalars() {
    const std::uint32_t order = space_.nearfield().order();
    while (processed_ < list_.size()) {
      const std::size_t layer_end = list_.size();
      for (; processed_ < layer_end; ++processed_) {
        const std::uint64_t w = list_[processed_];
        for (std::uint32_t r = 2; r < order; ++r) extend(space_.scale(w, Elem{r}));
      }
      if (list_.size() > layer_end) ++rounds_;
    }
  }

  void bump_round() noexcept { ++rounds_; }

  VectorSet to_set(std::string stage) const {
    std::vector<std::uint64_t> sorted = list_;
    std::sort(sorted.begin(), sorted.end());
    return VectorSet(space_.n(), space_.nearfield().order(), std::move(sorted), std::move(stage),
                     rounds_);
  }

 private:
  const CodeSpace& space_;
  std::vector<char> member_;
  std::vector<std::uint64_t> list_;
  std::size_t processed_ = 0;
  std::size_t rounds_ = 0;
};

std::vector<char> membership(const CodeSpace& space, const VectorSet& set) {
  if (set.n() != space.n()) throw Error(ErrorCode::DimMismatch, "set dimension mismatch");
  std::vector<char> member(space.total(), 0);
  for (auto c : set.codes()) member[c] = 1;
  return member;
}

std::vector<std::uint64_t> next_lc(const CodeSpace& space, const std::vector<std::uint64_t>& stage) {
  Closure sums(space);
  const std::uint32_t order = space.nearfield().order();
  for (auto w : stage) {
    for (std::uint32_t r = 1; r < order; ++r) sums.extend(space.scale(w, Elem{r}));
  }
  std::vector<std::uint64_t> out = sums.elements();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> input_codes(const CodeSpace& space, std::span<const NfVector> vectors) {
  std::vector<std::uint64_t> codes;
  for (const auto& v : vectors) codes.push_back(space.encode(v));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

VectorSet enumerate_rows(const Nearfield& R, std::size_t n, const std::vector<NfVector>& rows,
                         const Config& cfg) {
  const CodeSpace space(R, n, cfg.cap);
  const std::uint64_t expected = power_checked(R.order(), rows.size(), cfg.cap, "|R|^rank");
  std::vector<std::uint64_t> row_codes;
  for (const auto& u : rows) row_codes.push_back(space.encode(u));

  std::vector<char> member(space.total(), 0);
  std::vector<std::uint64_t> codes;
  codes.reserve(expected);
  std::vector<std::uint32_t> coeffs(rows.size(), 0);
  for (std::uint64_t count = 0; count < expected; ++count) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      sum = space.add(sum, space.scale(row_codes[i], Elem{coeffs[i]}));
    }
    if (!member[sum]) {
      member[sum] = 1;
      codes.push_back(sum);
    }
    for (std::size_t i = 0; i < coeffs.size() && ++coeffs[i] == R.order(); ++i) coeffs[i] = 0;
  }
  if (codes.size() != expected) {
    throw Error(ErrorCode::NotDirect, "basis sum is not direct: " + std::to_string(codes.size()) +
                                          " of " + std::to_string(expected) + " combinations distinct");
  }
  std::sort(codes.begin(), codes.end());
  return VectorSet(n, R.order(), std::move(codes), "closure");
}

}  // namespace

VectorSet::VectorSet(std::size_t n, std::uint32_t order, std::vector<std::uint64_t> sorted_codes,
                     std::string stage, std::size_t rounds)
    : n_(n), order_(order), codes_(std::move(sorted_codes)), stage_(std::move(stage)), rounds_(rounds) {}

bool VectorSet::contains(const NfVector& v) const {
  if (v.size() != n_) return false;
  return std::binary_search(codes_.begin(), codes_.end(), encode_with_order(order_, v));
}

bool VectorSet::includes(const VectorSet& other) const {
  return n_ == other.n_ &&
         std::includes(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end());
}

std::vector<NfVector> VectorSet::vectors() const {
  std::vector<NfVector> out;
  out.reserve(codes_.size());
  for (auto code : codes_) {
    NfVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = Elem{static_cast<std::uint32_t>(code % order_)};
      code /= order_;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t encode(const Nearfield& R, const NfVector& v) {
  return encode_with_order(R.order(), v);
}

NfVector decode(const Nearfield& R, std::size_t n, std::uint64_t code) {
  NfVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Elem{static_cast<std::uint32_t>(code % R.order())};
    code /= R.order();
  }
  return v;
}

VectorSet lc_stage(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                   std::size_t i, const Config& cfg) {
  const CodeSpace space(R, n, cfg.cap);
  std::vector<std::uint64_t> stage = input_codes(space, vectors);
  for (std::size_t k = 0; k < i; ++k) stage = next_lc(space, stage);
  return VectorSet(n, R.order(), std::move(stage), "LC_" + std::to_string(i), i);
}

VectorSet lc_union(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                   const Config& cfg) {
  const CodeSpace space(R, n, cfg.cap);
  std::vector<std::uint64_t> stage = input_codes(space, vectors);
  std::size_t i = 0;
  for (;; ++i) {
    auto next = next_lc(space, stage);
    if (next == stage) break;
    stage = std::move(next);
  }
  return VectorSet(n, R.order(), std::move(stage), "LC_" + std::to_string(i), i);
}

VectorSet gen_bruteforce(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                         const Config& cfg) {
  const CodeSpace space(R, n, cfg.cap);
  Closure closure(space);
  for (auto code : input_codes(space, vectors)) closure.extend(code);
  closure.close_under_scalars();
  return closure.to_set("closure");
}

VectorSet span_bruteforce(const Nearfield& R, std::size_t n, std::span<const NfVector> vectors,
                          const Config& cfg) {
  const CodeSpace space(R, n, std::min(cfg.cap, cfg.span_cap));
  Closure closure(space);
  for (auto code : input_codes(space, vectors)) closure.extend(code);
  closure.close_under_scalars();

  while (closure.size() < space.total()) {
    std::vector<std::uint64_t> fresh;
    const std::vector<std::uint64_t> current = closure.elements();
    for (std::uint64_t m = 0; m < space.total(); ++m) {
      for (auto s : current) {
        if (s == 0) continue;
        const std::uint64_t shifted = space.add(m, s);
        for (std::uint32_t r = 1; r < R.order(); ++r) {
          const std::uint64_t x = space.sub(space.scale(shifted, Elem{r}), space.scale(m, Elem{r}));
          if (!closure.has(x)) fresh.push_back(x);
        }
      }
    }
    if (fresh.empty()) break;
    for (auto x : fresh) closure.extend(x);
    closure.close_under_scalars();
    closure.bump_round();
  }
  return closure.to_set("closure");
}

bool is_rsubgroup_set(const Nearfield& R, const VectorSet& set, const Config& cfg) {
  const CodeSpace space(R, set.n(), cfg.cap);
  const auto member = membership(space, set);
  if (!member[0]) return false;
  for (auto a : set.codes()) {
    for (auto b : set.codes()) {
      if (!member[space.sub(a, b)]) return false;
    }
    for (std::uint32_t r = 0; r < R.order(); ++r) {
      if (!member[space.scale(a, Elem{r})]) return false;
    }
  }
  return true;
}

SubspaceCheck is_subspace_set(const Nearfield& R, const VectorSet& set, const Config& cfg) {
  const CodeSpace space(R, set.n(), std::min(cfg.cap, cfg.span_cap));
  if (!is_rsubgroup_set(R, set, cfg)) return {};
  const auto member = membership(space, set);
  for (std::uint64_t m = 0; m < space.total(); ++m) {
    for (auto s : set.codes()) {
      const std::uint64_t shifted = space.add(m, s);
      for (std::uint32_t r = 0; r < R.order(); ++r) {
        const std::uint64_t x = space.sub(space.scale(shifted, Elem{r}), space.scale(m, Elem{r}));
        if (!member[x]) {
          return {false, SubspaceWitness{decode(R, set.n(), m), decode(R, set.n(), s), Elem{r},
                                         decode(R, set.n(), x)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

VectorSet enumerate_basis(const Nearfield& R, const GenBasis& basis, const Config& cfg) {
  return enumerate_rows(R, basis.n, basis.rows, cfg);
}

VectorSet enumerate_basis(const Nearfield& R, const CoordMask& mask, const Config& cfg) {
  std::vector<NfVector> rows;
  for (auto i : mask.positions()) rows.push_back(unit_vector(mask.n(), i));
  return enumerate_rows(R, mask.n(), rows, cfg);
}

std::vector<NfVector> all_vectors(const Nearfield& R, std::size_t n, const Config& cfg) {
  const std::uint64_t total = power_checked(R.order(), n, cfg.cap, "|R|^n");
  std::vector<NfVector> out;
  out.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(decode(R, n, c));
  return out;
}

}  // namespace nearspace::oracle
