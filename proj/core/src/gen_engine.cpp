#include "nearspace/gen_engine.hpp"

#include <string>
#include <type_traits>

#include "nearspace/error.hpp"

namespace nearspace {

namespace {

std::size_t first_crowded_column(const NfMatrix& W) {
  for (std::size_t j = 0; j < W.cols(); ++j) {
    int nonzeros = 0;
    for (const auto& row : W.rows()) {
      if (!row[j].is_zero() && ++nonzeros == 2) return j;
    }
  }
  return W.cols();
}

void mismatch(const std::string& what) { throw Error(ErrorCode::CertificateMismatch, what); }

NfVector decode(std::uint64_t code, std::size_t n, std::uint32_t order) {
  NfVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Elem{static_cast<std::uint32_t>(code % order)};
    code /= order;
  }
  return v;
}

}  // namespace

bool satisfies_column_condition(const GenBasis& basis) {
  for (const auto& row : basis.rows) {
    if (row.is_zero()) return false;
  }
  for (std::size_t j = 0; j < basis.n; ++j) {
    int nonzeros = 0;
    for (const auto& row : basis.rows) {
      if (!row[j].is_zero()) ++nonzeros;
    }
    if (nonzeros > 1) return false;
  }
  return true;
}

TrickRecord distributivity_trick(const Nearfield& R, const NfVector& w_r, const NfVector& w_s,
                                 std::size_t j, const NDTriple& triple) {
  if (w_r.size() != w_s.size()) throw Error(ErrorCode::DimMismatch, "trick rows differ in length");
  if (j >= w_r.size()) throw Error(ErrorCode::BadRange, "trick column out of range");
  if (w_r[j].is_zero() || w_s[j].is_zero()) {
    throw Error(ErrorCode::PivotZero, "trick rows must both be nonzero at column " + std::to_string(j));
  }
  for (std::size_t l = 0; l < j; ++l) {
    if (!w_r[l].is_zero() && !w_s[l].is_zero()) {
      throw Error(ErrorCode::TriplePreconditionViolated,
                  "rows share a nonzero in earlier column " + std::to_string(l));
    }
  }
  if (!is_nd_triple(R, triple)) {
    throw Error(ErrorCode::TripleInvalid, "triple is right distributive");
  }

  const Elem alpha_p = R.mul(R.inv(w_r[j]), triple.alpha);
  const Elem beta_p = R.mul(R.inv(w_s[j]), triple.beta);
  const Elem lambda = triple.lambda;

  const NfVector combined = scale(R, add(R, scale(R, w_r, alpha_p), scale(R, w_s, beta_p)), lambda);
  NfVector theta = sub(R, combined, scale(R, w_r, R.mul(alpha_p, lambda)));
  theta = sub(R, theta, scale(R, w_s, R.mul(beta_p, lambda)));

  for (std::size_t l = 0; l < j; ++l) {
    if (!theta[l].is_zero()) throw Error(ErrorCode::InternalError, "theta nonzero before trick column");
  }
  const Elem gamma = theta[j];
  if (gamma != distributivity_defect(R, triple)) {
    throw Error(ErrorCode::InternalError, "theta pivot differs from the distributivity defect");
  }

  TrickRecord rec;
  rec.column = j;
  rec.triple = triple;
  rec.gamma = gamma;
  rec.phi = scale(R, theta, R.inv(gamma));
  rec.theta = std::move(theta);
  return rec;
}

GenResult ege(const Nearfield& R, const NfMatrix& M) {
  validate(R, M);
  GenResult out;
  auto& steps = out.certificate.steps;

  std::vector<RowOp> log;
  NfMatrix W = rref(R, M, &log);
  for (auto& op : log) std::visit([&](auto& o) { steps.emplace_back(o); }, op);

  auto perform = [&](const RowOp& op) {
    apply(R, W, op);
    std::visit([&](const auto& o) { steps.emplace_back(o); }, op);
  };

  if (!R.is_field()) {
    const NDTriple triple = *R.canonical_triple();
    for (std::size_t j = first_crowded_column(W); j < W.cols(); j = first_crowded_column(W)) {
      std::size_t r = 0;
      while (W.row(r)[j].is_zero()) ++r;
      std::size_t s = r + 1;
      while (W.row(s)[j].is_zero()) ++s;

      TrickRecord rec = distributivity_trick(R, W.row(r), W.row(s), j, triple);
      rec.row_r = r;
      rec.row_s = s;
      NfVector phi = rec.phi;
      steps.emplace_back(TrickStep{std::move(rec)});
      steps.emplace_back(AppendRow{phi});
      W.append(std::move(phi));

      const std::size_t phi_row = W.row_count() - 1;
      for (std::size_t i = 0; i < phi_row; ++i) {
        const Elem entry = W.row(i)[j];
        if (!entry.is_zero()) perform(AddMultiple{i, phi_row, R.neg(entry)});
      }
    }
  }

  for (std::size_t i = W.row_count(); i-- > 0;) {
    if (W.row(i).is_zero()) {
      steps.emplace_back(DropRow{i});
      W.erase_row(i);
    }
  }

  out.basis.n = M.cols();
  out.basis.rows = W.rows();
  out.basis.field_mode = R.is_field();
  if (!out.basis.field_mode && !satisfies_column_condition(out.basis)) {
    throw Error(ErrorCode::InternalError, "eGe output violates the column condition");
  }
  return out;
}

GenBasis replay(const Nearfield& R, const NfMatrix& input, const GenCertificate& cert) {
  validate(R, input);
  NfMatrix W = input;
  std::optional<NfVector> pending_phi;

  for (const auto& step : cert.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, TrickStep>) {
            const auto& rec = s.record;
            if (rec.row_r >= W.row_count() || rec.row_s >= W.row_count() || rec.row_r == rec.row_s) {
              mismatch("trick references invalid rows");
            }
            TrickRecord again =
                distributivity_trick(R, W.row(rec.row_r), W.row(rec.row_s), rec.column, rec.triple);
            again.row_r = rec.row_r;
            again.row_s = rec.row_s;
            if (!(again == rec)) mismatch("trick record does not recompute");
            pending_phi = again.phi;
          } else if constexpr (std::is_same_v<T, AppendRow>) {
            if (!pending_phi || *pending_phi != s.row) {
              mismatch("appended row is not the phi of the preceding trick");
            }
            W.append(s.row);
            pending_phi.reset();
          } else if constexpr (std::is_same_v<T, DropRow>) {
            if (s.row >= W.row_count() || !W.row(s.row).is_zero()) mismatch("dropped row is not zero");
            W.erase_row(s.row);
          } else {
            apply(R, W, RowOp{s});
          }
        },
        step);
  }
  return GenBasis{input.cols(), W.rows(), R.is_field()};
}

std::optional<std::vector<Elem>> gen_membership(const Nearfield& R, const GenBasis& basis,
                                                const NfVector& v) {
  if (v.size() != basis.n) {
    throw Error(ErrorCode::DimMismatch, "vector length does not match basis");
  }
  std::vector<Elem> coeffs;
  coeffs.reserve(basis.rank());
  NfVector sum(basis.n);
  for (const auto& u : basis.rows) {
    const auto support = u.support();
    if (support.empty()) throw Error(ErrorCode::BadRange, "basis contains a zero row");
    const std::size_t c = support.front();
    const Elem r = R.mul(R.inv(u[c]), v[c]);
    coeffs.push_back(r);
    sum = add(R, sum, scale(R, u, r));
  }
  if (sum != v) return std::nullopt;
  return coeffs;
}

std::vector<NfVector> spanning_vectors(const Nearfield& R, std::size_t n) {
  if (R.is_field()) {
    throw Error(ErrorCode::FullyDistributive, "no non-distributive scalar exists in a field");
  }
  if (n < 2) throw Error(ErrorCode::BadRange, "spanning vectors need n >= 2");
  std::vector<NfVector> out;
  for (std::size_t i = 1; i < n; ++i) {
    NfVector v(n);
    v[0] = Elem{1};
    v[i] = Elem{1};
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::pair<NfVector, NfVector>> search_two_generators(const Nearfield& R,
                                                                   std::size_t n,
                                                                   std::uint64_t limit) {
  if (n == 0) throw Error(ErrorCode::BadRange, "n must be positive");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (std::uint64_t{1} << 40) / R.order()) {
      throw Error(ErrorCode::CapExceeded, "R^n too large to search");
    }
    total *= R.order();
  }
  std::uint64_t tried = 0;
  for (std::uint64_t a = 1; a < total; ++a) {
    for (std::uint64_t b = a + 1; b < total; ++b) {
      if (tried++ >= limit) return std::nullopt;
      NfVector u = decode(a, n, R.order());
      NfVector v = decode(b, n, R.order());
      const auto result = ege(R, NfMatrix(n, {u, v}));
      if (result.basis.rank() == n) {
        return std::pair{std::move(u), std::move(v)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace nearspace
