#include "nearspace/span_engine.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "nearspace/error.hpp"

namespace nearspace {

namespace {

void require_nonfield(const Nearfield& R) {
  if (R.is_field()) {
    throw Error(ErrorCode::FullyDistributive, "coordinate subspace results need m > 1");
  }
}

bool is_unit(const NfVector& v) {
  const auto support = v.support();
  return support.size() == 1 && v[support.front()] == Elem{1};
}

CoordMask union_of_supports(std::size_t n, const std::vector<NfVector>& rows) {
  CoordMask mask(n);
  for (const auto& row : rows) {
    for (auto i : row.support()) mask.include(i);
  }
  return mask;
}

}  // namespace

std::size_t CoordMask::dimension() const noexcept {
  return static_cast<std::size_t>(std::count(included_.begin(), included_.end(), true));
}

std::vector<std::size_t> CoordMask::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < included_.size(); ++i) {
    if (included_[i]) out.push_back(i);
  }
  return out;
}

AdjustmentStep adjustment_trick(const Nearfield& R, const NfVector& u, std::size_t j1,
                                std::size_t j2, const NDTriple& triple) {
  if (j1 >= j2 || j2 >= u.size()) {
    throw Error(ErrorCode::BadRange, "adjustment needs positions j1 < j2 < n");
  }
  if (u[j1].is_zero() || u[j2].is_zero()) {
    throw Error(ErrorCode::PivotZero, "adjustment positions must be nonzero in the row");
  }
  if (!is_nd_triple(R, triple)) {
    throw Error(ErrorCode::TripleInvalid, "triple is right distributive");
  }

  AdjustmentStep step;
  step.j1 = j1;
  step.j2 = j2;
  step.triple = triple;
  step.a = scale(R, u, R.mul(R.inv(u[j2]), triple.beta));

  NfVector m(u.size());
  m[j2] = triple.alpha;
  step.v = sub(R, scale(R, add(R, m, step.a), triple.lambda), scale(R, m, triple.lambda));

  const NfVector residue = sub(R, step.v, scale(R, step.a, triple.lambda));
  step.gamma = residue[j2];
  if (step.gamma != distributivity_defect(R, triple) || residue.support().size() != 1) {
    throw Error(ErrorCode::InternalError, "adjustment residue is not gamma at j2");
  }
  step.unit = scale(R, residue, R.inv(step.gamma));
  step.reduced = sub(R, u, scale(R, step.unit, u[j2]));
  return step;
}

SpanResult aege(const Nearfield& R, const NfMatrix& M) {
  require_nonfield(R);
  const NDTriple triple = *R.canonical_triple();

  GenResult gen = ege(R, M);
  SpanResult out;
  out.mask = union_of_supports(M.cols(), gen.basis.rows);
  out.certificate.gen = std::move(gen.certificate);

  std::vector<NfVector> rows = gen.basis.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto support = rows[i].support(); support.size() >= 2; support = rows[i].support()) {
      AdjustmentStep step =
          adjustment_trick(R, rows[i], support[support.size() - 2], support.back(), triple);
      step.row = i;
      rows[i] = step.reduced;
      out.rows.push_back(step.unit);
      out.certificate.steps.emplace_back(std::move(step));
    }
    const Elem lead = rows[i][rows[i].support().front()];
    if (lead != Elem{1}) {
      const NormalizeStep norm{i, R.inv(lead)};
      rows[i] = scale(R, rows[i], norm.by);
      out.certificate.steps.emplace_back(norm);
    }
    out.rows.push_back(rows[i]);
  }

  std::sort(out.rows.begin(), out.rows.end(), [](const NfVector& x, const NfVector& y) {
    return x.support().front() < y.support().front();
  });
  if (union_of_supports(M.cols(), out.rows) != out.mask || out.rows.size() != out.mask.dimension()) {
    throw Error(ErrorCode::InternalError, "certified unit vectors do not match the mask");
  }
  out.gen_basis = std::move(gen.basis);
  return out;
}

SpanResult span(const Nearfield& R, const NfMatrix& M) {
  if (!R.is_field()) return aege(R, M);
  GenResult gen = ege(R, M);
  SpanResult out;
  out.field_mode = true;
  out.rows = gen.basis.rows;
  out.gen_basis = std::move(gen.basis);
  out.certificate.gen = std::move(gen.certificate);
  return out;
}

CoordMask span_mask_shortcut(const Nearfield& R, const NfMatrix& M) {
  require_nonfield(R);
  return union_of_supports(M.cols(), M.rows());
}

CoordMask replay_span(const Nearfield& R, const NfMatrix& input, const SpanCertificate& cert) {
  require_nonfield(R);
  GenBasis basis = replay(R, input, cert.gen);
  auto& rows = basis.rows;
  std::vector<NfVector> units;

  for (const auto& step : cert.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if (s.row >= rows.size()) {
            throw Error(ErrorCode::CertificateMismatch, "span step references a missing row");
          }
          if constexpr (std::is_same_v<T, AdjustmentStep>) {
            AdjustmentStep again = adjustment_trick(R, rows[s.row], s.j1, s.j2, s.triple);
            again.row = s.row;
            if (!(again == s)) {
              throw Error(ErrorCode::CertificateMismatch, "adjustment step does not recompute");
            }
            units.push_back(again.unit);
            rows[s.row] = again.reduced;
          } else {
            if (rows[s.row].support().size() != 1 || s.by.is_zero()) {
              throw Error(ErrorCode::CertificateMismatch, "normalized row is not single-support");
            }
            rows[s.row] = scale(R, rows[s.row], s.by);
          }
        },
        step);
  }
  for (const auto& row : rows) {
    if (!is_unit(row)) {
      throw Error(ErrorCode::CertificateMismatch, "row left unreduced after replay");
    }
    units.push_back(row);
  }
  return union_of_supports(input.cols(), units);
}

SubspaceVerdict is_subspace(const Nearfield& R, const GenBasis& basis) {
  if (R.is_field() || basis.field_mode) return {true, true};
  const bool singletons = std::all_of(basis.rows.begin(), basis.rows.end(),
                                      [](const NfVector& u) { return u.support().size() == 1; });
  return {singletons, false};
}

std::uint64_t subspace_count(std::uint32_t n, std::optional<std::uint32_t> k) {
  if (n > 63) throw Error(ErrorCode::BadRange, "n must be at most 63");
  if (!k) return std::uint64_t{1} << n;
  if (*k > n) {
    throw Error(ErrorCode::BadRange, "k = " + std::to_string(*k) + " exceeds n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::uint32_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[*k];
}

}  // namespace nearspace
