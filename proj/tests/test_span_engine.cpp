#include <gtest/gtest.h>

#include "support.hpp"

namespace nearspace {
namespace {

using testing::dn32;
using testing::el;
using testing::mat;
using testing::vec;

CoordMask mask_of(std::size_t n, std::initializer_list<std::size_t> one_based) {
  CoordMask mask(n);
  for (auto p : one_based) mask.include(p - 1);
  return mask;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InternalError;
}

TEST(AdjustmentTrick, WorkedExample) {
  const auto& R = dn32();
  const NDTriple t{el(R, "1"), el(R, "x"), el(R, "x")};
  const auto step = adjustment_trick(R, vec(R, "(1,1)"), 0, 1, t);
  EXPECT_EQ(step.unit, vec(R, "(0,1)"));
  EXPECT_EQ(step.reduced, vec(R, "(1,0)"));
  EXPECT_EQ(step.gamma, el(R, "2+x"));
}

TEST(AdjustmentTrick, DefectIndependentOfRow) {
  const auto& R = dn32();
  const NDTriple t = *R.canonical_triple();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    NfVector u = testing::random_vector(R, 4, rng);
    if (u[1].is_zero()) u[1] = Elem{2};
    if (u[3].is_zero()) u[3] = Elem{1};
    const auto step = adjustment_trick(R, u, 1, 3, t);
    ASSERT_EQ(step.gamma, distributivity_defect(R, t));
    ASSERT_EQ(step.unit, unit_vector(4, 3));
    ASSERT_TRUE(step.reduced[3].is_zero());
  }
}

TEST(AdjustmentTrick, Preconditions) {
  const auto& R = dn32();
  const NDTriple t{el(R, "1"), el(R, "x"), el(R, "x")};
  EXPECT_EQ(code_of([&] { adjustment_trick(R, vec(R, "(1,0)"), 0, 1, t); }), ErrorCode::PivotZero);
  EXPECT_EQ(code_of([&] { adjustment_trick(R, vec(R, "(1,1)"), 1, 0, t); }), ErrorCode::BadRange);
  const NDTriple distributive{el(R, "1"), el(R, "2"), el(R, "x")};
  EXPECT_EQ(code_of([&] { adjustment_trick(R, vec(R, "(1,1)"), 0, 1, distributive); }),
            ErrorCode::TripleInvalid);
}

TEST(Aege, FirstFixtureDropsFourthCoordinate) {
  const auto& R = dn32();
  const auto M = mat(R, 5, {"(0,1,1,0,0)", "(0,x+1,2,0,x+1)", "(1,x+1,1,0,x)"});
  const auto result = aege(R, M);
  EXPECT_EQ(result.mask, mask_of(5, {1, 2, 3, 5}));
  EXPECT_EQ(result.mask.dimension(), 4u);
  EXPECT_EQ(result.rows, (std::vector<NfVector>{unit_vector(5, 0), unit_vector(5, 1),
                                                unit_vector(5, 2), unit_vector(5, 4)}));
  EXPECT_EQ(span_mask_shortcut(R, M), result.mask);
  EXPECT_EQ(replay_span(R, M, result.certificate), result.mask);
}

TEST(Aege, SecondFixtureIsEverything) {
  const auto& R = dn32();
  const auto M = mat(R, 5, {"(1,1,2,x+1,1)", "(0,0,0,2x+2,1)", "(1,1,1,x+2,1)"});
  const auto result = aege(R, M);
  EXPECT_EQ(result.mask, mask_of(5, {1, 2, 3, 4, 5}));
  EXPECT_EQ(span_mask_shortcut(R, M), result.mask);
  EXPECT_EQ(replay_span(R, M, result.certificate), result.mask);
}

TEST(Aege, EmptyAndZeroInputs) {
  const auto& R = dn32();
  EXPECT_EQ(aege(R, NfMatrix(3)).mask.dimension(), 0u);
  EXPECT_EQ(aege(R, mat(R, 3, {"(0,0,0)"})).mask, CoordMask(3));
  EXPECT_EQ(span_mask_shortcut(R, mat(R, 2, {"(0,0)"})), CoordMask(2));
}

TEST(Aege, FieldsAreRejectedButSpanFallsBack) {
  const auto& F = testing::dn(3, 1);
  const auto M = mat(F, 3, {"(1,2,0)", "(2,1,0)"});
  EXPECT_EQ(code_of([&] { aege(F, M); }), ErrorCode::FullyDistributive);
  EXPECT_EQ(code_of([&] { span_mask_shortcut(F, M); }), ErrorCode::FullyDistributive);
  const auto result = span(F, M);
  EXPECT_TRUE(result.field_mode);
  EXPECT_EQ(result.rows, std::vector<NfVector>{vec(F, "(1,2,0)")});
}

TEST(Aege, TamperedAdjustmentIsRejected) {
  const auto& R = dn32();
  const auto M = mat(R, 5, {"(1,1,2,x+1,1)", "(0,0,0,2x+2,1)", "(1,1,1,x+2,1)"});
  auto cert = aege(R, M).certificate;
  bool tampered = false;
  for (auto& step : cert.steps) {
    if (auto* adj = std::get_if<AdjustmentStep>(&step); adj && !tampered) {
      adj->reduced = adj->unit;
      tampered = true;
    }
  }
  ASSERT_TRUE(tampered);
  EXPECT_EQ(code_of([&] { replay_span(R, M, cert); }), ErrorCode::CertificateMismatch);
}

TEST(Aege, SingleVectorDimensionIsSupportSize) {
  const auto& R = dn32();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = testing::random_vector(R, 5, rng, 0.5);
    EXPECT_EQ(aege(R, NfMatrix(5, {v})).mask.dimension(), v.support().size());
  }
}

TEST(IsSubspace, Verdicts) {
  const auto& R = dn32();
  EXPECT_FALSE(is_subspace(R, GenBasis{2, {vec(R, "(1,x)")}, false}).is_subspace);
  const GenBasis five_column{5,
                         {vec(R, "(1,1,0,0,0)"), vec(R, "(0,0,1,0,0)"), vec(R, "(0,0,0,1,0)"),
                          vec(R, "(0,0,0,0,1)")},
                         false};
  EXPECT_FALSE(is_subspace(R, five_column).is_subspace);
  EXPECT_TRUE(is_subspace(R, GenBasis{3, {unit_vector(3, 0), unit_vector(3, 2)}, false}).is_subspace);
  EXPECT_TRUE(is_subspace(R, GenBasis{3, {}, false}).is_subspace);

  const auto& F = testing::dn(5, 1);
  const auto verdict = is_subspace(F, GenBasis{2, {vec(F, "(1,3)")}, true});
  EXPECT_TRUE(verdict.is_subspace);
  EXPECT_TRUE(verdict.field_mode);
}

TEST(IsSubspace, AgreesWithOraclePredicate) {
  const auto& R = dn32();
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto M = testing::random_matrix(R, 1 + trial % 2, 3, rng);
    const auto basis = ege(R, M).basis;
    const auto set = oracle::enumerate_basis(R, basis);
    EXPECT_EQ(is_subspace(R, basis).is_subspace, oracle::is_subspace_set(R, set).holds);
  }
}

TEST(SubspaceCount, Binomials) {
  EXPECT_EQ(subspace_count(5, 2), 10u);
  EXPECT_EQ(subspace_count(7, 0), 1u);
  EXPECT_EQ(subspace_count(7, 7), 1u);
  EXPECT_EQ(subspace_count(3), 8u);
  EXPECT_EQ(subspace_count(60, 30), 118264581564861424ull);
  for (std::uint32_t n = 0; n <= 20; ++n) {
    std::uint64_t total = 0;
    for (std::uint32_t k = 0; k <= n; ++k) total += subspace_count(n, k);
    EXPECT_EQ(total, subspace_count(n));
  }
  EXPECT_EQ(code_of([] { subspace_count(3, 4); }), ErrorCode::BadRange);
  EXPECT_EQ(code_of([] { subspace_count(64); }), ErrorCode::BadRange);
}

TEST(SubspaceCount, MatchesCoordinateMasksThatAreSubspaces) {
  const auto& R = dn32();
  std::uint64_t found = 0;
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    CoordMask mask(3);
    for (std::size_t i = 0; i < 3; ++i)
      if (bits >> i & 1u) mask.include(i);
    found += oracle::is_subspace_set(R, oracle::enumerate_basis(R, mask)).holds ? 1 : 0;
  }
  EXPECT_EQ(found, subspace_count(3));
}

}  // namespace
}  // namespace nearspace
