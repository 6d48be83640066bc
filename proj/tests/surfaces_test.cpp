#include <gtest/gtest.h>

#include <random>

#include "brauer/surfaces.hpp"
#include "test_support.hpp"

namespace brauer::surfaces {
namespace {

FgAbGroup zmod(std::initializer_list<int> orders) {
  return abgroup::from_cyclic_orders(0, std::vector<BigInt>(orders.begin(), orders.end()));
}

InoueSM companion(int a0, int a1, int a2, bool allow = false) {
  return InoueSM{std::array<BigInt, 3>{a0, a1, a2}, allow};
}

BigInt det3(const IntMatrix& m) {
  const std::vector<std::size_t> all{0, 1, 2};
  return exactla::detail::leibniz_det(m, all, all);
}

TEST(InoueValidate, Tribonacci) {
  const auto r = inoue_validate(IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(r.charPoly, (std::array<BigInt, 3>{-1, -1, -1}));
  EXPECT_EQ(r.discriminant, -44);
  EXPECT_EQ(r.pAtOne, -2);
  EXPECT_EQ(r.detM, 1);
  EXPECT_TRUE(r.eigenvalueConditionHolds);
  EXPECT_TRUE(r.inSL3);
}

TEST(InoueValidate, IdentityFails) {
  const auto r = inoue_validate(IntMatrix::identity(3));
  EXPECT_EQ(r.discriminant, 0);
  EXPECT_EQ(r.pAtOne, 0);
  EXPECT_FALSE(r.eigenvalueConditionHolds);
}

TEST(InoueValidate, CubeRootOfFiveIsNotUnimodular) {
  const auto r = inoue_validate(companion(-5, 0, 0));
  EXPECT_EQ(r.detM, 5);
  EXPECT_EQ(r.discriminant, -675);
  EXPECT_EQ(r.pAtOne, -4);
  EXPECT_TRUE(r.eigenvalueConditionHolds);
  EXPECT_FALSE(r.inSL3);
}

TEST(InoueValidate, CompanionMatrixHasTheRightCharPoly) {
  const auto r = inoue_validate(companion_matrix({3, -2, 7}));
  EXPECT_EQ(r.charPoly, (std::array<BigInt, 3>{3, -2, 7}));
  EXPECT_THROW(inoue_validate(IntMatrix::identity(2)), DimensionError);
}

TEST(InoueBrauer, Examples) {
  EXPECT_EQ(inoue_brauer(companion(-5, 0, 0), true).torsion(), zmod({4}));
  EXPECT_EQ(inoue_brauer(companion(-7, 1, 1), true).torsion(), zmod({4}));
  EXPECT_EQ(inoue_brauer(companion(-5, 0, 0, true)).torsion(), zmod({4}));
  EXPECT_EQ(inoue_brauer(InoueSM{IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}}).torsion(), zmod({2}));
  EXPECT_EQ(inoue_brauer(companion(-1, -1, -1)).divisible_rank(), 0u);
}

TEST(InoueBrauer, Rejections) {
  EXPECT_THROW(inoue_brauer(companion(-5, 0, 0)), InoueRejected);
  EXPECT_THROW(inoue_brauer(InoueSM{IntMatrix::identity(3)}), ValidationError);
  try {
    inoue_brauer(InoueSM{IntMatrix::identity(3)});
  } catch (const InoueRejected& e) {
    EXPECT_FALSE(e.report().eigenvalueConditionHolds);
  }
  // three real roots: T^3 - 3T - 1 has positive discriminant
  EXPECT_THROW(inoue_brauer(companion(-1, -3, 0), true), InoueRejected);
}

TEST(InoueProperty, UnimodularCompanionsHaveCyclicCokernel) {
  int valid = 0;
  for (int a1 = -12; a1 <= 12; ++a1)
    for (int a2 = -12; a2 <= 12; ++a2) {
      const auto d = companion(-1, a1, a2);
      const auto r = inoue_validate(d);
      if (!r.eigenvalueConditionHolds) continue;
      ++valid;
      const IntMatrix shifted = inoue_matrix(d) - IntMatrix::identity(3);
      auto expected = std::vector<BigInt>{1, 1, abs(r.pAtOne)};
      EXPECT_EQ(exactla::invariant_factors_via_minors(shifted), expected);
      EXPECT_EQ(*inoue_brauer(d).order(), abs(det3(shifted)));
    }
  EXPECT_GE(valid, 50);
}

IntMatrix random_sl3(std::mt19937_64& rng) {
  IntMatrix m = IntMatrix::identity(3);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = rng() % 3, j = (i + 1 + rng() % 2) % 3;
    IntMatrix e = IntMatrix::identity(3);
    e(i, j) = static_cast<int>(rng() % 5) - 2;
    m = m * e;
  }
  return m;
}

TEST(InoueProperty, CokernelOrderIsDeterminantOfShift) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int iter = 0; iter < 2000 && checked < 100; ++iter) {
    const IntMatrix m = random_sl3(rng);
    ASSERT_EQ(det3(m), 1);
    if (!inoue_validate(m).eigenvalueConditionHolds) continue;
    ++checked;
    EXPECT_EQ(*inoue_brauer(InoueSM{m}).order(), abs(det3(m - IntMatrix::identity(3)))) << m;
  }
  EXPECT_GE(checked, 20);
}

TEST(Torus, CohomologyRanks) {
  EXPECT_EQ(torus_cohomology_rank(2, 2), 6);
  EXPECT_EQ(torus_cohomology_rank(2, 4), 1);
  EXPECT_EQ(torus_cohomology_rank(3, 3), 20);
  EXPECT_THROW(torus_cohomology_rank(2, 5), DomainError);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    std::int64_t pairs = 0;
    for (std::uint64_t i = 0; i < 2 * n; ++i)
      for (std::uint64_t j = i + 1; j < 2 * n; ++j) ++pairs;
    EXPECT_EQ(torus_cohomology_rank(n, 2), pairs);
  }
}

TEST(ComputeBrauer, Examples) {
  const auto k3 = compute_brauer(CompactGeneric{22, 20, FgAbGroup::trivial()});
  EXPECT_EQ(k3.group(), BrGroup(2, FgAbGroup::trivial()));
  EXPECT_EQ(k3.certification, Certification::BrEqualsBrPrime);

  const auto enriques = compute_brauer(CompactGeneric{10, 10, zmod({2})});
  EXPECT_EQ(enriques.group(), BrGroup(0, zmod({2})));

  const auto torus = compute_brauer(Torus{2, 1});
  EXPECT_EQ(torus.group().divisible_rank(), 5u);

  EXPECT_EQ(compute_brauer(Hopf{std::uint64_t{6}, BigInt(4)}).group().torsion(), zmod({2}));

  const auto inoue = compute_brauer(companion(-5, 0, 0), {.allowNonSL3 = true});
  EXPECT_EQ(inoue.group().torsion(), zmod({4}));
  ASSERT_EQ(inoue.warnings.size(), 1u);
  ASSERT_TRUE(inoue.inoue.has_value());
  EXPECT_THROW(compute_brauer(companion(-5, 0, 0)), ValidationError);

  const auto vii = compute_brauer(ClassVII{zmod({3})});
  EXPECT_EQ(vii.group(), BrGroup(0, zmod({3})));
  EXPECT_EQ(vii.certification, Certification::Conditional);

  EXPECT_TRUE(compute_brauer(GlobalSphericalShell{}).group().is_trivial());
  EXPECT_EQ(compute_brauer(Stein2D{}).certification, Certification::FullH2);
  EXPECT_TRUE(compute_brauer(HolomorphicallyConvex2D{}).group().is_trivial());
  EXPECT_EQ(compute_brauer(NoncompactSmooth{zmod({2, 4})}).group().torsion(), zmod({2, 4}));
}

TEST(ComputeBrauer, HopfWithTableAndConstraint) {
  const auto out = compute_brauer(Hopf{groupcohom::GroupTable::klein_four(), IntMatrix(4, 4)});
  EXPECT_FALSE(out.exact());
  EXPECT_EQ(std::get<groupcohom::ConstraintReport>(out.value).order, 8);
  EXPECT_THROW(compute_brauer(Hopf{groupcohom::GroupTable::klein_four(), BigInt(1)}), ValidationError);
  EXPECT_THROW(compute_brauer(Hopf{std::uint64_t{0}, BigInt(0)}), DomainError);
}

TEST(ComputeBrauer, RejectsInconsistentInvariants) {
  EXPECT_THROW(compute_brauer(CompactGeneric{2, 3, FgAbGroup::trivial()}), DomainError);
  EXPECT_THROW(compute_brauer(CompactGeneric{2, 1, FgAbGroup::free(1)}), DomainError);
  EXPECT_THROW(compute_brauer(Torus{2, 7}), DomainError);
  EXPECT_THROW(compute_brauer(Torus{0, 0}), DomainError);
  EXPECT_THROW(compute_brauer(ClassVII{FgAbGroup::free(1)}), DomainError);
}

TEST(Kummer, Examples) {
  EXPECT_EQ(kummer_torsion(CompactGeneric{22, 20, FgAbGroup::trivial()}, 3), zmod({3, 3}));
  EXPECT_TRUE(kummer_torsion(GlobalSphericalShell{}, 5).is_trivial());
  EXPECT_EQ(kummer_torsion(companion(-1, -1, -1), 2), zmod({2}));
  EXPECT_THROW(kummer_torsion(Stein2D{}, 0), DomainError);
  EXPECT_THROW(kummer_torsion(Hopf{groupcohom::GroupTable::klein_four(), IntMatrix(4, 4)}, 2), DomainError);
}

TEST(Kummer, OneTorsionIsTrivial) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 50; ++iter) {
    const std::uint64_t b2 = rng() % 30, rho = rng() % (b2 + 1);
    EXPECT_TRUE(kummer_torsion(CompactGeneric{b2, rho, zmod({2, 6})}, 1).is_trivial());
  }
}

TEST(ClassNames, MatchVariantOrder) {
  EXPECT_STREQ(class_name(SurfaceDescriptor{Torus{1, 0}}), "Torus");
  EXPECT_STREQ(class_name(SurfaceDescriptor{NoncompactSmooth{}}), "NoncompactSmooth");
}

}  // namespace
}  // namespace brauer::surfaces
