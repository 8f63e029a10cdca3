#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace yamaguti;
using namespace yamaguti::testing;

TEST(Symplectic, FormValidation) {
  EXPECT_THROW(SymplecticForm(mat({{0, 1}, {1, 0}})), PreconditionError);
  EXPECT_THROW(SymplecticForm(Matrix(2, 2)), PreconditionError);
  EXPECT_THROW(SymplecticForm(Matrix(2, 3)), DimensionError);
  EXPECT_NO_THROW(omega2(5));
}

TEST(Symplectic, Ly2Passes) {
  EXPECT_TRUE(check_symplectic(ly2(), omega2()).passed());
  EXPECT_TRUE(check_symplectic(ly2(), omega2(5)).passed());
  EXPECT_TRUE(check_symplectic(abelian(2), omega2(Scalar(-2, 7))).passed());
}

TEST(Symplectic, PerturbedLy2Fails) {
  auto r = check_symplectic(ly2_perturbed(), omega2());
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.violation_counts().at(axiom::kSymplecticBinary), 0u);
  EXPECT_EQ(r.violation_counts().at(axiom::kSymplecticTernary), 4u);
  for (auto i : {idx({1, 2, 1, 2}), idx({1, 2, 2, 1}), idx({2, 1, 1, 2}), idx({2, 1, 2, 1})})
    EXPECT_NE(find_witness(r, axiom::kSymplecticTernary, i), nullptr);
}

TEST(Symplectic, OperatorFromOmega) {
  SymplecticForm w = omega2();
  Matrix t = t_from_omega(w);
  EXPECT_EQ(t, mat({{0, 1}, {-1, 0}}));
  // ω(x,y) = ⟨T⁻¹x, y⟩ on basis pairs.
  Matrix ti = invert(t);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) EXPECT_EQ(w(e(2, i), e(2, j)), dot(ti * e(2, i), e(2, j)));
  // ⟨α,Tβ⟩ + ⟨β,Tα⟩ = 0.
  EXPECT_EQ(dot(e(2, 1), t * e(2, 2)) + dot(e(2, 2), t * e(2, 1)), Scalar(0));
  EXPECT_EQ(omega_from_t(t), w);

  Matrix g4 = mat({{0, 1, 2, 0}, {-1, 0, 3, 1}, {-2, -3, 0, 4}, {0, -1, -4, 0}});
  SymplecticForm w4(g4);
  Matrix t4 = t_from_omega(w4);
  EXPECT_EQ(t4, -t4.transpose());
  EXPECT_EQ(omega_from_t(t4), w4);
}

TEST(Symplectic, RbsymEquivalence) {
  auto good = verify_rbsym_equivalence(ly2(), omega2());
  EXPECT_TRUE(good.symplectic.passed());
  EXPECT_TRUE(good.rbo.passed());
  EXPECT_TRUE(good.agree());

  auto bad = verify_rbsym_equivalence(ly2_perturbed(), omega2());
  EXPECT_FALSE(bad.symplectic.passed());
  EXPECT_FALSE(bad.rbo.passed());
  EXPECT_TRUE(bad.agree());
  for (auto i : {idx({1, 2, 1}), idx({1, 2, 2}), idx({2, 1, 1}), idx({2, 1, 2})})
    EXPECT_NE(find_witness(bad.rbo, axiom::kRboTernary, i), nullptr);

  auto zero = verify_rbsym_equivalence(abelian(4), SymplecticForm(mat(
      {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}})));
  EXPECT_TRUE(zero.symplectic.passed());
  EXPECT_TRUE(zero.agree());
}

TEST(Symplectic, CompatiblePreLy) {
  auto a = ly2();
  auto p = compatible_pre_ly_from_symplectic(a, omega2());
  PreLYAlgebraBuilder expected(2);
  expected.star(0, 1, vec({1, 0})).star(1, 1, vec({0, 1}));
  expected.braces(1, 1, 0, vec({1, 0})).braces(1, 1, 1, vec({0, 1}));
  EXPECT_EQ(p, std::move(expected).build());
  EXPECT_TRUE(check_pre_ly_axioms(p).passed());
  EXPECT_TRUE(check_pre_ly_lemma(p).passed());
  EXPECT_EQ(subadjacent(p), a);
  EXPECT_TRUE(check_braces_d_identity(a, omega2(), p).passed());

  // Both routes agree.
  EXPECT_EQ(p, compatible_pre_ly_from_invertible_rbo(a, dual_rep(adjoint_rep(a)),
                                                     t_from_omega(omega2())));
  EXPECT_EQ(compatible_pre_ly_from_symplectic(a, omega2(5)),
            compatible_pre_ly_from_invertible_rbo(a, dual_rep(adjoint_rep(a)),
                                                  t_from_omega(omega2(5))));
}

TEST(Symplectic, CompatiblePreLyOfZeroAlgebra) {
  EXPECT_EQ(compatible_pre_ly_from_symplectic(abelian(2), omega2()), PreLYAlgebra(2));
}

TEST(Symplectic, CompatiblePreLyRequiresSymplectic) {
  EXPECT_THROW(compatible_pre_ly_from_symplectic(ly2_perturbed(), omega2()), PreconditionError);
}
