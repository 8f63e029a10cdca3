#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace yamaguti;
using namespace yamaguti::testing;

namespace {

/// trace(ad_x ad_y) on basis pairs.
Matrix killing(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(l.binary().at({i, k}));
    ad.push_back(Matrix::from_columns(n, cols));
  }
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix p = ad[i] * ad[j];
      for (std::size_t k = 0; k < n; ++k) g(i, j) += p(k, k);
    }
  return g;
}

}  // namespace

TEST(Quadratic, KillingFormFromStructureConstants) { EXPECT_EQ(killing(sl2()), killing_sl2()); }

TEST(Quadratic, Sl2WithKillingFormPasses) {
  auto a = ly_from_lie(sl2());
  BilinearForm k(killing_sl2());
  auto r = check_quadratic(a, k);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.violation_counts().size(), 5u);
  EXPECT_TRUE(check_adjoint_coadjoint_iso(a, k).passed());
  EXPECT_TRUE(check_rep_homomorphism(b_sharp(k), adjoint_rep(a), dual_rep(adjoint_rep(a))).passed());
}

TEST(Quadratic, AbelianWithIdentityPasses) {
  BilinearForm id(Matrix::identity(2));
  EXPECT_TRUE(check_quadratic(abelian(2), id).passed());
  EXPECT_TRUE(check_adjoint_coadjoint_iso(abelian(2), id).passed());
}

TEST(Quadratic, Ly2WithIdentityFails) {
  auto r = check_quadratic(ly2(), BilinearForm(Matrix::identity(2)));
  EXPECT_FALSE(r.passed());
  auto counts = r.violation_counts();
  EXPECT_EQ(counts.at(axiom::kFormSymmetric), 0u);
  EXPECT_EQ(counts.at(axiom::kFormNondegenerate), 0u);
  EXPECT_EQ(counts.at(axiom::kFormBinaryInvariant), 3u);
  EXPECT_EQ(counts.at(axiom::kFormTernaryInvariant), 2u);

  auto* w = find_witness(r, axiom::kFormBinaryInvariant, idx({1, 2, 1}));
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, vec({1}));
  EXPECT_EQ(w->rhs, vec({0}));
  w = find_witness(r, axiom::kFormBinaryInvariant, idx({1, 1, 2}));
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, vec({0}));
  EXPECT_EQ(w->rhs, vec({-1}));
  w = find_witness(r, axiom::kFormBinaryInvariant, idx({2, 1, 1}));
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, vec({-1}));
  EXPECT_EQ(w->rhs, vec({1}));
  w = find_witness(r, axiom::kFormTernaryInvariant, idx({1, 2, 1, 2}));
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, vec({0}));
  EXPECT_EQ(w->rhs, vec({-1}));
  w = find_witness(r, axiom::kFormTernaryInvariant, idx({2, 1, 2, 1}));
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, vec({-1}));
  EXPECT_EQ(w->rhs, vec({0}));
}

TEST(Quadratic, AsymmetricAndDegenerateForms) {
  auto r = check_quadratic(abelian(2), BilinearForm(mat({{1, 2}, {3, 1}})));
  EXPECT_TRUE(r.has_violation(axiom::kFormSymmetric));
  auto d = check_quadratic(abelian(2), BilinearForm(mat({{1, 1}, {1, 1}})));
  EXPECT_TRUE(d.has_violation(axiom::kFormNondegenerate));
  EXPECT_THROW(check_quadratic(ly2(), BilinearForm(Matrix::identity(3))), DimensionError);
}

TEST(Quadratic, BSharp) {
  EXPECT_EQ(b_sharp(BilinearForm(Matrix::identity(3))), Matrix::identity(3));
  EXPECT_EQ(b_sharp(BilinearForm(killing_sl2())), killing_sl2());
  EXPECT_THROW(b_sharp(BilinearForm(mat({{1, 1}, {1, 1}}))), SingularMatrixError);
}

TEST(Quadratic, PerturbedKillingFormBreaksIsomorphism) {
  auto a = ly_from_lie(sl2());
  Matrix g = killing_sl2();
  g(0, 1) += 1;
  auto r = check_adjoint_coadjoint_iso(a, BilinearForm(g));
  EXPECT_FALSE(r.passed());
  for (std::size_t i : {1, 2, 3}) EXPECT_NE(find_witness(r, axiom::kIsoRho, idx({i})), nullptr);
  EXPECT_EQ(r.violation_counts().at(axiom::kIsoRho), 3u);
  EXPECT_EQ(r.violation_counts().at(axiom::kIsoMu), 5u);
  EXPECT_NE(find_witness(r, axiom::kIsoMu, idx({3, 2})), nullptr);
}
