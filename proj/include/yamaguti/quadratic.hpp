#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "yamaguti/representation.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kFormSymmetric = "form.symmetric";
inline const std::string kFormNondegenerate = "form.nondegenerate";
inline const std::string kFormBinaryInvariant = "form.binary-invariant";
inline const std::string kFormTernaryInvariant = "form.ternary-invariant";
inline const std::string kFormTernarySkew = "form.ternary-skew";
inline const std::string kIsoRho = "iso.rho";
inline const std::string kIsoMu = "iso.mu";
}  // namespace axiom

/// Bilinear form by its Gram matrix: gram(i,j) = B(e_i, e_j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("gram matrix " + gram_.shape());
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

namespace detail {

inline void require_form_dim(const LYAlgebra& a, const Matrix& gram) {
  if (gram.rows() != a.dim() || gram.cols() != a.dim()) {
    throw DimensionError("form " + gram.shape() + " on algebra of dim " + std::to_string(a.dim()));
  }
}

inline Vector scalar_vector(Scalar s) { return Vector{std::move(s)}; }

}  // namespace detail

/// Symmetry, nondegeneracy and the invariance conditions
///   B([x,y],z) = −B(y,[x,z]),  B(⟦x,y,z⟧,w) = B(x,⟦w,z,y⟧),
/// plus the consequence B(⟦x,y,z⟧,w) = −B(z,⟦x,y,w⟧) under its own id.
inline CheckReport check_quadratic(const LYAlgebra& a, const BilinearForm& b) {
  detail::require_form_dim(a, b.gram());
  CheckReport report;
  for (const auto& id : {axiom::kFormSymmetric, axiom::kFormNondegenerate,
                         axiom::kFormBinaryInvariant, axiom::kFormTernaryInvariant,
                         axiom::kFormTernarySkew})
    report.declare(id);
  const std::size_t n = a.dim();
  const Matrix& g = b.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(g(i, j) == g(j, i)))
        report.add({axiom::kFormSymmetric, {i, j}, detail::scalar_vector(g(i, j)),
                    detail::scalar_vector(g(j, i))});
  std::size_t r = rank(g);
  if (r != n)
    report.add({axiom::kFormNondegenerate, {}, detail::scalar_vector(Scalar(static_cast<long>(r))),
                detail::scalar_vector(Scalar(static_cast<long>(n)))});

  const auto e = detail::unit_vectors(n);
  auto B = [&](const Vector& x, const Vector& y) { return detail::scalar_vector(b(x, y)); };
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    report.expect_equal(axiom::kFormBinaryInvariant, i,
                        B(a.binary().at({i[0], i[1]}), e[i[2]]),
                        -B(e[i[1]], a.binary().at({i[0], i[2]})));
  });
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    Vector lhs = B(a.ternary().at({i[0], i[1], i[2]}), e[i[3]]);
    report.expect_equal(axiom::kFormTernaryInvariant, i, lhs,
                        B(e[i[0]], a.ternary().at({i[3], i[2], i[1]})));
    report.expect_equal(axiom::kFormTernarySkew, i, std::move(lhs),
                        -B(e[i[2]], a.ternary().at({i[0], i[1], i[3]})));
  });
  report.finish();
  return report;
}

/// Matrix of x ↦ B(x,·) in dual coordinates, ⟨α,y⟩ = Σ α_i y_i.
inline Matrix b_sharp(const BilinearForm& b) {
  if (rank(b.gram()) != b.dim()) throw SingularMatrixError("b_sharp: gram matrix is singular");
  return b.gram().transpose();
}

/// B♯ as an intertwiner from the adjoint to the coadjoint representation.
inline CheckReport check_adjoint_coadjoint_iso(const LYAlgebra& a, const BilinearForm& b) {
  detail::require_form_dim(a, b.gram());
  Matrix sharp = b_sharp(b);
  auto ad = adjoint_rep(a);
  auto coad = dual_rep(ad);
  CheckReport hom = check_rep_homomorphism(sharp, ad, coad);
  CheckReport report;
  report.declare(axiom::kIsoRho);
  report.declare(axiom::kIsoMu);
  for (auto w : hom.witnesses()) {
    w.axiom = w.axiom == axiom::kRepHomRho ? axiom::kIsoRho : axiom::kIsoMu;
    report.add(std::move(w));
  }
  report.finish();
  return report;
}

}  // namespace yamaguti
