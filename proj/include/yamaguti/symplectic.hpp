#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "yamaguti/quadratic.hpp"
#include "yamaguti/rbo.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kSymplecticBinary = "symplectic.closed-binary";
inline const std::string kSymplecticTernary = "symplectic.closed-ternary";
inline const std::string kSymplecticBracesD = "symplectic.braces-d";
}  // namespace axiom

/// Antisymmetric nondegenerate form; both properties are enforced on
/// construction (PreconditionError otherwise).
class SymplecticForm {
 public:
  SymplecticForm() = default;
  explicit SymplecticForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("symplectic gram " + gram_.shape());
    if (!(gram_ == -gram_.transpose())) throw PreconditionError("form is not antisymmetric");
    if (rank(gram_) != gram_.rows()) throw PreconditionError("form is degenerate");
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

  friend bool operator==(const SymplecticForm&, const SymplecticForm&) = default;

 private:
  Matrix gram_;
};

/// The two closedness identities on arbitrary vectors.
namespace symplectic_identity {

/// ω(x,[y,z]) + ω(y,[z,x]) + ω(z,[x,y]).
inline Scalar closed_binary(const LYAlgebra& a, const SymplecticForm& w, const Vector& x,
                            const Vector& y, const Vector& z) {
  return w(x, a.bracket2(y, z)) + w(y, a.bracket2(z, x)) + w(z, a.bracket2(x, y));
}

/// ω(z,⟦x,y,v⟧) − ω(x,⟦v,z,y⟧) + ω(y,⟦v,z,x⟧) − ω(v,⟦x,y,z⟧).
inline Scalar closed_ternary(const LYAlgebra& a, const SymplecticForm& w, const Vector& x,
                             const Vector& y, const Vector& z, const Vector& v) {
  return w(z, a.bracket3(x, y, v)) - w(x, a.bracket3(v, z, y)) + w(y, a.bracket3(v, z, x)) -
         w(v, a.bracket3(x, y, z));
}

}  // namespace symplectic_identity

inline CheckReport check_symplectic(const LYAlgebra& a, const SymplecticForm& w) {
  detail::require_form_dim(a, w.gram());
  CheckReport report;
  report.declare(axiom::kSymplecticBinary);
  report.declare(axiom::kSymplecticTernary);
  const std::size_t n = a.dim();
  const auto e = detail::unit_vectors(n);
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    Scalar s = symplectic_identity::closed_binary(a, w, e[i[0]], e[i[1]], e[i[2]]);
    report.expect_zero(axiom::kSymplecticBinary, i, detail::scalar_vector(std::move(s)));
  });
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    Scalar s = symplectic_identity::closed_ternary(a, w, e[i[0]], e[i[1]], e[i[2]], e[i[3]]);
    report.expect_zero(axiom::kSymplecticTernary, i, detail::scalar_vector(std::move(s)));
  });
  report.finish();
  return report;
}

/// T: g* → g with ω(x,y) = ⟨T⁻¹x, y⟩ under ⟨α,x⟩ = Σ α_i x_i, so T⁻¹ = ωᵀ.
inline Matrix t_from_omega(const SymplecticForm& w) { return invert(w.gram().transpose()); }

/// Inverse of t_from_omega.
inline SymplecticForm omega_from_t(const Matrix& t) {
  return SymplecticForm(invert(t).transpose());
}

/// Both sides of the symplectic ⇔ skew Rota-Baxter equivalence, computed
/// independently.
struct RbsymEquivalence {
  CheckReport symplectic;
  CheckReport rbo;
  bool agree() const { return symplectic.passed() == rbo.passed(); }
};

inline RbsymEquivalence verify_rbsym_equivalence(const LYAlgebra& a, const SymplecticForm& w) {
  RbsymEquivalence out;
  out.symplectic = check_symplectic(a, w);
  out.rbo = check_relative_rbo(a, dual_rep(adjoint_rep(a)), t_from_omega(w));
  return out;
}

/// Solves ω(x*y,z) = −ω(y,[x,z]) and ω({x,y,z},w) = ω(x,⟦w,z,y⟧) for the
/// products on basis vectors. Throws PreconditionError if ω is not a
/// symplectic structure on A.
inline PreLYAlgebra compatible_pre_ly_from_symplectic(const LYAlgebra& a,
                                                      const SymplecticForm& w) {
  auto check = check_symplectic(a, w);
  if (!check.passed()) {
    throw PreconditionError("form is not a symplectic structure on the algebra (" +
                            std::to_string(check.witnesses().size()) + " basis tuples)");
  }
  const std::size_t n = a.dim();
  const auto e = detail::unit_vectors(n);
  // ω(p, e_k) = (ωᵀ p)_k, so p = (ωᵀ)⁻¹ rhs.
  const Matrix solver = invert(w.gram().transpose());
  StructureTensor<2> star(n);
  StructureTensor<3> braces(n);
  detail::for_each_tuple(n, 2, [&](const auto& i) {
    Vector rhs(n);
    for (std::size_t z = 0; z < n; ++z) rhs[z] = -w(e[i[1]], a.binary().at({i[0], z}));
    star.set({i[0], i[1]}, solver * rhs);
  });
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    Vector rhs(n);
    for (std::size_t v = 0; v < n; ++v) rhs[v] = w(e[i[0]], a.ternary().at({v, i[2], i[1]}));
    braces.set({i[0], i[1], i[2]}, solver * rhs);
  });
  return PreLYAlgebra(std::move(star), std::move(braces));
}

/// ω({x,y,z}_D, w) = −ω(z, ⟦x,y,w⟧) for a pre-LY structure P on A.
inline CheckReport check_braces_d_identity(const LYAlgebra& a, const SymplecticForm& w,
                                           const PreLYAlgebra& p) {
  detail::require_form_dim(a, w.gram());
  detail::require_same_size(p.dim(), a.dim(), "pre-LY algebra");
  CheckReport report;
  report.declare(axiom::kSymplecticBracesD);
  const std::size_t n = a.dim();
  const auto e = detail::unit_vectors(n);
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    report.expect_equal(
        axiom::kSymplecticBracesD, i,
        detail::scalar_vector(w(p.braces_d_tensor().at({i[0], i[1], i[2]}), e[i[3]])),
        detail::scalar_vector(-w(e[i[2]], a.ternary().at({i[0], i[1], i[3]}))));
  });
  report.finish();
  return report;
}

}  // namespace yamaguti
