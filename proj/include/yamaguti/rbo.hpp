#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/pre_ly.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kRboBinary = "rbo.binary";
inline const std::string kRboTernary = "rbo.ternary";
inline const std::string kRboHomBinary = "rbo-hom.binary";
inline const std::string kRboHomTernary = "rbo-hom.ternary";
inline const std::string kRboImageClosed = "rbo-hom.image-closed";
}  // namespace axiom

namespace detail {

inline void require_operator_shape(const Representation& r, const Matrix& t) {
  if (t.rows() != r.dim() || t.cols() != r.vdim()) {
    throw DimensionError("operator " + t.shape() + " must be " + std::to_string(r.dim()) + "x" +
                         std::to_string(r.vdim()));
  }
}

inline std::vector<Vector> columns_of(const Matrix& t) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < t.cols(); ++k) out.push_back(t.column(k));
  return out;
}

/// A maximal independent subset of the columns, in column order.
inline std::vector<Vector> column_space_basis(const Matrix& t) {
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < t.cols(); ++k) {
    basis.push_back(t.column(k));
    if (rank(Matrix::from_columns(t.rows(), basis)) < basis.size()) basis.pop_back();
  }
  return basis;
}

}  // namespace detail

/// T: V → g with
///   [Tu,Tv]       = T(ρ(Tu)v − ρ(Tv)u)
///   ⟦Tu,Tv,Tw⟧   = T(D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v)
/// on all V-basis tuples. Column k of T is the image of the k-th basis vector.
inline CheckReport check_relative_rbo(const LYAlgebra& a, const Representation& r,
                                      const Matrix& t) {
  detail::require_base(a, r);
  detail::require_operator_shape(r, t);
  CheckReport report;
  report.declare(axiom::kRboBinary);
  report.declare(axiom::kRboTernary);
  const std::size_t m = r.vdim();
  const auto tu = detail::columns_of(t);
  const auto e = detail::unit_vectors(m);
  std::vector<Matrix> rho_t;
  for (std::size_t k = 0; k < m; ++k) rho_t.push_back(r.rho(tu[k]));

  detail::for_each_tuple(m, 2, [&](const auto& i) {
    const std::size_t u = i[0], v = i[1];
    Vector inner = rho_t[u] * e[v] - rho_t[v] * e[u];
    report.expect_equal(axiom::kRboBinary, i, a.bracket2(tu[u], tu[v]), t * inner);
  });

  std::vector<std::vector<Matrix>> d_t(m), mu_t(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      d_t[u].push_back(r.D(tu[u], tu[v]));
      mu_t[u].push_back(r.mu(tu[u], tu[v]));
    }
  }
  detail::for_each_tuple(m, 3, [&](const auto& i) {
    const std::size_t u = i[0], v = i[1], w = i[2];
    Vector inner = d_t[u][v] * e[w];
    inner += mu_t[v][w] * e[u];
    inner -= mu_t[u][w] * e[v];
    report.expect_equal(axiom::kRboTernary, i, a.bracket3(tu[u], tu[v], tu[w]), t * inner);
  });
  report.finish();
  return report;
}

/// Relative operator with respect to the adjoint representation.
inline CheckReport check_rbo(const LYAlgebra& a, const Matrix& t) {
  if (t.rows() != a.dim() || t.cols() != a.dim()) {
    throw DimensionError("operator " + t.shape() + " must be square of size " +
                         std::to_string(a.dim()));
  }
  return check_relative_rbo(a, adjoint_rep(a), t);
}

/// u*v = ρ(Tu)v and {u,v,w} = μ(Tv,Tw)u on V. Throws PreconditionError if T
/// is not a relative Rota-Baxter operator.
inline PreLYAlgebra induced_pre_ly(const LYAlgebra& a, const Representation& r, const Matrix& t) {
  auto check = check_relative_rbo(a, r, t);
  if (!check.passed()) {
    throw PreconditionError("induced_pre_ly: operator fails the Rota-Baxter equations (" +
                            std::to_string(check.witnesses().size()) + " basis tuples)");
  }
  const std::size_t m = r.vdim();
  const auto tu = detail::columns_of(t);
  StructureTensor<2> star(m);
  StructureTensor<3> braces(m);
  for (std::size_t u = 0; u < m; ++u) {
    Matrix rho = r.rho(tu[u]);
    for (std::size_t v = 0; v < m; ++v) star.set({u, v}, rho.column(v));
  }
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w) {
      Matrix mu = r.mu(tu[v], tu[w]);
      for (std::size_t u = 0; u < m; ++u) braces.set({u, v, w}, mu.column(u));
    }
  }
  return PreLYAlgebra(std::move(star), std::move(braces));
}

/// T as a homomorphism from the subadjacent algebra of the induced pre-LY
/// structure to A, plus closedness of T(V) in A.
inline CheckReport check_rbo_homomorphism(const LYAlgebra& a, const Representation& r,
                                          const Matrix& t) {
  auto sub = subadjacent(induced_pre_ly(a, r, t));
  CheckReport report;
  report.declare(axiom::kRboHomBinary);
  report.declare(axiom::kRboHomTernary);
  report.declare(axiom::kRboImageClosed);
  const std::size_t m = r.vdim();
  const auto tu = detail::columns_of(t);
  detail::for_each_tuple(m, 2, [&](const auto& i) {
    report.expect_equal(axiom::kRboHomBinary, i, t * sub.binary().at({i[0], i[1]}),
                        a.bracket2(tu[i[0]], tu[i[1]]));
  });
  detail::for_each_tuple(m, 3, [&](const auto& i) {
    report.expect_equal(axiom::kRboHomTernary, i, t * sub.ternary().at({i[0], i[1], i[2]}),
                        a.bracket3(tu[i[0]], tu[i[1]], tu[i[2]]));
  });
  auto closure = is_closed_subspace(a, detail::column_space_basis(t));
  if (!closure.closed) {
    Witness w = std::move(*closure.witness);
    w.axiom = axiom::kRboImageClosed;
    w.rhs = Vector(a.dim());
    report.add(std::move(w));
  }
  report.finish();
  return report;
}

/// Pre-LY structure on g from an invertible operator:
///   x*y = Tρ(x)T⁻¹y,  {x,y,z} = Tμ(y,z)T⁻¹x.
inline PreLYAlgebra compatible_pre_ly_from_invertible_rbo(const LYAlgebra& a,
                                                          const Representation& r,
                                                          const Matrix& t) {
  detail::require_operator_shape(r, t);
  if (t.rows() != t.cols()) throw DimensionError("operator " + t.shape() + " is not square");
  Matrix inverse = invert(t);
  auto check = check_relative_rbo(a, r, t);
  if (!check.passed()) {
    throw PreconditionError("operator fails the Rota-Baxter equations (" +
                            std::to_string(check.witnesses().size()) + " basis tuples)");
  }
  const std::size_t n = a.dim();
  StructureTensor<2> star(n);
  StructureTensor<3> braces(n);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix left = t * r.rho()[x] * inverse;
    for (std::size_t y = 0; y < n; ++y) star.set({x, y}, left.column(y));
  }
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      Matrix right = t * r.mu()[y][z] * inverse;
      for (std::size_t x = 0; x < n; ++x) braces.set({x, y, z}, right.column(x));
    }
  }
  return PreLYAlgebra(std::move(star), std::move(braces));
}

}  // namespace yamaguti
