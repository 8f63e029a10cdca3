#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/ly_algebra.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kRepMuBracketFirst = "rep.mu-bracket-first";
inline const std::string kRepMuBracketSecond = "rep.mu-bracket-second";
inline const std::string kRepRhoTernary = "rep.rho-ternary";
inline const std::string kRepMuQuadratic = "rep.mu-quadratic";
inline const std::string kRepMuTernary = "rep.mu-ternary";
inline const std::string kRepDCyclic = "rep.d-cyclic";
inline const std::string kRepDDerivation = "rep.d-derivation";
inline const std::string kRepMuTernaryExpanded = "rep.mu-ternary-expanded";
inline const std::string kRepHomRho = "rep-hom.rho";
inline const std::string kRepHomMu = "rep-hom.mu";
}  // namespace axiom

/// D(e_i, e_j) for every ordered basis pair, as an n×n table of m×m matrices.
using DerivedD = std::vector<std::vector<Matrix>>;

/// Representation (ρ, μ) of an LY algebra on an m-dimensional space.
/// rho[i] = ρ(e_i); mu[i][j] = μ(e_i, e_j), with no symmetry assumed.
class Representation {
 public:
  Representation() = default;

  Representation(LYAlgebra base, std::size_t vdim)
      : base_(std::move(base)), vdim_(vdim),
        rho_(base_.dim(), Matrix(vdim, vdim)),
        mu_(base_.dim(), std::vector<Matrix>(base_.dim(), Matrix(vdim, vdim))) {
    recompute();
  }

  Representation(LYAlgebra base, std::size_t vdim, std::vector<Matrix> rho,
                 std::vector<std::vector<Matrix>> mu)
      : base_(std::move(base)), vdim_(vdim), rho_(std::move(rho)), mu_(std::move(mu)) {
    const std::size_t n = base_.dim();
    detail::require_same_size(rho_.size(), n, "rho table");
    detail::require_same_size(mu_.size(), n, "mu table");
    for (const auto& m : rho_) require_square(m);
    for (const auto& row : mu_) {
      detail::require_same_size(row.size(), n, "mu table row");
      for (const auto& m : row) require_square(m);
    }
    recompute();
  }

  const LYAlgebra& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }
  std::size_t vdim() const { return vdim_; }
  const std::vector<Matrix>& rho() const { return rho_; }
  const std::vector<std::vector<Matrix>>& mu() const { return mu_; }
  const DerivedD& derived() const { return d_; }

  void set_rho(std::size_t i, Matrix m) {
    require_square(m);
    rho_.at(i) = std::move(m);
    recompute();
  }
  void set_mu(std::size_t i, std::size_t j, Matrix m) {
    require_square(m);
    mu_.at(i).at(j) = std::move(m);
    recompute();
  }

  Matrix rho(const Vector& x) const {
    detail::require_same_size(x.size(), dim(), "rho argument");
    Matrix out(vdim_, vdim_);
    for (std::size_t i : x.support()) out.axpy(x[i], rho_[i]);
    return out;
  }

  Matrix mu(const Vector& x, const Vector& y) const { return bilinear(mu_, x, y); }
  Matrix D(const Vector& x, const Vector& y) const { return bilinear(d_, x, y); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.base_ == b.base_ && a.vdim_ == b.vdim_ && a.rho_ == b.rho_ && a.mu_ == b.mu_;
  }

 private:
  void require_square(const Matrix& m) const {
    if (m.rows() != vdim_ || m.cols() != vdim_) {
      throw DimensionError("representation matrix " + m.shape() + " but vdim is " +
                           std::to_string(vdim_));
    }
  }

  Matrix bilinear(const std::vector<std::vector<Matrix>>& table, const Vector& x,
                  const Vector& y) const {
    detail::require_same_size(x.size(), dim(), "first argument");
    detail::require_same_size(y.size(), dim(), "second argument");
    Matrix out(vdim_, vdim_);
    auto sy = y.support();
    for (std::size_t i : x.support())
      for (std::size_t j : sy) out.axpy(x[i] * y[j], table[i][j]);
    return out;
  }

  void recompute() {
    const std::size_t n = dim();
    d_.assign(n, std::vector<Matrix>(n, Matrix(vdim_, vdim_)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix d = mu_[j][i] - mu_[i][j] + commutator(rho_[i], rho_[j]);
        d -= rho(base_.binary().at({i, j}));
        d_[i][j] = std::move(d);
      }
    }
  }

  LYAlgebra base_;
  std::size_t vdim_ = 0;
  std::vector<Matrix> rho_;
  std::vector<std::vector<Matrix>> mu_;
  DerivedD d_;
};

/// D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y]) on basis pairs.
inline DerivedD derived_D(const Representation& r) { return r.derived(); }

namespace detail {

inline void require_base(const LYAlgebra& a, const Representation& r) {
  if (!(r.base() == a)) throw PreconditionError("representation is over a different algebra");
}

}  // namespace detail

/// Evaluates the five defining equations on all basis tuples.
inline CheckReport check_representation(const LYAlgebra& a, const Representation& r) {
  detail::require_base(a, r);
  CheckReport report;
  for (const auto& id : {axiom::kRepMuBracketFirst, axiom::kRepMuBracketSecond,
                         axiom::kRepRhoTernary, axiom::kRepMuQuadratic, axiom::kRepMuTernary})
    report.declare(id);
  const std::size_t n = a.dim();
  const auto& rho = r.rho();
  const auto& mu = r.mu();
  const auto& d = r.derived();

  detail::for_each_tuple(n, 3, [&](const auto& i) {
    const std::size_t x = i[0], y = i[1], z = i[2];
    Matrix first = r.mu(a.binary().at({x, y}), Vector::unit(n, z));
    first -= mu[x][z] * rho[y];
    first += mu[y][z] * rho[x];
    report.expect_zero(axiom::kRepMuBracketFirst, i, first);

    Matrix second = r.mu(Vector::unit(n, x), a.binary().at({y, z}));
    second -= rho[y] * mu[x][z];
    second += rho[z] * mu[x][y];
    report.expect_zero(axiom::kRepMuBracketSecond, i, second);

    report.expect_equal(axiom::kRepRhoTernary, i, r.rho(a.ternary().at({x, y, z})),
                        commutator(d[x][y], rho[z]));
  });

  detail::for_each_tuple(n, 4, [&](const auto& i) {
    const std::size_t x = i[0], y = i[1], z = i[2], w = i[3];
    Matrix quad = mu[z][w] * mu[x][y];
    quad -= mu[y][w] * mu[x][z];
    quad -= r.mu(Vector::unit(n, x), a.ternary().at({y, z, w}));
    quad += d[y][z] * mu[x][w];
    report.expect_zero(axiom::kRepMuQuadratic, i, quad);

    Matrix lhs = r.mu(a.ternary().at({x, y, z}), Vector::unit(n, w));
    lhs += r.mu(Vector::unit(n, z), a.ternary().at({x, y, w}));
    report.expect_equal(axiom::kRepMuTernary, i, lhs, commutator(d[x][y], mu[z][w]));
  });
  report.finish();
  return report;
}

/// The three identities every representation satisfies as a consequence of
/// the definition.
inline CheckReport check_derived_identities(const LYAlgebra& a, const Representation& r) {
  detail::require_base(a, r);
  CheckReport report;
  for (const auto& id :
       {axiom::kRepDCyclic, axiom::kRepDDerivation, axiom::kRepMuTernaryExpanded})
    report.declare(id);
  const std::size_t n = a.dim();
  const auto& mu = r.mu();
  const auto& d = r.derived();

  detail::for_each_tuple(n, 3, [&](const auto& i) {
    const std::size_t x = i[0], y = i[1], z = i[2];
    Matrix sum = r.D(a.binary().at({x, y}), Vector::unit(n, z));
    sum += r.D(a.binary().at({y, z}), Vector::unit(n, x));
    sum += r.D(a.binary().at({z, x}), Vector::unit(n, y));
    report.expect_zero(axiom::kRepDCyclic, i, sum);
  });

  detail::for_each_tuple(n, 4, [&](const auto& i) {
    const std::size_t x = i[0], y = i[1], z = i[2], w = i[3];
    Matrix lhs = r.D(a.ternary().at({x, y, z}), Vector::unit(n, w));
    lhs += r.D(Vector::unit(n, z), a.ternary().at({x, y, w}));
    report.expect_equal(axiom::kRepDDerivation, i, lhs, commutator(d[x][y], d[z][w]));

    Matrix expanded = mu[x][w] * mu[z][y];
    expanded -= mu[y][w] * mu[z][x];
    expanded -= mu[z][w] * d[x][y];
    report.expect_equal(axiom::kRepMuTernaryExpanded, i,
                        r.mu(a.ternary().at({x, y, z}), Vector::unit(n, w)), expanded);
  });
  report.finish();
  return report;
}

/// ρ(x) = ad_x and μ(x,y)z = ⟦z,x,y⟧.
inline Representation adjoint_rep(const LYAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> rho;
  std::vector<std::vector<Matrix>> mu(n);
  std::vector<Vector> columns(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) columns[k] = a.binary().at({i, k});
    rho.push_back(Matrix::from_columns(n, columns));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) columns[k] = a.ternary().at({k, i, j});
      mu[i].push_back(Matrix::from_columns(n, columns));
    }
  }
  return Representation(a, n, std::move(rho), std::move(mu));
}

/// Dual representation on V*: ρ*(x) = −ρ(x)ᵀ and μ*(x,y) = μ(y,x)ᵀ.
inline Representation dual_rep(const Representation& r) {
  const std::size_t n = r.dim();
  std::vector<Matrix> rho;
  std::vector<std::vector<Matrix>> mu(n);
  for (std::size_t i = 0; i < n; ++i) rho.push_back(-r.rho()[i].transpose());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu[i].push_back(r.mu()[j][i].transpose());
  return Representation(r.base(), r.vdim(), std::move(rho), std::move(mu));
}

/// LY algebra on g ⊕ V, basis of g first:
///   [x+u, y+v]       = [x,y] + ρ(x)v − ρ(y)u
///   ⟦x+u, y+v, z+w⟧ = ⟦x,y,z⟧ + D(x,y)w + μ(y,z)u − μ(x,z)v
inline LYAlgebra semidirect(const LYAlgebra& a, const Representation& r) {
  detail::require_base(a, r);
  const std::size_t n = a.dim();
  const std::size_t m = r.vdim();
  const std::size_t total = n + m;
  StructureTensor<2> binary(total);
  StructureTensor<3> ternary(total);
  auto lift_g = [&](const Vector& v) { return Vector::concat(v, Vector(m)); };
  auto lift_v = [&](const Vector& v) { return Vector::concat(Vector(n), v); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) binary.set({i, j}, lift_g(a.binary().at({i, j})));
    for (std::size_t k = 0; k < m; ++k) {
      Vector image = lift_v(r.rho()[i].column(k));
      binary.set({n + k, i}, -image);
      binary.set({i, n + k}, std::move(image));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        ternary.set({i, j, k}, lift_g(a.ternary().at({i, j, k})));
      for (std::size_t k = 0; k < m; ++k) {
        ternary.set({i, j, n + k}, lift_v(r.derived()[i][j].column(k)));
        Vector image = lift_v(r.mu()[i][j].column(k));
        ternary.set({i, n + k, j}, -image);
        ternary.set({n + k, i, j}, std::move(image));
      }
    }
  }
  return LYAlgebra(std::move(binary), std::move(ternary));
}

/// ψ: V1 → V2 (vdim2 rows, vdim1 columns) intertwines both structure maps.
inline CheckReport check_rep_homomorphism(const Matrix& psi, const Representation& r1,
                                          const Representation& r2) {
  if (!(r1.base() == r2.base())) {
    throw PreconditionError("representations are over different algebras");
  }
  if (psi.rows() != r2.vdim() || psi.cols() != r1.vdim()) {
    throw DimensionError("homomorphism matrix " + psi.shape() + " does not map dim " +
                         std::to_string(r1.vdim()) + " to dim " + std::to_string(r2.vdim()));
  }
  CheckReport report;
  report.declare(axiom::kRepHomRho);
  report.declare(axiom::kRepHomMu);
  const std::size_t n = r1.dim();
  detail::for_each_tuple(n, 1, [&](const auto& i) {
    report.expect_equal(axiom::kRepHomRho, i, psi * r1.rho()[i[0]], r2.rho()[i[0]] * psi);
  });
  detail::for_each_tuple(n, 2, [&](const auto& i) {
    report.expect_equal(axiom::kRepHomMu, i, psi * r1.mu()[i[0]][i[1]],
                        r2.mu()[i[0]][i[1]] * psi);
  });
  report.finish();
  return report;
}

}  // namespace yamaguti
