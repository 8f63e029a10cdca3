#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/representation.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kPreBracesCommutator = "pre.braces-commutator";
inline const std::string kPreBracesThirdCommutator = "pre.braces-third-commutator";
inline const std::string kPreBracesNestedFirst = "pre.braces-nested-first";
inline const std::string kPreBracesNestedMiddle = "pre.braces-nested-middle";
inline const std::string kPreStarBraces = "pre.star-braces";
inline const std::string kPreDCyclic = "pre.d-cyclic";
inline const std::string kPreDFundamental = "pre.d-fundamental";
}  // namespace axiom

/// Vector space with a bilinear product * and a trilinear product {·,·,·},
/// neither with any symmetry. {x,y,z}_D is cached as a tensor.
class PreLYAlgebra {
 public:
  explicit PreLYAlgebra(std::size_t dim = 0) : star_(dim), braces_(dim), d_(dim) {}

  PreLYAlgebra(StructureTensor<2> star, StructureTensor<3> braces)
      : star_(std::move(star)), braces_(std::move(braces)) {
    detail::require_same_size(star_.dim(), braces_.dim(), "pre-LY tensors");
    recompute();
  }

  std::size_t dim() const { return star_.dim(); }
  const StructureTensor<2>& star_tensor() const { return star_; }
  const StructureTensor<3>& braces_tensor() const { return braces_; }
  const StructureTensor<3>& braces_d_tensor() const { return d_; }

  Vector star(const Vector& x, const Vector& y) const { return star_.evaluate({&x, &y}); }
  Vector braces(const Vector& x, const Vector& y, const Vector& z) const {
    return braces_.evaluate({&x, &y, &z});
  }
  /// (x*y)*z − x*(y*z)
  Vector associator(const Vector& x, const Vector& y, const Vector& z) const {
    return star(star(x, y), z) - star(x, star(y, z));
  }
  /// {z,y,x} − {z,x,y} + (y,x,z) − (x,y,z)
  Vector braces_D(const Vector& x, const Vector& y, const Vector& z) const {
    return d_.evaluate({&x, &y, &z});
  }
  Vector commutator(const Vector& x, const Vector& y) const { return star(x, y) - star(y, x); }

  friend bool operator==(const PreLYAlgebra& a, const PreLYAlgebra& b) {
    return a.star_ == b.star_ && a.braces_ == b.braces_;
  }

 private:
  void recompute() {
    const std::size_t n = dim();
    d_ = StructureTensor<3>(n);
    const auto e = detail::unit_vectors(n);
    detail::for_each_tuple(n, 3, [&](const auto& i) {
      const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]];
      Vector v = braces(z, y, x) - braces(z, x, y);
      v += associator(y, x, z);
      v -= associator(x, y, z);
      d_.set({i[0], i[1], i[2]}, std::move(v));
    });
  }

  StructureTensor<2> star_;
  StructureTensor<3> braces_;
  StructureTensor<3> d_;
};

/// Collects table entries; repeating an entry with a different value is a
/// ConflictError.
class PreLYAlgebraBuilder {
 public:
  explicit PreLYAlgebraBuilder(std::size_t dim) : star_(dim), braces_(dim) {}

  PreLYAlgebraBuilder& star(std::size_t i, std::size_t j, Vector value) {
    assign(star_, star_seen_, {i, j}, std::move(value), "star product");
    return *this;
  }
  PreLYAlgebraBuilder& braces(std::size_t i, std::size_t j, std::size_t k, Vector value) {
    assign(braces_, braces_seen_, {i, j, k}, std::move(value), "braces product");
    return *this;
  }

  PreLYAlgebra build() && { return PreLYAlgebra(std::move(star_), std::move(braces_)); }

 private:
  template <std::size_t Arity>
  static void assign(StructureTensor<Arity>& tensor,
                     std::map<typename StructureTensor<Arity>::Index, bool>& seen,
                     const typename StructureTensor<Arity>::Index& idx, Vector value,
                     const char* what) {
    for (auto i : idx)
      if (i >= tensor.dim()) throw DimensionError(std::string(what) + ": index out of range");
    detail::require_same_size(value.size(), tensor.dim(), what);
    if (seen.count(idx) && !(tensor.at(idx) == value)) {
      throw ConflictError(std::string(what) + ": conflicting values for one structure constant");
    }
    seen[idx] = true;
    tensor.set(idx, std::move(value));
  }

  StructureTensor<2> star_;
  StructureTensor<3> braces_;
  std::map<StructureTensor<2>::Index, bool> star_seen_;
  std::map<StructureTensor<3>::Index, bool> braces_seen_;
};

inline Vector star(const PreLYAlgebra& p, const Vector& x, const Vector& y) { return p.star(x, y); }
inline Vector braces(const PreLYAlgebra& p, const Vector& x, const Vector& y, const Vector& z) {
  return p.braces(x, y, z);
}
inline Vector associator(const PreLYAlgebra& p, const Vector& x, const Vector& y,
                         const Vector& z) {
  return p.associator(x, y, z);
}
inline Vector braces_D(const PreLYAlgebra& p, const Vector& x, const Vector& y, const Vector& z) {
  return p.braces_D(x, y, z);
}

/// The five defining identities and the two consequences, evaluated on
/// arbitrary vectors as (lhs, rhs).
namespace pre_identity {

inline std::pair<Vector, Vector> braces_commutator(const PreLYAlgebra& p, const Vector& x,
                                                   const Vector& y, const Vector& z,
                                                   const Vector& w) {
  Vector sum = p.braces(z, p.commutator(x, y), w);
  sum -= p.braces(p.star(y, z), x, w);
  sum += p.braces(p.star(x, z), y, w);
  return {std::move(sum), Vector(p.dim())};
}

inline std::pair<Vector, Vector> braces_third_commutator(const PreLYAlgebra& p, const Vector& x,
                                                         const Vector& y, const Vector& z,
                                                         const Vector& w) {
  Vector lhs = p.braces(x, y, p.commutator(z, w));
  Vector rhs = p.star(z, p.braces(x, y, w)) - p.star(w, p.braces(x, y, z));
  return {std::move(lhs), std::move(rhs)};
}

inline std::pair<Vector, Vector> braces_nested_first(const PreLYAlgebra& p, const Vector& x,
                                                     const Vector& y, const Vector& z,
                                                     const Vector& w, const Vector& t) {
  Vector sum = p.braces(p.braces(x, y, z), w, t);
  sum -= p.braces(p.braces(x, y, w), z, t);
  sum -= p.braces(x, y, p.braces_D(z, w, t));
  sum -= p.braces(x, y, p.braces(z, w, t));
  sum += p.braces(x, y, p.braces(w, z, t));
  sum += p.braces_D(z, w, p.braces(x, y, t));
  return {std::move(sum), Vector(p.dim())};
}

inline std::pair<Vector, Vector> braces_nested_middle(const PreLYAlgebra& p, const Vector& x,
                                                      const Vector& y, const Vector& z,
                                                      const Vector& w, const Vector& t) {
  Vector lhs = p.braces(z, p.braces_D(x, y, w), t);
  lhs += p.braces(z, p.braces(x, y, w), t);
  lhs -= p.braces(z, p.braces(y, x, w), t);
  lhs += p.braces(z, w, p.braces_D(x, y, t));
  lhs += p.braces(z, w, p.braces(x, y, t));
  lhs -= p.braces(z, w, p.braces(y, x, t));
  Vector rhs = p.braces_D(x, y, p.braces(z, w, t)) - p.braces(p.braces_D(x, y, z), w, t);
  return {std::move(lhs), std::move(rhs)};
}

inline std::pair<Vector, Vector> star_braces(const PreLYAlgebra& p, const Vector& x,
                                             const Vector& y, const Vector& z, const Vector& w) {
  Vector lhs = p.star(p.braces_D(x, y, z), w);
  lhs += p.star(p.braces(x, y, z), w);
  lhs -= p.star(p.braces(y, x, z), w);
  Vector rhs = p.braces_D(x, y, p.star(z, w)) - p.star(z, p.braces_D(x, y, w));
  return {std::move(lhs), std::move(rhs)};
}

inline std::pair<Vector, Vector> d_cyclic(const PreLYAlgebra& p, const Vector& x, const Vector& y,
                                          const Vector& z, const Vector& w) {
  Vector sum = p.braces_D(p.commutator(x, y), z, w);
  sum += p.braces_D(p.commutator(y, z), x, w);
  sum += p.braces_D(p.commutator(z, x), y, w);
  return {std::move(sum), Vector(p.dim())};
}

inline std::pair<Vector, Vector> d_fundamental(const PreLYAlgebra& p, const Vector& x,
                                               const Vector& y, const Vector& z, const Vector& w,
                                               const Vector& t) {
  Vector sum = p.braces_D(x, y, p.braces_D(z, w, t));
  sum -= p.braces_D(p.braces_D(x, y, z), w, t);
  sum -= p.braces_D(p.braces(x, y, z), w, t);
  sum += p.braces_D(p.braces(y, x, z), w, t);
  sum -= p.braces_D(z, p.braces_D(x, y, w), t);
  sum -= p.braces_D(z, p.braces(x, y, w), t);
  sum += p.braces_D(z, p.braces(y, x, w), t);
  sum -= p.braces_D(z, w, p.braces_D(x, y, t));
  return {std::move(sum), Vector(p.dim())};
}

}  // namespace pre_identity

inline CheckReport check_pre_ly_axioms(const PreLYAlgebra& p) {
  CheckReport report;
  for (const auto& id : {axiom::kPreBracesCommutator, axiom::kPreBracesThirdCommutator,
                         axiom::kPreBracesNestedFirst, axiom::kPreBracesNestedMiddle,
                         axiom::kPreStarBraces})
    report.declare(id);
  const std::size_t n = p.dim();
  const auto e = detail::unit_vectors(n);
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = e[i[3]];
    auto [l1, r1] = pre_identity::braces_commutator(p, x, y, z, w);
    report.expect_equal(axiom::kPreBracesCommutator, i, std::move(l1), std::move(r1));
    auto [l2, r2] = pre_identity::braces_third_commutator(p, x, y, z, w);
    report.expect_equal(axiom::kPreBracesThirdCommutator, i, std::move(l2), std::move(r2));
    auto [l3, r3] = pre_identity::star_braces(p, x, y, z, w);
    report.expect_equal(axiom::kPreStarBraces, i, std::move(l3), std::move(r3));
  });
  detail::for_each_tuple(n, 5, [&](const auto& i) {
    const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = e[i[3]], &t = e[i[4]];
    auto [l1, r1] = pre_identity::braces_nested_first(p, x, y, z, w, t);
    report.expect_equal(axiom::kPreBracesNestedFirst, i, std::move(l1), std::move(r1));
    auto [l2, r2] = pre_identity::braces_nested_middle(p, x, y, z, w, t);
    report.expect_equal(axiom::kPreBracesNestedMiddle, i, std::move(l2), std::move(r2));
  });
  report.finish();
  return report;
}

inline CheckReport check_pre_ly_lemma(const PreLYAlgebra& p) {
  CheckReport report;
  report.declare(axiom::kPreDCyclic);
  report.declare(axiom::kPreDFundamental);
  const std::size_t n = p.dim();
  const auto e = detail::unit_vectors(n);
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    auto [l, r] = pre_identity::d_cyclic(p, e[i[0]], e[i[1]], e[i[2]], e[i[3]]);
    report.expect_equal(axiom::kPreDCyclic, i, std::move(l), std::move(r));
  });
  detail::for_each_tuple(n, 5, [&](const auto& i) {
    auto [l, r] = pre_identity::d_fundamental(p, e[i[0]], e[i[1]], e[i[2]], e[i[3]], e[i[4]]);
    report.expect_equal(axiom::kPreDFundamental, i, std::move(l), std::move(r));
  });
  report.finish();
  return report;
}

/// [x,y]_C = x*y − y*x and ⟦x,y,z⟧_C = {x,y,z}_D + {x,y,z} − {y,x,z}.
inline LYAlgebra subadjacent(const PreLYAlgebra& p) {
  const std::size_t n = p.dim();
  StructureTensor<2> binary(n);
  StructureTensor<3> ternary(n);
  detail::for_each_tuple(n, 2, [&](const auto& i) {
    binary.set({i[0], i[1]}, p.star_tensor().at({i[0], i[1]}) - p.star_tensor().at({i[1], i[0]}));
  });
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    Vector v = p.braces_d_tensor().at({i[0], i[1], i[2]});
    v += p.braces_tensor().at({i[0], i[1], i[2]});
    v -= p.braces_tensor().at({i[1], i[0], i[2]});
    ternary.set({i[0], i[1], i[2]}, std::move(v));
  });
  return LYAlgebra(std::move(binary), std::move(ternary));
}

/// Representation of the subadjacent algebra on A: ρ(x)z = x*z, μ(x,y)z = {z,x,y}.
inline Representation lr_representation(const PreLYAlgebra& p) {
  const std::size_t n = p.dim();
  std::vector<Matrix> rho;
  std::vector<std::vector<Matrix>> mu(n);
  std::vector<Vector> columns(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) columns[k] = p.star_tensor().at({i, k});
    rho.push_back(Matrix::from_columns(n, columns));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) columns[k] = p.braces_tensor().at({k, i, j});
      mu[i].push_back(Matrix::from_columns(n, columns));
    }
  }
  return Representation(subadjacent(p), n, std::move(rho), std::move(mu));
}

}  // namespace yamaguti
