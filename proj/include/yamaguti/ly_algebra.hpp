#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/linalg.hpp"
#include "yamaguti/report.hpp"
#include "yamaguti/tensor.hpp"

namespace yamaguti {

/// Identifiers used in witnesses of the Lie-Yamaguti identities.
namespace axiom {
inline const std::string kLyJacobi = "ly.jacobi";
inline const std::string kLyTernaryJacobi = "ly.ternary-jacobi";
inline const std::string kLyDerivation = "ly.derivation";
inline const std::string kLyFundamental = "ly.fundamental";
inline const std::string kLieJacobi = "lie.jacobi";
inline const std::string kHomBinary = "hom.binary";
inline const std::string kHomTernary = "hom.ternary";
inline const std::string kClosureBinary = "closure.binary";
inline const std::string kClosureTernary = "closure.ternary";
}  // namespace axiom

namespace detail {

/// Fills a tensor that is antisymmetric in its first two slots from
/// user-supplied entries, rejecting contradictory input.
template <std::size_t Arity>
class AntisymmetricFiller {
 public:
  using Index = typename StructureTensor<Arity>::Index;

  explicit AntisymmetricFiller(std::size_t dim) : tensor_(dim) {}

  void set(const Index& idx, const Vector& value, const char* what) {
    for (auto i : idx) {
      if (i >= tensor_.dim()) throw DimensionError(std::string(what) + ": index out of range");
    }
    detail::require_same_size(value.size(), tensor_.dim(), what);
    if (idx[0] == idx[1]) {
      if (!value.is_zero()) {
        throw ConflictError(std::string(what) + ": entry with equal first two indices must vanish");
      }
      return;
    }
    Index swapped = idx;
    std::swap(swapped[0], swapped[1]);
    Vector negated = -value;
    check(idx, value, what);
    check(swapped, negated, what);
    assigned_[idx] = value;
    assigned_[swapped] = negated;
    tensor_.set(idx, value);
    tensor_.set(swapped, std::move(negated));
  }

  StructureTensor<Arity> finish() && { return std::move(tensor_); }

 private:
  void check(const Index& idx, const Vector& value, const char* what) const {
    auto it = assigned_.find(idx);
    if (it != assigned_.end() && !(it->second == value)) {
      throw ConflictError(std::string(what) + ": conflicting values for one structure constant");
    }
  }

  StructureTensor<Arity> tensor_;
  std::map<Index, Vector> assigned_;
};

}  // namespace detail

/// Lie algebra given by an antisymmetric structure tensor.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0) : binary_(dim) {}

  /// Throws PreconditionError unless binary[i][j] = -binary[j][i].
  explicit LieAlgebra(StructureTensor<2> binary) : binary_(std::move(binary)) {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!(binary_.at({i, j}) == -binary_.at({j, i})))
          throw PreconditionError("Lie bracket is not antisymmetric");
  }

  std::size_t dim() const { return binary_.dim(); }
  const StructureTensor<2>& binary() const { return binary_; }
  Vector bracket(const Vector& x, const Vector& y) const { return binary_.evaluate({&x, &y}); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  StructureTensor<2> binary_;
};

/// Lie-Yamaguti algebra as structure constants. The binary tensor is
/// antisymmetric and the ternary tensor is antisymmetric in its first two
/// slots; construction enforces both. The identities themselves are only
/// known to hold after check_ly_axioms passes.
class LYAlgebra {
 public:
  explicit LYAlgebra(std::size_t dim = 0) : binary_(dim), ternary_(dim) {}

  LYAlgebra(StructureTensor<2> binary, StructureTensor<3> ternary)
      : binary_(std::move(binary)), ternary_(std::move(ternary)) {
    detail::require_same_size(binary_.dim(), ternary_.dim(), "LY algebra tensors");
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(binary_.at({i, j}) == -binary_.at({j, i})))
          throw PreconditionError("binary bracket is not antisymmetric");
        for (std::size_t k = 0; k < n; ++k)
          if (!(ternary_.at({i, j, k}) == -ternary_.at({j, i, k})))
            throw PreconditionError("ternary bracket is not antisymmetric in its first two slots");
      }
    }
  }

  std::size_t dim() const { return binary_.dim(); }
  const StructureTensor<2>& binary() const { return binary_; }
  const StructureTensor<3>& ternary() const { return ternary_; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty()) detail::require_same_size(labels.size(), dim(), "basis labels");
    labels_ = std::move(labels);
  }

  Vector bracket2(const Vector& x, const Vector& y) const { return binary_.evaluate({&x, &y}); }
  Vector bracket3(const Vector& x, const Vector& y, const Vector& z) const {
    return ternary_.evaluate({&x, &y, &z});
  }

  /// Structure constants only; labels are presentation.
  friend bool operator==(const LYAlgebra& a, const LYAlgebra& b) {
    return a.binary_ == b.binary_ && a.ternary_ == b.ternary_;
  }

 private:
  StructureTensor<2> binary_;
  StructureTensor<3> ternary_;
  std::vector<std::string> labels_;
};

/// Collects i<j style entries and fills in the antisymmetric complement.
class LYAlgebraBuilder {
 public:
  explicit LYAlgebraBuilder(std::size_t dim) : binary_(dim), ternary_(dim) {}

  LYAlgebraBuilder& binary(std::size_t i, std::size_t j, const Vector& value) {
    binary_.set({i, j}, value, "binary bracket");
    return *this;
  }
  LYAlgebraBuilder& ternary(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
    ternary_.set({i, j, k}, value, "ternary bracket");
    return *this;
  }

  LYAlgebra build() && { return LYAlgebra(std::move(binary_).finish(), std::move(ternary_).finish()); }

 private:
  detail::AntisymmetricFiller<2> binary_;
  detail::AntisymmetricFiller<3> ternary_;
};

class LieAlgebraBuilder {
 public:
  explicit LieAlgebraBuilder(std::size_t dim) : binary_(dim) {}
  LieAlgebraBuilder& bracket(std::size_t i, std::size_t j, const Vector& value) {
    binary_.set({i, j}, value, "Lie bracket");
    return *this;
  }
  LieAlgebra build() && { return LieAlgebra(std::move(binary_).finish()); }

 private:
  detail::AntisymmetricFiller<2> binary_;
};

inline Vector bracket2(const LYAlgebra& a, const Vector& x, const Vector& y) {
  return a.bracket2(x, y);
}

inline Vector bracket3(const LYAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.bracket3(x, y, z);
}

namespace detail {

inline std::vector<Vector> unit_vectors(std::size_t n) {
  std::vector<Vector> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(Vector::unit(n, i));
  return e;
}

}  // namespace detail

/// The four defining identities evaluated on arbitrary vectors. Each returns
/// (lhs, rhs); the identity holds iff they are equal.
namespace ly_identity {

inline std::pair<Vector, Vector> jacobi(const LYAlgebra& a, const Vector& x, const Vector& y,
                                        const Vector& z) {
  Vector sum = a.bracket2(a.bracket2(x, y), z);
  sum += a.bracket2(a.bracket2(y, z), x);
  sum += a.bracket2(a.bracket2(z, x), y);
  sum += a.bracket3(x, y, z);
  sum += a.bracket3(y, z, x);
  sum += a.bracket3(z, x, y);
  return {std::move(sum), Vector(a.dim())};
}

inline std::pair<Vector, Vector> ternary_jacobi(const LYAlgebra& a, const Vector& x,
                                                const Vector& y, const Vector& z,
                                                const Vector& w) {
  Vector sum = a.bracket3(a.bracket2(x, y), z, w);
  sum += a.bracket3(a.bracket2(y, z), x, w);
  sum += a.bracket3(a.bracket2(z, x), y, w);
  return {std::move(sum), Vector(a.dim())};
}

/// ⟦x,y,·⟧ is a derivation of the binary bracket.
inline std::pair<Vector, Vector> derivation(const LYAlgebra& a, const Vector& x, const Vector& y,
                                            const Vector& z, const Vector& w) {
  Vector lhs = a.bracket3(x, y, a.bracket2(z, w));
  Vector rhs = a.bracket2(a.bracket3(x, y, z), w);
  rhs += a.bracket2(z, a.bracket3(x, y, w));
  return {std::move(lhs), std::move(rhs)};
}

/// ⟦x,y,·⟧ is a derivation of the ternary bracket.
inline std::pair<Vector, Vector> fundamental(const LYAlgebra& a, const Vector& x, const Vector& y,
                                             const Vector& z, const Vector& w, const Vector& t) {
  Vector lhs = a.bracket3(x, y, a.bracket3(z, w, t));
  Vector rhs = a.bracket3(a.bracket3(x, y, z), w, t);
  rhs += a.bracket3(z, a.bracket3(x, y, w), t);
  rhs += a.bracket3(z, w, a.bracket3(x, y, t));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace ly_identity

/// Evaluates all four identities on every basis tuple. Multilinearity makes
/// this sufficient.
inline CheckReport check_ly_axioms(const LYAlgebra& a) {
  CheckReport report;
  for (const auto& id : {axiom::kLyJacobi, axiom::kLyTernaryJacobi, axiom::kLyDerivation,
                         axiom::kLyFundamental})
    report.declare(id);
  const auto e = detail::unit_vectors(a.dim());
  const std::size_t n = a.dim();
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    auto [l, r] = ly_identity::jacobi(a, e[i[0]], e[i[1]], e[i[2]]);
    report.expect_equal(axiom::kLyJacobi, i, std::move(l), std::move(r));
  });
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    auto [l, r] = ly_identity::ternary_jacobi(a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]);
    report.expect_equal(axiom::kLyTernaryJacobi, i, std::move(l), std::move(r));
    auto [l2, r2] = ly_identity::derivation(a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]);
    report.expect_equal(axiom::kLyDerivation, i, std::move(l2), std::move(r2));
  });
  detail::for_each_tuple(n, 5, [&](const auto& i) {
    auto [l, r] = ly_identity::fundamental(a, e[i[0]], e[i[1]], e[i[2]], e[i[3]], e[i[4]]);
    report.expect_equal(axiom::kLyFundamental, i, std::move(l), std::move(r));
  });
  report.finish();
  return report;
}

inline CheckReport check_jacobi(const LieAlgebra& l) {
  CheckReport report;
  report.declare(axiom::kLieJacobi);
  const auto e = detail::unit_vectors(l.dim());
  detail::for_each_tuple(l.dim(), 3, [&](const auto& i) {
    const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]];
    Vector sum = l.bracket(l.bracket(x, y), z);
    sum += l.bracket(l.bracket(y, z), x);
    sum += l.bracket(l.bracket(z, x), y);
    report.expect_zero(axiom::kLieJacobi, i, std::move(sum));
  });
  report.finish();
  return report;
}

/// ⟦x,y,z⟧ := [[x,y],z]. Throws PreconditionError if the Jacobi identity fails.
inline LYAlgebra ly_from_lie(const LieAlgebra& l) {
  auto jacobi = check_jacobi(l);
  if (!jacobi.passed()) {
    throw PreconditionError("ly_from_lie: input violates the Jacobi identity (" +
                            std::to_string(jacobi.witnesses().size()) + " basis triples)");
  }
  const std::size_t n = l.dim();
  const auto e = detail::unit_vectors(n);
  StructureTensor<3> ternary(n);
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    ternary.set({i[0], i[1], i[2]}, l.bracket(l.binary().at({i[0], i[1]}), e[i[2]]));
  });
  return LYAlgebra(l.binary(), std::move(ternary));
}

/// phi maps A into B (phi has B.dim rows and A.dim columns).
inline CheckReport check_ly_homomorphism(const Matrix& phi, const LYAlgebra& a,
                                         const LYAlgebra& b) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim()) {
    throw DimensionError("homomorphism matrix " + phi.shape() + " does not map dim " +
                         std::to_string(a.dim()) + " to dim " + std::to_string(b.dim()));
  }
  CheckReport report;
  report.declare(axiom::kHomBinary);
  report.declare(axiom::kHomTernary);
  const auto e = detail::unit_vectors(a.dim());
  std::vector<Vector> image;
  for (std::size_t i = 0; i < a.dim(); ++i) image.push_back(phi.column(i));
  detail::for_each_tuple(a.dim(), 2, [&](const auto& i) {
    report.expect_equal(axiom::kHomBinary, i, phi * a.binary().at({i[0], i[1]}),
                        b.bracket2(image[i[0]], image[i[1]]));
  });
  detail::for_each_tuple(a.dim(), 3, [&](const auto& i) {
    report.expect_equal(axiom::kHomTernary, i, phi * a.ternary().at({i[0], i[1], i[2]}),
                        b.bracket3(image[i[0]], image[i[1]], image[i[2]]));
  });
  report.finish();
  return report;
}

struct ClosureResult {
  bool closed = true;
  /// First bracket of basis vectors that leaves the span; indices refer to
  /// positions in the supplied basis list and `rhs` is empty.
  std::optional<Witness> witness;
};

/// Whether span(basis) is closed under both brackets. Throws
/// PreconditionError on a dependent basis.
inline ClosureResult is_closed_subspace(const LYAlgebra& a, const std::vector<Vector>& basis) {
  Subspace span(a.dim(), basis);
  const std::size_t k = basis.size();
  ClosureResult result;
  detail::for_each_tuple(k, 2, [&](const auto& i) {
    if (!result.closed) return;
    Vector v = a.bracket2(basis[i[0]], basis[i[1]]);
    if (!span.contains(v)) result = {false, Witness{axiom::kClosureBinary, i, std::move(v), {}}};
  });
  detail::for_each_tuple(k, 3, [&](const auto& i) {
    if (!result.closed) return;
    Vector v = a.bracket3(basis[i[0]], basis[i[1]], basis[i[2]]);
    if (!span.contains(v)) result = {false, Witness{axiom::kClosureTernary, i, std::move(v), {}}};
  });
  return result;
}

}  // namespace yamaguti
