#pragma once

#include <string>

#include "yamaguti/yamaguti.hpp"

namespace yamaguti::testing {

inline Vector vec(std::initializer_list<Scalar> v) { return Vector(v); }

inline Vector e(std::size_t n, std::size_t one_based) { return Vector::unit(n, one_based - 1); }

inline Matrix mat(const std::vector<std::vector<Scalar>>& rows) { return Matrix::from_rows(rows); }

/// [e1,e2] = e1, ⟦e1,e2,e2⟧ = e1.
inline LYAlgebra ly2() {
  LYAlgebraBuilder b(2);
  b.binary(0, 1, vec({1, 0})).ternary(0, 1, 1, vec({1, 0}));
  return std::move(b).build();
}

/// LY2 with ⟦e1,e2,e2⟧ = e2 instead.
inline LYAlgebra ly2_perturbed() {
  LYAlgebraBuilder b(2);
  b.binary(0, 1, vec({1, 0})).ternary(0, 1, 1, vec({0, 1}));
  return std::move(b).build();
}

/// [e1,e2] = 2e4, ⟦e1,e2,e1⟧ = e4.
inline LYAlgebra ly4() {
  LYAlgebraBuilder b(4);
  b.binary(0, 1, vec({0, 0, 0, 2})).ternary(0, 1, 0, vec({0, 0, 0, 1}));
  return std::move(b).build();
}

inline LYAlgebra abelian(std::size_t n) { return LYAlgebra(n); }

/// h = e1, e = e2, f = e3.
inline LieAlgebra sl2() {
  LieAlgebraBuilder b(3);
  b.bracket(0, 1, vec({0, 2, 0})).bracket(0, 2, vec({0, 0, -2})).bracket(1, 2, vec({1, 0, 0}));
  return std::move(b).build();
}

inline Matrix killing_sl2() { return mat({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}); }

/// e2*e2 = a e1, e2*e1 = −b e1, {e1,e2,e2} = b² e1, {e2,e2,e2} = −ab e1.
inline PreLYAlgebra pre2(const Scalar& a, const Scalar& b) {
  PreLYAlgebraBuilder p(2);
  p.star(1, 1, vec({a, 0})).star(1, 0, vec({-b, 0}));
  p.braces(0, 1, 1, vec({b * b, 0})).braces(1, 1, 1, vec({-a * b, 0}));
  return std::move(p).build();
}

/// e2*e2 = a e1, {e2,e2,e2} = −a² e4.
inline PreLYAlgebra pre4(const Scalar& a) {
  PreLYAlgebraBuilder p(4);
  p.star(1, 1, vec({a, 0, 0, 0})).braces(1, 1, 1, vec({0, 0, 0, -a * a}));
  return std::move(p).build();
}

/// T(e1) = 0, T(e2) = a e1 + b e2.
inline Matrix rbo_ly2(const Scalar& a, const Scalar& b) { return mat({{0, a}, {0, b}}); }

inline Matrix rbo_ly4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                  const Scalar& e_, const Scalar& f, const Scalar& g, const Scalar& h,
                  const Scalar& k) {
  return mat({{0, a, 0, 0}, {0, 0, 0, 0}, {b, c, d, e_}, {f, g, h, k}});
}

inline SymplecticForm omega2(const Scalar& s = 1) { return SymplecticForm(mat({{0, s}, {-s, 0}})); }

inline std::string fixture(const std::string& name) { return std::string(YAMAGUTI_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (auto i : one_based) out.push_back(i - 1);
  return out;
}

inline const Witness* find_witness(const CheckReport& r, const std::string& axiom,
                                   const std::vector<std::size_t>& indices) {
  for (const auto& w : r.witnesses())
    if (w.axiom == axiom && w.indices == indices) return &w;
  return nullptr;
}

}  // namespace yamaguti::testing
