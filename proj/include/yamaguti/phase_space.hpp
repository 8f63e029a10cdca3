#pragma once

#include <cstddef>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/symplectic.hpp"

namespace yamaguti {

namespace axiom {
inline const std::string kPhaseHClosed = "phase.h-closed";
inline const std::string kPhaseDualClosed = "phase.dual-closed";
inline const std::string kPerfectDualDualH = "perfect.dual-dual-h";
inline const std::string kPerfectHDualDual = "perfect.h-dual-dual";
inline const std::string kPerfectHHDual = "perfect.h-h-dual";
inline const std::string kPerfectDualHH = "perfect.dual-h-h";
inline const std::string kQuadPreStar = "quadratic-pre.star";
inline const std::string kQuadPreBraces = "quadratic-pre.braces";
inline const std::string kQuadPreBracesD = "quadratic-pre.braces-d";
inline const std::string kManinAClosed = "manin.a-closed";
inline const std::string kManinBClosed = "manin.b-closed";
inline const std::string kManinAIsotropic = "manin.a-isotropic";
inline const std::string kManinBIsotropic = "manin.b-isotropic";
inline const std::string kManinBBA = "manin.bba-in-a";
inline const std::string kManinABB = "manin.abb-in-a";
inline const std::string kManinBAB = "manin.bab-in-a";
inline const std::string kManinAAB = "manin.aab-in-b";
inline const std::string kManinBAA = "manin.baa-in-b";
inline const std::string kManinABA = "manin.aba-in-b";
inline const std::string kRoundtripRestriction = "roundtrip.restriction";
}  // namespace axiom

/// ω_p(x+α, y+β) = ⟨α,y⟩ − ⟨β,x⟩ on h ⊕ h*, h basis first: [[0,−I],[I,0]].
inline SymplecticForm canonical_phase_form(std::size_t h_dim) {
  Matrix g(2 * h_dim, 2 * h_dim);
  for (std::size_t i = 0; i < h_dim; ++i) {
    g(i, h_dim + i) = -1;
    g(h_dim + i, i) = 1;
  }
  return SymplecticForm(std::move(g));
}

/// LY algebra on h ⊕ h* (first h_dim basis vectors span h) with the
/// canonical form.
struct PhaseSpace {
  LYAlgebra total;
  std::size_t h_dim = 0;
  SymplecticForm omega_p;

  PhaseSpace() = default;
  PhaseSpace(LYAlgebra t, std::size_t h) : total(std::move(t)), h_dim(h) {
    if (total.dim() != 2 * h_dim) {
      throw DimensionError("phase space of dim " + std::to_string(total.dim()) +
                           " cannot split with h_dim " + std::to_string(h_dim));
    }
    omega_p = canonical_phase_form(h_dim);
  }

  std::vector<Vector> h_basis() const { return block_basis(0); }
  std::vector<Vector> dual_basis() const { return block_basis(h_dim); }

 private:
  std::vector<Vector> block_basis(std::size_t offset) const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < h_dim; ++i) out.push_back(Vector::unit(2 * h_dim, offset + i));
    return out;
  }
};

/// Semidirect product of the subadjacent algebra with the dual of its
/// (L, R) representation. Throws PreconditionError if P is not pre-LY.
inline PhaseSpace build_phase_space(const PreLYAlgebra& p) {
  auto axioms = check_pre_ly_axioms(p);
  if (!axioms.passed()) {
    throw PreconditionError("build_phase_space: input violates the pre-LY axioms (" +
                            std::to_string(axioms.witnesses().size()) + " basis tuples)");
  }
  auto sub = subadjacent(p);
  return PhaseSpace(semidirect(sub, dual_rep(lr_representation(p))), p.dim());
}

namespace detail {

inline void add_closure(CheckReport& report, const std::string& id, const LYAlgebra& a,
                        const std::vector<Vector>& basis) {
  report.declare(id);
  auto closure = is_closed_subspace(a, basis);
  if (!closure.closed) {
    Witness w = std::move(*closure.witness);
    w.axiom = id;
    w.rhs = Vector(a.dim());
    report.add(std::move(w));
  }
}

}  // namespace detail

inline CheckReport check_phase_space(const PhaseSpace& ps) {
  CheckReport report = check_ly_axioms(ps.total);
  report.merge(check_symplectic(ps.total, ps.omega_p));
  detail::add_closure(report, axiom::kPhaseHClosed, ps.total, ps.h_basis());
  detail::add_closure(report, axiom::kPhaseDualClosed, ps.total, ps.dual_basis());
  report.finish();
  return report;
}

/// ⟦α,β,x⟧, ⟦x,α,β⟧ ∈ h and ⟦x,y,α⟧, ⟦α,x,y⟧ ∈ h* for x,y ∈ h, α,β ∈ h*.
/// Witness lhs is the offending component, rhs zero.
inline CheckReport check_perfect(const PhaseSpace& ps) {
  const std::size_t n = ps.h_dim;
  CheckReport report;
  for (const auto& id : {axiom::kPerfectDualDualH, axiom::kPerfectHDualDual,
                         axiom::kPerfectHHDual, axiom::kPerfectDualHH})
    report.declare(id);
  // pattern: block of each slot (false = h, true = h*), and the target block.
  auto check = [&](const std::string& id, std::array<bool, 3> dual_slot, bool target_dual) {
    detail::for_each_tuple(n, 3, [&](const auto& i) {
      std::vector<std::size_t> idx(3);
      for (std::size_t s = 0; s < 3; ++s) idx[s] = i[s] + (dual_slot[s] ? n : 0);
      const Vector& v = ps.total.ternary().at({idx[0], idx[1], idx[2]});
      Vector stray = v.slice(target_dual ? 0 : n, n);
      report.expect_zero(id, std::move(idx), std::move(stray));
    });
  };
  check(axiom::kPerfectDualDualH, {true, true, false}, false);
  check(axiom::kPerfectHDualDual, {false, true, true}, false);
  check(axiom::kPerfectHHDual, {false, false, true}, true);
  check(axiom::kPerfectDualHH, {true, false, false}, true);
  report.finish();
  return report;
}

/// ω(x*y,z) = −ω(y,[x,z]_C), ω({x,y,z},w) = ω(x,⟦w,z,y⟧_C), and the
/// consequence ω({x,y,z}_D,w) = −ω(z,⟦x,y,w⟧_C).
inline CheckReport check_quadratic_pre_ly(const PreLYAlgebra& p, const SymplecticForm& w) {
  detail::require_same_size(w.dim(), p.dim(), "form");
  const auto sub = subadjacent(p);
  CheckReport report;
  for (const auto& id : {axiom::kQuadPreStar, axiom::kQuadPreBraces, axiom::kQuadPreBracesD})
    report.declare(id);
  const std::size_t n = p.dim();
  const auto e = detail::unit_vectors(n);
  using detail::scalar_vector;
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    report.expect_equal(axiom::kQuadPreStar, i,
                        scalar_vector(w(p.star_tensor().at({i[0], i[1]}), e[i[2]])),
                        scalar_vector(-w(e[i[1]], sub.binary().at({i[0], i[2]}))));
  });
  detail::for_each_tuple(n, 4, [&](const auto& i) {
    report.expect_equal(axiom::kQuadPreBraces, i,
                        scalar_vector(w(p.braces_tensor().at({i[0], i[1], i[2]}), e[i[3]])),
                        scalar_vector(w(e[i[0]], sub.ternary().at({i[3], i[2], i[1]}))));
    report.expect_equal(axiom::kQuadPreBracesD, i,
                        scalar_vector(w(p.braces_d_tensor().at({i[0], i[1], i[2]}), e[i[3]])),
                        scalar_vector(-w(e[i[2]], sub.ternary().at({i[0], i[1], i[3]}))));
  });
  report.finish();
  return report;
}

/// Pre-LY algebra with a form and a candidate splitting into A ⊕ A′.
struct ManinTripleInput {
  PreLYAlgebra total;
  SymplecticForm omega;
  std::vector<Vector> split_a;
  std::vector<Vector> split_b;
};

/// Quadratic pre-LY structure (axioms included), closure of both splits
/// under * and {·,·,·}, isotropy, and the six mixed-brace memberships.
/// Throws PreconditionError when the splits are not complementary.
inline CheckReport check_manin_triple(const ManinTripleInput& m) {
  const std::size_t n = m.total.dim();
  detail::require_same_size(m.omega.dim(), n, "form");
  const std::size_t ka = m.split_a.size();
  const std::size_t kb = m.split_b.size();
  for (const auto& v : m.split_a) detail::require_same_size(v.size(), n, "split vector");
  for (const auto& v : m.split_b) detail::require_same_size(v.size(), n, "split vector");
  std::vector<Vector> all = m.split_a;
  all.insert(all.end(), m.split_b.begin(), m.split_b.end());
  if (ka + kb != n || rank(Matrix::from_columns(n, all)) != n) {
    throw PreconditionError("splits are not complementary subspaces");
  }
  // Coordinates in the [A | A′] basis: first ka belong to A.
  const Matrix to_split = invert(Matrix::from_columns(n, all));
  auto a_part = [&](const Vector& v) { return (to_split * v).slice(0, ka); };
  auto b_part = [&](const Vector& v) { return (to_split * v).slice(ka, kb); };

  CheckReport report = check_pre_ly_axioms(m.total);
  report.merge(check_quadratic_pre_ly(m.total, m.omega));

  auto closure = [&](const std::string& id, const std::vector<Vector>& basis,
                     const std::function<Vector(const Vector&)>& stray) {
    report.declare(id);
    const std::size_t k = basis.size();
    detail::for_each_tuple(k, 2, [&](const auto& i) {
      report.expect_zero(id, i, stray(m.total.star(basis[i[0]], basis[i[1]])));
    });
    detail::for_each_tuple(k, 3, [&](const auto& i) {
      report.expect_zero(id, i, stray(m.total.braces(basis[i[0]], basis[i[1]], basis[i[2]])));
    });
  };
  closure(axiom::kManinAClosed, m.split_a, b_part);
  closure(axiom::kManinBClosed, m.split_b, a_part);

  auto isotropy = [&](const std::string& id, const std::vector<Vector>& basis) {
    report.declare(id);
    detail::for_each_tuple(basis.size(), 2, [&](const auto& i) {
      report.expect_zero(id, i, detail::scalar_vector(m.omega(basis[i[0]], basis[i[1]])));
    });
  };
  isotropy(axiom::kManinAIsotropic, m.split_a);
  isotropy(axiom::kManinBIsotropic, m.split_b);

  // Slot pattern over (A = false, A′ = true); the value must lie in the
  // target, so its component in the other summand must vanish.
  auto membership = [&](const std::string& id, std::array<bool, 3> in_b, bool target_b) {
    report.declare(id);
    std::array<const std::vector<Vector>*, 3> bases;
    for (std::size_t s = 0; s < 3; ++s) bases[s] = in_b[s] ? &m.split_b : &m.split_a;
    for (std::size_t i0 = 0; i0 < bases[0]->size(); ++i0)
      for (std::size_t i1 = 0; i1 < bases[1]->size(); ++i1)
        for (std::size_t i2 = 0; i2 < bases[2]->size(); ++i2) {
          Vector v = m.total.braces((*bases[0])[i0], (*bases[1])[i1], (*bases[2])[i2]);
          report.expect_zero(id, {i0, i1, i2}, target_b ? a_part(v) : b_part(v));
        }
  };
  membership(axiom::kManinBBA, {true, true, false}, false);
  membership(axiom::kManinABB, {false, true, true}, false);
  membership(axiom::kManinBAB, {true, false, true}, false);
  membership(axiom::kManinAAB, {false, false, true}, true);
  membership(axiom::kManinBAA, {true, false, false}, true);
  membership(axiom::kManinABA, {false, true, false}, true);
  report.finish();
  return report;
}

/// Stages of the pre-LY → phase space → Manin triple round trip.
struct RoundtripReport {
  PhaseSpace phase_space;
  PreLYAlgebra compatible;
  CheckReport phase;
  CheckReport manin;
  CheckReport restriction;
  CheckReport perfect;

  bool passed() const {
    return phase.passed() && manin.passed() && restriction.passed() && perfect.passed();
  }
  CheckReport combined() const {
    CheckReport out = phase;
    out.merge(manin);
    out.merge(restriction);
    out.merge(perfect);
    out.finish();
    return out;
  }
};

/// Builds the phase space of P, derives the compatible pre-LY structure from
/// ω_p, and checks the Manin triple (h⊕h*, h, h*), that the structure
/// restricted to h is P again, and perfectness.
inline RoundtripReport roundtrip_correspondence(const PreLYAlgebra& p) {
  RoundtripReport out;
  out.phase_space = build_phase_space(p);
  out.phase = check_phase_space(out.phase_space);
  out.compatible = compatible_pre_ly_from_symplectic(out.phase_space.total, out.phase_space.omega_p);
  out.manin = check_manin_triple(
      {out.compatible, out.phase_space.omega_p, out.phase_space.h_basis(),
       out.phase_space.dual_basis()});

  const std::size_t n = p.dim();
  out.restriction.declare(axiom::kRoundtripRestriction);
  const auto& q = out.compatible;
  detail::for_each_tuple(n, 2, [&](const auto& i) {
    out.restriction.expect_equal(axiom::kRoundtripRestriction, i,
                                 q.star_tensor().at({i[0], i[1]}),
                                 Vector::concat(p.star_tensor().at({i[0], i[1]}), Vector(n)));
  });
  detail::for_each_tuple(n, 3, [&](const auto& i) {
    out.restriction.expect_equal(
        axiom::kRoundtripRestriction, i, q.braces_tensor().at({i[0], i[1], i[2]}),
        Vector::concat(p.braces_tensor().at({i[0], i[1], i[2]}), Vector(n)));
  });
  out.restriction.finish();
  out.perfect = check_perfect(out.phase_space);
  return out;
}

}  // namespace yamaguti
