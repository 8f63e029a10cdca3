#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "yamaguti/linalg.hpp"

namespace yamaguti {

/// Structure constants of a multilinear map V^{⊗Arity} -> V on a basis:
/// entry (i_1, ..., i_Arity) holds the coordinates of the image of
/// (e_{i_1}, ..., e_{i_Arity}).
template <std::size_t Arity>
class StructureTensor {
 public:
  using Index = std::array<std::size_t, Arity>;

  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), values_(count(dim), Vector(dim)),
                                              nonzero_(count(dim), false) {}

  std::size_t dim() const { return dim_; }

  const Vector& at(const Index& idx) const { return values_[offset(idx)]; }
  bool is_zero(const Index& idx) const { return !nonzero_[offset(idx)]; }

  void set(const Index& idx, Vector value) {
    detail::require_same_size(value.size(), dim_, "structure constant");
    std::size_t o = offset(idx);
    nonzero_[o] = !value.is_zero();
    values_[o] = std::move(value);
  }

  /// Multilinear extension: sums coefficient products over the supports of
  /// the arguments, skipping zero structure constants.
  Vector evaluate(const std::array<const Vector*, Arity>& args) const {
    for (const Vector* a : args) detail::require_same_size(a->size(), dim_, "argument");
    Vector out(dim_);
    std::array<std::vector<std::size_t>, Arity> supports;
    for (std::size_t s = 0; s < Arity; ++s) {
      supports[s] = args[s]->support();
      if (supports[s].empty()) return out;
    }
    Index idx{};
    accumulate(args, supports, 0, Scalar(1), idx, out);
    return out;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  static std::size_t count(std::size_t dim) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < Arity; ++i) c *= dim;
    return c;
  }

  std::size_t offset(const Index& idx) const {
    std::size_t o = 0;
    for (std::size_t s = 0; s < Arity; ++s) {
      if (idx[s] >= dim_) throw DimensionError("basis index out of range");
      o = o * dim_ + idx[s];
    }
    return o;
  }

  void accumulate(const std::array<const Vector*, Arity>& args,
                  const std::array<std::vector<std::size_t>, Arity>& supports, std::size_t slot,
                  const Scalar& coefficient, Index& idx, Vector& out) const {
    if (slot == Arity) {
      std::size_t o = offset(idx);
      if (nonzero_[o]) out.axpy(coefficient, values_[o]);
      return;
    }
    for (std::size_t i : supports[slot]) {
      idx[slot] = i;
      accumulate(args, supports, slot + 1, coefficient * (*args[slot])[i], idx, out);
    }
  }

  std::size_t dim_ = 0;
  std::vector<Vector> values_;
  std::vector<bool> nonzero_;
};

}  // namespace yamaguti
