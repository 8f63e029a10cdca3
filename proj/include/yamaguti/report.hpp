#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "yamaguti/linalg.hpp"

namespace yamaguti {

/// One failed instance of an identity. Indices are 0-based basis indices in
/// the argument order of the identity. Matrix-valued identities are
/// reported row-major flattened.
struct Witness {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  friend bool operator<(const Witness& a, const Witness& b) {
    return std::tie(a.axiom, a.indices) < std::tie(b.axiom, b.indices);
  }
  friend bool operator==(const Witness& a, const Witness& b) {
    return a.axiom == b.axiom && a.indices == b.indices && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

/// Outcome of an exhaustive check. Passes iff there are no witnesses.
/// `axioms` lists every identity that was evaluated, so a report can show
/// zero counts.
class CheckReport {
 public:
  CheckReport() = default;

  bool passed() const { return witnesses_.empty(); }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& axioms() const { return axioms_; }

  std::map<std::string, std::size_t> violation_counts() const {
    std::map<std::string, std::size_t> counts;
    for (const auto& a : axioms_) counts[a] = 0;
    for (const auto& w : witnesses_) ++counts[w.axiom];
    return counts;
  }

  bool has_violation(const std::string& axiom) const {
    return std::any_of(witnesses_.begin(), witnesses_.end(),
                       [&](const Witness& w) { return w.axiom == axiom; });
  }

  void declare(const std::string& axiom) {
    if (std::find(axioms_.begin(), axioms_.end(), axiom) == axioms_.end()) {
      axioms_.push_back(axiom);
    }
  }

  void add(Witness w) {
    declare(w.axiom);
    witnesses_.push_back(std::move(w));
    sorted_ = false;
  }

  /// Records a violation when lhs != rhs.
  void expect_equal(const std::string& axiom, std::vector<std::size_t> indices, Vector lhs,
                    Vector rhs) {
    if (!(lhs == rhs)) add({axiom, std::move(indices), std::move(lhs), std::move(rhs)});
  }

  void expect_zero(const std::string& axiom, std::vector<std::size_t> indices, Vector value) {
    if (!value.is_zero()) {
      Vector zero(value.size());
      add({axiom, std::move(indices), std::move(value), std::move(zero)});
    }
  }

  void expect_equal(const std::string& axiom, std::vector<std::size_t> indices, const Matrix& lhs,
                    const Matrix& rhs) {
    if (!(lhs == rhs)) add({axiom, std::move(indices), lhs.flatten(), rhs.flatten()});
  }

  void expect_zero(const std::string& axiom, std::vector<std::size_t> indices,
                   const Matrix& value) {
    if (!value.is_zero()) expect_zero(axiom, std::move(indices), value.flatten());
  }

  void merge(const CheckReport& other) {
    for (const auto& a : other.axioms_) declare(a);
    witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
    sorted_ = false;
  }

  /// Sorts witnesses by (axiom, indices). Every check returns a finished report.
  CheckReport& finish() {
    if (!sorted_) {
      std::stable_sort(witnesses_.begin(), witnesses_.end());
      sorted_ = true;
    }
    return *this;
  }

 private:
  std::vector<std::string> axioms_;
  std::vector<Witness> witnesses_;
  bool sorted_ = true;
};

namespace detail {

/// Calls f(indices) for every tuple in {0..n-1}^arity in lexicographic order.
template <typename F>
void for_each_tuple(std::size_t n, std::size_t arity, F&& f) {
  if (n == 0 && arity > 0) return;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t pos = arity;
    while (pos > 0 && ++idx[pos - 1] == n) {
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return;
  }
}

}  // namespace detail

}  // namespace yamaguti
