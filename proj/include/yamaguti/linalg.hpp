#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yamaguti/scalar.hpp"

namespace yamaguti {

namespace detail {

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(a) +
                         " does not match " + std::to_string(b));
  }
}

}  // namespace detail

/// Dense column of exact scalars. The length is fixed at creation.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t size) : entries_(size) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  static Vector unit(std::size_t size, std::size_t index) {
    Vector v(size);
    v.entries_.at(index) = 1;
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return yamaguti::is_zero(s); });
  }

  /// Indices of the nonzero coordinates, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!yamaguti::is_zero(entries_[i])) out.push_back(i);
    }
    return out;
  }

  /// this += coefficient * other
  Vector& axpy(const Scalar& coefficient, const Vector& other) {
    detail::require_same_size(size(), other.size(), "axpy");
    if (yamaguti::is_zero(coefficient)) return *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!yamaguti::is_zero(other.entries_[i])) {
        entries_[i] += coefficient * other.entries_[i];
      }
    }
    return *this;
  }

  Vector& operator+=(const Vector& other) {
    detail::require_same_size(size(), other.size(), "vector addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }
  Vector& operator-=(const Vector& other) {
    detail::require_same_size(size(), other.size(), "vector subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }
  Vector& operator*=(const Scalar& factor) {
    for (auto& e : entries_) e *= factor;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Scalar(-1); }
  friend Vector operator*(const Scalar& factor, Vector v) { return v *= factor; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }

  /// First coordinates [offset, offset + length).
  Vector slice(std::size_t offset, std::size_t length) const {
    if (offset + length > size()) throw DimensionError("slice out of range");
    return Vector(std::vector<Scalar>(entries_.begin() + offset,
                                      entries_.begin() + offset + length));
  }

  static Vector concat(const Vector& head, const Vector& tail) {
    std::vector<Scalar> out(head.entries_);
    out.insert(out.end(), tail.entries_.begin(), tail.entries_.end());
    return Vector(std::move(out));
  }

 private:
  std::vector<Scalar> entries_;
};

inline Scalar dot(const Vector& a, const Vector& b) {
  detail::require_same_size(a.size(), b.size(), "dot");
  Scalar out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) out += a[i] * b[i];
  }
  return out;
}

/// Dense row-major rectangular matrix. Column k is the image of the k-th
/// domain basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      detail::require_same_size(rows[r].size(), cols, "matrix row");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// `rows` is needed for the zero-column case.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      detail::require_same_size(columns[c].size(), rows, "matrix column");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector row(std::size_t r) const {
    Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Scalar& s) { return yamaguti::is_zero(s); });
  }

  /// Row-major flattening, used when a matrix identity is reported as a witness.
  Vector flatten() const { return Vector(data_); }

  /// this += coefficient * other
  Matrix& axpy(const Scalar& coefficient, const Matrix& other) {
    require_same_shape(other, "matrix axpy");
    if (yamaguti::is_zero(coefficient)) return *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!yamaguti::is_zero(other.data_[i])) data_[i] += coefficient * other.data_[i];
    }
    return *this;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& factor) {
    for (auto& e : data_) e *= factor;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Scalar& factor, Matrix m) { return m *= factor; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matrix product: " + a.shape() + " times " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& left = a(r, k);
        if (yamaguti::is_zero(left)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (!yamaguti::is_zero(b(k, c))) out(r, c) += left * b(k, c);
        }
      }
    }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    detail::require_same_size(a.cols_, v.size(), "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (yamaguti::is_zero(v[k])) continue;
      for (std::size_t r = 0; r < a.rows_; ++r) {
        if (!yamaguti::is_zero(a(r, k))) out[r] += a(r, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& other, const char* what) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionError(std::string(what) + ": " + shape() + " vs " + other.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a, b] = ab - ba
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace detail {

/// Reduced row echelon form in place; pivots are taken leftmost-first, and
/// within a column the first row with a nonzero entry is used.
/// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> reduce_rows(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && is_zero(m(found, col))) ++found;
    if (found == m.rows()) continue;
    if (found != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    }
    Scalar inverse_pivot = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inverse_pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank over the rationals. Rows are cleared of denominators and the
/// integer matrix is reduced with Bareiss fraction-free elimination.
inline std::size_t rank(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class common = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m(r, c).get_num() * (common / m(r, c).get_den());
    }
  }
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t found = rank;
    while (found < m.rows() && a[found][col] == 0) ++found;
    if (found == m.rows()) continue;
    std::swap(a[found], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / previous;
      }
      a[r][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Some x with m x = b, free variables set to zero; nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  detail::require_same_size(m.rows(), b.size(), "solve");
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  auto pivots = detail::reduce_rows(augmented, m.cols());
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (!is_zero(augmented(r, m.cols()))) return std::nullopt;
  }
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = augmented(r, m.cols());
  return x;
}

inline Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("invert: matrix " + m.shape() + " is not square");
  std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  auto pivots = detail::reduce_rows(augmented, n);
  if (pivots.size() != n) throw SingularMatrixError("invert: matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = augmented(r, n + c);
  return out;
}

/// Basis of {x : m x = 0}, one vector per free column, in column order.
inline std::vector<Vector> nullspace(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = detail::reduce_rows(reduced, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Linear span of independent vectors with an exact membership test.
class Subspace {
 public:
  /// Throws PreconditionError if the vectors are linearly dependent.
  Subspace(std::size_t ambient, std::vector<Vector> basis)
      : ambient_(ambient), basis_(std::move(basis)) {
    Matrix columns = Matrix::from_columns(ambient_, basis_);
    if (rank(columns) != basis_.size()) {
      throw PreconditionError("subspace basis is linearly dependent");
    }
    // v is in the span iff every left annihilator of the basis kills it.
    annihilators_ = nullspace(columns.transpose());
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    detail::require_same_size(v.size(), ambient_, "subspace membership");
    return std::all_of(annihilators_.begin(), annihilators_.end(),
                       [&](const Vector& a) { return is_zero(dot(a, v)); });
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<Vector> annihilators_;
};

}  // namespace yamaguti
