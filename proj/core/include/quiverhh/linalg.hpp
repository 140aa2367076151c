#ifndef QUIVERHH_LINALG_HPP_
#define QUIVERHH_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

using Vec = std::vector<Scalar>;

// Dense matrix over the session field.  Cochain spaces here stay small, so
// dense exact elimination is adequate.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // this * x
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Reduced row echelon form; pivot columns are reported in order.
Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols = nullptr);
std::size_t rank(const Matrix& m);

// Row span of a matrix in canonical (RREF, zero rows dropped) form.  Two
// subspaces are equal iff their canonical bases are equal.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  // Remainder of v after elimination against the basis.
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the canonical basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Matrix basis_;
};

// Right null space of m, canonical basis.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// One solution of A x = b, free variables set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace quiverhh

#endif  // QUIVERHH_LINALG_HPP_
