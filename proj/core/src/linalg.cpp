#include "quiverhh/linalg.hpp"

#include "quiverhh/errors.hpp"

namespace quiverhh {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("matrix apply shape mismatch");
  Vec y(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols) {
  const Field& f = m.field();
  std::size_t pr = 0;  // pivot row
  if (pivot_cols) pivot_cols->clear();
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    Scalar inv = m.at(pr, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || m.at(i, col).is_zero()) continue;
      Scalar c = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= c * m.at(pr, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pr;
  }
  (void)f;
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  return Subspace(ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(rows, &pivots);
  Matrix basis(rows.field(), pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    basis.set_row(i, r.row(i));
  return Subspace(rows.cols(), std::move(basis));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error("subspace ambient mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // each basis row has a unit pivot; find it
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    if (p == ambient_) continue;
    if (w[p].is_zero()) continue;
    Scalar c = w[p];
    for (std::size_t j = p; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  for (const Scalar& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error("subspace ambient mismatch");
  Vec w = v;
  Vec coords(basis_.rows(), Scalar::zero(basis_.field()));
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    if (p == ambient_ || w[p].is_zero()) continue;
    coords[i] = w[p];
    Scalar c = w[p];
    for (std::size_t j = p; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  for (const Scalar& s : w)
    if (!s.is_zero()) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  const Field& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(f, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.at(k, fc) = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(k, pivots[i]) = -r.at(i, fc);
  }
  return Subspace::from_rows(basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw SemanticError("subspace intersection: ambient dimension mismatch");
  const Field& f = a.field();
  // Solve x * A = y * B: kernel of [A^T | -B^T] describes the coefficients.
  std::size_t ka = a.dim(), kb = b.dim(), n = a.ambient();
  Matrix sys(f, n, ka + kb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ka; ++i) sys.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < kb; ++i)
      sys.at(j, ka + i) = -b.basis().at(i, j);
  }
  Subspace coeffs = kernel(sys);
  Matrix rows(f, coeffs.dim(), n);
  for (std::size_t r = 0; r < coeffs.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(f);
      for (std::size_t i = 0; i < ka; ++i)
        s += coeffs.basis().at(r, i) * a.basis().at(i, j);
      rows.at(r, j) = s;
    }
  return Subspace::from_rows(rows);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw SemanticError("subspace sum: ambient dimension mismatch");
  Matrix rows(a.field(), a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i) rows.set_row(i, a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i)
    rows.set_row(a.dim() + i, b.basis().row(i));
  return Subspace::from_rows(rows);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error("solve shape mismatch");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix r = rref(aug, &pivots);
  for (std::size_t p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  Vec x(a.cols(), Scalar::zero(f));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = r.at(i, a.cols());
  return x;
}

}  // namespace quiverhh
