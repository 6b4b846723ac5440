#include "qmckay/exact_matrix.hpp"

#include "qmckay/errors.hpp"

#include <utility>

namespace qmckay {

RationalMatrix::RationalMatrix(const IntMatrix& m)
    : RationalMatrix(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m.front().size())) {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = m[r][c];
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix id(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  const int n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw PreconditionError("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace qmckay
