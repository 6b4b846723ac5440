#pragma once

#include "qmckay/numeric.hpp"

#include <vector>

namespace qmckay {

using IntMatrix = std::vector<std::vector<int>>;

/// Dense square-or-rectangular matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& s) const;
  bool operator==(const RationalMatrix& o) const = default;

  bool is_symmetric() const;
  /// Gauss-Jordan inverse; throws PreconditionError when singular.
  RationalMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace qmckay
