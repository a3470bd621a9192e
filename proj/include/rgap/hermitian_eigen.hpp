#pragma once

#include <cstddef>
#include <vector>

#include "rgap/types.hpp"

namespace rgap {

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Complex> column(std::size_t j) const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct HermitianEigen {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm is
/// at most tolerance * ||A||_F. Only the Hermitian part of the input is used.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tolerance = 1e-14,
                               int max_sweeps = 100);

}  // namespace rgap
