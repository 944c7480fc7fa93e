#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsslab/errors.hpp"

namespace qss {

using complexd = std::complex<double>;

// Dense complex matrix, row-major. The computational substrate for all
// operators (encodings, density matrices, recovery isometries).
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  // Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // From explicit entries (row-major). Rejects mismatched length and
  // non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complexd> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<complexd>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  complexd& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const complexd& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<complexd>& entries() const { return entries_; }
  std::vector<complexd>& entries() { return entries_; }

  ComplexMatrix dagger() const;

  complexd trace() const;

  // Largest entrywise modulus.
  double max_abs() const;

  // max |this - other| entrywise; shapes must match.
  double max_abs_diff(const ComplexMatrix& other) const;

  // Frobenius norm.
  double frobenius_norm() const;

  double hermiticity_defect() const;  // max |m - m^dagger|
  bool is_hermitian(double tol) const { return square() && hermiticity_defect() <= tol; }

  bool all_finite() const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(complexd scalar) const;

  // this * v
  std::vector<complexd> apply(const std::vector<complexd>& v) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complexd> entries_;
};

// Pure-state amplitude vector.
class StateVector {
public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amplitudes_(dim) {}
  StateVector(std::vector<complexd> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  complexd& operator[](std::size_t i) { return amplitudes_[i]; }
  const complexd& operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::vector<complexd>& amplitudes() const { return amplitudes_; }
  std::vector<complexd>& amplitudes() { return amplitudes_; }

  double norm() const;
  bool is_normalized(double tol = 1e-10) const;
  void normalize();

  // |psi><psi|
  ComplexMatrix projector() const;

private:
  std::vector<complexd> amplitudes_;
};

}  // namespace qss
