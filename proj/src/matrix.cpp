#include "qsslab/matrix.hpp"

#include <cmath>

namespace qss {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complexd> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw input_error("matrix entries length " + std::to_string(entries_.size()) +
                      " does not match shape " + std::to_string(rows_) + "x" + std::to_string(cols_));
  if (!all_finite()) throw input_error("matrix contains non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<complexd>& diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

complexd ComplexMatrix::trace() const {
  if (!square()) throw input_error("trace requires a square matrix");
  complexd t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw input_error("shape mismatch in matrix comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) throw input_error("hermiticity defect requires a square matrix");
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const complexd a = (*this)(r, k);
      if (a == complexd(0.0)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix sum shape mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix difference shape mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(complexd scalar) const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e *= scalar;
  return out;
}

std::vector<complexd> ComplexMatrix::apply(const std::vector<complexd>& v) const {
  if (v.size() != cols_) throw input_error("matrix-vector shape mismatch");
  std::vector<complexd> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    complexd acc = 0.0;
    const complexd* row = entries_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

StateVector::StateVector(std::vector<complexd> amplitudes) : amplitudes_(std::move(amplitudes)) {
  for (const auto& a : amplitudes_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw input_error("state vector contains non-finite amplitudes");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw input_error("cannot normalize the zero vector");
  for (auto& a : amplitudes_) a /= n;
}

ComplexMatrix StateVector::projector() const {
  const std::size_t d = dim();
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
  return out;
}

}  // namespace qss
