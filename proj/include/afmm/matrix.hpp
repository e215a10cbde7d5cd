#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "afmm/errors.hpp"

namespace afmm {

/// Square n-by-n matrix of doubles in row-major order. Element (i, j) lives
/// at data()[i * n + j]. All elements are finite; construction enforces it.
class DenseMatrix {
public:
  DenseMatrix() = default;

  /// All-zero n-by-n matrix. Throws on n == 0.
  explicit DenseMatrix(std::size_t n) : n_(check_dim(n)), data_(n * n, 0.0) {}

  DenseMatrix(std::size_t n, std::vector<double> values)
      : n_(check_dim(n)), data_(std::move(values)) {
    if (data_.size() != n_ * n_) {
      throw shape_error("DenseMatrix: expected " + std::to_string(n_ * n_) +
                        " values, got " + std::to_string(data_.size()));
    }
    for (double v : data_) {
      if (!std::isfinite(v)) {
        throw std::domain_error("DenseMatrix: non-finite element");
      }
    }
  }

  std::size_t dim() const noexcept { return n_; }
  std::size_t element_count() const noexcept { return data_.size(); }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * n_ + j];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  static std::size_t check_dim(std::size_t n) {
    if (n == 0) throw std::invalid_argument("DenseMatrix: dimension must be >= 1");
    return n;
  }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// n-by-n matrix of zeros.
inline DenseMatrix zeros(std::size_t n) { return DenseMatrix(n); }

/// Builds a matrix from row vectors. Input must be square and finite.
inline DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw shape_error("from_rows: no rows");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw shape_error("from_rows: row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return DenseMatrix(n, std::move(flat));
}

/// n-by-n identity.
inline DenseMatrix identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

/// Fraction of nonzero entries, in [0, 1].
inline double density(const DenseMatrix& m) {
  const auto values = m.data();
  const auto nonzero = static_cast<double>(
      std::count_if(values.begin(), values.end(), [](double v) { return v != 0.0; }));
  return nonzero / static_cast<double>(values.size());
}

/// Arithmetic mean of the nonzero entries. Undefined (throws) on an all-zero matrix.
inline double nonzero_mean(const DenseMatrix& m) {
  double sum = 0.0;
  std::size_t count = 0;
  for (double v : m.data()) {
    if (v != 0.0) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) {
    throw std::domain_error("nonzero_mean: all-zero matrix has no nonzero entries");
  }
  return sum / static_cast<double>(count);
}

/// Mean over all n^2 entries, zeros included. Equals nonzero_mean * density
/// for nonnegative matrices.
inline double overall_mean(const DenseMatrix& m) {
  double sum = 0.0;
  for (double v : m.data()) sum += v;
  return sum / static_cast<double>(m.element_count());
}

/// Entrywise comparison: |a - b| <= rel_tol * max(1, |a|, |b|) for every entry.
inline bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double rel_tol) {
  if (a.dim() != b.dim()) {
    throw shape_error("approx_equal: dimension mismatch " + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()));
  }
  const auto av = a.data();
  const auto bv = b.data();
  for (std::size_t idx = 0; idx < av.size(); ++idx) {
    const double scale = std::max({1.0, std::abs(av[idx]), std::abs(bv[idx])});
    if (std::abs(av[idx] - bv[idx]) > rel_tol * scale) return false;
  }
  return true;
}

}  // namespace afmm
