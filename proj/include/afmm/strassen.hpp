#pragma once

#include <cstdint>
#include <vector>

#include "afmm/kernels.hpp"
#include "afmm/matrix.hpp"
#include "afmm/op_counts.hpp"

namespace afmm {

namespace detail {

inline std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p *= 2;
  return p;
}

// Flat m*m buffers; OpCounts tallies every scalar operation, padded regions
// included.
struct StrassenWork {
  std::size_t cutoff;
  OpCounts counts;

  std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t idx = 0; idx < a.size(); ++idx) out[idx] = a[idx] + b[idx];
    counts.additions += a.size();
    return out;
  }

  std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t idx = 0; idx < a.size(); ++idx) out[idx] = a[idx] - b[idx];
    counts.additions += a.size();
    return out;
  }

  std::vector<double> base_multiply(const std::vector<double>& a,
                                    const std::vector<double>& b, std::size_t m) {
    std::vector<double> out(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        const double x = a[i * m + k];
        for (std::size_t j = 0; j < m; ++j) {
          out[i * m + j] += x * b[k * m + j];
        }
      }
    }
    const auto ops = static_cast<std::uint64_t>(m) * m * m;
    counts.additions += ops;
    counts.multiplications += ops;
    return out;
  }

  std::vector<double> multiply(const std::vector<double>& a,
                               const std::vector<double>& b, std::size_t m) {
    if (m <= cutoff) return base_multiply(a, b, m);

    const std::size_t h = m / 2;
    auto quadrant = [&](const std::vector<double>& src, std::size_t qi, std::size_t qj) {
      std::vector<double> q(h * h);
      for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
          q[i * h + j] = src[(qi * h + i) * m + (qj * h + j)];
        }
      }
      return q;
    };

    const auto a11 = quadrant(a, 0, 0), a12 = quadrant(a, 0, 1);
    const auto a21 = quadrant(a, 1, 0), a22 = quadrant(a, 1, 1);
    const auto b11 = quadrant(b, 0, 0), b12 = quadrant(b, 0, 1);
    const auto b21 = quadrant(b, 1, 0), b22 = quadrant(b, 1, 1);

    const auto m1 = multiply(add(a11, a22), add(b11, b22), h);
    const auto m2 = multiply(add(a21, a22), b11, h);
    const auto m3 = multiply(a11, sub(b12, b22), h);
    const auto m4 = multiply(a22, sub(b21, b11), h);
    const auto m5 = multiply(add(a11, a12), b22, h);
    const auto m6 = multiply(sub(a21, a11), add(b11, b12), h);
    const auto m7 = multiply(sub(a12, a22), add(b21, b22), h);

    const auto c11 = add(sub(add(m1, m4), m5), m7);
    const auto c12 = add(m3, m5);
    const auto c21 = add(m2, m4);
    const auto c22 = add(sub(add(m1, m3), m2), m6);

    std::vector<double> out(m * m);
    auto place = [&](const std::vector<double>& q, std::size_t qi, std::size_t qj) {
      for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
          out[(qi * h + i) * m + (qj * h + j)] = q[i * h + j];
        }
      }
    };
    place(c11, 0, 0);
    place(c12, 0, 1);
    place(c21, 1, 0);
    place(c22, 1, 1);
    return out;
  }
};

}  // namespace detail

/// Strassen's 7-multiplication block recursion. Inputs are zero-padded to the
/// next power of two, the recursion switches to the classical i,k,j kernel at
/// block size <= cutoff, and the padding is stripped from the result. Counts
/// cover every scalar operation actually performed, padded regions included;
/// with cutoff 1 and n a power of two, multiplications = 7^log2(n) exactly.
inline MultiplyResult multiply_strassen(const DenseMatrix& lhs, const DenseMatrix& rhs,
                                        std::size_t cutoff = 64) {
  detail::check_same_dim(lhs, rhs, "multiply_strassen");
  if (cutoff == 0) throw std::invalid_argument("multiply_strassen: cutoff must be >= 1");
  const std::size_t n = lhs.dim();
  const std::size_t m = detail::next_power_of_two(n);

  auto padded = [&](const DenseMatrix& src) {
    std::vector<double> buf(m * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) buf[i * m + j] = src(i, j);
    }
    return buf;
  };

  detail::StrassenWork work{cutoff, {}};
  const auto full = work.multiply(padded(lhs), padded(rhs), m);

  MultiplyResult result{DenseMatrix(n), work.counts};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) result.product(i, j) = full[i * m + j];
  }
  return result;
}

}  // namespace afmm
