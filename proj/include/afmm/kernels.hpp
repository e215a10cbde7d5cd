#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "afmm/matrix.hpp"
#include "afmm/op_counts.hpp"

namespace afmm {

namespace detail {

inline void check_same_dim(const DenseMatrix& lhs, const DenseMatrix& rhs,
                           const char* where) {
  if (lhs.dim() != rhs.dim()) {
    throw shape_error(std::string(where) + ": dimension mismatch " +
                      std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()));
  }
}

// Entries must sit within 1e-9 of an integer (tolerates text-format round
// trips). Throws naming the first offending index.
inline void check_integer_valued(const DenseMatrix& m, const char* where,
                                 const char* operand) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (std::abs(v - std::round(v)) > 1e-9) {
        throw std::domain_error(std::string(where) + ": " + operand + "[" +
                                std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                std::to_string(v) + " is not integer-valued");
      }
      if (std::abs(v) > 9007199254740992.0) {  // 2^53: adjacent integers stop being representable
        throw std::domain_error(std::string(where) + ": " + operand + "[" +
                                std::to_string(i) + "][" + std::to_string(j) +
                                "] exceeds the exact integer range");
      }
    }
  }
}

}  // namespace detail

/// Classical triple loop in i, j, k order. Exactly n^3 multiplications and
/// n^3 additions (the product starts at zero and every term costs one fused
/// add), independent of matrix values.
inline MultiplyResult multiply_ijk(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  detail::check_same_dim(lhs, rhs, "multiply_ijk");
  const std::size_t n = lhs.dim();
  MultiplyResult result{DenseMatrix(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += lhs(i, k) * rhs(k, j);
      }
      result.product(i, j) = acc;
    }
  }
  result.counts.additions = static_cast<std::uint64_t>(n) * n * n;
  result.counts.multiplications = result.counts.additions;
  return result;
}

/// Classical triple loop in i, k, j order (the cache-friendly baseline).
/// Same n^3 / n^3 counts as multiply_ijk. Each product entry accumulates its
/// terms in increasing-k order in both kernels, so the results agree
/// bit-for-bit even for real-valued inputs.
inline MultiplyResult multiply_ikj(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  detail::check_same_dim(lhs, rhs, "multiply_ikj");
  const std::size_t n = lhs.dim();
  MultiplyResult result{DenseMatrix(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = lhs(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        result.product(i, j) += x * rhs(k, j);
      }
    }
  }
  result.counts.additions = static_cast<std::uint64_t>(n) * n * n;
  result.counts.multiplications = result.counts.additions;
  return result;
}

namespace detail {

// Shared repeated-addition core. `base_major` selects Case A (base taken
// from lhs, repeat counts from rhs) vs Case B (repeat counts from lhs, base
// from rhs). Zero-skip accounting differs between the cases; see the kernel
// doc comments.
inline void add_repeated(double& cell, double base, std::int64_t reps,
                         std::uint64_t& additions) {
  const double step = reps >= 0 ? base : -base;
  const std::uint64_t times =
      reps >= 0 ? static_cast<std::uint64_t>(reps) : static_cast<std::uint64_t>(-reps);
  double acc = cell;
  for (std::uint64_t t = 0; t < times; ++t) acc += step;
  cell = acc;
  additions += times;
}

}  // namespace detail

/// AFMM Case A: real-valued lhs, integer-valued rhs. For each lhs element
/// (the base), zero bases skip the whole inner loop (one zero_skip each);
/// otherwise the base is added into the product sign(rep) times |rep| for
/// each rhs element rep in the matching row. No multiplications ever.
/// A zero rep contributes nothing and costs nothing.
inline MultiplyResult afmm_case_a(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  detail::check_same_dim(lhs, rhs, "afmm_case_a");
  detail::check_integer_valued(rhs, "afmm_case_a", "rhs");
  const std::size_t n = lhs.dim();
  MultiplyResult result{DenseMatrix(n), {}};
  OpCounts& counts = result.counts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double base = lhs(i, k);
      if (base == 0.0) {
        ++counts.zero_skips;
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double rep_value = rhs(k, j);
        if (rep_value == 0.0) continue;
        const std::int64_t reps = std::llround(rep_value);
        if (reps == 0) continue;
        detail::add_repeated(result.product(i, j), base, reps, counts.additions);
      }
    }
  }
  return result;
}

/// AFMM Case B: integer-valued lhs (the repeat counts), real-valued rhs (the
/// bases). A zero repeat count skips the inner loop outright (not tallied);
/// inside the loop each zero base is skipped and tallied as one zero_skip.
/// No multiplications ever.
inline MultiplyResult afmm_case_b(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  detail::check_same_dim(lhs, rhs, "afmm_case_b");
  detail::check_integer_valued(lhs, "afmm_case_b", "lhs");
  const std::size_t n = lhs.dim();
  MultiplyResult result{DenseMatrix(n), {}};
  OpCounts& counts = result.counts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double rep_value = lhs(i, k);
      if (rep_value == 0.0) continue;
      const std::int64_t reps = std::llround(rep_value);
      if (reps == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double base = rhs(k, j);
        if (base == 0.0) {
          ++counts.zero_skips;
          continue;
        }
        detail::add_repeated(result.product(i, j), base, reps, counts.additions);
      }
    }
  }
  return result;
}

}  // namespace afmm
