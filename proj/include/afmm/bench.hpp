#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "afmm/kernels.hpp"
#include "afmm/op_counts.hpp"
#include "afmm/random.hpp"
#include "afmm/strassen.hpp"

namespace afmm {

/// One benchmark experiment: a kernel swept over sizes at fixed densities and
/// mu_prime, with seeded replications and untimed warmups.
struct ExperimentPlan {
  KernelId kernel = KernelId::IKJ;
  std::vector<std::size_t> sizes;
  double d1 = 0.0;
  double d2 = 0.0;
  double mu_prime = 1.0;
  std::size_t replications = 20;
  std::size_t warmups = 2;
  Seed base_seed{0};
  std::size_t strassen_cutoff = 64;
};

inline void validate(const ExperimentPlan& plan) {
  if (plan.sizes.empty()) throw std::invalid_argument("plan: sizes must be nonempty");
  for (std::size_t i = 0; i + 1 < plan.sizes.size(); ++i) {
    if (plan.sizes[i] >= plan.sizes[i + 1]) {
      throw std::invalid_argument("plan: sizes must be strictly increasing");
    }
  }
  if (plan.sizes.front() == 0) throw std::invalid_argument("plan: sizes must be >= 1");
  if (plan.replications == 0) throw std::invalid_argument("plan: replications must be >= 1");
  if (!(plan.d1 >= 0.0 && plan.d1 <= 1.0) || !(plan.d2 >= 0.0 && plan.d2 <= 1.0)) {
    throw std::invalid_argument("plan: densities must be in [0, 1]");
  }
  if (!(plan.mu_prime >= 1.0) ||
      std::abs(plan.mu_prime - std::round(plan.mu_prime)) > 1e-9) {
    throw std::invalid_argument("plan: mu_prime must be an integer >= 1");
  }
  if (plan.strassen_cutoff == 0) {
    throw std::invalid_argument("plan: strassen cutoff must be >= 1");
  }
}

/// One timed kernel execution. elapsed_seconds covers the kernel call only,
/// measured on a monotonic clock; generation and reporting are never timed.
struct BenchmarkRecord {
  KernelId kernel = KernelId::IKJ;
  std::size_t n = 0;
  double d1 = 0.0;
  double d2 = 0.0;
  double mu_prime = 0.0;
  std::uint64_t seed = 0;
  std::size_t rep_index = 0;
  double elapsed_seconds = 0.0;
  OpCounts counts;
};

/// Smallest positive tick observable from the monotonic clock, in seconds.
inline double timer_resolution() {
  using clock = std::chrono::steady_clock;
  auto min_tick = clock::duration::max();
  for (int trial = 0; trial < 64; ++trial) {
    const auto start = clock::now();
    auto next = clock::now();
    while (next == start) next = clock::now();
    min_tick = std::min(min_tick, next - start);
  }
  return std::chrono::duration<double>(min_tick).count();
}

/// Per-cell seed: base_seed XOR splitmix64 of the packed (size, replication)
/// pair, so any cell can be reproduced without rerunning the whole plan.
inline std::uint64_t cell_seed(Seed base, std::size_t n, std::size_t rep) {
  return base.value ^ detail::splitmix64((static_cast<std::uint64_t>(n) << 32) |
                                         static_cast<std::uint64_t>(rep));
}

/// Factor pair for one run. The repeat-count factor (rhs for every kernel
/// except afmm-b, which swaps roles) is integer-valued with mean mu_prime;
/// the other factor is real-valued on the default [0.5, 1.5] range.
inline std::pair<DenseMatrix, DenseMatrix> make_factor_pair(
    KernelId kernel, std::size_t n, double d1, double d2, double mu_prime,
    std::uint64_t seed) {
  const Seed lhs_seed{detail::splitmix64(seed)};
  const Seed rhs_seed{detail::splitmix64(seed ^ 0xD1B54A32D192ED03ull)};
  if (kernel == KernelId::AFMM_B) {
    return {generate(GeneratorSpec::integer_valued(n, d1, mu_prime), lhs_seed),
            generate(GeneratorSpec::real_valued(n, d2), rhs_seed)};
  }
  return {generate(GeneratorSpec::real_valued(n, d1), lhs_seed),
          generate(GeneratorSpec::integer_valued(n, d2, mu_prime), rhs_seed)};
}

inline MultiplyResult run_kernel(KernelId kernel, const DenseMatrix& lhs,
                                 const DenseMatrix& rhs, std::size_t strassen_cutoff = 64) {
  switch (kernel) {
    case KernelId::IJK: return multiply_ijk(lhs, rhs);
    case KernelId::IKJ: return multiply_ikj(lhs, rhs);
    case KernelId::STRASSEN: return multiply_strassen(lhs, rhs, strassen_cutoff);
    case KernelId::AFMM_A: return afmm_case_a(lhs, rhs);
    case KernelId::AFMM_B: return afmm_case_b(lhs, rhs);
  }
  throw std::invalid_argument("run_kernel: unknown kernel");
}

/// Executes the plan sequentially: for each size and replication, generate
/// the factor pair from the cell seed, run the warmups untimed, then time
/// exactly one kernel call. Runs whose elapsed time falls under 100x the
/// measured timer resolution are discarded with a warning, so quantization
/// noise never reaches the statistics.
inline std::vector<BenchmarkRecord> run_plan(const ExperimentPlan& plan,
                                             std::ostream* warnings = &std::cerr) {
  validate(plan);
  using clock = std::chrono::steady_clock;
  const double min_elapsed = 100.0 * timer_resolution();

  std::vector<BenchmarkRecord> records;
  records.reserve(plan.sizes.size() * plan.replications);
  for (const std::size_t n : plan.sizes) {
    for (std::size_t rep = 0; rep < plan.replications; ++rep) {
      const std::uint64_t seed = cell_seed(plan.base_seed, n, rep);
      const auto [lhs, rhs] =
          make_factor_pair(plan.kernel, n, plan.d1, plan.d2, plan.mu_prime, seed);
      volatile std::uint64_t warm_sink = 0;  // keeps warmup calls from being elided
      for (std::size_t w = 0; w < plan.warmups; ++w) {
        warm_sink = run_kernel(plan.kernel, lhs, rhs, plan.strassen_cutoff).counts.additions;
      }
      (void)warm_sink;
      const auto start = clock::now();
      MultiplyResult result = run_kernel(plan.kernel, lhs, rhs, plan.strassen_cutoff);
      const auto stop = clock::now();
      const double elapsed = std::chrono::duration<double>(stop - start).count();
      if (elapsed < min_elapsed) {
        if (warnings) {
          *warnings << "warning: n=" << n << " rep=" << rep << " elapsed " << elapsed
                    << "s is under 100x timer resolution; record discarded\n";
        }
        continue;
      }
      records.push_back({plan.kernel, n, plan.d1, plan.d2, plan.mu_prime, seed, rep,
                         elapsed, result.counts});
    }
  }
  return records;
}

}  // namespace afmm
