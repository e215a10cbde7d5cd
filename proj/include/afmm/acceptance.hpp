#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "afmm/analysis.hpp"
#include "afmm/bench.hpp"
#include "afmm/detail/text.hpp"
#include "afmm/kernels.hpp"
#include "afmm/random.hpp"
#include "afmm/report.hpp"
#include "afmm/strassen.hpp"

// Self-contained, seeded verification suites. Each criterion pins its own
// inputs and tolerances; timing criteria are machine-relative (monotonicity),
// never absolute, since the addition-to-multiplication cost ratio is a
// property of the machine.

namespace afmm::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Counts, Oracle, Scaling, StrassenCompare, All };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "counts") return Suite::Counts;
  if (name == "oracle") return Suite::Oracle;
  if (name == "scaling") return Suite::Scaling;
  if (name == "strassen-compare") return Suite::StrassenCompare;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

namespace detail {

using afmm::detail::splitmix64;

// Every repeated-addition run in these suites funnels through the tally so
// the multiplication-freedom criterion covers all of them.
struct Context {
  std::uint64_t afmm_runs = 0;
  std::uint64_t afmm_multiplication_violations = 0;

  MultiplyResult case_a(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    return note(afmm_case_a(lhs, rhs));
  }
  MultiplyResult case_b(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    return note(afmm_case_b(lhs, rhs));
  }

private:
  MultiplyResult note(MultiplyResult r) {
    ++afmm_runs;
    if (r.counts.multiplications != 0) ++afmm_multiplication_violations;
    return r;
  }
};

// Signed integer test matrix with entries uniform in [low, high].
inline DenseMatrix random_integer_matrix(std::size_t n, int low, int high,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(high - low + 1);
  DenseMatrix m(n);
  for (double& v : m.data()) {
    v = static_cast<double>(low + static_cast<long long>(
                                      afmm::detail::uniform_below(rng, range)));
  }
  return m;
}

inline std::string fmt(double v, int significant = 6) {
  return afmm::detail::format_general(v, significant);
}

inline double mean_of(const std::vector<double>& values) {
  return summarize(values).mean;
}

// --- criterion 1 -----------------------------------------------------------
inline CriterionResult c01_oracle_equivalence(Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t sizes[] = {1, 2, 3, 8, 16, 33, 64};
  std::uint64_t mismatches = 0;
  std::uint64_t pairs = 0;
  for (const std::size_t n : sizes) {
    for (std::uint64_t pair = 0; pair < 50; ++pair) {
      const std::uint64_t key = splitmix64((n << 32) | pair);
      const auto lhs = random_integer_matrix(n, -9, 9, splitmix64(key));
      const auto rhs = random_integer_matrix(n, -9, 9, splitmix64(key ^ 1));
      const auto reference = multiply_ijk(lhs, rhs).product;
      ++pairs;
      if (multiply_ikj(lhs, rhs).product != reference) ++mismatches;
      if (multiply_strassen(lhs, rhs, 8).product != reference) ++mismatches;
      if (ctx.case_a(lhs, rhs).product != reference) ++mismatches;
      if (ctx.case_b(lhs, rhs).product != reference) ++mismatches;
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {1, "oracle-equivalence",
          mismatches == 0 && elapsed < 10.0,
          std::to_string(pairs) + " integer pairs, entries in [-9,9], " +
              std::to_string(mismatches) + " kernel mismatches vs ijk, " +
              fmt(elapsed, 3) + "s (limit 10s)"};
}

// --- criterion 2 -----------------------------------------------------------
inline CriterionResult c02_tolerant_equivalence(Context& ctx) {
  const std::size_t sizes[] = {8, 16, 33, 64};
  const double mus[] = {1, 3, 5, 7, 14, 21};
  std::uint64_t failures = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = sizes[s % 4];
    const double mu = mus[s % 6];
    const Seed lhs_seed{splitmix64(0xA11CE + s)};
    const Seed rhs_seed{splitmix64(0xB0B + s)};
    const auto lhs = generate(GeneratorSpec::real_valued(n, 0.7), lhs_seed);
    const auto rhs = generate(GeneratorSpec::integer_valued(n, 0.5, mu), rhs_seed);
    const auto repeated = ctx.case_a(lhs, rhs).product;
    const auto classical = multiply_ijk(lhs, rhs).product;
    if (!approx_equal(repeated, classical, 1e-9)) ++failures;
  }
  return {2, "tolerant-equivalence", failures == 0,
          "50 real-x-integer pairs (mu' <= 21, n <= 64), rel_tol 1e-9, " +
              std::to_string(failures) + " failures"};
}

// --- criterion 3 -----------------------------------------------------------
inline CriterionResult c03_expected_additions(Context& ctx) {
  struct Config {
    double d1, d2, mu;
  };
  const Config configs[] = {{1.0 / 3.0, 0.5, 3.0}, {0.2, 0.4, 14.0}};
  const std::size_t n = 64;
  bool passed = true;
  std::string detail;
  for (const auto& config : configs) {
    std::vector<double> additions;
    for (std::uint64_t rep = 0; rep < 200; ++rep) {
      const std::uint64_t seed = cell_seed(Seed{7001}, n, rep);
      const auto [lhs, rhs] =
          make_factor_pair(KernelId::AFMM_A, n, config.d1, config.d2, config.mu, seed);
      additions.push_back(static_cast<double>(ctx.case_a(lhs, rhs).counts.additions));
    }
    const double predicted = predict_additions({n, config.d1, config.d2, config.mu});
    const double mean = mean_of(additions);
    const double rel_err = std::abs(mean - predicted) / predicted;
    passed = passed && rel_err <= 0.03;
    if (!detail.empty()) detail += "; ";
    detail += "mu'=" + fmt(config.mu, 3) + ": mean " + fmt(mean) + " vs predicted " +
              fmt(predicted) + " (rel err " + fmt(100.0 * rel_err, 2) + "%, tol 3%)";
  }
  return {3, "expected-additions", passed, detail + ", 200 seeds each"};
}

// --- criterion 4 -----------------------------------------------------------
inline CriterionResult c04_multiplication_freedom(Context& ctx) {
  const std::size_t sizes[] = {5, 17, 32};
  for (const std::size_t n : sizes) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto int_lhs = random_integer_matrix(n, -9, 9, splitmix64(0xC4F + n + s));
      const auto int_rhs = random_integer_matrix(n, -9, 9, splitmix64(0xD4F + n + s));
      ctx.case_a(int_lhs, int_rhs);
      ctx.case_b(int_lhs, int_rhs);
      const auto real_lhs =
          generate(GeneratorSpec::real_valued(n, 0.6), Seed{splitmix64(0xE4F + n + s)});
      const auto int_counts =
          generate(GeneratorSpec::integer_valued(n, 0.4, 3), Seed{splitmix64(0xF4F + n + s)});
      ctx.case_a(real_lhs, int_counts);
      ctx.case_b(int_counts, real_lhs);
    }
  }
  return {4, "multiplication-freedom", ctx.afmm_multiplication_violations == 0,
          std::to_string(ctx.afmm_runs) + " repeated-addition runs across all suites, " +
              std::to_string(ctx.afmm_multiplication_violations) +
              " reported a nonzero multiplication count"};
}

// --- criterion 5 -----------------------------------------------------------
inline CriterionResult c05_parameter_independence(Context& ctx) {
  const std::size_t n = 32;
  const OpCounts classical_expected{n * n * n, n * n * n, 0};
  std::mt19937_64 rng(0x9A9A);
  bool classical_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const double d1 = afmm::detail::uniform01(rng);
    const double d2 = afmm::detail::uniform01(rng);
    const double mu = static_cast<double>(1 + afmm::detail::uniform_below(rng, 9));
    const auto [lhs, rhs] = make_factor_pair(KernelId::IJK, n, d1, d2, mu, rng());
    classical_ok = classical_ok && multiply_ijk(lhs, rhs).counts == classical_expected &&
                   multiply_ikj(lhs, rhs).counts == classical_expected;
  }

  const std::size_t afmm_n = 64;
  std::vector<double> means;
  for (const double mu : {1.0, 7.0}) {
    std::vector<double> additions;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const std::uint64_t seed = cell_seed(Seed{515}, afmm_n, rep);
      const auto [lhs, rhs] =
          make_factor_pair(KernelId::AFMM_A, afmm_n, 1.0 / 3.0, 0.5, mu, seed);
      additions.push_back(static_cast<double>(ctx.case_a(lhs, rhs).counts.additions));
    }
    means.push_back(mean_of(additions));
  }
  const bool afmm_ok = means[0] < means[1];
  return {5, "parameter-independence", classical_ok && afmm_ok,
          std::string("ijk/ikj counts fixed at n^3 over 20 parameterizations: ") +
              (classical_ok ? "yes" : "NO") + "; afmm mean additions mu'=1 -> " +
              fmt(means[0]) + ", mu'=7 -> " + fmt(means[1]) +
              (afmm_ok ? " (strictly increasing)" : " (NOT increasing)")};
}

// --- criterion 6 -----------------------------------------------------------
inline CriterionResult c06_cubic_growth(Context& ctx) {
  std::vector<std::pair<double, double>> points;
  for (const std::size_t n : {32, 64, 128, 256}) {
    std::vector<double> additions;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const std::uint64_t seed = cell_seed(Seed{606}, n, rep);
      const auto [lhs, rhs] =
          make_factor_pair(KernelId::AFMM_A, n, 1.0 / 3.0, 0.5, 3.0, seed);
      additions.push_back(static_cast<double>(ctx.case_a(lhs, rhs).counts.additions));
    }
    points.emplace_back(static_cast<double>(n), mean_of(additions));
  }
  const FitResult fit = fit_power_law(points);
  const bool passed =
      fit.exponent >= 2.9 && fit.exponent <= 3.1 && fit.r_squared >= 0.999;
  return {6, "cubic-growth", passed,
          "n in {32..256}, d1=1/3, d2=1/2, mu'=3: exponent " + fmt(fit.exponent) +
              " (want [2.9, 3.1]), r^2 " + fmt(fit.r_squared, 8) + " (want >= 0.999)"};
}

// --- criterion 7 -----------------------------------------------------------
inline CriterionResult c07_quadratic_regime(Context& ctx) {
  std::vector<std::pair<double, double>> points;
  for (const std::size_t n : {64, 256, 1024}) {
    const double d = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> additions;
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
      const std::uint64_t seed = cell_seed(Seed{707}, n, rep);
      const auto [lhs, rhs] = make_factor_pair(KernelId::AFMM_A, n, d, d, 2.0, seed);
      additions.push_back(static_cast<double>(ctx.case_a(lhs, rhs).counts.additions));
    }
    points.emplace_back(static_cast<double>(n), mean_of(additions));
  }
  const FitResult fit = fit_power_law(points);
  const bool passed = fit.exponent >= 1.85 && fit.exponent <= 2.15;
  return {7, "quadratic-regime", passed,
          "d1=d2=1/sqrt(n), mu'=2, n in {64, 256, 1024}: exponent " + fmt(fit.exponent) +
              " (want [1.85, 2.15])"};
}

// --- criterion 8 -----------------------------------------------------------
inline CriterionResult c08_afmm_vs_strassen(Context& ctx) {
  const std::size_t n = 256;
  const auto strassen_lhs = random_integer_matrix(n, -9, 9, splitmix64(808));
  const auto strassen_rhs = random_integer_matrix(n, -9, 9, splitmix64(809));
  const auto strassen_mults =
      multiply_strassen(strassen_lhs, strassen_rhs, 1).counts.multiplications;
  const bool structure_ok = strassen_mults == 5764801;  // 7^8

  std::vector<double> additions;
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    const std::uint64_t seed = cell_seed(Seed{808}, n, rep);
    const auto [lhs, rhs] = make_factor_pair(KernelId::AFMM_A, n, 0.05, 0.05, 1.0, seed);
    additions.push_back(static_cast<double>(ctx.case_a(lhs, rhs).counts.additions));
  }
  const double mean = mean_of(additions);
  const bool passed = structure_ok && mean < 1e5 &&
                      mean < 0.02 * static_cast<double>(strassen_mults);
  return {8, "afmm-vs-strassen", passed,
          "n=256, d1=d2=0.05, mu'=1: afmm mean additions " + fmt(mean) +
              " (< 1e5) vs strassen cutoff-1 multiplications " +
              std::to_string(strassen_mults) + " (afmm below the 2% line: " +
              fmt(100.0 * mean / static_cast<double>(strassen_mults), 3) + "%)"};
}

// --- criterion 9 -----------------------------------------------------------
inline CriterionResult c09_strassen_structure(Context&) {
  bool passed = true;
  std::string detail = "cutoff 1:";
  for (const std::size_t n : {2, 4, 8}) {
    const auto lhs = random_integer_matrix(n, -9, 9, splitmix64(900 + n));
    const auto rhs = random_integer_matrix(n, -9, 9, splitmix64(901 + n));
    const auto mults = multiply_strassen(lhs, rhs, 1).counts.multiplications;
    const auto expected = static_cast<std::uint64_t>(
        std::llround(std::pow(7.0, std::log2(static_cast<double>(n)))));
    passed = passed && mults == expected;
    detail += " n=" + std::to_string(n) + " -> " + std::to_string(mults) + " (want " +
              std::to_string(expected) + ")";
  }
  return {9, "strassen-structure", passed, detail};
}

// --- criterion 10 ----------------------------------------------------------
inline CriterionResult c10_timing_monotonicity(Context& ctx) {
  std::vector<double> means;
  std::vector<std::size_t> counts;
  for (const double mu : {1.0, 7.0}) {
    ExperimentPlan plan;
    plan.kernel = KernelId::AFMM_A;
    plan.sizes = {512};
    plan.d1 = 1.0 / 3.0;
    plan.d2 = 0.5;
    plan.mu_prime = mu;
    plan.replications = 20;
    plan.warmups = 1;
    plan.base_seed = Seed{1010};
    const auto records = run_plan(plan);
    std::vector<double> elapsed;
    for (const auto& r : records) {
      elapsed.push_back(r.elapsed_seconds);
      ++ctx.afmm_runs;
      if (r.counts.multiplications != 0) ++ctx.afmm_multiplication_violations;
    }
    counts.push_back(records.size());
    means.push_back(mean_of(elapsed));
  }
  const bool passed = counts[0] == 20 && counts[1] == 20 && means[0] < means[1];
  return {10, "timing-monotonicity", passed,
          "afmm n=512, 20 reps: mean elapsed mu'=1 " + fmt(means[0], 4) + "s < mu'=7 " +
              fmt(means[1], 4) + "s; reductions vs ikj are reported informationally by "
              "the bench tool, not asserted (machine-dependent)"};
}

// --- criterion 11 ----------------------------------------------------------
inline CriterionResult c11_report_fidelity(Context&, const std::filesystem::path& table1_csv) {
  try {
    const auto records = load_csv(table1_csv);
    const auto table = build_report(records);
    const auto r500 = table.reduction(500, "afmm-a mu'=1");
    const auto r2000 = table.reduction(2000, "afmm-a mu'=1");
    if (!r500 || !r2000) {
      return {11, "report-fidelity", false,
              "reference table has no ikj baseline column, so no reductions"};
    }
    // The reference table's n=500 reduction is 60.4% against the ikj baseline
    // column and 66.2% against the ijk column; both are checked so either
    // baseline convention is reproduced. See README for the baseline choice.
    const double vs_ijk_500 = percent_reduction(table.cell(500, "ijk").mean,
                                                table.cell(500, "afmm-a mu'=1").mean);
    const auto near = [](double value, double want) {
      return std::abs(value - want) < 0.05;
    };
    const bool passed = r500 && near(*r500, 60.4) && r2000 && near(*r2000, 63.7) &&
                        near(vs_ijk_500, 66.2);
    return {11, "report-fidelity", passed,
            "reference table: n=500 reduction vs ikj " + fmt(*r500, 3) +
                "% (want 60.4), vs ijk " + fmt(vs_ijk_500, 3) +
                "% (want 66.2); n=2000 vs ikj " + fmt(*r2000, 3) +
                "% (want 63.7, 'around 64 percent')"};
  } catch (const std::exception& e) {
    return {11, "report-fidelity", false,
            std::string("failed to evaluate ") + table1_csv.string() + ": " + e.what()};
  }
}

// --- criterion 12 ----------------------------------------------------------
inline CriterionResult c12_fit_recovery(Context&) {
  const double exponents[] = {1.0, 2.0, 2.807, 3.0};
  const double coefficients[] = {0.5, 1.0, 2.5, 7.0};
  bool passed = true;
  double worst_r2 = 1.0;
  for (const double b : exponents) {
    for (const double c : coefficients) {
      std::vector<std::pair<double, double>> points;
      for (const double size : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        points.emplace_back(size, c * std::pow(size, b));
      }
      const FitResult fit = fit_power_law(points);
      worst_r2 = std::min(worst_r2, fit.r_squared);
      passed = passed && std::abs(fit.exponent - b) <= 1e-9 &&
               std::abs(fit.coefficient - c) <= 1e-9 * c && fit.r_squared >= 1.0 - 1e-9;
    }
  }
  return {12, "fit-recovery", passed,
          "16 synthetic (c, b) grids, b in {1, 2, 2.807, 3}: worst r^2 " +
              fmt(worst_r2, 12) + " (want >= 1 - 1e-9)"};
}

}  // namespace detail

struct SuiteOptions {
  std::filesystem::path table1_csv = "reference/table1.csv";
};

/// Runs one verification suite and returns per-criterion results, ordered by
/// criterion id. The multiplication-freedom tally always runs last so it
/// covers every repeated-addition call the other criteria made.
inline std::vector<CriterionResult> run_suite(Suite suite, const SuiteOptions& options = {}) {
  using namespace detail;
  Context ctx;
  std::vector<CriterionResult> results;
  const bool all = suite == Suite::All;

  if (all || suite == Suite::Oracle) {
    results.push_back(c01_oracle_equivalence(ctx));
    results.push_back(c02_tolerant_equivalence(ctx));
  }
  if (all || suite == Suite::Counts) {
    results.push_back(c03_expected_additions(ctx));
    results.push_back(c05_parameter_independence(ctx));
  }
  if (all || suite == Suite::Scaling) {
    results.push_back(c06_cubic_growth(ctx));
    results.push_back(c07_quadratic_regime(ctx));
    results.push_back(c10_timing_monotonicity(ctx));
    results.push_back(c12_fit_recovery(ctx));
  }
  if (all || suite == Suite::StrassenCompare) {
    results.push_back(c08_afmm_vs_strassen(ctx));
    results.push_back(c09_strassen_structure(ctx));
  }
  if (all) {
    results.push_back(c11_report_fidelity(ctx, options.table1_csv));
  }
  if (all || suite == Suite::Counts) {
    results.push_back(c04_multiplication_freedom(ctx));
  }

  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return results;
}

/// Prints one pass/fail line per criterion; returns true iff all passed.
inline bool print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all_passed = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": "
        << r.detail << '\n';
    all_passed = all_passed && r.passed;
  }
  out << (all_passed ? "all criteria passed" : "CRITERIA FAILED") << '\n';
  return all_passed;
}

}  // namespace afmm::acceptance
