#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace afmm {

/// Parameters of the expected-addition cost model: dimension n, pre- and
/// post-factor densities d1, d2, and mean nonzero repeat value mu_prime.
struct CostParams {
  std::size_t n = 0;
  double d1 = 0.0;
  double d2 = 0.0;
  double mu_prime = 0.0;
};

inline void validate(const CostParams& p) {
  if (p.n == 0) throw std::invalid_argument("CostParams: n must be >= 1");
  if (!(p.d1 >= 0.0 && p.d1 <= 1.0) || !(p.d2 >= 0.0 && p.d2 <= 1.0)) {
    throw std::invalid_argument("CostParams: densities must be in [0, 1]");
  }
  if (!(p.mu_prime > 0.0)) throw std::invalid_argument("CostParams: mu_prime must be positive");
}

/// Expected number of scalar additions for the repeated-addition kernels:
/// mu_prime * d1 * d2 * n^3.
inline double predict_additions(const CostParams& p) {
  validate(p);
  const double n = static_cast<double>(p.n);
  return p.mu_prime * p.d1 * p.d2 * n * n * n;
}

/// Mean over all entries of a matrix whose nonzeros have mean mu_prime and
/// density d2: mu = mu_prime * d2.
inline double effective_mean(double mu_prime, double d2) {
  if (!(mu_prime > 0.0)) throw std::invalid_argument("effective_mean: mu_prime must be positive");
  if (!(d2 >= 0.0 && d2 <= 1.0)) throw std::invalid_argument("effective_mean: d2 must be in [0, 1]");
  return mu_prime * d2;
}

/// Descriptive statistics of one sample: mean, unbiased standard deviation
/// (0 for a single observation), and the normal-approximation 95% CI
/// half-width 1.96 * std_dev / sqrt(count).
struct SampleStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double ci95_half_width = 0.0;
};

inline SampleStats summarize(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  const auto count = samples.size();
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double mean = sum / static_cast<double>(count);
  double sq = 0.0;
  for (double s : samples) sq += (s - mean) * (s - mean);
  const double std_dev =
      count > 1 ? std::sqrt(sq / static_cast<double>(count - 1)) : 0.0;
  return {count, mean, std_dev, 1.96 * std_dev / std::sqrt(static_cast<double>(count))};
}

/// Fitted power law value = coefficient * size^exponent, with the coefficient
/// of determination of the underlying log-log regression.
struct FitResult {
  double coefficient = 0.0;
  double exponent = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares on (ln size, ln value). Needs at least three points
/// with three distinct sizes; all coordinates must be strictly positive.
inline FitResult fit_power_law(std::span<const std::pair<double, double>> points) {
  std::set<double> distinct;
  for (const auto& [size, value] : points) {
    if (!(size > 0.0) || !(value > 0.0)) {
      throw std::domain_error("fit_power_law: coordinates must be strictly positive");
    }
    distinct.insert(size);
  }
  if (points.size() < 3 || distinct.size() < 3) {
    throw std::invalid_argument("fit_power_law: need at least 3 points with 3 distinct sizes");
  }

  const auto count = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [size, value] : points) {
    sx += std::log(size);
    sy += std::log(value);
  }
  const double mx = sx / count;
  const double my = sy / count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [size, value] : points) {
    const double dx = std::log(size) - mx;
    const double dy = std::log(value) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (const auto& [size, value] : points) {
    const double resid = std::log(value) - (intercept + slope * std::log(size));
    ss_res += resid * resid;
  }
  const double r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return {std::exp(intercept), slope, r_squared};
}

/// Least-squares slope through the origin of elapsed time vs addition count:
/// the empirical cost of one addition on this machine.
inline double cost_per_addition(
    std::span<const std::pair<std::uint64_t, double>> records) {
  double sat = 0.0, saa = 0.0;
  for (const auto& [additions, elapsed] : records) {
    const auto a = static_cast<double>(additions);
    sat += a * elapsed;
    saa += a * a;
  }
  if (saa == 0.0) {
    throw std::invalid_argument("cost_per_addition: no record has a positive addition count");
  }
  return sat / saa;
}

/// Percent improvement of candidate over baseline: 100 * (baseline - candidate) / baseline.
inline double percent_reduction(double baseline_mean, double candidate_mean) {
  if (!(baseline_mean > 0.0)) {
    throw std::domain_error("percent_reduction: baseline must be positive");
  }
  if (candidate_mean < 0.0) {
    throw std::domain_error("percent_reduction: candidate must be nonnegative");
  }
  return 100.0 * (baseline_mean - candidate_mean) / baseline_mean;
}

}  // namespace afmm
