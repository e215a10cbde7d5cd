#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "afmm/kernels.hpp"
#include "afmm/matrix.hpp"
#include "afmm/random.hpp"
#include "afmm/strassen.hpp"

using namespace afmm;

namespace {

DenseMatrix random_integer_matrix(std::size_t n, int low, int high, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix m(n);
  const auto range = static_cast<std::uint64_t>(high - low + 1);
  for (double& v : m.data()) {
    v = static_cast<double>(low + static_cast<long long>(detail::uniform_below(rng, range)));
  }
  return m;
}

}  // namespace

TEST_CASE("strassen uses 7 base multiplications at n=2, cutoff=1") {
  const auto lhs = from_rows({{1, 2}, {3, 4}});
  const auto rhs = from_rows({{5, 6}, {7, 8}});
  const auto result = multiply_strassen(lhs, rhs, 1);
  REQUIRE(result.counts.multiplications == 7);
  REQUIRE(result.product == multiply_ijk(lhs, rhs).product);
}

TEST_CASE("strassen base-case count is 7^log2(n) at cutoff 1") {
  for (const std::size_t n : {2, 4, 8, 16}) {
    const auto lhs = random_integer_matrix(n, -9, 9, n);
    const auto rhs = random_integer_matrix(n, -9, 9, n + 1);
    std::uint64_t expected = 1;
    for (std::size_t m = n; m > 1; m /= 2) expected *= 7;
    REQUIRE(multiply_strassen(lhs, rhs, 1).counts.multiplications == expected);
  }
}

TEST_CASE("strassen identity product") {
  const auto y = from_rows({{1.5, -2, 0.25, 9},
                            {0, 3, 1, -1},
                            {2, 2, 2, 2},
                            {-4, 0.5, 6, 7}});
  REQUIRE(approx_equal(multiply_strassen(identity(4), y, 1).product, y, 1e-12));
}

TEST_CASE("strassen equals the classical oracle exactly on integers") {
  const auto lhs = random_integer_matrix(8, -9, 9, 81);
  const auto rhs = random_integer_matrix(8, -9, 9, 82);
  REQUIRE(multiply_strassen(lhs, rhs, 2).product == multiply_ijk(lhs, rhs).product);
}

TEST_CASE("strassen pads non-power-of-two sizes and counts padded work") {
  const auto lhs = random_integer_matrix(5, -9, 9, 51);
  const auto rhs = random_integer_matrix(5, -9, 9, 52);
  const auto result = multiply_strassen(lhs, rhs, 1);
  REQUIRE(result.product == multiply_ijk(lhs, rhs).product);
  REQUIRE(result.counts.multiplications == 343);  // padded to 8, 7^3 base products

  // big enough cutoff degenerates to the classical kernel on the padded size
  const auto direct = multiply_strassen(lhs, rhs, 8);
  REQUIRE(direct.product == multiply_ijk(lhs, rhs).product);
  REQUIRE(direct.counts.multiplications == 512);
}

TEST_CASE("strassen tolerant equivalence on real inputs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto lhs = generate(GeneratorSpec::real_valued(12, 0.9), Seed{seed});
    const auto rhs = generate(GeneratorSpec::real_valued(12, 0.9), Seed{seed + 7});
    REQUIRE(approx_equal(multiply_strassen(lhs, rhs, 2).product,
                         multiply_ijk(lhs, rhs).product, 1e-9));
  }
}

TEST_CASE("strassen argument validation") {
  REQUIRE_THROWS_AS(multiply_strassen(zeros(2), zeros(3), 1), shape_error);
  REQUIRE_THROWS_AS(multiply_strassen(zeros(2), zeros(2), 0), std::invalid_argument);
}
