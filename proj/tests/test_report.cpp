#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "afmm/report.hpp"

using namespace afmm;
using Catch::Approx;

namespace {

BenchmarkRecord record(KernelId kernel, std::size_t n, double mu, double elapsed,
                       std::size_t rep = 0, double d1 = 1.0 / 3.0, double d2 = 0.5) {
  BenchmarkRecord r;
  r.kernel = kernel;
  r.n = n;
  r.d1 = d1;
  r.d2 = d2;
  r.mu_prime = mu;
  r.seed = 1000 + rep;
  r.rep_index = rep;
  r.elapsed_seconds = elapsed;
  r.counts = {n * n, is_afmm(kernel) ? 0 : n * n, 0};
  return r;
}

}  // namespace

TEST_CASE("emit_csv writes the stable schema") {
  std::ostringstream out;
  emit_csv({}, out);
  REQUIRE(out.str() ==
          "kernel,n,d1,d2,mu_prime,seed,rep,elapsed_seconds,additions,multiplications,zero_skips\n");

  std::ostringstream two;
  emit_csv({record(KernelId::IKJ, 4, 1, 0.125), record(KernelId::AFMM_A, 4, 3, 0.0625, 1)}, two);
  std::istringstream lines(two.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  REQUIRE(count == 3);
  REQUIRE(two.str().find("ikj,4,") != std::string::npos);
  REQUIRE(two.str().find("0.125000000") != std::string::npos);
}

TEST_CASE("csv round-trips records with elapsed at 9 decimals") {
  std::vector<BenchmarkRecord> records{
      record(KernelId::IJK, 8, 1, 0.123456789123),
      record(KernelId::AFMM_B, 16, 7, 3.5e-5, 2, 0.2, 0.4),
  };
  std::stringstream io;
  emit_csv(records, io);
  const auto parsed = parse_csv(io);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    REQUIRE(parsed[i].kernel == records[i].kernel);
    REQUIRE(parsed[i].n == records[i].n);
    REQUIRE(parsed[i].d1 == records[i].d1);
    REQUIRE(parsed[i].d2 == records[i].d2);
    REQUIRE(parsed[i].mu_prime == records[i].mu_prime);
    REQUIRE(parsed[i].seed == records[i].seed);
    REQUIRE(parsed[i].rep_index == records[i].rep_index);
    REQUIRE(parsed[i].elapsed_seconds == Approx(records[i].elapsed_seconds).margin(5e-10));
    REQUIRE(parsed[i].counts == records[i].counts);
  }
}

TEST_CASE("parse_csv rejects malformed input") {
  std::istringstream bad_header("kernel,n\nijk,1\n");
  REQUIRE_THROWS_AS(parse_csv(bad_header), std::runtime_error);

  std::istringstream bad_kernel(
      "kernel,n,d1,d2,mu_prime,seed,rep,elapsed_seconds,additions,multiplications,zero_skips\n"
      "kji,4,0.5,0.5,1,0,0,0.1,0,0,0\n");
  REQUIRE_THROWS_AS(parse_csv(bad_kernel), std::runtime_error);

  std::istringstream short_row(
      "kernel,n,d1,d2,mu_prime,seed,rep,elapsed_seconds,additions,multiplications,zero_skips\n"
      "ijk,4,0.5,0.5,1,0,0,0.1,0\n");
  REQUIRE_THROWS_AS(parse_csv(short_row), std::runtime_error);
}

TEST_CASE("report reproduces the single-size reduction example") {
  std::vector<BenchmarkRecord> records;
  for (std::size_t rep = 0; rep < 2; ++rep) {
    records.push_back(record(KernelId::IKJ, 250, 1, 0.328, rep));
    records.push_back(record(KernelId::AFMM_A, 250, 1, 0.1752, rep));
  }
  const auto table = build_report(records);
  REQUIRE(table.sizes == std::vector<std::size_t>{250});
  REQUIRE(table.columns.size() == 2);
  REQUIRE(table.columns[1].label == "afmm-a mu'=1");
  REQUIRE(table.cell(250, "ikj").mean == Approx(0.328));
  const auto reduction = table.reduction(250, "afmm-a mu'=1");
  REQUIRE(reduction.has_value());
  REQUIRE(*reduction == Approx(46.6).margin(0.05));

  const auto markdown = format_markdown(table);
  REQUIRE(markdown.find("| n | ikj | afmm-a mu'=1 |") != std::string::npos);
  REQUIRE(markdown.find("reduction vs ikj (%), n=250") != std::string::npos);
  REQUIRE(markdown.find("46.6") != std::string::npos);
}

TEST_CASE("single-cell report has no footer") {
  const auto markdown = emit_table({record(KernelId::IJK, 64, 1, 0.5)});
  REQUIRE(markdown.find("| 64 | 0.5 |") != std::string::npos);
  REQUIRE(markdown.find("reduction") == std::string::npos);
}

TEST_CASE("ragged grids are rejected with the missing cell named") {
  std::vector<BenchmarkRecord> records{
      record(KernelId::IKJ, 32, 1, 0.1),
      record(KernelId::AFMM_A, 32, 1, 0.05),
      record(KernelId::IKJ, 64, 1, 0.8),
  };
  REQUIRE_THROWS_WITH(build_report(records),
                      Catch::Matchers::ContainsSubstring("n=64") &&
                          Catch::Matchers::ContainsSubstring("afmm-a mu'=1"));
}

TEST_CASE("reference results table reproduces the published reductions") {
  const auto records = load_csv(std::filesystem::path(AFMM_REPO_DIR) / "reference/table1.csv");
  REQUIRE(records.size() == 64);
  const auto table = build_report(records);
  REQUIRE(table.sizes.size() == 8);
  REQUIRE(table.columns.size() == 8);
  REQUIRE(table.columns.front().label == "ijk");

  // every column grows monotonically with n, the shape of the published plot
  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    for (std::size_t row = 1; row < table.sizes.size(); ++row) {
      REQUIRE(table.cells[row][col].mean > table.cells[row - 1][col].mean);
    }
  }

  REQUIRE(table.reduction(500, "afmm-a mu'=1").value() == Approx(60.4).margin(0.05));
  REQUIRE(table.reduction(2000, "afmm-a mu'=1").value() == Approx(63.7).margin(0.05));
  REQUIRE(table.reduction(2000, "afmm-a mu'=14").value() == Approx(18.7).margin(0.05));
  REQUIRE(table.reduction(2000, "afmm-a mu'=21").value() == Approx(16.7).margin(0.05));
}

TEST_CASE("plot data writes one series per configuration plus a manifest") {
  std::vector<BenchmarkRecord> records;
  for (const std::size_t n : {16, 32, 64}) {
    records.push_back(record(KernelId::IKJ, n, 1, 0.001 * static_cast<double>(n)));
    records.push_back(record(KernelId::AFMM_A, n, 3, 0.0005 * static_cast<double>(n)));
  }
  const auto dir = std::filesystem::temp_directory_path() / "afmm_plot_test";
  std::filesystem::remove_all(dir);
  const auto written = emit_plot_data(records, dir);
  REQUIRE(written.size() == 3);  // two series + manifest

  std::size_t series_files = 0;
  for (const auto& path : written) {
    if (path.filename() == "manifest.txt") continue;
    ++series_files;
    std::ifstream in(path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
      ++lines;
      // replications = 1, so the stddev column is exactly 0
      REQUIRE(line.substr(line.rfind(' ') + 1) == "0");
    }
    REQUIRE(lines == 3);
  }
  REQUIRE(series_files == 2);

  std::ifstream manifest(dir / "manifest.txt");
  std::string manifest_text((std::istreambuf_iterator<char>(manifest)),
                            std::istreambuf_iterator<char>());
  REQUIRE(manifest_text.find("ikj") != std::string::npos);
  REQUIRE(manifest_text.find("afmm-a mu'=3") != std::string::npos);
  std::filesystem::remove_all(dir);
}
