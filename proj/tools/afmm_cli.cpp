// Command-line front end: generate matrices, multiply with a chosen kernel,
// run benchmark plans, turn record CSVs into tables and plot series, and run
// the verification suites.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afmm/acceptance.hpp"
#include "afmm/afmm.hpp"

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

afmm::KernelId kernel_from_flag(const std::string& name) {
  const auto kernel = afmm::parse_kernel(name);
  if (!kernel) throw CLI::ValidationError("--kernel", "unknown kernel '" + name + "'");
  return *kernel;
}

std::vector<afmm::BenchmarkRecord> load_all(const std::vector<std::string>& paths) {
  std::vector<afmm::BenchmarkRecord> records;
  for (const auto& path : paths) {
    auto part = afmm::load_csv(path);
    records.insert(records.end(), part.begin(), part.end());
  }
  return records;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense matrix multiplication kernels with exact operation counts,\n"
               "plus a seeded benchmark and analysis harness."};
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a seeded random matrix (text format)");
  std::size_t gen_n = 0;
  double gen_density = 0.0;
  std::string gen_role = "real";
  double gen_mu = 1.0;
  double gen_low = 0.5, gen_high = 1.5;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "matrix dimension")->required();
  gen->add_option("--density", gen_density, "probability an entry is nonzero")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--role", gen_role, "value role: real | int")
      ->check(CLI::IsMember({"real", "int"}));
  gen->add_option("--mu", gen_mu, "mean nonzero value (int role; integer >= 1)");
  gen->add_option("--low", gen_low, "real role: lower value bound");
  gen->add_option("--high", gen_high, "real role: upper value bound");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // mul ----------------------------------------------------------------
  auto* mul = app.add_subcommand("mul", "Multiply two matrix files, print product and counts");
  std::string mul_kernel = "ijk";
  std::string mul_lhs, mul_rhs, mul_out;
  std::size_t mul_cutoff = 64;
  mul->add_option("lhs", mul_lhs, "pre-factor matrix file")->required();
  mul->add_option("rhs", mul_rhs, "post-factor matrix file")->required();
  mul->add_option("--kernel", mul_kernel, "ijk | ikj | strassen | afmm-a | afmm-b")
      ->required();
  mul->add_option("--cutoff", mul_cutoff, "strassen base-case size")
      ->check(CLI::PositiveNumber);
  mul->add_option("--out", mul_out, "write product here instead of stdout");

  // bench --------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run a benchmark plan, emit records as CSV");
  std::string bench_kernel;
  std::vector<std::size_t> bench_sizes;
  afmm::ExperimentPlan plan;
  std::uint64_t bench_seed = 0;
  std::string bench_out;
  bench->add_option("--kernel", bench_kernel, "ijk | ikj | strassen | afmm-a | afmm-b")
      ->required();
  bench->add_option("--sizes", bench_sizes, "comma-separated sizes, ascending")
      ->required()
      ->delimiter(',');
  bench->add_option("--d1", plan.d1, "pre-factor density")->required()->check(CLI::Range(0.0, 1.0));
  bench->add_option("--d2", plan.d2, "post-factor density")->required()->check(CLI::Range(0.0, 1.0));
  bench->add_option("--mu", plan.mu_prime, "mean nonzero repeat value (integer >= 1)");
  bench->add_option("--reps", plan.replications, "timed replications per size");
  bench->add_option("--warmups", plan.warmups, "untimed warmup runs per replication");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--cutoff", plan.strassen_cutoff, "strassen base-case size");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  // report ---------------------------------------------------------------
  auto* report = app.add_subcommand("report", "Render record CSVs as a markdown mean-time table");
  std::vector<std::string> report_inputs;
  std::string report_out;
  report->add_option("csv", report_inputs, "record CSV files")->required();
  report->add_option("--out", report_out, "output path (default stdout)");

  // plot-data ------------------------------------------------------------
  auto* plot = app.add_subcommand("plot-data", "Write per-configuration series files for plotting");
  std::vector<std::string> plot_inputs;
  std::string plot_dir;
  plot->add_option("csv", plot_inputs, "record CSV files")->required();
  plot->add_option("--out-dir", plot_dir, "directory for series files + manifest")->required();

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run a verification suite, print pass/fail per criterion");
  std::string verify_suite = "all";
  std::string verify_table1 = "reference/table1.csv";
  verify->add_option("suite", verify_suite, "counts | oracle | scaling | strassen-compare | all")
      ->check(CLI::IsMember({"counts", "oracle", "scaling", "strassen-compare", "all"}));
  verify->add_option("--table1", verify_table1, "reference results CSV (used by 'all')");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      afmm::GeneratorSpec spec =
          gen_role == "int" ? afmm::GeneratorSpec::integer_valued(gen_n, gen_density, gen_mu)
                            : afmm::GeneratorSpec::real_valued(gen_n, gen_density, gen_low, gen_high);
      const auto matrix = afmm::generate(spec, afmm::Seed{gen_seed});
      if (gen_out.empty()) {
        afmm::write_matrix(std::cout, matrix);
      } else {
        afmm::save_matrix(gen_out, matrix);
      }
    } else if (*mul) {
      const auto lhs = afmm::load_matrix(mul_lhs);
      const auto rhs = afmm::load_matrix(mul_rhs);
      const auto result = afmm::run_kernel(kernel_from_flag(mul_kernel), lhs, rhs, mul_cutoff);
      if (mul_out.empty()) {
        afmm::write_matrix(std::cout, result.product);
      } else {
        afmm::save_matrix(mul_out, result.product);
      }
      std::cout << result.counts << '\n';
    } else if (*bench) {
      plan.kernel = kernel_from_flag(bench_kernel);
      plan.sizes = bench_sizes;
      plan.base_seed = afmm::Seed{bench_seed};
      afmm::validate(plan);
      const auto records = afmm::run_plan(plan);
      if (bench_out.empty()) {
        afmm::emit_csv(records, std::cout);
      } else {
        afmm::save_csv(records, bench_out);
      }
    } else if (*report) {
      const auto text = afmm::emit_table(load_all(report_inputs));
      if (report_out.empty()) {
        std::cout << text;
      } else {
        open_output(report_out) << text;
      }
    } else if (*plot) {
      const auto written = afmm::emit_plot_data(load_all(plot_inputs), plot_dir);
      std::cerr << "wrote " << written.size() << " files under " << plot_dir << '\n';
    } else if (*verify) {
      const auto suite = afmm::acceptance::parse_suite(verify_suite);
      afmm::acceptance::SuiteOptions options;
      options.table1_csv = verify_table1;
      const auto results = afmm::acceptance::run_suite(*suite, options);
      if (!afmm::acceptance::print_results(results, std::cout)) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
