#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "afmm/analysis.hpp"
#include "afmm/bench.hpp"
#include "afmm/detail/text.hpp"
#include "afmm/errors.hpp"

namespace afmm {

inline constexpr std::string_view kCsvHeader =
    "kernel,n,d1,d2,mu_prime,seed,rep,elapsed_seconds,additions,multiplications,zero_skips";

/// Writes records in the stable CSV schema: elapsed to 9 decimal places,
/// everything else shortest round-trip, '.' decimal separator, rows in input
/// order.
inline void emit_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << kernel_name(r.kernel) << ',' << r.n << ',' << detail::format_double(r.d1)
        << ',' << detail::format_double(r.d2) << ',' << detail::format_double(r.mu_prime)
        << ',' << r.seed << ',' << r.rep_index << ','
        << detail::format_fixed(r.elapsed_seconds, 9) << ',' << r.counts.additions << ','
        << r.counts.multiplications << ',' << r.counts.zero_skips << '\n';
  }
}

inline void save_csv(const std::vector<BenchmarkRecord>& records,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  emit_csv(records, out);
  if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

}  // namespace detail

inline std::vector<BenchmarkRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");

  std::vector<BenchmarkRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = detail::split_fields(line);
    const auto fail = [&](const std::string& what) -> std::runtime_error {
      return std::runtime_error("csv line " + std::to_string(line_no) + ": " + what);
    };
    if (fields.size() != 11) throw fail("expected 11 fields");
    const auto kernel = parse_kernel(fields[0]);
    if (!kernel) throw fail("unknown kernel '" + std::string(fields[0]) + "'");
    const auto n = detail::parse_u64(fields[1]);
    const auto d1 = detail::parse_double(fields[2]);
    const auto d2 = detail::parse_double(fields[3]);
    const auto mu = detail::parse_double(fields[4]);
    const auto seed = detail::parse_u64(fields[5]);
    const auto rep = detail::parse_u64(fields[6]);
    const auto elapsed = detail::parse_double(fields[7]);
    const auto additions = detail::parse_u64(fields[8]);
    const auto multiplications = detail::parse_u64(fields[9]);
    const auto zero_skips = detail::parse_u64(fields[10]);
    if (!n || !d1 || !d2 || !mu || !seed || !rep || !elapsed || !additions ||
        !multiplications || !zero_skips) {
      throw fail("malformed field");
    }
    records.push_back({*kernel, static_cast<std::size_t>(*n), *d1, *d2, *mu, *seed,
                       static_cast<std::size_t>(*rep), *elapsed,
                       {*additions, *multiplications, *zero_skips}});
  }
  return records;
}

inline std::vector<BenchmarkRecord> load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  try {
    return parse_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

/// One table column: a (kernel, d1, d2, mu_prime) configuration.
struct ReportColumn {
  KernelId kernel;
  double d1 = 0.0;
  double d2 = 0.0;
  double mu_prime = 0.0;
  std::string label;
};

/// Mean-time table in the shape of the reference results table: one row per
/// size, one column per configuration in first-appearance order, plus
/// per-size percent reductions of every repeated-addition column against the
/// ikj baseline column when one is present.
struct ReportTable {
  std::vector<std::size_t> sizes;
  std::vector<ReportColumn> columns;
  std::vector<std::vector<SampleStats>> cells;  // [row][column]
  std::optional<std::size_t> ikj_column;
  std::vector<std::vector<std::optional<double>>> reductions;  // [row][column]

  const SampleStats& cell(std::size_t n, std::string_view label) const {
    for (std::size_t row = 0; row < sizes.size(); ++row) {
      if (sizes[row] != n) continue;
      for (std::size_t col = 0; col < columns.size(); ++col) {
        if (columns[col].label == label) return cells[row][col];
      }
    }
    throw std::out_of_range("no cell for n=" + std::to_string(n) + " '" +
                            std::string(label) + "'");
  }

  std::optional<double> reduction(std::size_t n, std::string_view label) const {
    for (std::size_t row = 0; row < sizes.size(); ++row) {
      if (sizes[row] != n) continue;
      for (std::size_t col = 0; col < columns.size(); ++col) {
        if (columns[col].label == label) return reductions[row][col];
      }
    }
    throw std::out_of_range("no cell for n=" + std::to_string(n) + " '" +
                            std::string(label) + "'");
  }
};

inline ReportTable build_report(const std::vector<BenchmarkRecord>& records) {
  if (records.empty()) throw grid_error("report: no records");

  ReportTable table;
  auto column_of = [&](const BenchmarkRecord& r) -> std::size_t {
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      const auto& c = table.columns[col];
      if (c.kernel == r.kernel && c.d1 == r.d1 && c.d2 == r.d2 && c.mu_prime == r.mu_prime) {
        return col;
      }
    }
    std::string label{kernel_name(r.kernel)};
    if (is_afmm(r.kernel)) label += " mu'=" + detail::format_double(r.mu_prime);
    for (const auto& existing : table.columns) {
      if (existing.label == label) {
        label += " d1=" + detail::format_double(r.d1) + " d2=" + detail::format_double(r.d2);
        break;
      }
    }
    table.columns.push_back({r.kernel, r.d1, r.d2, r.mu_prime, std::move(label)});
    return table.columns.size() - 1;
  };

  std::map<std::size_t, std::map<std::size_t, std::vector<double>>> grid;  // n -> col -> times
  for (const auto& r : records) grid[r.n][column_of(r)].push_back(r.elapsed_seconds);

  std::string missing;
  for (const auto& [n, row] : grid) {
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      if (!row.contains(col)) {
        missing += " (n=" + std::to_string(n) + ", " + table.columns[col].label + ")";
      }
    }
  }
  if (!missing.empty()) throw grid_error("report: missing cells:" + missing);

  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    if (table.columns[col].kernel == KernelId::IKJ) {
      table.ikj_column = col;
      break;
    }
  }

  for (const auto& [n, row] : grid) {
    table.sizes.push_back(n);
    std::vector<SampleStats> cells;
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      cells.push_back(summarize(row.at(col)));
    }
    std::vector<std::optional<double>> reductions(table.columns.size());
    if (table.ikj_column) {
      const double baseline = cells[*table.ikj_column].mean;
      for (std::size_t col = 0; col < table.columns.size(); ++col) {
        if (is_afmm(table.columns[col].kernel)) {
          reductions[col] = percent_reduction(baseline, cells[col].mean);
        }
      }
    }
    table.cells.push_back(std::move(cells));
    table.reductions.push_back(std::move(reductions));
  }
  return table;
}

/// Markdown rendering: cells are mean seconds to 6 significant digits;
/// reduction footer rows are percent to 1 decimal.
inline std::string format_markdown(const ReportTable& table) {
  std::ostringstream out;
  out << "| n |";
  for (const auto& col : table.columns) out << ' ' << col.label << " |";
  out << "\n|";
  for (std::size_t col = 0; col <= table.columns.size(); ++col) out << " ---: |";
  out << '\n';
  for (std::size_t row = 0; row < table.sizes.size(); ++row) {
    out << "| " << table.sizes[row] << " |";
    for (const auto& stats : table.cells[row]) {
      out << ' ' << detail::format_general(stats.mean, 6) << " |";
    }
    out << '\n';
  }
  if (table.ikj_column) {
    for (std::size_t row = 0; row < table.sizes.size(); ++row) {
      bool any = false;
      for (const auto& r : table.reductions[row]) any = any || r.has_value();
      if (!any) continue;
      out << "| reduction vs ikj (%), n=" << table.sizes[row] << " |";
      for (const auto& r : table.reductions[row]) {
        out << ' ';
        if (r) out << detail::format_fixed(*r, 1);
        out << " |";
      }
      out << '\n';
    }
  }
  return out.str();
}

inline std::string emit_table(const std::vector<BenchmarkRecord>& records) {
  return format_markdown(build_report(records));
}

namespace detail {

inline std::string slugify(std::string_view label) {
  std::string slug;
  for (char c : label) {
    slug += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return slug;
}

}  // namespace detail

/// Writes one whitespace-separated series file per configuration with lines
/// "n mean_elapsed stddev", plus manifest.txt mapping file names to series
/// labels. Enough for any external plotter to redraw the mean-time curves.
inline std::vector<std::filesystem::path> emit_plot_data(
    const std::vector<BenchmarkRecord>& records, const std::filesystem::path& directory) {
  const ReportTable table = build_report(records);
  std::filesystem::create_directories(directory);

  std::vector<std::filesystem::path> written;
  const auto manifest_path = directory / "manifest.txt";
  std::ofstream manifest(manifest_path);
  if (!manifest) throw std::runtime_error("cannot open for writing: " + manifest_path.string());
  for (std::size_t col = 0; col < table.columns.size(); ++col) {
    const std::string name =
        "series_" + std::to_string(col) + "_" + detail::slugify(table.columns[col].label) + ".dat";
    const auto path = directory / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    for (std::size_t row = 0; row < table.sizes.size(); ++row) {
      const auto& stats = table.cells[row][col];
      out << table.sizes[row] << ' ' << detail::format_double(stats.mean) << ' '
          << detail::format_double(stats.std_dev) << '\n';
    }
    if (!out.good()) throw std::runtime_error("write failed: " + path.string());
    manifest << name << ' ' << table.columns[col].label << '\n';
    written.push_back(path);
  }
  if (!manifest.good()) throw std::runtime_error("write failed: " + manifest_path.string());
  written.push_back(manifest_path);
  return written;
}

}  // namespace afmm
