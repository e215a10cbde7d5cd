#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "afmm/detail/text.hpp"
#include "afmm/errors.hpp"
#include "afmm/matrix.hpp"

namespace afmm {

// Matrix text format: first line is n, then n lines of n whitespace-separated
// decimal values. Values are written with shortest round-trip precision so a
// write/read cycle is bit-exact.

inline void write_matrix(std::ostream& out, const DenseMatrix& m) {
  const std::size_t n = m.dim();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << detail::format_double(m(i, j));
    }
    out << '\n';
  }
}

inline DenseMatrix read_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw shape_error("matrix read: missing dimension line");
  const auto n = detail::parse_u64(token);
  if (!n || *n == 0) {
    throw shape_error("matrix read: bad dimension '" + token + "'");
  }
  std::vector<double> values;
  values.reserve(*n * *n);
  while (values.size() < *n * *n && (in >> token)) {
    const auto v = detail::parse_double(token);
    if (!v) throw std::domain_error("matrix read: bad value '" + token + "'");
    values.push_back(*v);
  }
  if (values.size() != *n * *n) {
    throw shape_error("matrix read: expected " + std::to_string(*n * *n) +
                      " values, got " + std::to_string(values.size()));
  }
  if (in >> token) {
    throw shape_error("matrix read: trailing data '" + token + "'");
  }
  return DenseMatrix(static_cast<std::size_t>(*n), std::move(values));
}

inline void save_matrix(const std::filesystem::path& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  write_matrix(out, m);
  if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

inline DenseMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return read_matrix(in);
}

}  // namespace afmm
