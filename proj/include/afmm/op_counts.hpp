#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "afmm/matrix.hpp"

namespace afmm {

/// Exact tally of scalar operations a kernel performed on matrix element
/// values. Loop-index arithmetic is never counted. `additions` covers both
/// additions and subtractions; `zero_skips` counts iterations bypassed by a
/// zero test.
struct OpCounts {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t zero_skips = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const OpCounts& c) {
  return os << "additions=" << c.additions << " multiplications=" << c.multiplications
            << " zero_skips=" << c.zero_skips;
}

struct MultiplyResult {
  DenseMatrix product;
  OpCounts counts;
};

enum class KernelId { IJK, IKJ, STRASSEN, AFMM_A, AFMM_B };

inline std::string_view kernel_name(KernelId id) {
  switch (id) {
    case KernelId::IJK: return "ijk";
    case KernelId::IKJ: return "ikj";
    case KernelId::STRASSEN: return "strassen";
    case KernelId::AFMM_A: return "afmm-a";
    case KernelId::AFMM_B: return "afmm-b";
  }
  return "?";
}

inline std::optional<KernelId> parse_kernel(std::string_view name) {
  if (name == "ijk") return KernelId::IJK;
  if (name == "ikj") return KernelId::IKJ;
  if (name == "strassen") return KernelId::STRASSEN;
  if (name == "afmm-a") return KernelId::AFMM_A;
  if (name == "afmm-b") return KernelId::AFMM_B;
  return std::nullopt;
}

inline bool is_afmm(KernelId id) {
  return id == KernelId::AFMM_A || id == KernelId::AFMM_B;
}

}  // namespace afmm
