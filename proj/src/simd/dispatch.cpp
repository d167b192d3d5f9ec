#include <cstdlib>
#include <string_view>

#include "blockset/simd/kernels.hpp"

namespace blockset::simd {
namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("BLOCKSET_SIMD")) {
    const std::string_view want{forced};
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
    if (want == "neon" && neon_kernels() != nullptr) return *neon_kernels();
  }
  if (const auto* t = avx2_kernels()) return *t;
  if (const auto* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace blockset::simd
