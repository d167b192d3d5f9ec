#pragma once

#include <cstdint>

namespace blockset {

inline constexpr std::uint64_t kDefaultBitmapCap = std::uint64_t{1} << 26;

// Largest k^ell accepted when building a bitmap. Initialised from the
// BLOCKSET_BITMAP_CAP environment variable on first use, else the default.
std::uint64_t bitmap_cap();
void set_bitmap_cap(std::uint64_t cap);

}  // namespace blockset
