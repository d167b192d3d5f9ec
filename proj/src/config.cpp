#include "blockset/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace blockset {
namespace {

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("BLOCKSET_BITMAP_CAP")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used, 0);
      if (used > 0 && value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBitmapCap;
}

std::atomic<std::uint64_t>& cap_slot() {
  static std::atomic<std::uint64_t> slot{initial_cap()};
  return slot;
}

}  // namespace

std::uint64_t bitmap_cap() { return cap_slot().load(std::memory_order_relaxed); }

void set_bitmap_cap(std::uint64_t cap) { cap_slot().store(cap, std::memory_order_relaxed); }

}  // namespace blockset
