#include "extraloop/common.hpp"

#include <cstdlib>

namespace extraloop {

std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("EXTRALOOP_CAP");
    if (env == nullptr) return std::uint64_t{1} << 20;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return std::uint64_t{1} << 20;
    return static_cast<std::uint64_t>(v);
  }();
  return cap;
}

}  // namespace extraloop
