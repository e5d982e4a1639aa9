#include "subconv/set_function.hpp"

#include <cstdlib>

namespace subconv {

namespace {

constexpr int kDefaultMaxN = 22;

int read_limit_from_env() {
  const char* raw = std::getenv("SUBCONV_MAX_N");
  if (raw == nullptr) return kDefaultMaxN;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 0 || parsed > 62) return kDefaultMaxN;
  return static_cast<int>(parsed);
}

}  // namespace

int max_ground_set_size() {
  static const int limit = read_limit_from_env();
  return limit;
}

}  // namespace subconv
