#include "pgp/util.hpp"

#include <cstdlib>
#include <string>

namespace pgp {

int default_depth() {
  if (const char* env = std::getenv("PGP_DEPTH")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value > 0 && value <= 64) return static_cast<int>(value);
  }
  return 8;
}

namespace {

template <typename Range>
std::string join_range(const Range& parts, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& part : parts) {
    if (!first) out += sep;
    out += part;
    first = false;
  }
  return out;
}

}  // namespace

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  return join_range(parts, sep);
}

std::string join(const std::set<std::string>& parts, const std::string& sep) {
  return join_range(parts, sep);
}

}  // namespace pgp
