#pragma once

#include <set>
#include <string>
#include <vector>

namespace pgp {

// Default exploration depth for language enumeration and reporting; the
// PGP_DEPTH environment variable overrides the built-in value of 8.
int default_depth();

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string join(const std::set<std::string>& parts, const std::string& sep);

}  // namespace pgp
