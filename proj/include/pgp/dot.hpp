#pragma once

#include <map>
#include <set>
#include <string>

#include "pgp/closure.hpp"
#include "pgp/pgraph.hpp"

namespace pgp {

struct DotOptions {
  std::string name = "G";
  // action vertices render as boxes, observation vertices as circles
  const std::map<std::string, Color>* coloring = nullptr;  // green/red/gray fills
  std::set<std::string> goal_vertices;                     // double periphery
  std::set<std::string> terminal_vertices;                 // double periphery
  const std::map<std::string, Label>* policy = nullptr;    // chosen edges drawn bold
};

std::string to_dot(const PGraph& g, const DotOptions& options = {});

}  // namespace pgp
