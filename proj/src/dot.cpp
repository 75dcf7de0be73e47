#include "pgp/dot.hpp"

#include <sstream>

#include "pgp/util.hpp"

namespace pgp {

namespace {

std::string quoted(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_dot(const PGraph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << quoted(options.name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";

  std::size_t marker = 0;
  for (const auto& id : g.initial) {
    out << "  __start" << marker << " [shape=point];\n";
    out << "  __start" << marker << " -> " << quoted(id) << ";\n";
    ++marker;
  }

  for (const auto& [id, kind] : g.vertices) {
    out << "  " << quoted(id) << " [shape=" << (kind == Kind::Action ? "box" : "circle");
    if (options.goal_vertices.contains(id) || options.terminal_vertices.contains(id))
      out << ", peripheries=2";
    if (options.coloring) {
      auto it = options.coloring->find(id);
      if (it != options.coloring->end())
        out << ", style=filled, fillcolor=" << color_name(it->second);
    }
    out << "];\n";
  }

  for (const auto& [edge, labels] : g.edges) {
    std::vector<std::string> names;
    for (const auto& l : labels) names.push_back(l.name);
    out << "  " << quoted(edge.first) << " -> " << quoted(edge.second)
        << " [label=" << quoted(join(names, ","));
    if (options.policy) {
      auto it = options.policy->find(edge.first);
      if (it != options.policy->end() && labels.contains(it->second))
        out << ", penwidth=2";
    }
    out << "];\n";
  }

  out << "}\n";
  return out.str();
}

}  // namespace pgp
