#include "pgp/pgraph.hpp"

#include <algorithm>

#include "pgp/errors.hpp"

namespace pgp {

const char* kind_name(Kind k) { return k == Kind::Action ? "action" : "observation"; }

Kind other(Kind k) { return k == Kind::Action ? Kind::Observation : Kind::Action; }

Label act(std::string name) { return Label{Kind::Action, std::move(name)}; }

Label obs(std::string name) { return Label{Kind::Observation, std::move(name)}; }

std::string to_string(const Label& l) { return l.name; }

std::string to_string(const Execution& s) {
  if (s.empty()) return "<empty>";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '.';
    out += s[i].name;
  }
  return out;
}

void PGraph::add_vertex(const std::string& id, Kind kind) {
  auto [it, inserted] = vertices.emplace(id, kind);
  if (!inserted && it->second != kind)
    throw Error("vertex '" + id + "' added twice with different kinds");
}

void PGraph::add_edge(const std::string& src, const std::string& dst, std::set<Label> labels) {
  if (!has_vertex(src)) throw Error("edge source '" + src + "' is not a vertex");
  if (!has_vertex(dst)) throw Error("edge target '" + dst + "' is not a vertex");
  if (labels.empty()) throw Error("edge '" + src + "' -> '" + dst + "' has no labels");
  auto& slot = edges[{src, dst}];
  slot.insert(labels.begin(), labels.end());
}

void PGraph::add_edge(const std::string& src, const std::string& dst, const Label& l) {
  add_edge(src, dst, std::set<Label>{l});
}

bool PGraph::has_vertex(const std::string& id) const { return vertices.contains(id); }

Kind PGraph::kind_of(const std::string& id) const {
  auto it = vertices.find(id);
  if (it == vertices.end()) throw Error("unknown vertex '" + id + "'");
  return it->second;
}

std::vector<std::pair<std::string, const std::set<Label>*>> PGraph::out(
    const std::string& id) const {
  std::vector<std::pair<std::string, const std::set<Label>*>> result;
  for (auto it = edges.lower_bound({id, std::string()});
       it != edges.end() && it->first.first == id; ++it)
    result.emplace_back(it->first.second, &it->second);
  return result;
}

std::set<Label> PGraph::out_labels(const std::string& id) const {
  std::set<Label> result;
  for (const auto& [dst, labels] : out(id)) result.insert(labels->begin(), labels->end());
  return result;
}

std::set<std::string> PGraph::successors(const std::string& id, const Label& l) const {
  std::set<std::string> result;
  for (const auto& [dst, labels] : out(id))
    if (labels->contains(l)) result.insert(dst);
  return result;
}

bool PGraph::has_out_edges(const std::string& id) const {
  auto it = edges.lower_bound({id, std::string()});
  return it != edges.end() && it->first.first == id;
}

std::set<Label> PGraph::alphabet() const {
  std::set<Label> result;
  for (const auto& [key, labels] : edges) result.insert(labels.begin(), labels.end());
  return result;
}

std::string ValidationReport::summary() const {
  if (findings.empty()) return "ok";
  std::string out;
  for (const auto& f : findings) {
    if (!out.empty()) out += "; ";
    out += f.code + ": " + f.detail;
  }
  return out;
}

ValidationReport validate(const PGraph& g) {
  ValidationReport report;
  auto flag = [&](std::string code, std::string detail) {
    report.findings.push_back({std::move(code), std::move(detail)});
  };

  if (g.initial.empty()) flag("empty-initial", "graph has no initial vertex");
  for (const auto& v : g.initial)
    if (!g.has_vertex(v)) flag("dangling-initial", "initial vertex '" + v + "' does not exist");

  // label names may belong to one kind only, across the whole graph
  std::map<std::string, std::set<Kind>> kinds_by_name;
  for (const auto& [key, labels] : g.edges) {
    const auto& [src, dst] = key;
    if (!g.has_vertex(src)) flag("dangling-edge", "edge source '" + src + "' does not exist");
    if (!g.has_vertex(dst)) flag("dangling-edge", "edge target '" + dst + "' does not exist");
    if (labels.empty()) flag("empty-label-set", "edge '" + src + "' -> '" + dst + "' has no labels");
    for (const auto& l : labels) {
      kinds_by_name[l.name].insert(l.kind);
      if (g.has_vertex(src) && g.kind_of(src) != l.kind)
        flag("kind-mismatch", "label '" + l.name + "' on edge '" + src + "' -> '" + dst +
                                  "' does not match the " + kind_name(g.kind_of(src)) +
                                  " kind of its source");
    }
  }
  for (const auto& [name, kinds] : kinds_by_name)
    if (kinds.size() > 1)
      flag("label-kind-clash", "'" + name + "' is used as both an action and an observation");

  return report;
}

bool is_state_determined(const PGraph& g) {
  if (g.initial.size() != 1) return false;
  for (const auto& [id, kind] : g.vertices) {
    std::set<Label> seen;
    for (const auto& [dst, labels] : g.out(id))
      for (const auto& l : *labels)
        if (!seen.insert(l).second) return false;
  }
  return true;
}

std::set<std::string> reached_vertices(const PGraph& g, const Execution& s) {
  std::set<std::string> current = g.initial;
  for (const auto& l : s) {
    std::set<std::string> next;
    for (const auto& v : current) {
      auto succ = g.successors(v, l);
      next.insert(succ.begin(), succ.end());
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

bool language_contains(const PGraph& g, const Execution& s) {
  return !reached_vertices(g, s).empty();
}

std::set<Execution> language_upto(const PGraph& g, int depth) {
  std::set<Execution> lang;
  if (g.initial.empty()) return lang;
  lang.insert(Execution{});
  std::map<Execution, std::set<std::string>> frontier{{Execution{}, g.initial}};
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::map<Execution, std::set<std::string>> next;
    for (const auto& [s, vs] : frontier)
      for (const auto& v : vs)
        for (const auto& [dst, labels] : g.out(v))
          for (const auto& l : *labels) {
            Execution extended = s;
            extended.push_back(l);
            next[std::move(extended)].insert(dst);
          }
    for (const auto& [s, vs] : next) lang.insert(s);
    frontier = std::move(next);
  }
  return lang;
}

}  // namespace pgp
