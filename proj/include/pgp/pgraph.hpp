#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pgp {

enum class Kind { Action, Observation };

const char* kind_name(Kind k);
Kind other(Kind k);

// An edge label. Action and observation names live in disjoint namespaces,
// so the kind is part of the label's identity.
struct Label {
  Kind kind{};
  std::string name;
  auto operator<=>(const Label&) const = default;
};

Label act(std::string name);
Label obs(std::string name);

// A finite label sequence read along a path from an initial vertex.
using Execution = std::vector<Label>;

std::string to_string(const Label& l);
std::string to_string(const Execution& s);

// Bipartite labeled transition structure: action vertices emit action
// labels, observation vertices emit observation labels. The kind rule is
// checked by validate() rather than enforced structurally because derived
// graphs (subset expansions, products) can break it transiently.
//
// Parallel edges between the same vertex pair are merged into one label set,
// so every (src, dst) pair carries at most one edge.
struct PGraph {
  std::map<std::string, Kind> vertices;
  std::set<std::string> initial;
  std::map<std::pair<std::string, std::string>, std::set<Label>> edges;

  void add_vertex(const std::string& id, Kind kind);
  void add_edge(const std::string& src, const std::string& dst, std::set<Label> labels);
  void add_edge(const std::string& src, const std::string& dst, const Label& l);

  bool has_vertex(const std::string& id) const;
  Kind kind_of(const std::string& id) const;  // throws Error on unknown id

  // out-edges of one vertex as (dst, labels) in dst order
  std::vector<std::pair<std::string, const std::set<Label>*>> out(const std::string& id) const;
  std::set<Label> out_labels(const std::string& id) const;
  std::set<std::string> successors(const std::string& id, const Label& l) const;
  bool has_out_edges(const std::string& id) const;
  std::set<Label> alphabet() const;
};

struct ValidationFinding {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool ok() const { return findings.empty(); }
  std::string summary() const;
};

// Structural checks: nonempty initial set, resolvable edge endpoints,
// nonempty label sets, labels matching the source vertex kind, and no
// name used as both an action and an observation.
ValidationReport validate(const PGraph& g);

// Exactly one initial vertex and at most one out-edge per label per vertex.
bool is_state_determined(const PGraph& g);

// Vertices reachable from the initial set by reading s. Empty iff s is not
// in the graph's language.
std::set<std::string> reached_vertices(const PGraph& g, const Execution& s);

bool language_contains(const PGraph& g, const Execution& s);

// All executions of length <= depth. The empty execution belongs to the
// language of any graph with a nonempty initial set.
std::set<Execution> language_upto(const PGraph& g, int depth);

}  // namespace pgp
