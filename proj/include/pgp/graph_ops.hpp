#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgp/pgraph.hpp"

namespace pgp {

// Canonical id for a set of member vertices: the sole member for singletons,
// otherwise "{a,b,...}" over the sorted members.
std::string subset_id(const std::set<std::string>& members);

// Canonical id for a product pair: "(left,right)".
std::string pair_id(const std::string& left, const std::string& right);

struct SdeResult {
  PGraph graph;
  // subset vertex id -> member ids in the input graph
  std::map<std::string, std::set<std::string>> members;
  // subset ids whose members mix both vertex kinds; such subsets are kept
  // (with action kind assigned) and left for consumers to reject
  std::set<std::string> mixed_kind_subsets;
};

// Subset expansion reachable from the initial set. Preserves the language
// at every depth and always yields a state-determined graph.
SdeResult to_state_determined(const PGraph& g);

// Disjoint union; vertex ids of part i are namespaced "u<i>:". The language
// of the result is the union of the part languages.
PGraph disjoint_union(const std::vector<PGraph>& parts);
PGraph disjoint_union(const PGraph& a, const PGraph& b);

struct ProductResult {
  PGraph graph;
  // pair vertex id -> (left component, right component)
  std::map<std::string, std::pair<std::string, std::string>> pairs;
  // reachable pairs whose components differ in kind; they can emit nothing,
  // so they are kept as dead ends and never expanded
  std::set<std::string> kind_clashes;
};

// Tensor product restricted to reachable pairs. Edges pair up co-located
// edges and carry the intersection of their label sets, so the language of
// the result is the intersection of the factor languages at every depth.
ProductResult product(const PGraph& a, const PGraph& b);

}  // namespace pgp
