#include "pgp/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "pgp/errors.hpp"
#include "pgp/util.hpp"

namespace pgp {

std::string subset_id(const std::set<std::string>& members) {
  if (members.size() == 1) return *members.begin();
  return "{" + join(members, ",") + "}";
}

std::string pair_id(const std::string& left, const std::string& right) {
  return "(" + left + "," + right + ")";
}

SdeResult to_state_determined(const PGraph& g) {
  SdeResult result;
  if (g.initial.empty()) return result;

  auto register_subset = [&](const std::set<std::string>& members) {
    std::string id = subset_id(members);
    if (result.graph.has_vertex(id)) return id;
    std::set<Kind> kinds;
    for (const auto& m : members) kinds.insert(g.kind_of(m));
    if (kinds.size() > 1) result.mixed_kind_subsets.insert(id);
    result.graph.add_vertex(id, *kinds.begin());
    result.members[id] = members;
    return id;
  };

  std::deque<std::set<std::string>> worklist{g.initial};
  result.graph.initial.insert(register_subset(g.initial));

  while (!worklist.empty()) {
    std::set<std::string> current = std::move(worklist.front());
    worklist.pop_front();
    std::string current_id = subset_id(current);

    std::map<Label, std::set<std::string>> targets_by_label;
    for (const auto& member : current)
      for (const auto& [dst, labels] : g.out(member))
        for (const auto& l : *labels) targets_by_label[l].insert(dst);

    for (const auto& [l, targets] : targets_by_label) {
      bool fresh = !result.graph.has_vertex(subset_id(targets));
      std::string target_id = register_subset(targets);
      if (fresh) worklist.push_back(targets);
      result.graph.add_edge(current_id, target_id, l);
    }
  }
  return result;
}

PGraph disjoint_union(const std::vector<PGraph>& parts) {
  PGraph result;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string prefix = "u" + std::to_string(i) + ":";
    const PGraph& part = parts[i];
    for (const auto& [id, kind] : part.vertices) result.add_vertex(prefix + id, kind);
    for (const auto& id : part.initial) result.initial.insert(prefix + id);
    for (const auto& [key, labels] : part.edges)
      result.add_edge(prefix + key.first, prefix + key.second, labels);
  }
  return result;
}

PGraph disjoint_union(const PGraph& a, const PGraph& b) { return disjoint_union({a, b}); }

ProductResult product(const PGraph& a, const PGraph& b) {
  ProductResult result;

  auto register_pair = [&](const std::string& left, const std::string& right) {
    std::string id = pair_id(left, right);
    if (result.graph.has_vertex(id)) return id;
    Kind lk = a.kind_of(left);
    Kind rk = b.kind_of(right);
    if (lk != rk) result.kind_clashes.insert(id);
    result.graph.add_vertex(id, lk);
    result.pairs[id] = {left, right};
    return id;
  };

  std::deque<std::pair<std::string, std::string>> worklist;
  for (const auto& left : a.initial)
    for (const auto& right : b.initial) {
      result.graph.initial.insert(register_pair(left, right));
      worklist.emplace_back(left, right);
    }

  std::set<std::pair<std::string, std::string>> expanded;
  while (!worklist.empty()) {
    auto [left, right] = worklist.front();
    worklist.pop_front();
    if (!expanded.insert({left, right}).second) continue;
    std::string current_id = pair_id(left, right);
    // pairs with mismatched vertex kinds still synchronize purely by label:
    // on well-formed inputs their label sets cannot intersect, but derived
    // graphs (subset expansions of lifted filters) legitimately mix kinds
    // and the intersection law must keep holding for them

    for (const auto& [ldst, llabels] : a.out(left))
      for (const auto& [rdst, rlabels] : b.out(right)) {
        std::set<Label> common;
        std::set_intersection(llabels->begin(), llabels->end(), rlabels->begin(), rlabels->end(),
                              std::inserter(common, common.begin()));
        if (common.empty()) continue;
        bool fresh = !result.graph.has_vertex(pair_id(ldst, rdst));
        std::string target_id = register_pair(ldst, rdst);
        if (fresh) worklist.emplace_back(ldst, rdst);
        result.graph.add_edge(current_id, target_id, std::move(common));
      }
  }
  return result;
}

}  // namespace pgp
