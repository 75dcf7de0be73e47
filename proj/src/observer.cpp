#include "pgp/observer.hpp"

#include <algorithm>
#include <deque>

#include "pgp/closure.hpp"
#include "pgp/errors.hpp"
#include "pgp/util.hpp"

namespace pgp {

const char* estimate_mode_name(EstimateMode mode) {
  switch (mode) {
    case EstimateMode::Exact: return "exact";
    case EstimateMode::Member: return "member";
  }
  return "?";
}

const char* divulgence_tag_name(DivulgenceCase::Tag tag) {
  switch (tag) {
    case DivulgenceCase::Tag::ExactPlan: return "I";
    case DivulgenceCase::Tag::PlanSet: return "II";
    case DivulgenceCase::Tag::SomePlan: return "III";
    case DivulgenceCase::Tag::WorldOnly: return "IV";
  }
  return "?";
}

std::string to_string(const BSet& b) {
  return "{" + join(std::vector<std::string>(b.members.begin(), b.members.end()), ",") + "}";
}

PGraph divulged_from_case(const DivulgenceCase& c) {
  switch (c.tag) {
    case DivulgenceCase::Tag::ExactPlan:
      if (c.plans.empty()) throw Error("divulgence case I needs a plan");
      return c.plans.front().graph;
    case DivulgenceCase::Tag::PlanSet: {
      if (c.plans.empty()) throw Error("divulgence case II needs at least one plan");
      std::vector<PGraph> parts;
      for (const auto& p : c.plans) parts.push_back(p.graph);
      return disjoint_union(parts);
    }
    case DivulgenceCase::Tag::SomePlan:
      if (!c.problem) throw Error("divulgence case III needs the planning problem");
      return plan_closure(*c.problem).pstar;
    case DivulgenceCase::Tag::WorldOnly:
      if (!c.world) throw Error("divulgence case IV needs the world");
      return *c.world;
  }
  throw Error("unknown divulgence case");
}

std::set<BSet> exact_reaching_sets(const PGraph& filter, int depth) {
  std::set<BSet> result;
  SdeResult sde = to_state_determined(filter);
  if (sde.graph.initial.empty()) return result;

  std::deque<std::pair<std::string, int>> frontier;
  std::set<std::string> seen;
  for (const auto& id : sde.graph.initial) {
    frontier.emplace_back(id, 0);
    seen.insert(id);
  }
  while (!frontier.empty()) {
    auto [id, dist] = frontier.front();
    frontier.pop_front();
    result.insert(BSet{sde.members.at(id)});
    if (dist >= depth) continue;
    for (const auto& [dst, labels] : sde.graph.out(id))
      if (seen.insert(dst).second) frontier.emplace_back(dst, dist + 1);
  }
  return result;
}

namespace {

// the tracking product: world x divulged x (filter pulled back through the map),
// with the filter side either determinized (exact) or left as-is (member)
struct Tracker {
  PGraph graph;
  // product vertex -> (world vertex, set of filter vertices)
  std::map<std::string, std::pair<std::string, std::set<std::string>>> decode;
  std::map<std::string, std::pair<std::string, Label>> parent;
  std::map<std::string, int> depth;
};

Tracker build_tracker(const PGraph& world, const LabelMap& h, const Observer& observer,
                      EstimateMode mode) {
  PGraph lifted = preimage_graph(h, observer.filter);
  PGraph filter_side;
  std::map<std::string, std::set<std::string>> members;
  if (mode == EstimateMode::Exact) {
    SdeResult sde = to_state_determined(lifted);
    filter_side = std::move(sde.graph);
    members = std::move(sde.members);
  } else {
    filter_side = lifted;
    for (const auto& [id, kind] : lifted.vertices) members[id] = {id};
  }

  ProductResult inner = product(observer.divulged, filter_side);
  ProductResult outer = product(world, inner.graph);

  Tracker tracker;
  tracker.graph = std::move(outer.graph);
  for (const auto& [id, pair] : outer.pairs) {
    const auto& [world_vertex, inner_id] = pair;
    tracker.decode.emplace(id, std::make_pair(world_vertex, members.at(inner.pairs.at(inner_id).second)));
  }

  std::deque<std::string> frontier;
  for (const auto& id : tracker.graph.initial) {
    tracker.depth[id] = 0;
    frontier.push_back(id);
  }
  while (!frontier.empty()) {
    std::string id = frontier.front();
    frontier.pop_front();
    for (const auto& [dst, labels] : tracker.graph.out(id)) {
      if (tracker.depth.contains(dst)) continue;
      tracker.depth[dst] = tracker.depth.at(id) + 1;
      tracker.parent.emplace(dst, std::make_pair(id, *labels->begin()));
      frontier.push_back(dst);
    }
  }
  return tracker;
}

Estimate estimate_from_tracker(const Tracker& tracker, const BSet& b, EstimateMode mode) {
  Estimate estimate;
  estimate.b = b;
  std::optional<std::string> best;
  for (const auto& [id, payload] : tracker.decode) {
    const auto& [world_vertex, filter_states] = payload;
    bool matches;
    if (mode == EstimateMode::Exact) {
      matches = filter_states == b.members;
    } else {
      matches = false;
      for (const auto& f : filter_states) matches = matches || b.members.contains(f);
    }
    if (!matches) continue;
    estimate.world_states.insert(world_vertex);
    if (!best || tracker.depth.at(id) < tracker.depth.at(*best)) best = id;
  }
  if (best) {
    Execution path;
    std::string at = *best;
    while (true) {
      auto it = tracker.parent.find(at);
      if (it == tracker.parent.end()) break;
      path.push_back(it->second.second);
      at = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    estimate.witness = std::move(path);
  }
  return estimate;
}

}  // namespace

Estimate estimate_world_states(const PGraph& world, const LabelMap& h, const Observer& observer,
                               const BSet& b, EstimateMode mode) {
  Tracker tracker = build_tracker(world, h, observer, mode);
  return estimate_from_tracker(tracker, b, mode);
}

std::vector<Estimate> all_estimates(const PGraph& world, const LabelMap& h,
                                    const Observer& observer, EstimateMode mode, int depth,
                                    bool include_vacuous) {
  Tracker tracker = build_tracker(world, h, observer, mode);
  std::vector<Estimate> result;
  for (const auto& b : exact_reaching_sets(observer.filter, depth)) {
    Estimate estimate = estimate_from_tracker(tracker, b, mode);
    if (estimate.world_states.empty() && !include_vacuous) continue;
    result.push_back(std::move(estimate));
  }
  return result;
}

}  // namespace pgp
