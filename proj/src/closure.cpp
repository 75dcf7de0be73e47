#include "pgp/closure.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "pgp/errors.hpp"
#include "pgp/util.hpp"

namespace pgp {

const char* color_name(Color c) {
  switch (c) {
    case Color::Green: return "green";
    case Color::Red: return "red";
    case Color::Gray: return "gray";
  }
  return "?";
}

Plan ClosureResult::pstar_plan() const { return Plan{pstar, pstar_terminals}; }

ClosureResult plan_closure(const PlanningProblem& problem, const ClosureOptions& options) {
  ClosureResult result;
  SdeResult sde = to_state_determined(problem.world);
  if (!sde.mixed_kind_subsets.empty())
    throw MixedKindSubset("expanded world vertex '" + *sde.mixed_kind_subsets.begin() +
                          "' mixes action and observation vertices");
  result.wprime = sde.graph;
  result.members = std::move(sde.members);

  for (const auto& [id, members] : result.members) {
    bool all_goal = !members.empty();
    for (const auto& m : members) all_goal = all_goal && problem.goals.contains(m);
    if (all_goal) result.goals_prime.insert(id);
  }

  const PGraph& W = result.wprime;
  auto& color = result.coloring;
  for (const auto& [id, kind] : W.vertices) {
    bool leaf = true;
    for (const auto& [dst, labels] : W.out(id)) leaf = leaf && dst == id;
    if (result.goals_prime.contains(id))
      color[id] = Color::Green;
    else if (leaf)
      color[id] = Color::Red;
    else
      color[id] = Color::Gray;
  }

  // a green successor only justifies its predecessor when it is not the
  // initial vertex, unless the option says otherwise
  auto justifies = [&](const std::string& dst) {
    return color.at(dst) == Color::Green &&
           (options.count_edges_to_initial || !W.initial.contains(dst));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [v, kind] : W.vertices) {
      if (color.at(v) != Color::Gray) continue;
      if (kind == Kind::Action) {
        std::optional<Label> chosen;
        bool all_red = true;
        for (const auto& [dst, labels] : W.out(v)) {
          if (color.at(dst) != Color::Red) all_red = false;
          if (justifies(dst)) {
            Label candidate = *labels->begin();
            if (!chosen || candidate < *chosen) chosen = candidate;
          }
        }
        if (chosen) {
          color[v] = Color::Green;
          result.policy.emplace(v, *chosen);
          changed = true;
        } else if (all_red) {
          color[v] = Color::Red;
          changed = true;
        }
      } else {
        bool any_red = false;
        bool all_justify = true;
        for (const auto& [dst, labels] : W.out(v)) {
          if (color.at(dst) == Color::Red) any_red = true;
          if (!justifies(dst)) all_justify = false;
        }
        if (any_red) {
          color[v] = Color::Red;
          changed = true;
        } else if (all_justify) {
          color[v] = Color::Green;
          changed = true;
        }
      }
    }
  }

  // green-induced subgraph
  for (const auto& [id, kind] : W.vertices)
    if (color.at(id) == Color::Green) result.pstar.add_vertex(id, kind);
  for (const auto& [key, labels] : W.edges)
    if (result.pstar.has_vertex(key.first) && result.pstar.has_vertex(key.second))
      result.pstar.add_edge(key.first, key.second, labels);
  for (const auto& id : W.initial)
    if (result.pstar.has_vertex(id)) result.pstar.initial.insert(id);
  result.pstar_terminals = result.goals_prime;
  result.no_solving_plan = result.pstar.initial.empty();
  return result;
}

Plan synthesize_plan(const Execution& skeleton, const ClosureResult& closure) {
  const PGraph& PS = closure.pstar;
  if (PS.initial.empty())
    throw SkeletonNotInClosure("the closure is empty, no skeleton can be followed");

  std::vector<std::string> trail{*PS.initial.begin()};
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    auto succ = PS.successors(trail.back(), skeleton[i]);
    if (succ.empty())
      throw SkeletonNotInClosure("skeleton '" + to_string(skeleton) +
                                 "' leaves the closure after " + std::to_string(i) + " steps");
    trail.push_back(*succ.begin());  // unique, the closure is state-determined
  }

  Plan plan;
  std::map<std::string, std::string> tail_ids;  // closure vertex -> plan vertex
  std::deque<std::string> tail_worklist;

  // a tail state follows the recorded policy until the goal set, where it
  // becomes terminal
  auto tail = [&](const std::string& v) {
    auto it = tail_ids.find(v);
    if (it != tail_ids.end()) return it->second;
    std::string id = "go:" + v;
    tail_ids.emplace(v, id);
    plan.graph.add_vertex(id, PS.kind_of(v));
    if (closure.goals_prime.contains(v))
      plan.terminals.insert(id);
    else
      tail_worklist.push_back(v);
    return id;
  };

  // one plan state per skeleton position, so revisits stay distinct
  std::vector<std::string> position;
  for (std::size_t i = 0; i < trail.size(); ++i) {
    position.push_back("s" + std::to_string(i) + "@" + trail[i]);
    plan.graph.add_vertex(position[i], PS.kind_of(trail[i]));
  }
  plan.graph.initial.insert(position[0]);

  for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
    const Label& next = skeleton[i];
    plan.graph.add_edge(position[i], position[i + 1], next);
    if (PS.kind_of(trail[i]) == Kind::Observation)
      for (const auto& [dst, labels] : PS.out(trail[i]))
        for (const auto& y : *labels)
          if (y != next) plan.graph.add_edge(position[i], tail(dst), y);
  }

  const std::string& last = trail.back();
  if (closure.goals_prime.contains(last)) {
    plan.terminals.insert(position.back());
  } else if (PS.kind_of(last) == Kind::Action) {
    Label a = closure.policy.at(last);
    plan.graph.add_edge(position.back(), tail(*PS.successors(last, a).begin()), a);
  } else {
    for (const auto& [dst, labels] : PS.out(last))
      plan.graph.add_edge(position.back(), tail(dst), *labels);
  }

  while (!tail_worklist.empty()) {
    std::string v = tail_worklist.front();
    tail_worklist.pop_front();
    const std::string& id = tail_ids.at(v);
    if (PS.kind_of(v) == Kind::Action) {
      Label a = closure.policy.at(v);
      plan.graph.add_edge(id, tail(*PS.successors(v, a).begin()), a);
    } else {
      for (const auto& [dst, labels] : PS.out(v)) plan.graph.add_edge(id, tail(dst), *labels);
    }
  }
  return plan;
}

std::vector<Plan> enumerate_solving_plans(const PlanningProblem& problem,
                                          const EnumerationOptions& options) {
  SdeResult sde = to_state_determined(problem.world);
  if (!sde.mixed_kind_subsets.empty())
    throw MixedKindSubset("expanded world vertex '" + *sde.mixed_kind_subsets.begin() +
                          "' mixes action and observation vertices");
  const PGraph& W = sde.graph;

  std::set<std::string> goals;
  for (const auto& [id, members] : sde.members) {
    bool all_goal = !members.empty();
    for (const auto& m : members) all_goal = all_goal && problem.goals.contains(m);
    if (all_goal) goals.insert(id);
  }

  std::vector<std::string> action_vertices;
  std::vector<std::vector<Label>> action_choices;
  for (const auto& [id, kind] : W.vertices) {
    if (kind != Kind::Action) continue;
    auto labels = W.out_labels(id);
    if (labels.empty()) continue;
    action_vertices.push_back(id);
    action_choices.emplace_back(labels.begin(), labels.end());
  }
  std::vector<std::string> goal_vertices(goals.begin(), goals.end());

  std::size_t assignments = 1;
  auto grow = [&](std::size_t factor) {
    if (factor != 0 && assignments > options.max_assignments / factor)
      throw BudgetExceeded("plan enumeration needs more than " +
                           std::to_string(options.max_assignments) + " assignments");
    assignments *= factor;
  };
  for (const auto& choices : action_choices) grow(choices.size());
  for (std::size_t i = 0; i < goal_vertices.size(); ++i) grow(2);

  std::vector<Plan> result;
  std::set<std::string> seen;
  std::vector<std::size_t> pick(action_vertices.size(), 0);
  std::vector<bool> stop(goal_vertices.size(), false);

  auto build = [&]() -> std::optional<Plan> {
    if (W.initial.empty()) return std::nullopt;
    Plan plan;
    std::deque<std::string> worklist{*W.initial.begin()};
    while (!worklist.empty()) {
      std::string v = worklist.front();
      worklist.pop_front();
      if (plan.graph.has_vertex(v)) continue;
      plan.graph.add_vertex(v, W.kind_of(v));
      if (plan.graph.vertices.size() > options.max_plan_vertices) return std::nullopt;

      auto goal_slot = std::find(goal_vertices.begin(), goal_vertices.end(), v);
      if (goal_slot != goal_vertices.end() && stop[goal_slot - goal_vertices.begin()]) {
        plan.terminals.insert(v);
        continue;
      }
      if (W.kind_of(v) == Kind::Action) {
        auto slot = std::find(action_vertices.begin(), action_vertices.end(), v);
        if (slot == action_vertices.end()) continue;  // dead end; solves() rejects it
        const Label& a = action_choices[slot - action_vertices.begin()][pick[slot - action_vertices.begin()]];
        for (const auto& dst : W.successors(v, a)) {
          worklist.push_back(dst);
          plan.graph.edges[{v, dst}].insert(a);
        }
      } else {
        for (const auto& [dst, labels] : W.out(v)) {
          worklist.push_back(dst);
          plan.graph.edges[{v, dst}] = *labels;
        }
      }
    }
    plan.graph.initial = W.initial;
    return plan;
  };

  for (;;) {
    if (auto plan = build(); plan && solves(*plan, problem).solves) {
      std::string key;
      for (const auto& [id, kind] : plan->graph.vertices)
        key += id + (plan->terminals.contains(id) ? "!" : "") + ";";
      for (const auto& [edge, labels] : plan->graph.edges) {
        key += edge.first + ">" + edge.second + "[";
        for (const auto& l : labels) key += l.name + ",";
        key += "];";
      }
      if (seen.insert(key).second) result.push_back(std::move(*plan));
    }

    // odometer over action choices, then over stop decisions
    std::size_t digit = 0;
    while (digit < pick.size() && ++pick[digit] == action_choices[digit].size())
      pick[digit++] = 0;
    if (digit < pick.size()) continue;
    std::size_t bit = 0;
    while (bit < stop.size() && stop[bit]) stop[bit++] = false;
    if (bit == stop.size()) break;
    stop[bit] = true;
  }
  return result;
}

bool lemma1_check(const PlanningProblem& problem, int depth, const ClosureOptions& options,
                  const EnumerationOptions& enumeration) {
  ClosureResult closure = plan_closure(problem, options);
  std::set<Execution> closure_language = language_upto(closure.pstar, depth);

  std::set<Execution> covered;
  for (const auto& plan : enumerate_solving_plans(problem, enumeration))
    for (const auto& s : language_upto(plan.graph, depth)) covered.insert(s);

  std::set<Execution> non_maximal;
  for (const auto& s : closure_language) {
    if (s.empty()) continue;
    Execution prefix(s.begin(), s.end() - 1);
    non_maximal.insert(std::move(prefix));
  }
  for (const auto& s : closure_language) {
    if (non_maximal.contains(s)) continue;
    Plan plan = synthesize_plan(s, closure);
    if (!solves(plan, problem).solves) return false;
    auto plan_language = language_upto(plan.graph, depth);
    if (!plan_language.contains(s)) return false;
    covered.insert(plan_language.begin(), plan_language.end());
  }
  return covered == closure_language;
}

}  // namespace pgp
