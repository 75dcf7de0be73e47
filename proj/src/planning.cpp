#include "pgp/planning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "pgp/errors.hpp"

namespace pgp {

const char* solve_clause_name(SolveClause c) {
  switch (c) {
    case SolveClause::ActionNotEnabled: return "action-not-enabled";
    case SolveClause::ObservationUnhandled: return "observation-unhandled";
    case SolveClause::TerminalOffGoal: return "terminal-off-goal";
    case SolveClause::NoForcedTermination: return "no-forced-termination";
  }
  return "?";
}

const char* trace_outcome_name(TraceOutcome o) {
  switch (o) {
    case TraceOutcome::TerminatedAtGoal: return "terminated-at-goal";
    case TraceOutcome::TerminatedOffGoal: return "terminated-off-goal";
    case TraceOutcome::Blocked: return "blocked";
    case TraceOutcome::StepLimit: return "step-limit";
  }
  return "?";
}

ValidationReport PlanningProblem::validate() const {
  ValidationReport report = pgp::validate(world);
  if (goals.empty()) report.findings.push_back({"no-goals", "the goal set is empty"});
  for (const auto& g : goals)
    if (!world.has_vertex(g))
      report.findings.push_back({"dangling-goal", "goal vertex '" + g + "' does not exist"});
  if (!is_state_determined(world))
    report.findings.push_back({"not-state-determined", "the world must be state-determined"});
  return report;
}

ValidationReport Plan::validate() const {
  ValidationReport report = pgp::validate(graph);
  for (const auto& t : terminals)
    if (!graph.has_vertex(t))
      report.findings.push_back({"dangling-terminal", "terminal vertex '" + t + "' does not exist"});
  return report;
}

Execution Trace::execution() const {
  Execution s;
  s.reserve(steps.size());
  for (const auto& step : steps) s.push_back(step.emitted);
  return s;
}

namespace {

using JointPair = std::pair<std::string, std::string>;

struct JointEdge {
  Label label;
  JointPair target;
  auto operator<=>(const JointEdge&) const = default;
};

}  // namespace

SolveReport solves(const Plan& plan, const PlanningProblem& problem) {
  const PGraph& P = plan.graph;
  const PGraph& W = problem.world;

  std::map<JointPair, std::pair<JointPair, Label>> parents;
  std::optional<SolveDiagnosis> first;

  auto record = [&](SolveClause clause, const JointPair& at, std::optional<Label> label,
                    std::string message) {
    if (first) return;
    SolveDiagnosis d;
    d.clause = clause;
    d.plan_vertex = at.first;
    d.world_vertex = at.second;
    d.label = std::move(label);
    d.message = std::move(message);
    Execution reversed;
    JointPair cur = at;
    while (parents.contains(cur)) {
      const auto& [parent, l] = parents.at(cur);
      reversed.push_back(l);
      cur = parent;
    }
    d.path.assign(reversed.rbegin(), reversed.rend());
    first = std::move(d);
  };

  if (P.initial.empty() || W.initial.empty()) {
    record(SolveClause::NoForcedTermination, {"", ""}, std::nullopt,
           "plan or world has no initial vertex");
    return {false, first};
  }

  std::map<JointPair, std::vector<JointEdge>> joint;
  std::deque<JointPair> worklist;
  for (const auto& p0 : P.initial)
    for (const auto& w0 : W.initial) worklist.push_back({p0, w0});

  std::set<JointPair> terminal_pairs;
  while (!worklist.empty()) {
    JointPair current = worklist.front();
    worklist.pop_front();
    if (joint.contains(current)) continue;
    auto& out = joint[current];
    const auto& [p, w] = current;

    if (plan.terminals.contains(p)) {
      terminal_pairs.insert(current);
      if (!problem.goals.contains(w))
        record(SolveClause::TerminalOffGoal, current, std::nullopt,
               "the plan terminates at '" + p + "' while the world is at non-goal '" + w + "'");
      continue;  // termination is mandatory
    }

    auto step = [&](const Label& l, const std::set<std::string>& psucc,
                    const std::set<std::string>& wsucc) {
      for (const auto& pn : psucc)
        for (const auto& wn : wsucc) {
          JointPair target{pn, wn};
          out.push_back({l, target});
          if (!joint.contains(target) && !parents.contains(target))
            parents.emplace(target, std::make_pair(current, l));
          worklist.push_back(target);
        }
    };

    if (P.kind_of(p) == Kind::Action) {
      for (const auto& a : P.out_labels(p)) {
        auto wsucc = W.successors(w, a);
        if (wsucc.empty()) {
          record(SolveClause::ActionNotEnabled, current, a,
                 "the plan offers action '" + a.name + "' at '" + p +
                     "' but the world does not enable it at '" + w + "'");
          continue;
        }
        step(a, P.successors(p, a), wsucc);
      }
    } else {
      std::set<Label> emitted =
          W.kind_of(w) == Kind::Observation ? W.out_labels(w) : std::set<Label>{};
      for (const auto& y : emitted) {
        auto psucc = P.successors(p, y);
        if (psucc.empty()) {
          record(SolveClause::ObservationUnhandled, current, y,
                 "the world can emit '" + y.name + "' at '" + w +
                     "' but the plan has no transition for it at '" + p + "'");
          continue;
        }
        step(y, psucc, W.successors(w, y));
      }
    }

    if (out.empty())
      record(SolveClause::NoForcedTermination, current, std::nullopt,
             "execution reaches the non-terminal dead end ('" + p + "','" + w + "')");
  }

  // every run must end, so the non-terminal part may not admit a cycle
  if (!first) {
    std::map<JointPair, int> state;  // 0 fresh, 1 on stack, 2 done
    for (const auto& [start, unused] : joint) {
      if (state[start]) continue;
      std::vector<std::pair<JointPair, std::size_t>> stack{{start, 0}};
      state[start] = 1;
      while (!stack.empty()) {
        auto& [node, next_index] = stack.back();
        const auto& edges = joint.at(node);
        if (next_index == edges.size()) {
          state[node] = 2;
          stack.pop_back();
          continue;
        }
        const JointEdge& e = edges[next_index++];
        int s = state[e.target];
        if (s == 1) {
          record(SolveClause::NoForcedTermination, e.target, e.label,
                 "execution can revisit ('" + e.target.first + "','" + e.target.second +
                     "') and so run forever");
          stack.clear();
          break;
        }
        if (s == 0) {
          state[e.target] = 1;
          stack.emplace_back(e.target, 0);
        }
      }
      if (first) break;
    }
  }

  return {!first.has_value(), first};
}

namespace {

// Joint system under the fixed runtime policy: the plan takes its
// lexicographically least offered action and ties resolve to the least
// successor, so only the adversary's observation choices branch.
struct RuntimeJoint {
  struct Node {
    bool terminal = false;
    bool at_goal = false;
    bool bad = false;  // blocked here, or terminal off goal
    std::optional<std::pair<Label, JointPair>> action_step;
    std::map<Label, JointPair> observation_steps;
  };
  std::map<JointPair, Node> nodes;
  std::set<JointPair> doomed;    // adversary can force blocked or off-goal
  std::set<JointPair> can_loop;  // adversary can keep the run going forever
};

RuntimeJoint build_runtime_joint(const Plan& plan, const PlanningProblem& problem,
                                 const JointPair& start) {
  const PGraph& P = plan.graph;
  const PGraph& W = problem.world;
  RuntimeJoint rj;
  std::deque<JointPair> worklist{start};
  while (!worklist.empty()) {
    JointPair current = worklist.front();
    worklist.pop_front();
    if (rj.nodes.contains(current)) continue;
    auto& node = rj.nodes[current];
    const auto& [p, w] = current;

    if (plan.terminals.contains(p)) {
      node.terminal = true;
      node.at_goal = problem.goals.contains(w);
      node.bad = !node.at_goal;
      continue;
    }
    if (P.kind_of(p) == Kind::Action) {
      auto offered = P.out_labels(p);
      if (offered.empty()) {
        node.bad = true;
        continue;
      }
      Label a = *offered.begin();
      auto wsucc = W.successors(w, a);
      auto psucc = P.successors(p, a);
      if (wsucc.empty() || psucc.empty()) {
        node.bad = true;
        continue;
      }
      JointPair target{*psucc.begin(), *wsucc.begin()};
      node.action_step = {a, target};
      worklist.push_back(target);
    } else {
      std::set<Label> emitted =
          W.kind_of(w) == Kind::Observation ? W.out_labels(w) : std::set<Label>{};
      if (emitted.empty()) {
        node.bad = true;
        continue;
      }
      for (const auto& y : emitted) {
        auto psucc = P.successors(p, y);
        if (psucc.empty()) {
          node.bad = true;  // the adversary may emit y and block the plan
          continue;
        }
        JointPair target{*psucc.begin(), *W.successors(w, y).begin()};
        node.observation_steps.emplace(y, target);
        worklist.push_back(target);
      }
    }
  }

  // doomed: least fixpoint from the bad nodes
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [pair, node] : rj.nodes) {
      if (rj.doomed.contains(pair)) continue;
      bool d = node.bad;
      if (!d && node.action_step) d = rj.doomed.contains(node.action_step->second);
      if (!d)
        for (const auto& [y, target] : node.observation_steps)
          if (rj.doomed.contains(target)) {
            d = true;
            break;
          }
      if (d) {
        rj.doomed.insert(pair);
        changed = true;
      }
    }
  }

  // must_end: least fixpoint over nodes whose runs end no matter what;
  // can_loop is its complement
  std::set<JointPair> must_end;
  changed = true;
  while (changed) {
    changed = false;
    for (auto& [pair, node] : rj.nodes) {
      if (must_end.contains(pair)) continue;
      bool ends;
      if (node.terminal || node.bad) {
        ends = true;
      } else if (node.action_step) {
        ends = must_end.contains(node.action_step->second);
      } else {
        ends = true;
        for (const auto& [y, target] : node.observation_steps)
          if (!must_end.contains(target)) {
            ends = false;
            break;
          }
      }
      if (ends) {
        must_end.insert(pair);
        changed = true;
      }
    }
  }
  for (const auto& [pair, node] : rj.nodes)
    if (!must_end.contains(pair)) rj.can_loop.insert(pair);
  return rj;
}

}  // namespace

Trace simulate(const Plan& plan, const PlanningProblem& problem, std::uint64_t seed,
               int max_steps, Adversary adversary) {
  const PGraph& P = plan.graph;
  const PGraph& W = problem.world;
  std::mt19937_64 rng(seed);
  Trace trace;

  if (P.initial.empty() || W.initial.empty()) {
    trace.outcome = TraceOutcome::Blocked;
    return trace;
  }
  std::string p = *P.initial.begin();
  std::string w = *W.initial.begin();

  RuntimeJoint rj;
  if (adversary == Adversary::Minimizing) rj = build_runtime_joint(plan, problem, {p, w});

  for (;;) {
    if (plan.terminals.contains(p)) {
      trace.outcome = problem.goals.contains(w) ? TraceOutcome::TerminatedAtGoal
                                                : TraceOutcome::TerminatedOffGoal;
      break;
    }
    if (static_cast<int>(trace.steps.size()) >= max_steps) {
      trace.outcome = TraceOutcome::StepLimit;
      break;
    }

    if (P.kind_of(p) == Kind::Action) {
      auto offered = P.out_labels(p);
      if (offered.empty()) {
        trace.outcome = TraceOutcome::Blocked;
        break;
      }
      Label a = *offered.begin();
      auto wsucc = W.successors(w, a);
      if (wsucc.empty()) {
        trace.outcome = TraceOutcome::Blocked;
        break;
      }
      trace.steps.push_back({p, w, a});
      p = *P.successors(p, a).begin();
      w = *wsucc.begin();
    } else {
      if (W.kind_of(w) != Kind::Observation) {
        trace.outcome = TraceOutcome::Blocked;
        break;
      }
      auto emitted = W.out_labels(w);
      if (emitted.empty()) {
        trace.outcome = TraceOutcome::Blocked;
        break;
      }
      std::vector<Label> choices(emitted.begin(), emitted.end());
      Label y = choices.front();
      if (adversary == Adversary::UniformRandom) {
        y = choices[rng() % choices.size()];
      } else {
        auto succ_of = [&](const Label& candidate) -> std::optional<JointPair> {
          auto psucc = P.successors(p, candidate);
          if (psucc.empty()) return std::nullopt;  // emitting this blocks the plan
          return JointPair{*psucc.begin(), *W.successors(w, candidate).begin()};
        };
        auto pick = [&](auto&& predicate) -> std::optional<Label> {
          for (const auto& candidate : choices)
            if (predicate(succ_of(candidate))) return candidate;
          return std::nullopt;
        };
        if (auto c = pick([&](const auto& s) { return !s || rj.doomed.contains(*s); }))
          y = *c;
        else if (auto c2 = pick([&](const auto& s) { return s && rj.can_loop.contains(*s); }))
          y = *c2;
      }
      trace.steps.push_back({p, w, y});
      auto psucc = P.successors(p, y);
      if (psucc.empty()) {
        trace.outcome = TraceOutcome::Blocked;
        break;
      }
      p = *psucc.begin();
      w = *W.successors(w, y).begin();
    }
  }
  trace.final_plan_vertex = p;
  trace.final_world_vertex = w;
  return trace;
}

bool check_divulgence_superset(const PGraph& divulged, const Plan& plan, int depth) {
  for (const auto& s : language_upto(plan.graph, depth))
    if (!language_contains(divulged, s)) return false;
  return true;
}

}  // namespace pgp
