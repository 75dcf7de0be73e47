#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgp/pgraph.hpp"

namespace pgp {

// A world together with the vertices the robot must stop in. The world is
// expected to be state-determined; validate() reports when it is not.
struct PlanningProblem {
  PGraph world;
  std::set<std::string> goals;
  ValidationReport validate() const;
};

// A p-graph executed jointly with the world, plus the plan vertices at which
// execution terminates. Termination is mandatory: entering a terminal vertex
// ends the run.
struct Plan {
  PGraph graph;
  std::set<std::string> terminals;
  ValidationReport validate() const;
};

enum class SolveClause {
  ActionNotEnabled,       // plan offers an action the world does not enable
  ObservationUnhandled,   // world emits an observation the plan cannot take
  TerminalOffGoal,        // execution terminates outside the goal set
  NoForcedTermination,    // a run can block or go on forever
};

const char* solve_clause_name(SolveClause c);

struct SolveDiagnosis {
  SolveClause clause{};
  std::string plan_vertex;
  std::string world_vertex;
  std::optional<Label> label;  // offending action or observation, if any
  Execution path;              // joint execution reaching the violation
  std::string message;
};

struct SolveReport {
  bool solves = false;
  std::optional<SolveDiagnosis> diagnosis;
};

// Whether the plan is guaranteed to reach a goal vertex and stop there, no
// matter how the world resolves its observations. Checked on the reachable
// joint product of plan and world:
//   (a) every plan-offered action is enabled in the world,
//   (b) every world-emittable observation has a plan transition,
//   (c) terminal plan vertices are only ever paired with goal vertices,
//   (d) the non-terminal part of the joint product is acyclic and every
//       maximal path ends in a terminal pair.
// The diagnosis reports the first violated clause with a witness execution.
SolveReport solves(const Plan& plan, const PlanningProblem& problem);

enum class Adversary { UniformRandom, Minimizing };

enum class TraceOutcome { TerminatedAtGoal, TerminatedOffGoal, Blocked, StepLimit };

const char* trace_outcome_name(TraceOutcome o);

struct TraceStep {
  std::string plan_vertex;
  std::string world_vertex;
  Label emitted;
};

struct Trace {
  std::vector<TraceStep> steps;
  TraceOutcome outcome{};
  std::string final_plan_vertex;
  std::string final_world_vertex;
  Execution execution() const;
};

// Joint walk of plan and world, deterministic for a given seed. At action
// vertices the plan's lexicographically least offered action is taken; at
// observation vertices the adversary picks the emitted label, either
// uniformly at random or minimizing (steering into blocked, off-goal, or
// non-terminating continuations whenever one is forceable).
Trace simulate(const Plan& plan, const PlanningProblem& problem, std::uint64_t seed,
               int max_steps, Adversary adversary = Adversary::UniformRandom);

// Whether every plan execution of length <= depth is in the language of the
// divulged graph.
bool check_divulgence_superset(const PGraph& divulged, const Plan& plan, int depth);

}  // namespace pgp
