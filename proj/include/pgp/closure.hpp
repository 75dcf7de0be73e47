#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgp/graph_ops.hpp"
#include "pgp/pgraph.hpp"
#include "pgp/planning.hpp"

namespace pgp {

enum class Color { Green, Red, Gray };

const char* color_name(Color c);

struct ClosureOptions {
  // When false (default), an edge whose target is the initial vertex of the
  // expanded world does not by itself justify coloring its source green.
  // Enabling this treats such edges like any other during green propagation;
  // both behaviors preserve the closure language laws, and they differ only
  // on worlds with edges back into the initial vertex.
  bool count_edges_to_initial = false;
};

struct ClosureResult {
  // subset expansion of the problem world, and its goal reading: a subset
  // vertex is a goal iff all of its members are goal vertices
  PGraph wprime;
  std::map<std::string, std::set<std::string>> members;
  std::set<std::string> goals_prime;

  std::map<std::string, Color> coloring;
  // action choice recorded when an action vertex turns green; following it
  // reaches the goal set within |V(wprime)| steps from any green vertex
  std::map<std::string, Label> policy;

  // subgraph of wprime induced by the green vertices; its initial set is
  // empty (and no_solving_plan is set) when no initial vertex turned green
  PGraph pstar;
  std::set<std::string> pstar_terminals;  // green goal vertices
  bool no_solving_plan = false;

  Plan pstar_plan() const;
};

// Backward coloring fixpoint over the expanded world. Goal subsets start
// green and non-goal dead ends start red; a gray action vertex turns green
// as soon as one action reaches a green vertex (recording that action) and
// red when all of its successors are red; a gray observation vertex turns
// green when all of its successors are green and red as soon as one is red.
// Vertices still gray at the fixpoint are kept out of the result. Mixed-kind
// subset vertices raise MixedKindSubset.
ClosureResult plan_closure(const PlanningProblem& problem, const ClosureOptions& options = {});

// A plan that performs the skeleton execution and finishes the job: it
// follows s through the closure subgraph, and at any off-skeleton
// observation, and at the end of s, it applies the recorded policy until the
// goal set is reached, where it terminates. Throws SkeletonNotInClosure when
// s is not in the closure language. The result solves the problem and has s
// in its language.
Plan synthesize_plan(const Execution& skeleton, const ClosureResult& closure);

struct EnumerationOptions {
  std::size_t max_plan_vertices = 64;
  std::size_t max_assignments = 1u << 20;  // search budget, see BudgetExceeded
};

// Every plan obtained by fixing one offered action per action vertex of the
// expanded world and a stop/continue decision per goal vertex, restricted to
// the part reachable under those choices and filtered by solves(). The
// result is duplicate-free and deterministic.
std::vector<Plan> enumerate_solving_plans(const PlanningProblem& problem,
                                          const EnumerationOptions& options = {});

// Bounded language equality between the closure subgraph and the union of
// solving plans: enumerated plans must stay within the closure language, and
// every maximal execution of the closure subgraph must be generated by a
// plan synthesized from it (which must itself solve the problem).
bool lemma1_check(const PlanningProblem& problem, int depth,
                  const ClosureOptions& options = {},
                  const EnumerationOptions& enumeration = {});

}  // namespace pgp
