#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgp/closure.hpp"
#include "pgp/labelmap.hpp"
#include "pgp/pgraph.hpp"
#include "pgp/planning.hpp"

namespace pgp {

// What the observer runs (the filter, over image symbols) and what it was
// told about the robot (the divulged graph, over world labels).
struct Observer {
  PGraph filter;
  PGraph divulged;
};

// A set of filter vertices the image stream reaches exactly.
struct BSet {
  std::set<std::string> members;
  auto operator<=>(const BSet&) const = default;
};

std::string to_string(const BSet& b);

struct Estimate {
  BSet b;
  std::set<std::string> world_states;
  // one consistent world execution whose image stream reaches b, when any
  std::optional<Execution> witness;
};

// How the filter state conditions the estimate. Exact keeps the executions
// whose image stream reaches exactly the vertices of b; Member keeps those
// reaching at least one vertex of b. The two agree whenever the filter is
// deterministic.
enum class EstimateMode { Exact, Member };

const char* estimate_mode_name(EstimateMode m);

// The four disclosure levels, most informative first: the exact plan, a set
// of plans containing it, every solving plan (the closure subgraph), or only
// the world itself.
struct DivulgenceCase {
  enum class Tag { ExactPlan, PlanSet, SomePlan, WorldOnly };
  Tag tag{};
  std::vector<Plan> plans;                    // ExactPlan uses plans[0]; PlanSet uses all
  std::optional<PlanningProblem> problem;     // SomePlan
  std::optional<PGraph> world;                // WorldOnly
};

const char* divulgence_tag_name(DivulgenceCase::Tag t);

PGraph divulged_from_case(const DivulgenceCase& c);

// Every exact reaching set of the filter within depth steps, i.e. the
// reachable vertices of its subset expansion.
std::set<BSet> exact_reaching_sets(const PGraph& filter, int depth);

// World states the observer considers possible given filter state b: states
// reached by some execution that is consistent with both the world and the
// divulged graph and whose image stream conditions on b under the chosen
// mode. Computed exactly by graph reachability on the product of the world,
// the divulged graph, and the lifted filter; depth is not involved.
Estimate estimate_world_states(const PGraph& world, const LabelMap& h, const Observer& obs,
                               const BSet& b, EstimateMode mode);

// One estimate per exact reaching set of the filter within depth steps.
// BSets realized by no consistent execution are skipped unless
// include_vacuous is set.
std::vector<Estimate> all_estimates(const PGraph& world, const LabelMap& h, const Observer& obs,
                                    EstimateMode mode, int depth, bool include_vacuous = false);

}  // namespace pgp
