#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgp/labelmap.hpp"
#include "pgp/observer.hpp"
#include "pgp/pgraph.hpp"
#include "pgp/planning.hpp"
#include "pgp/stipulation.hpp"

namespace pgp {

// One self-contained analysis input: the world and its goals, the robot's
// plan, the disclosure map and the observer's filter, the divulgence level,
// and the stipulation to check. Only the world section is mandatory;
// commands report which sections they need.
struct ScenarioFile {
  std::string name;
  std::set<Label> alphabet;
  PlanningProblem problem;
  std::optional<Plan> plan;
  std::vector<Plan> extra_plans;  // additional divulged plans for the plan-set case
  std::optional<LabelMap> labelmap;
  std::optional<PGraph> filter;
  DivulgenceCase::Tag divulgence = DivulgenceCase::Tag::ExactPlan;
  std::optional<std::string> stipulation_text;
  std::optional<Formula> stipulation;
};

// Parses and cross-checks a scenario. Schema violations raise SchemaError,
// unresolved ids raise DanglingReference, and label or image kind conflicts
// raise LabelKindClash; stipulation problems raise FormulaSyntaxError or
// UnknownAtom. origin names the input in error messages.
ScenarioFile parse_scenario(const std::string& json_text, const std::string& origin = "<string>");
ScenarioFile load_scenario(const std::string& path);

// Canonical rendering: sorted keys, sorted arrays, flags only when set.
// Saving a loaded file is a fixpoint after one normalization pass.
std::string save_scenario(const ScenarioFile& s);
void write_scenario(const ScenarioFile& s, const std::string& path);

// A bare graph file: an alphabet plus one graph, with optional goal marks.
// load_graph_file also accepts a scenario file, taking its world.
struct GraphFile {
  std::set<Label> alphabet;
  PGraph graph;
  std::set<std::string> goals;
};

GraphFile parse_graph_file(const std::string& json_text, const std::string& origin = "<string>");
GraphFile load_graph_file(const std::string& path);
std::string save_graph_file(const GraphFile& g);

// Assembles the divulgence payload a scenario prescribes for the given tag.
DivulgenceCase divulgence_from_scenario(const ScenarioFile& s, DivulgenceCase::Tag tag);

}  // namespace pgp
