#include "pgp/scenario.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "pgp/errors.hpp"

namespace pgp {

namespace {

using nlohmann::json;

struct Loader {
  const std::string& origin;

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(origin + ": " + what); }
  [[noreturn]] void dangling(const std::string& what) const {
    throw DanglingReference(origin + ": " + what);
  }
  [[noreturn]] void clash(const std::string& what) const {
    throw LabelKindClash(origin + ": " + what);
  }

  const json& member(const json& j, const std::string& key, const std::string& where) const {
    auto it = j.find(key);
    if (it == j.end()) fail(where + " is missing '" + key + "'");
    return *it;
  }

  std::string get_string(const json& j, const std::string& key, const std::string& where) const {
    const json& v = member(j, key, where);
    if (!v.is_string()) fail(where + ".'" + key + "' must be a string");
    return v.get<std::string>();
  }

  bool get_flag(const json& j, const std::string& key, const std::string& where) const {
    auto it = j.find(key);
    if (it == j.end()) return false;
    if (!it->is_boolean()) fail(where + ".'" + key + "' must be a boolean");
    return it->get<bool>();
  }

  void reject_unknown(const json& j, const std::set<std::string>& known,
                      const std::string& where) const {
    for (const auto& [key, value] : j.items())
      if (!known.contains(key)) fail(where + " has unknown key '" + key + "'");
  }

  std::set<Label> parse_alphabet(const json& j) const {
    if (!j.is_object()) fail("'alphabet' must be an object");
    reject_unknown(j, {"actions", "observations"}, "'alphabet'");
    std::set<Label> alphabet;
    std::set<std::string> names;
    auto side = [&](const char* key, Kind kind) {
      auto it = j.find(key);
      if (it == j.end()) return;
      if (!it->is_array()) fail(std::string("'alphabet.") + key + "' must be an array");
      for (const auto& entry : *it) {
        if (!entry.is_string()) fail(std::string("'alphabet.") + key + "' entries must be strings");
        std::string name = entry.get<std::string>();
        if (!names.insert(name).second)
          clash("label '" + name + "' appears on both sides of the alphabet");
        alphabet.insert(Label{kind, name});
      }
    };
    side("actions", Kind::Action);
    side("observations", Kind::Observation);
    return alphabet;
  }

  Label resolve_label(const std::set<Label>& alphabet, const std::string& name,
                      const std::string& where) const {
    for (Kind kind : {Kind::Action, Kind::Observation}) {
      auto it = alphabet.find(Label{kind, name});
      if (it != alphabet.end()) return *it;
    }
    dangling(where + " uses label '" + name + "', which is not in the alphabet");
  }

  // shared by world, plan, and filter sections; filters resolve labels
  // against map images instead of the alphabet, so label resolution is a
  // callback
  template <typename Resolve>
  PGraph parse_graph(const json& j, const std::string& where, const char* end_flag,
                     std::set<std::string>* flagged, Resolve resolve) const {
    if (!j.is_object()) fail("'" + where + "' must be an object");
    reject_unknown(j, {"vertices", "edges"}, "'" + where + "'");
    const json& vertices = member(j, "vertices", "'" + where + "'");
    const json& edges = member(j, "edges", "'" + where + "'");
    if (!vertices.is_array() || !edges.is_array())
      fail("'" + where + "' vertices and edges must be arrays");

    // pass 1: ids, declared kinds, flags
    std::map<std::string, std::optional<Kind>> declared;
    std::set<std::string> initial;
    for (const auto& v : vertices) {
      if (!v.is_object()) fail("'" + where + "' vertex entries must be objects");
      reject_unknown(v, {"id", "kind", "initial", end_flag}, "'" + where + "' vertex");
      std::string id = get_string(v, "id", "'" + where + "' vertex");
      if (declared.contains(id)) fail("'" + where + "' declares vertex '" + id + "' twice");
      std::optional<Kind> kind;
      if (auto it = v.find("kind"); it != v.end()) {
        std::string text = it->is_string() ? it->get<std::string>() : "";
        if (text == "action")
          kind = Kind::Action;
        else if (text == "observation")
          kind = Kind::Observation;
        else
          fail("'" + where + "' vertex '" + id + "' kind must be \"action\" or \"observation\"");
      }
      declared.emplace(id, kind);
      if (get_flag(v, "initial", "'" + where + "' vertex")) initial.insert(id);
      if (flagged && get_flag(v, end_flag, "'" + where + "' vertex")) flagged->insert(id);
    }

    // pass 2: edges, with labels resolved by the caller
    struct EdgeSpec {
      std::string src, dst;
      std::set<Label> labels;
    };
    std::vector<EdgeSpec> specs;
    std::map<std::string, std::set<Kind>> out_kinds;
    for (const auto& e : edges) {
      if (!e.is_object()) fail("'" + where + "' edge entries must be objects");
      reject_unknown(e, {"src", "dst", "labels"}, "'" + where + "' edge");
      EdgeSpec spec;
      spec.src = get_string(e, "src", "'" + where + "' edge");
      spec.dst = get_string(e, "dst", "'" + where + "' edge");
      for (const auto& end : {spec.src, spec.dst})
        if (!declared.contains(end))
          dangling("'" + where + "' edge endpoint '" + end + "' is not a declared vertex");
      const json& labels = member(e, "labels", "'" + where + "' edge");
      if (!labels.is_array() || labels.empty())
        fail("'" + where + "' edge " + spec.src + " -> " + spec.dst +
             " needs a nonempty label array");
      for (const auto& l : labels) {
        if (!l.is_string()) fail("'" + where + "' edge labels must be strings");
        for (const Label& resolved : resolve(l.get<std::string>(), "'" + where + "' edge")) {
          out_kinds[spec.src].insert(resolved.kind);
          spec.labels.insert(resolved);
        }
      }
      specs.push_back(std::move(spec));
    }

    // vertex kinds: declared wins, else inferred from outgoing labels
    PGraph g;
    for (const auto& [id, kind] : declared) {
      auto inferred = out_kinds.find(id);
      Kind resolved;
      if (kind) {
        resolved = *kind;
        if (inferred != out_kinds.end() && !inferred->second.contains(resolved) )
          clash("'" + where + "' vertex '" + id + "' is declared " + kind_name(resolved) +
                " but emits " + kind_name(*inferred->second.begin()) + " labels");
      } else if (inferred != out_kinds.end() && inferred->second.size() == 1) {
        resolved = *inferred->second.begin();
      } else if (inferred == out_kinds.end()) {
        resolved = Kind::Observation;  // leaves default to observation
      } else {
        clash("'" + where + "' vertex '" + id + "' emits both label kinds; declare its kind");
      }
      g.add_vertex(id, resolved);
    }
    g.initial = std::move(initial);
    for (auto& spec : specs) g.add_edge(spec.src, spec.dst, std::move(spec.labels));
    return g;
  }

  std::function<std::vector<Label>(const std::string&, const std::string&)> alphabet_resolver(
      const std::set<Label>& alphabet) const {
    return [this, &alphabet](const std::string& name, const std::string& where) {
      return std::vector<Label>{resolve_label(alphabet, name, where)};
    };
  }

  void check_graph(const PGraph& g, const std::string& where) const {
    ValidationReport report = validate(g);
    if (!report.ok()) fail("'" + where + "' is not well formed: " + report.summary());
  }
};

json graph_to_json(const PGraph& g, const std::set<std::string>& flagged, const char* end_flag,
                   bool explicit_kinds) {
  json vertices = json::array();
  for (const auto& [id, kind] : g.vertices) {
    json v;
    v["id"] = id;
    if (explicit_kinds) v["kind"] = kind_name(kind);
    if (g.initial.contains(id)) v["initial"] = true;
    if (flagged.contains(id)) v[end_flag] = true;
    vertices.push_back(std::move(v));
  }
  json edges = json::array();
  for (const auto& [edge, labels] : g.edges) {
    json e;
    e["src"] = edge.first;
    e["dst"] = edge.second;
    json names = json::array();
    for (const auto& l : labels) names.push_back(l.name);
    e["labels"] = std::move(names);
    edges.push_back(std::move(e));
  }
  json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text, const std::string& origin) {
  Loader loader{origin};
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    loader.fail(e.what());
  }
  if (!j.is_object()) loader.fail("top level must be an object");
  loader.reject_unknown(j,
                        {"schema", "name", "alphabet", "world", "plan", "extra_plans", "labelmap",
                         "filter", "divulgence", "stipulation"},
                        "scenario");
  const json& schema = loader.member(j, "schema", "scenario");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    loader.fail("unsupported schema version, expected 1");

  ScenarioFile s;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) loader.fail("'name' must be a string");
    s.name = it->get<std::string>();
  }
  s.alphabet = loader.parse_alphabet(loader.member(j, "alphabet", "scenario"));
  auto resolve = loader.alphabet_resolver(s.alphabet);

  // world
  {
    const json& world = loader.member(j, "world", "scenario");
    std::set<std::string> goals;
    s.problem.world = loader.parse_graph(world, "world", "goal", &goals, resolve);
    s.problem.goals = std::move(goals);
    loader.check_graph(s.problem.world, "world");
  }

  auto parse_plan = [&](const json& pj, const std::string& where) {
    Plan plan;
    std::set<std::string> terminals;
    plan.graph = loader.parse_graph(pj, where, "terminal", &terminals, resolve);
    plan.terminals = std::move(terminals);
    loader.check_graph(plan.graph, where);
    return plan;
  };
  if (auto it = j.find("plan"); it != j.end()) s.plan = parse_plan(*it, "plan");
  if (auto it = j.find("extra_plans"); it != j.end()) {
    if (!it->is_array()) loader.fail("'extra_plans' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      s.extra_plans.push_back(parse_plan((*it)[i], "extra_plans[" + std::to_string(i) + "]"));
  }

  // disclosure map
  if (auto it = j.find("labelmap"); it != j.end()) {
    if (!it->is_object()) loader.fail("'labelmap' must be an object");
    loader.reject_unknown(*it, {"map", "allow_shared_images"}, "'labelmap'");
    LabelMap h;
    h.allow_shared_images = loader.get_flag(*it, "allow_shared_images", "'labelmap'");
    const json& mapping = loader.member(*it, "map", "'labelmap'");
    if (!mapping.is_object()) loader.fail("'labelmap.map' must be an object");
    for (const auto& [name, image] : mapping.items()) {
      if (!image.is_string()) loader.fail("'labelmap.map' images must be strings");
      h.mapping.emplace(loader.resolve_label(s.alphabet, name, "'labelmap.map'"),
                        image.get<std::string>());
    }
    if (!h.allow_shared_images) {
      auto shared = h.kind_separation_violations();
      if (!shared.empty())
        loader.clash("image '" + *shared.begin() +
                     "' is shared between action and observation labels");
    }
    // the map must cover every label the graphs use
    std::set<Label> used;
    for (const auto& l : s.problem.world.alphabet()) used.insert(l);
    if (s.plan)
      for (const auto& l : s.plan->graph.alphabet()) used.insert(l);
    for (const auto& p : s.extra_plans)
      for (const auto& l : p.graph.alphabet()) used.insert(l);
    auto missing = h.unmapped(used);
    if (!missing.empty())
      loader.fail("'labelmap' does not map label '" + missing.begin()->name + "'");
    s.labelmap = std::move(h);
  }

  // observer filter, over the map's image space
  if (auto it = j.find("filter"); it != j.end()) {
    if (!s.labelmap) loader.fail("'filter' needs a 'labelmap' to define its labels");
    const LabelMap& h = *s.labelmap;
    auto image_resolve = [&](const std::string& name,
                             const std::string& where) -> std::vector<Label> {
      if (!h.image_space().contains(name))
        loader.dangling(where + " uses image '" + name + "', which the labelmap never produces");
      if (auto kind = h.image_kind(name)) return {Label{*kind, name}};
      return {Label{Kind::Action, name}, Label{Kind::Observation, name}};
    };
    s.filter = loader.parse_graph(*it, "filter", "goal", nullptr, image_resolve);
    ValidationReport report = validate(*s.filter);
    for (const auto& finding : report.findings)
      if (finding.code != "kind-mismatch" || !h.allow_shared_images)
        loader.fail("'filter' is not well formed: " + report.summary());
  }

  // divulgence level
  if (auto it = j.find("divulgence"); it != j.end()) {
    if (!it->is_object()) loader.fail("'divulgence' must be an object");
    loader.reject_unknown(*it, {"case"}, "'divulgence'");
    std::string tag = loader.get_string(*it, "case", "'divulgence'");
    if (tag == "I")
      s.divulgence = DivulgenceCase::Tag::ExactPlan;
    else if (tag == "II")
      s.divulgence = DivulgenceCase::Tag::PlanSet;
    else if (tag == "III")
      s.divulgence = DivulgenceCase::Tag::SomePlan;
    else if (tag == "IV")
      s.divulgence = DivulgenceCase::Tag::WorldOnly;
    else
      loader.fail("'divulgence.case' must be one of \"I\", \"II\", \"III\", \"IV\"");
  }

  // stipulation
  if (auto it = j.find("stipulation"); it != j.end()) {
    if (!it->is_string()) loader.fail("'stipulation' must be a string");
    s.stipulation_text = it->get<std::string>();
    s.stipulation = parse_formula(*s.stipulation_text);
    bind_formula(*s.stipulation, s.problem.world);
  }
  return s;
}

ScenarioFile load_scenario(const std::string& path) {
  return parse_scenario(read_file(path), path);
}

std::string save_scenario(const ScenarioFile& s) {
  json j;
  j["schema"] = 1;
  if (!s.name.empty()) j["name"] = s.name;

  json actions = json::array();
  json observations = json::array();
  for (const auto& l : s.alphabet)
    (l.kind == Kind::Action ? actions : observations).push_back(l.name);
  j["alphabet"]["actions"] = std::move(actions);
  j["alphabet"]["observations"] = std::move(observations);

  j["world"] = graph_to_json(s.problem.world, s.problem.goals, "goal", true);
  if (s.plan) j["plan"] = graph_to_json(s.plan->graph, s.plan->terminals, "terminal", true);
  if (!s.extra_plans.empty()) {
    json plans = json::array();
    for (const auto& p : s.extra_plans)
      plans.push_back(graph_to_json(p.graph, p.terminals, "terminal", true));
    j["extra_plans"] = std::move(plans);
  }
  if (s.labelmap) {
    json mapping;
    for (const auto& [label, image] : s.labelmap->mapping) mapping[label.name] = image;
    j["labelmap"]["map"] = std::move(mapping);
    if (s.labelmap->allow_shared_images) j["labelmap"]["allow_shared_images"] = true;
  }
  if (s.filter) j["filter"] = graph_to_json(*s.filter, {}, "goal", true);
  j["divulgence"]["case"] = divulgence_tag_name(s.divulgence);
  if (s.stipulation) j["stipulation"] = print_formula(*s.stipulation);

  return j.dump(2) + "\n";
}

void write_scenario(const ScenarioFile& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << save_scenario(s);
}

GraphFile parse_graph_file(const std::string& json_text, const std::string& origin) {
  Loader loader{origin};
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    loader.fail(e.what());
  }
  if (!j.is_object()) loader.fail("top level must be an object");
  if (j.contains("world")) {
    ScenarioFile s = parse_scenario(json_text, origin);
    GraphFile g;
    g.alphabet = std::move(s.alphabet);
    g.graph = std::move(s.problem.world);
    g.goals = std::move(s.problem.goals);
    return g;
  }
  loader.reject_unknown(j, {"schema", "alphabet", "graph"}, "graph file");
  const json& schema = loader.member(j, "schema", "graph file");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    loader.fail("unsupported schema version, expected 1");
  GraphFile g;
  g.alphabet = loader.parse_alphabet(loader.member(j, "alphabet", "graph file"));
  auto resolve = loader.alphabet_resolver(g.alphabet);
  g.graph =
      loader.parse_graph(loader.member(j, "graph", "graph file"), "graph", "goal", &g.goals, resolve);
  ValidationReport report = validate(g.graph);
  for (const auto& finding : report.findings)
    if (finding.code != "not-state-determined")
      loader.fail("'graph' is not well formed: " + report.summary());
  return g;
}

GraphFile load_graph_file(const std::string& path) {
  return parse_graph_file(read_file(path), path);
}

std::string save_graph_file(const GraphFile& g) {
  json j;
  j["schema"] = 1;
  json actions = json::array();
  json observations = json::array();
  for (const auto& l : g.alphabet)
    (l.kind == Kind::Action ? actions : observations).push_back(l.name);
  j["alphabet"]["actions"] = std::move(actions);
  j["alphabet"]["observations"] = std::move(observations);
  j["graph"] = graph_to_json(g.graph, g.goals, "goal", true);
  return j.dump(2) + "\n";
}

DivulgenceCase divulgence_from_scenario(const ScenarioFile& s, DivulgenceCase::Tag tag) {
  DivulgenceCase c;
  c.tag = tag;
  switch (tag) {
    case DivulgenceCase::Tag::ExactPlan:
      if (!s.plan) throw SchemaError("divulgence case I needs a 'plan' section");
      c.plans = {*s.plan};
      break;
    case DivulgenceCase::Tag::PlanSet:
      if (!s.plan) throw SchemaError("divulgence case II needs a 'plan' section");
      c.plans = {*s.plan};
      for (const auto& p : s.extra_plans) c.plans.push_back(p);
      break;
    case DivulgenceCase::Tag::SomePlan:
      c.problem = s.problem;
      break;
    case DivulgenceCase::Tag::WorldOnly:
      c.world = s.problem.world;
      break;
  }
  return c;
}

}  // namespace pgp
