#include "pgp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "pgp/closure.hpp"
#include "pgp/dot.hpp"
#include "pgp/errors.hpp"
#include "pgp/observer.hpp"
#include "pgp/scenario.hpp"
#include "pgp/stipulation.hpp"
#include "pgp/util.hpp"

namespace pgp::cli {

namespace {

DivulgenceCase::Tag parse_case(const std::string& text) {
  if (text == "I") return DivulgenceCase::Tag::ExactPlan;
  if (text == "II") return DivulgenceCase::Tag::PlanSet;
  if (text == "III") return DivulgenceCase::Tag::SomePlan;
  if (text == "IV") return DivulgenceCase::Tag::WorldOnly;
  throw Error("unknown divulgence case '" + text + "', expected I, II, III, or IV");
}

EstimateMode parse_mode(const std::string& text) {
  if (text == "exact") return EstimateMode::Exact;
  if (text == "member") return EstimateMode::Member;
  throw Error("unknown estimate mode '" + text + "', expected exact or member");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

struct CheckArgs {
  std::string path;
  std::string mode = "exact";
  std::string divulgence;
  int depth = 0;
  bool include_vacuous = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  ScenarioFile s = load_scenario(args.path);
  if (!s.labelmap) throw Error(args.path + " has no 'labelmap' section");
  if (!s.filter) throw Error(args.path + " has no 'filter' section");
  if (!s.stipulation) throw Error(args.path + " has no 'stipulation' section");
  DivulgenceCase::Tag tag = args.divulgence.empty() ? s.divulgence : parse_case(args.divulgence);
  EstimateMode mode = parse_mode(args.mode);
  int depth = args.depth > 0 ? args.depth : default_depth();

  PGraph divulged = divulged_from_case(divulgence_from_scenario(s, tag));
  if (s.plan && !check_divulgence_superset(divulged, *s.plan, depth))
    out << "note: the divulged behavior does not cover the plan to depth " << depth << "\n";
  Observer observer{*s.filter, divulged};
  Verdict verdict = check_stipulation(s.problem, *s.labelmap, observer, *s.stipulation, mode,
                                      depth, args.include_vacuous);

  out << "scenario: " << (s.name.empty() ? args.path : s.name) << "\n";
  out << "divulgence: case " << divulgence_tag_name(tag) << ", mode " << estimate_mode_name(mode)
      << ", depth " << depth << "\n";
  out << "stipulation: " << print_formula(*s.stipulation) << "\n";
  out << "estimates checked: " << verdict.estimates_checked << "\n";
  for (const auto& violation : verdict.violations) {
    out << "violated at " << to_string(violation.estimate.b) << ": estimate {"
        << join(std::vector<std::string>(violation.estimate.world_states.begin(),
                                         violation.estimate.world_states.end()),
                ",")
        << "}";
    if (violation.estimate.witness)
      out << " after '" << to_string(*violation.estimate.witness) << "'";
    out << "\n";
    for (const auto& [atom, value] : violation.atom_values)
      out << "    " << atom << " = " << (value ? "true" : "false") << "\n";
  }
  out << "result: " << (verdict.satisfied ? "SATISFIED" : "VIOLATED") << "\n";
  return verdict.satisfied ? 0 : 1;
}

struct ClosureArgs {
  std::string path;
  std::string dot_path;
  std::string json_path;
  bool count_start_edges = false;
};

int cmd_closure(const ClosureArgs& args, std::ostream& out) {
  ScenarioFile s = load_scenario(args.path);
  ClosureOptions options;
  options.count_edges_to_initial = args.count_start_edges;
  ClosureResult closure = plan_closure(s.problem, options);

  out << "expanded world: " << closure.wprime.vertices.size() << " vertices, "
      << closure.wprime.edges.size() << " edges\n";
  for (const auto& [id, color] : closure.coloring) {
    out << "  " << id << ": " << color_name(color);
    if (auto it = closure.policy.find(id); it != closure.policy.end())
      out << ", do " << it->second.name;
    if (closure.goals_prime.contains(id)) out << ", goal";
    out << "\n";
  }
  if (closure.no_solving_plan)
    out << "no solving plan exists\n";
  else
    out << "solvable: kernel has " << closure.pstar.vertices.size() << " vertices, "
        << closure.pstar.edges.size() << " edges\n";

  if (!args.dot_path.empty()) {
    DotOptions dot;
    dot.name = s.name.empty() ? "closure" : s.name;
    dot.coloring = &closure.coloring;
    dot.goal_vertices = closure.goals_prime;
    dot.policy = &closure.policy;
    write_text(args.dot_path, to_dot(closure.wprime, dot), out);
  }
  if (!args.json_path.empty()) {
    GraphFile g;
    g.graph = closure.pstar;
    g.goals = closure.pstar_terminals;
    for (const auto& l : closure.pstar.alphabet()) g.alphabet.insert(l);
    write_text(args.json_path, save_graph_file(g), out);
  }
  return 0;
}

struct SdeArgs {
  std::string path;
  std::string json_path;
  std::string dot_path;
};

int cmd_sde(const SdeArgs& args, std::ostream& out) {
  GraphFile input = load_graph_file(args.path);
  SdeResult sde = to_state_determined(input.graph);
  out << "input: " << input.graph.vertices.size() << " vertices"
      << (is_state_determined(input.graph) ? " (already state determined)" : "") << "\n";
  out << "expanded: " << sde.graph.vertices.size() << " vertices, " << sde.graph.edges.size()
      << " edges\n";
  for (const auto& [id, members] : sde.members)
    out << "  " << id << " = {"
        << join(std::vector<std::string>(members.begin(), members.end()), ",") << "}\n";
  if (!sde.mixed_kind_subsets.empty())
    out << "warning: " << sde.mixed_kind_subsets.size() << " subset(s) mix vertex kinds\n";

  if (!args.json_path.empty()) {
    GraphFile g;
    g.graph = sde.graph;
    for (const auto& l : sde.graph.alphabet()) g.alphabet.insert(l);
    for (const auto& [id, members] : sde.members) {
      bool all_goal = !members.empty();
      for (const auto& m : members) all_goal = all_goal && input.goals.contains(m);
      if (all_goal) g.goals.insert(id);
    }
    write_text(args.json_path, save_graph_file(g), out);
  }
  if (!args.dot_path.empty()) write_text(args.dot_path, to_dot(sde.graph), out);
  return 0;
}

struct SimulateArgs {
  std::string path;
  unsigned long long seed = 0;
  std::size_t steps = 64;
  std::string adversary = "uniform";
  std::string mode = "exact";
  std::string divulgence;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  ScenarioFile s = load_scenario(args.path);
  if (!s.plan) throw Error(args.path + " has no 'plan' section");
  Adversary adversary;
  if (args.adversary == "uniform")
    adversary = Adversary::UniformRandom;
  else if (args.adversary == "minimizing")
    adversary = Adversary::Minimizing;
  else
    throw Error("unknown adversary '" + args.adversary + "', expected uniform or minimizing");

  Trace trace = simulate(*s.plan, s.problem, args.seed, args.steps, adversary);

  // with observer sections present, narrate what the observer concludes as
  // the emitted stream unfolds
  std::optional<Observer> observer;
  EstimateMode mode = parse_mode(args.mode);
  if (s.labelmap && s.filter) {
    DivulgenceCase::Tag tag = args.divulgence.empty() ? s.divulgence : parse_case(args.divulgence);
    observer = Observer{*s.filter, divulged_from_case(divulgence_from_scenario(s, tag))};
  }

  Execution so_far;
  bool ever_violated = false;
  auto narrate = [&]() {
    if (!observer) return;
    Execution image = image_of_execution(*s.labelmap, so_far);
    BSet b{reached_vertices(observer->filter, image)};
    auto states =
        estimate_world_states(s.problem.world, *s.labelmap, *observer, b, mode).world_states;
    out << "    observer sees '" << to_string(image) << "', holds " << to_string(b) << ", estimate {"
        << join(std::vector<std::string>(states.begin(), states.end()), ",") << "}";
    if (s.stipulation) {
      bool ok = states.empty() || eval_formula(*s.stipulation, states);
      ever_violated = ever_violated || !ok;
      out << (ok ? "" : "  <- stipulation violated");
    }
    out << "\n";
  };

  out << "seed " << args.seed << ", adversary " << args.adversary << "\n";
  narrate();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    out << i + 1 << ". " << kind_name(step.emitted.kind) << " " << step.emitted.name << " (plan "
        << step.plan_vertex << ", world " << step.world_vertex << ")\n";
    so_far.push_back(step.emitted);
    narrate();
  }
  out << "outcome: " << trace_outcome_name(trace.outcome) << " at plan "
      << trace.final_plan_vertex << ", world " << trace.final_world_vertex << "\n";
  if (observer && s.stipulation)
    out << "stipulation along this run: " << (ever_violated ? "VIOLATED" : "SATISFIED") << "\n";
  return 0;
}

struct DotArgs {
  std::string path;
  std::string what = "world";
  std::string out_path;
  bool color = false;
};

int cmd_dot(const DotArgs& args, std::ostream& out) {
  ScenarioFile s = load_scenario(args.path);
  DotOptions options;
  options.name = s.name.empty() ? args.what : s.name;
  std::string text;
  if (args.what == "world") {
    options.goal_vertices = s.problem.goals;
    text = to_dot(s.problem.world, options);
  } else if (args.what == "plan") {
    if (!s.plan) throw Error(args.path + " has no 'plan' section");
    options.terminal_vertices = s.plan->terminals;
    text = to_dot(s.plan->graph, options);
  } else if (args.what == "filter") {
    if (!s.filter) throw Error(args.path + " has no 'filter' section");
    text = to_dot(*s.filter, options);
  } else if (args.what == "divulged") {
    text = to_dot(divulged_from_case(divulgence_from_scenario(s, s.divulgence)), options);
  } else if (args.what == "closure") {
    ClosureResult closure = plan_closure(s.problem);
    options.goal_vertices = closure.goals_prime;
    if (args.color) options.coloring = &closure.coloring;
    options.policy = &closure.policy;
    text = to_dot(closure.wprime, options);
  } else {
    throw Error("unknown graph '" + args.what +
                "', expected world, plan, filter, divulged, or closure");
  }
  write_text(args.out_path, text, out);
  return 0;
}

struct FmtArgs {
  std::string path;
  bool in_place = false;
};

int cmd_fmt(const FmtArgs& args, std::ostream& out) {
  ScenarioFile s = load_scenario(args.path);
  if (args.in_place)
    write_scenario(s, args.path);
  else
    out << save_scenario(s);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plan divulgence and observer estimate analysis"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "check a scenario's stipulation against the observer");
  check->add_option("scenario", check_args.path, "scenario file")->required();
  check->add_option("--mode", check_args.mode, "estimate mode: exact or member");
  check->add_option("--case", check_args.divulgence, "divulgence case: I, II, III, or IV");
  check->add_option("--depth", check_args.depth, "observation stream depth bound");
  check->add_flag("--include-vacuous", check_args.include_vacuous,
                  "also check estimate sets no stream realizes");

  ClosureArgs closure_args;
  auto* closure = app.add_subcommand("closure", "compute the solvable kernel of the world");
  closure->add_option("scenario", closure_args.path, "scenario file")->required();
  closure->add_option("--dot", closure_args.dot_path, "write the colored expansion as DOT");
  closure->add_option("--json", closure_args.json_path, "write the kernel as a graph file");
  closure->add_flag("--count-start-edges", closure_args.count_start_edges,
                    "let edges back to the start vertex justify progress");

  SdeArgs sde_args;
  auto* sde = app.add_subcommand("sde", "expand a graph to its state determined form");
  sde->add_option("graph", sde_args.path, "graph or scenario file")->required();
  sde->add_option("--json", sde_args.json_path, "write the expansion as a graph file");
  sde->add_option("--dot", sde_args.dot_path, "write the expansion as DOT");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "run the plan against the world");
  simulate->add_option("scenario", simulate_args.path, "scenario file")->required();
  simulate->add_option("--seed", simulate_args.seed, "random seed");
  simulate->add_option("--steps", simulate_args.steps, "step limit");
  simulate->add_option("--adversary", simulate_args.adversary,
                       "environment behavior: uniform or minimizing");
  simulate->add_option("--mode", simulate_args.mode, "estimate mode: exact or member");
  simulate->add_option("--case", simulate_args.divulgence, "divulgence case: I, II, III, or IV");

  DotArgs dot_args;
  auto* dot = app.add_subcommand("dot", "render a scenario graph as DOT");
  dot->add_option("scenario", dot_args.path, "scenario file")->required();
  dot->add_option("--what", dot_args.what, "world, plan, filter, divulged, or closure");
  dot->add_option("--out", dot_args.out_path, "output file, '-' for stdout");
  dot->add_flag("--color", dot_args.color, "fill closure vertices by their color");

  FmtArgs fmt_args;
  auto* fmt = app.add_subcommand("fmt", "rewrite a scenario in canonical form");
  fmt->add_option("scenario", fmt_args.path, "scenario file")->required();
  fmt->add_flag("-i,--in-place", fmt_args.in_place, "rewrite the file instead of printing");

  try {
    // CLI11 parses argv-style reversed vectors
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, out);
    if (closure->parsed()) return cmd_closure(closure_args, out);
    if (sde->parsed()) return cmd_sde(sde_args, out);
    if (simulate->parsed()) return cmd_simulate(simulate_args, out);
    if (dot->parsed()) return cmd_dot(dot_args, out);
    if (fmt->parsed()) return cmd_fmt(fmt_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace pgp::cli
