#pragma once

// Hand-built worlds, plans, and observer pieces shared by the test suites.
// Everything here is constructed in memory; the JSON files under fixtures/
// mirror wheelchair_fixture() and the loaders are tested against both.

#include <string>

#include "pgp/labelmap.hpp"
#include "pgp/pgraph.hpp"
#include "pgp/planning.hpp"

namespace fixtures {

using pgp::act;
using pgp::Kind;
using pgp::LabelMap;
using pgp::obs;
using pgp::PGraph;
using pgp::Plan;
using pgp::PlanningProblem;

inline std::string path(const std::string& name) {
  return std::string(PGP_FIXTURE_DIR) + "/" + name;
}

// Single action into an observation fork: one branch reaches the goal, the
// other strands the robot in a non-goal dead end, so nothing can ensure
// success.
inline PlanningProblem dead_leaf_problem() {
  PlanningProblem p;
  p.world.add_vertex("a0", Kind::Action);
  p.world.add_vertex("o0", Kind::Observation);
  p.world.add_vertex("g", Kind::Action);
  p.world.add_vertex("d", Kind::Action);
  p.world.initial = {"a0"};
  p.world.add_edge("a0", "o0", act("u1"));
  p.world.add_edge("o0", "g", obs("y1"));
  p.world.add_edge("o0", "d", obs("y2"));
  p.goals = {"g"};
  return p;
}

// The unlucky observation branch loops back to the start instead of dead
// ending; the world can starve the robot forever, so again nothing solves it.
inline PlanningProblem loop_problem() {
  PlanningProblem p;
  p.world.add_vertex("a0", Kind::Action);
  p.world.add_vertex("o0", Kind::Observation);
  p.world.add_vertex("g", Kind::Action);
  p.world.initial = {"a0"};
  p.world.add_edge("a0", "o0", act("u1"));
  p.world.add_edge("o0", "g", obs("y1"));
  p.world.add_edge("o0", "a0", obs("y2"));
  p.goals = {"g"};
  return p;
}

// Like loop_problem but the second branch makes progress: a second action
// always reaches the goal, so the whole world is solvable.
inline PlanningProblem solvable_problem() {
  PlanningProblem p;
  p.world.add_vertex("a0", Kind::Action);
  p.world.add_vertex("o0", Kind::Observation);
  p.world.add_vertex("a1", Kind::Action);
  p.world.add_vertex("o1", Kind::Observation);
  p.world.add_vertex("g", Kind::Action);
  p.world.initial = {"a0"};
  p.world.add_edge("a0", "o0", act("u1"));
  p.world.add_edge("o0", "g", obs("y1"));
  p.world.add_edge("o0", "a1", obs("y2"));
  p.world.add_edge("a1", "o1", act("u2"));
  p.world.add_edge("o1", "g", obs("y3"));
  p.goals = {"g"};
  return p;
}

// The straightforward plan for solvable_problem: push on, stop at the goal.
inline Plan solvable_plan() {
  Plan plan;
  plan.graph.add_vertex("n0", Kind::Action);
  plan.graph.add_vertex("n1", Kind::Observation);
  plan.graph.add_vertex("n2", Kind::Action);
  plan.graph.add_vertex("n3", Kind::Observation);
  plan.graph.add_vertex("ng", Kind::Action);
  plan.graph.initial = {"n0"};
  plan.graph.add_edge("n0", "n1", act("u1"));
  plan.graph.add_edge("n1", "ng", obs("y1"));
  plan.graph.add_edge("n1", "n2", obs("y2"));
  plan.graph.add_edge("n2", "n3", act("u2"));
  plan.graph.add_edge("n3", "ng", obs("y3"));
  plan.terminals = {"ng"};
  return plan;
}

// Conflates the two actions of solvable_problem into one image; observations
// stay distinguishable.
inline LabelMap solvable_labelmap() {
  LabelMap h;
  h.mapping[act("u1")] = "a";
  h.mapping[act("u2")] = "a";
  h.mapping[obs("y1")] = "y1";
  h.mapping[obs("y2")] = "y2";
  h.mapping[obs("y3")] = "y3";
  return h;
}

// Deterministic tracker of solvable_problem's image streams.
inline PGraph solvable_filter() {
  PGraph f;
  f.add_vertex("j0", Kind::Action);
  f.add_vertex("j1", Kind::Observation);
  f.add_vertex("j2", Kind::Action);
  f.add_vertex("j3", Kind::Action);
  f.add_vertex("j4", Kind::Observation);
  f.initial = {"j0"};
  f.add_edge("j0", "j1", act("a"));
  f.add_edge("j1", "j2", obs("y1"));
  f.add_edge("j1", "j3", obs("y2"));
  f.add_edge("j3", "j4", act("a"));
  f.add_edge("j4", "j2", obs("y3"));
  return f;
}

// A world whose two observation outcomes the observer cannot tell apart: both
// observations share one image, which makes the filter nondeterministic and
// splits the exact and member estimate modes.
struct ConflatedFixture {
  PlanningProblem problem;
  LabelMap h;
  PGraph filter;
};

inline ConflatedFixture conflated_fixture() {
  ConflatedFixture f;
  f.problem.world.add_vertex("a0", Kind::Action);
  f.problem.world.add_vertex("o0", Kind::Observation);
  f.problem.world.add_vertex("s1", Kind::Action);
  f.problem.world.add_vertex("s2", Kind::Action);
  f.problem.world.initial = {"a0"};
  f.problem.world.add_edge("a0", "o0", act("u1"));
  f.problem.world.add_edge("o0", "s1", obs("y1"));
  f.problem.world.add_edge("o0", "s2", obs("y2"));
  f.problem.goals = {"s1", "s2"};

  f.h.mapping[act("u1")] = "a";
  f.h.mapping[obs("y1")] = "o";
  f.h.mapping[obs("y2")] = "o";

  f.filter.add_vertex("k0", Kind::Action);
  f.filter.add_vertex("k1", Kind::Observation);
  f.filter.add_vertex("k2", Kind::Action);
  f.filter.add_vertex("k3", Kind::Action);
  f.filter.initial = {"k0"};
  f.filter.add_edge("k0", "k1", act("a"));
  f.filter.add_edge("k1", "k2", obs("o"));
  f.filter.add_edge("k1", "k3", obs("o"));
  return f;
}

// A solvable world with an edge back into its start vertex. The coloring
// proviso about start-directed edges changes the closure language here (see
// test_closure), while the language-equality check holds either way.
inline PlanningProblem backloop_problem() {
  PlanningProblem p;
  p.world.add_vertex("i0", Kind::Action);
  p.world.add_vertex("o1", Kind::Observation);
  p.world.add_vertex("a2", Kind::Action);
  p.world.add_vertex("oR", Kind::Observation);
  p.world.add_vertex("oG", Kind::Observation);
  p.world.add_vertex("g", Kind::Action);
  p.world.initial = {"i0"};
  p.world.add_edge("i0", "o1", act("u_go"));
  p.world.add_edge("i0", "oG", act("u_fin"));
  p.world.add_edge("o1", "a2", obs("y_back"));
  p.world.add_edge("a2", "oR", act("u_ret"));
  p.world.add_edge("oR", "i0", obs("y_home"));
  p.world.add_edge("oG", "g", obs("y_done"));
  p.goals = {"g"};
  return p;
}

// A plan for backloop_problem that takes the detour once before finishing.
// It solves the problem, yet its language leaves the default closure
// subgraph, which is exactly the divergence the proviso option documents.
inline Plan backloop_detour_plan() {
  Plan plan;
  plan.graph.add_vertex("n0", Kind::Action);
  plan.graph.add_vertex("n1", Kind::Observation);
  plan.graph.add_vertex("n2", Kind::Action);
  plan.graph.add_vertex("n3", Kind::Observation);
  plan.graph.add_vertex("n4", Kind::Action);
  plan.graph.add_vertex("n5", Kind::Observation);
  plan.graph.add_vertex("n6", Kind::Action);
  plan.graph.initial = {"n0"};
  plan.graph.add_edge("n0", "n1", act("u_go"));
  plan.graph.add_edge("n1", "n2", obs("y_back"));
  plan.graph.add_edge("n2", "n3", act("u_ret"));
  plan.graph.add_edge("n3", "n4", obs("y_home"));
  plan.graph.add_edge("n4", "n5", act("u_fin"));
  plan.graph.add_edge("n5", "n6", obs("y_done"));
  plan.terminals = {"n6"};
  return plan;
}

// The wheelchair outing scenario: a guest occupies exactly one bedroom (the
// master M or one of B1, B2), the chair polls motion sensors to find a safe
// route, then drives to a yard and parks. World states encode what the chair
// has learned; gM/gB1/gB2 are the "guest located" states the stipulation
// talks about.
struct WheelchairFixture {
  PlanningProblem problem;
  Plan plan;        // poll the master bedroom, then route on the answer
  Plan alternate;   // poll bedroom B1 first; divulged alongside in case II
  LabelMap h;       // all motions look alike, sensor readings stay distinct
  PGraph filter;    // deterministic tracker of the image streams
  std::string stipulation = "!(gM & !gB1 & !gB2)";
};

inline WheelchairFixture wheelchair_fixture() {
  WheelchairFixture f;

  PGraph& w = f.problem.world;
  w.add_vertex("start", Kind::Action);
  w.add_vertex("chkM", Kind::Observation);
  w.add_vertex("chkB1", Kind::Observation);
  w.add_vertex("gM", Kind::Action);
  w.add_vertex("gB1", Kind::Action);
  w.add_vertex("gB2", Kind::Action);
  w.add_vertex("fM", Kind::Action);
  w.add_vertex("fB1", Kind::Action);
  w.add_vertex("chkM2", Kind::Observation);
  w.add_vertex("chkB2", Kind::Observation);
  w.add_vertex("arrived", Kind::Observation);
  w.add_vertex("done", Kind::Action);
  w.initial = {"start"};
  w.add_edge("start", "chkM", act("pollM"));
  w.add_edge("start", "chkB1", act("pollB1"));
  w.add_edge("chkM", "gM", obs("occ"));
  w.add_edge("chkM", "fM", obs("free"));
  w.add_edge("chkB1", "gB1", obs("occ"));
  w.add_edge("chkB1", "fB1", obs("free"));
  w.add_edge("gM", "arrived", act("goFront"));
  w.add_edge("fM", "arrived", act("goBack"));
  w.add_edge("gB1", "arrived", act("goBack"));
  w.add_edge("gB2", "arrived", act("goBack"));
  w.add_edge("fB1", "chkM2", act("pollM"));
  w.add_edge("fB1", "chkB2", act("pollB2"));
  w.add_edge("chkM2", "gM", obs("occ"));
  w.add_edge("chkM2", "gB2", obs("free"));
  w.add_edge("chkB2", "gB2", obs("occ"));
  w.add_edge("chkB2", "gM", obs("free"));
  w.add_edge("arrived", "done", obs("ok"));
  f.problem.goals = {"done"};

  PGraph& p = f.plan.graph;
  p.add_vertex("p0", Kind::Action);
  p.add_vertex("p1", Kind::Observation);
  p.add_vertex("p2", Kind::Action);
  p.add_vertex("p3", Kind::Observation);
  p.add_vertex("p4", Kind::Action);
  p.add_vertex("p5", Kind::Action);
  p.add_vertex("p6", Kind::Observation);
  p.add_vertex("p7", Kind::Action);
  p.initial = {"p0"};
  p.add_edge("p0", "p1", act("pollM"));
  p.add_edge("p1", "p2", obs("occ"));
  p.add_edge("p1", "p5", obs("free"));
  p.add_edge("p2", "p3", act("goFront"));
  p.add_edge("p3", "p4", obs("ok"));
  p.add_edge("p5", "p6", act("goBack"));
  p.add_edge("p6", "p7", obs("ok"));
  f.plan.terminals = {"p4", "p7"};

  PGraph& q = f.alternate.graph;
  q.add_vertex("q0", Kind::Action);
  q.add_vertex("q1", Kind::Observation);
  q.add_vertex("q2", Kind::Action);
  q.add_vertex("q3", Kind::Observation);
  q.add_vertex("q4", Kind::Action);
  q.add_vertex("q5", Kind::Action);
  q.add_vertex("q6", Kind::Observation);
  q.add_vertex("q7", Kind::Action);
  q.add_vertex("q8", Kind::Observation);
  q.add_vertex("q9", Kind::Action);
  q.add_vertex("q10", Kind::Action);
  q.add_vertex("q11", Kind::Observation);
  q.add_vertex("q12", Kind::Action);
  q.initial = {"q0"};
  q.add_edge("q0", "q1", act("pollB1"));
  q.add_edge("q1", "q2", obs("occ"));
  q.add_edge("q1", "q5", obs("free"));
  q.add_edge("q2", "q3", act("goBack"));
  q.add_edge("q3", "q4", obs("ok"));
  q.add_edge("q5", "q6", act("pollM"));
  q.add_edge("q6", "q7", obs("occ"));
  q.add_edge("q6", "q10", obs("free"));
  q.add_edge("q7", "q8", act("goFront"));
  q.add_edge("q8", "q9", obs("ok"));
  q.add_edge("q10", "q11", act("goBack"));
  q.add_edge("q11", "q12", obs("ok"));
  f.alternate.terminals = {"q4", "q9", "q12"};

  for (const auto& name : {"pollM", "pollB1", "pollB2", "goFront", "goBack"})
    f.h.mapping[act(name)] = "x_act";
  f.h.mapping[obs("occ")] = "x_occ";
  f.h.mapping[obs("free")] = "x_free";
  f.h.mapping[obs("ok")] = "x_ok";

  PGraph& i = f.filter;
  i.add_vertex("i0", Kind::Action);
  i.add_vertex("i1", Kind::Observation);
  i.add_vertex("i2", Kind::Action);
  i.add_vertex("i3", Kind::Action);
  i.add_vertex("i4", Kind::Observation);
  i.add_vertex("i5", Kind::Observation);
  i.add_vertex("i6", Kind::Action);
  i.add_vertex("i7", Kind::Action);
  i.initial = {"i0"};
  i.add_edge("i0", "i1", act("x_act"));
  i.add_edge("i1", "i2", obs("x_occ"));
  i.add_edge("i1", "i3", obs("x_free"));
  i.add_edge("i2", "i4", act("x_act"));
  i.add_edge("i3", "i5", act("x_act"));
  i.add_edge("i4", "i6", obs("x_ok"));
  i.add_edge("i5", "i6", obs("x_ok"));
  i.add_edge("i5", "i7", obs("x_occ"));
  i.add_edge("i5", "i7", obs("x_free"));
  i.add_edge("i7", "i4", act("x_act"));
  return f;
}

}  // namespace fixtures
