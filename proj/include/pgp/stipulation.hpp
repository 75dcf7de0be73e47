#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgp/labelmap.hpp"
#include "pgp/observer.hpp"
#include "pgp/pgraph.hpp"
#include "pgp/planning.hpp"

namespace pgp {

// Propositional formula over world vertex ids. An atom is true at an
// estimate iff the named vertex belongs to the estimated state set.
struct Formula {
  enum class Op { Atom, Not, And, Or };
  Op op = Op::Atom;
  std::string atom;                // Op::Atom
  std::vector<Formula> children;   // Not: exactly 1; And/Or: at least 2
  bool operator==(const Formula&) const = default;

  static Formula make_atom(std::string name);
  static Formula make_not(Formula f);
  static Formula make_and(std::vector<Formula> children);
  static Formula make_or(std::vector<Formula> children);
};

// Grammar: atoms are identifiers; '!' (or U+00AC) binds tightest, then '&'
// (or U+2227), then '|' (or U+2228); chains of one operator collapse into a
// single n-ary node; parentheses group. Throws FormulaSyntaxError with the
// byte offset of the failure.
Formula parse_formula(const std::string& text);

// Canonical rendering with minimal parentheses; parses back to an equal tree.
std::string print_formula(const Formula& f);

std::set<std::string> formula_atoms(const Formula& f);

// Every atom must name a vertex of the world; throws UnknownAtom.
void bind_formula(const Formula& f, const PGraph& world);

bool eval_formula(const Formula& f, const std::set<std::string>& estimate_states);

struct Violation {
  Estimate estimate;
  std::vector<std::pair<std::string, bool>> atom_values;
};

struct Verdict {
  bool satisfied = true;
  std::vector<Violation> violations;
  std::size_t estimates_checked = 0;
};

// Evaluates the stipulation on every estimate the observer can form and
// collects the failing ones with their witnesses.
Verdict check_stipulation(const PlanningProblem& problem, const LabelMap& h, const Observer& obs,
                          const Formula& f, EstimateMode mode, int depth,
                          bool include_vacuous = false);

}  // namespace pgp
