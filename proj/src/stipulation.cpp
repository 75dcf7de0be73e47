#include "pgp/stipulation.hpp"

#include <cctype>

#include "pgp/errors.hpp"
#include "pgp/observer.hpp"

namespace pgp {

Formula Formula::make_atom(std::string name) {
  Formula f;
  f.op = Op::Atom;
  f.atom = std::move(name);
  return f;
}

Formula Formula::make_not(Formula child) {
  Formula f;
  f.op = Op::Not;
  f.children.push_back(std::move(child));
  return f;
}

Formula Formula::make_and(std::vector<Formula> children) {
  Formula f;
  f.op = Op::And;
  f.children = std::move(children);
  return f;
}

Formula Formula::make_or(std::vector<Formula> children) {
  Formula f;
  f.op = Op::Or;
  f.children = std::move(children);
  return f;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t at = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what, std::size_t offset) {
    throw FormulaSyntaxError(what, offset);
  }

  void skip_space() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }

  bool eat(const std::string& token) {
    skip_space();
    if (text.compare(at, token.size(), token) != 0) return false;
    at += token.size();
    return true;
  }

  bool at_end() {
    skip_space();
    return at >= text.size();
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Formula parse_or() {
    std::vector<Formula> children{parse_and()};
    while (eat("|") || eat("\xE2\x88\xA8")) children.push_back(parse_and());
    if (children.size() == 1) return std::move(children.front());
    return Formula::make_or(std::move(children));
  }

  Formula parse_and() {
    std::vector<Formula> children{parse_unary()};
    while (eat("&") || eat("\xE2\x88\xA7")) children.push_back(parse_unary());
    if (children.size() == 1) return std::move(children.front());
    return Formula::make_and(std::move(children));
  }

  Formula parse_unary() {
    if (eat("!") || eat("\xC2\xAC")) return Formula::make_not(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (at >= text.size()) fail("expected an operand", at);
    if (text[at] == '(') {
      ++at;
      Formula inner = parse_or();
      skip_space();
      if (at >= text.size() || text[at] != ')') fail("expected ')'", at);
      ++at;
      return inner;
    }
    char c = text[at];
    if (!ident_char(c) || std::isdigit(static_cast<unsigned char>(c)))
      fail(std::string("unexpected character '") + c + "'", at);
    std::size_t start = at;
    while (at < text.size() && ident_char(text[at])) ++at;
    return Formula::make_atom(text.substr(start, at - start));
  }
};

int precedence(Formula::Op op) {
  switch (op) {
    case Formula::Op::Or: return 0;
    case Formula::Op::And: return 1;
    case Formula::Op::Not: return 2;
    case Formula::Op::Atom: return 3;
  }
  return 3;
}

// a child must be parenthesized when rendering it bare would let the parent
// operator absorb it on reparse
bool needs_parens(Formula::Op parent, Formula::Op child) {
  if (child == Formula::Op::Atom) return false;
  if (parent == Formula::Op::Not) return child != Formula::Op::Not;
  return precedence(child) <= precedence(parent);
}

void print_into(const Formula& f, std::string& out) {
  auto child = [&](const Formula& c) {
    if (needs_parens(f.op, c.op)) {
      out += "(";
      print_into(c, out);
      out += ")";
    } else {
      print_into(c, out);
    }
  };
  switch (f.op) {
    case Formula::Op::Atom:
      out += f.atom;
      break;
    case Formula::Op::Not:
      out += "!";
      child(f.children.front());
      break;
    case Formula::Op::And:
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " & ";
        child(f.children[i]);
      }
      break;
    case Formula::Op::Or:
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " | ";
        child(f.children[i]);
      }
      break;
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op == Formula::Op::Atom) out.insert(f.atom);
  for (const auto& c : f.children) collect_atoms(c, out);
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser parser(text);
  Formula f = parser.parse_or();
  parser.skip_space();
  if (parser.at < text.size())
    throw FormulaSyntaxError(std::string("unexpected character '") + text[parser.at] + "'",
                             parser.at);
  return f;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::set<std::string> formula_atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

void bind_formula(const Formula& f, const PGraph& world) {
  for (const auto& atom : formula_atoms(f))
    if (!world.has_vertex(atom))
      throw UnknownAtom("stipulation names '" + atom + "', which is not a world state");
}

bool eval_formula(const Formula& f, const std::set<std::string>& estimate_states) {
  switch (f.op) {
    case Formula::Op::Atom:
      return estimate_states.contains(f.atom);
    case Formula::Op::Not:
      return !eval_formula(f.children.front(), estimate_states);
    case Formula::Op::And:
      for (const auto& c : f.children)
        if (!eval_formula(c, estimate_states)) return false;
      return true;
    case Formula::Op::Or:
      for (const auto& c : f.children)
        if (eval_formula(c, estimate_states)) return true;
      return false;
  }
  return false;
}

Verdict check_stipulation(const PlanningProblem& problem, const LabelMap& h,
                          const Observer& observer, const Formula& f, EstimateMode mode,
                          int depth, bool include_vacuous) {
  bind_formula(f, problem.world);
  Verdict verdict;
  for (const auto& estimate :
       all_estimates(problem.world, h, observer, mode, depth, include_vacuous)) {
    ++verdict.estimates_checked;
    if (eval_formula(f, estimate.world_states)) continue;
    Violation violation;
    violation.estimate = estimate;
    for (const auto& atom : formula_atoms(f))
      violation.atom_values.emplace_back(atom, estimate.world_states.contains(atom));
    verdict.violations.push_back(std::move(violation));
  }
  verdict.satisfied = verdict.violations.empty();
  return verdict;
}

}  // namespace pgp
