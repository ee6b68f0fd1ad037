#include "renamer/generator.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace renamer {

std::size_t InstanceGenerator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool InstanceGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

namespace {

const char* const kVariables[] = {"X", "Y", "Z", "U", "V", "W"};
const char* const kFunctions[] = {"f", "g", "h", "k", "m"};

}  // namespace

ClauseSet InstanceGenerator::clause_set(const ClauseSetShape& shape) {
  const std::size_t var_count = std::clamp<std::size_t>(shape.variables, 1, std::size(kVariables));
  const std::size_t fn_count = std::min(shape.functions, std::size(kFunctions));

  std::vector<std::size_t> pred_arity(uniform(1, std::max<std::size_t>(shape.max_predicates, 1)));
  for (auto& a : pred_arity) a = uniform(0, 3);
  std::vector<std::size_t> fn_arity(fn_count);
  for (auto& a : fn_arity) a = uniform(0, 2);

  auto term = [&](auto&& self, std::size_t depth_left) -> Term {
    if (depth_left == 0 || fn_count == 0 || coin()) {
      // Leaf: mostly variables, sometimes a constant when one exists.
      std::vector<std::size_t> constants;
      for (std::size_t i = 0; i < fn_count; ++i)
        if (fn_arity[i] == 0) constants.push_back(i);
      if (!constants.empty() && coin(0.2)) return Term::apply(kFunctions[constants[uniform(0, constants.size() - 1)]]);
      return Term::variable(kVariables[uniform(0, var_count - 1)]);
    }
    const std::size_t f = uniform(0, fn_count - 1);
    std::vector<Term> args;
    for (std::size_t i = 0; i < fn_arity[f]; ++i) args.push_back(self(self, depth_left - 1));
    return Term::apply(kFunctions[f], std::move(args));
  };

  ClauseSet out;
  const std::size_t clauses = uniform(1, std::max<std::size_t>(shape.max_clauses, 1));
  for (std::size_t c = 0; c < clauses; ++c) {
    Clause clause;
    const std::size_t lits = uniform(1, std::max<std::size_t>(shape.max_literals, 1));
    for (std::size_t l = 0; l < lits; ++l) {
      const std::size_t p = uniform(0, pred_arity.size() - 1);
      std::vector<Term> args;
      for (std::size_t i = 0; i < pred_arity[p]; ++i) args.push_back(term(term, shape.max_depth));
      clause.insert(Literal{coin() ? Sign::Positive : Sign::Negative, "p" + std::to_string(p), std::move(args)});
    }
    out.add(std::move(clause));
  }
  return out;
}

PropClauseSet InstanceGenerator::cnf(std::size_t max_vars, std::size_t max_clauses, std::size_t max_width) {
  const std::size_t vars = uniform(1, std::max<std::size_t>(max_vars, 1));
  const std::size_t clauses = uniform(1, std::max<std::size_t>(max_clauses, 1));
  PropClauseSet out;
  for (std::size_t c = 0; c < clauses; ++c) {
    const std::size_t width = uniform(1, std::min(std::max<std::size_t>(max_width, 1), vars));
    std::set<std::size_t> chosen;
    while (chosen.size() < width) chosen.insert(uniform(1, vars));
    std::vector<PropLiteral> lits;
    for (auto v : chosen) lits.push_back({coin() ? Sign::Positive : Sign::Negative, "x" + std::to_string(v)});
    out.insert(PropClause(std::move(lits)));
  }
  return out;
}

PropClauseSet InstanceGenerator::krom(std::size_t vars, std::size_t clauses) {
  PropClauseSet out;
  if (vars == 0) return out;
  for (std::size_t c = 0; c < clauses; ++c) {
    const std::size_t width = (vars == 1 || coin(0.1)) ? 1 : 2;
    std::set<std::size_t> chosen;
    while (chosen.size() < width) chosen.insert(uniform(1, vars));
    std::vector<PropLiteral> lits;
    for (auto v : chosen) lits.push_back({coin() ? Sign::Positive : Sign::Negative, "x" + std::to_string(v)});
    out.insert(PropClause(std::move(lits)));
  }
  return out;
}

ClauseSet InstanceGenerator::renamable_horn(std::size_t predicates, std::size_t clauses, std::size_t max_literals) {
  std::vector<std::size_t> arity(std::max<std::size_t>(predicates, 1));
  for (auto& a : arity) a = uniform(1, 2);

  auto argument = [&]() {
    Term v = Term::variable(kVariables[uniform(0, 2)]);
    return coin(0.25) ? Term::apply("f", {v}) : v;
  };

  ClauseSet horn;
  for (std::size_t c = 0; c < clauses; ++c) {
    Clause clause;
    const std::size_t lits = uniform(1, std::max<std::size_t>(max_literals, 1));
    const std::size_t head = coin(0.7) ? uniform(0, lits - 1) : lits;  // lits = no positive literal
    for (std::size_t l = 0; l < lits; ++l) {
      const std::size_t p = uniform(0, arity.size() - 1);
      std::vector<Term> args;
      for (std::size_t i = 0; i < arity[p]; ++i) args.push_back(argument());
      Literal lit{l == head ? Sign::Positive : Sign::Negative, "p" + std::to_string(p + 1), std::move(args)};
      clause.insert(std::move(lit));
    }
    horn.add(std::move(clause));
  }

  std::set<std::string> hidden;
  for (const auto& name : horn.predicate_names())
    if (coin()) hidden.insert(name);
  return apply_renaming(Renaming(std::move(hidden)), horn);
}

}  // namespace renamer
