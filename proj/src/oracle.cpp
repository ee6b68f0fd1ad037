#include "renamer/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "renamer/syntax.hpp"

namespace renamer {

TooManyPredicates::TooManyPredicates(std::size_t count, std::size_t limit)
    : std::invalid_argument("brute force over " + std::to_string(count) + " predicates exceeds the limit of " +
                            std::to_string(limit)) {}

std::vector<Renaming> brute_force_renamings(const ClauseSet& s, ClassTag tag) {
  const auto preds = s.predicate_names();
  if (preds.size() > kBruteForceMaxPredicates) throw TooManyPredicates(preds.size(), kBruteForceMaxPredicates);

  std::vector<Renaming> out;
  const std::uint32_t subsets = 1u << preds.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < preds.size(); ++i)
      if (mask & (1u << i)) names.insert(preds[i]);
    Renaming r(std::move(names));
    if (check_membership(tag, apply_renaming(r, s)).member) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const Renaming& a, const Renaming& b) { return shortlex_less(a.predicates(), b.predicates()); });
  return out;
}

ClauseSet reduce_cnf_to_pvd(const PropClauseSet& f) {
  const Term x = Term::variable("X");
  std::set<std::string> names;
  for (const auto& c : f)
    for (const auto& l : c) {
      if (!is_identifier(l.var)) throw std::invalid_argument("'" + l.var + "' cannot be used as a predicate symbol");
      names.insert(l.var);
    }

  ClauseSet out;
  for (const auto& c : f) {
    if (c.empty()) {
      std::string bottom = "false_";
      while (names.contains(bottom)) bottom += "_";
      out.add(Clause{positive(bottom, {x})});
      out.add(Clause{negative(bottom, {x})});
      continue;
    }
    Clause clause;
    for (const auto& l : c) clause.insert(Literal{l.sign, l.var, {x}});
    out.add(std::move(clause));
  }
  return out;
}

}  // namespace renamer
