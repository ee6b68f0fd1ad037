#include "renamer/prop.hpp"

#include <algorithm>
#include <unordered_set>

namespace renamer {

PropLiteral skeleton(const Literal& l) { return {l.sign, l.predicate}; }

PropClause::PropClause(std::initializer_list<PropLiteral> literals)
    : PropClause(std::vector<PropLiteral>(literals)) {}

PropClause::PropClause(std::vector<PropLiteral> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool PropClause::is_tautology() const {
  // Complementary literals are adjacent in sorted order.
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].var == literals_[i - 1].var) return true;
  return false;
}

bool PropClause::is_positive() const {
  return std::all_of(literals_.begin(), literals_.end(), [](const PropLiteral& l) { return l.positive(); });
}

PropClause skeleton(const Clause& c) {
  std::vector<PropLiteral> out;
  out.reserve(c.size());
  for (const auto& l : c) out.push_back(skeleton(l));
  return PropClause(std::move(out));
}

bool canonical_less(const PropClause& a, const PropClause& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PropClauseSet::PropClauseSet(std::initializer_list<PropClause> clauses) {
  for (const auto& c : clauses) insert(c);
}

bool PropClauseSet::insert(PropClause clause) {
  if (clause.is_tautology()) return false;
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), clause, canonical_less);
  if (it != clauses_.end() && *it == clause) return false;
  clauses_.insert(it, std::move(clause));
  return true;
}

bool PropClauseSet::contains(const PropClause& clause) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), clause, canonical_less);
}

std::vector<std::string> PropClauseSet::variables() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& c : clauses_)
    for (const auto& l : c)
      if (seen.insert(l.var).second) out.push_back(l.var);
  return out;
}

bool PropClauseSet::is_krom() const {
  return std::all_of(clauses_.begin(), clauses_.end(), [](const PropClause& c) { return c.size() <= 2; });
}

PropClauseSet skeleton(const ClauseSet& s) {
  PropClauseSet out;
  for (const auto& c : s) out.insert(skeleton(c));
  return out;
}

std::string to_string(const PropLiteral& l) { return (l.positive() ? "" : "~") + l.var; }

std::string to_string(const PropClause& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c.literals()[i]);
  }
  return out + "}";
}

std::string to_string(const PropClauseSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.clauses()[i]);
  }
  return out + "}";
}

bool evaluate(const Model& m, const PropLiteral& l) { return m.holds(l.var) == l.positive(); }

bool evaluate(const Model& m, const PropClause& c) {
  return std::any_of(c.begin(), c.end(), [&](const PropLiteral& l) { return evaluate(m, l); });
}

bool evaluate(const Model& m, const PropClauseSet& p) {
  return std::all_of(p.begin(), p.end(), [&](const PropClause& c) { return evaluate(m, c); });
}

Renaming renaming_of(const Model& m) { return Renaming(m.true_vars); }

}  // namespace renamer
