// Propositional literals, clauses and clause sets over named variables, plus
// models. Predicate names double as propositional variable names.
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "renamer/clause.hpp"

namespace renamer {

struct PropLiteral {
  Sign sign = Sign::Positive;
  std::string var;

  bool positive() const { return sign == Sign::Positive; }

  friend bool operator==(const PropLiteral&, const PropLiteral&) = default;
  /// By variable name, positive before negative.
  friend std::strong_ordering operator<=>(const PropLiteral& a, const PropLiteral& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    if (a.sign == b.sign) return std::strong_ordering::equal;
    return a.positive() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

inline PropLiteral pos(std::string var) { return {Sign::Positive, std::move(var)}; }
inline PropLiteral neg(std::string var) { return {Sign::Negative, std::move(var)}; }
inline PropLiteral dual(const PropLiteral& l) { return {flip(l.sign), l.var}; }

PropLiteral skeleton(const Literal& l);

/// Sorted, duplicate-free. May be tautological as a value; PropClauseSet
/// refuses to store tautologies.
class PropClause {
 public:
  PropClause() = default;
  PropClause(std::initializer_list<PropLiteral> literals);
  explicit PropClause(std::vector<PropLiteral> literals);

  const std::vector<PropLiteral>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool is_tautology() const;
  bool is_positive() const;

  friend bool operator==(const PropClause&, const PropClause&) = default;

 private:
  std::vector<PropLiteral> literals_;
};

PropClause skeleton(const Clause& c);

/// Canonical clause order: shorter first, then lexicographic over literals.
bool canonical_less(const PropClause& a, const PropClause& b);

/// Duplicate- and tautology-free set of clauses, always in canonical order.
class PropClauseSet {
 public:
  PropClauseSet() = default;
  PropClauseSet(std::initializer_list<PropClause> clauses);

  /// False if the clause is a tautology or already present.
  bool insert(PropClause clause);
  bool contains(const PropClause& clause) const;

  const std::vector<PropClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Variables in order of first occurrence over the canonical clause list.
  std::vector<std::string> variables() const;
  bool is_krom() const;

  friend bool operator==(const PropClauseSet&, const PropClauseSet&) = default;

 private:
  std::vector<PropClause> clauses_;
};

PropClauseSet skeleton(const ClauseSet& s);

std::string to_string(const PropLiteral& l);
/// "{p, ~q}".
std::string to_string(const PropClause& c);
std::string to_string(const PropClauseSet& s);

/// An assignment given by the variables it makes true.
struct Model {
  std::set<std::string> true_vars;

  bool holds(const std::string& var) const { return true_vars.contains(var); }
  friend bool operator==(const Model&, const Model&) = default;
};

bool evaluate(const Model& m, const PropLiteral& l);
bool evaluate(const Model& m, const PropClause& c);
bool evaluate(const Model& m, const PropClauseSet& p);

/// The renaming that flips exactly the predicates true in m.
Renaming renaming_of(const Model& m);

}  // namespace renamer
