// First-order clause representation: terms, literals, clauses, clause sets,
// the syntactic depth/occurrence metrics over them, and renamings.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace renamer {

enum class Sign : unsigned char { Positive, Negative };

constexpr Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct PredicateSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;
  friend auto operator<=>(const PredicateSymbol&, const PredicateSymbol&) = default;
};

/// A first-order term. Constants are applications of arity zero.
class Term {
 public:
  static Term variable(std::string name);
  static Term apply(std::string function, std::vector<Term> args = {});

  bool is_variable() const { return variable_; }
  /// Variable name or function symbol.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool operator==(const Term& other) const;

 private:
  Term(bool variable, std::string name, std::vector<Term> args)
      : variable_(variable), name_(std::move(name)), args_(std::move(args)) {}

  bool variable_ = true;
  std::string name_;
  std::vector<Term> args_;
};

struct Literal {
  Sign sign = Sign::Positive;
  std::string predicate;
  std::vector<Term> args;

  bool positive() const { return sign == Sign::Positive; }
  PredicateSymbol symbol() const { return {predicate, args.size()}; }

  bool operator==(const Literal& other) const = default;
};

Literal positive(std::string predicate, std::vector<Term> args = {});
Literal negative(std::string predicate, std::vector<Term> args = {});

/// Total order used for canonical literal placement: sign (positive first),
/// predicate name, then the printed argument list.
std::strong_ordering canonical_compare(const Literal& a, const Literal& b);

/// A duplicate-free set of literals kept in canonical order.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> literals);
  explicit Clause(std::vector<Literal> literals);

  /// Returns false when an equal literal is already present.
  bool insert(Literal literal);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  std::size_t positive_count() const;

  bool operator==(const Clause& other) const = default;

 private:
  std::vector<Literal> literals_;
};

Clause positive_part(const Clause& c);
Clause negative_part(const Clause& c);

/// Raised when a symbol would be used with two different arities.
class ArityConflict : public std::runtime_error {
 public:
  enum class Kind { Predicate, Function };
  ArityConflict(Kind kind, std::string symbol, std::size_t first, std::size_t second);

  Kind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  std::size_t first_arity() const { return first_; }
  std::size_t second_arity() const { return second_; }

 private:
  Kind kind_;
  std::string symbol_;
  std::size_t first_;
  std::size_t second_;
};

/// A duplicate-free set of clauses. Insertion order is kept (it is the order
/// clauses are reported and printed in); equality ignores it.
class ClauseSet {
 public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<Clause> clauses);

  /// Returns false for a duplicate clause. Throws ArityConflict if the
  /// clause disagrees with the signature collected so far; the set is left
  /// unchanged in that case.
  bool add(Clause clause);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  /// Predicate name -> arity.
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }
  /// Function name -> arity (constants have arity 0).
  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  std::vector<std::string> predicate_names() const;

  friend bool operator==(const ClauseSet& a, const ClauseSet& b);

 private:
  std::vector<Clause> clauses_;
  std::map<std::string, std::size_t> predicates_;
  std::map<std::string, std::size_t> functions_;
};

// Printing in the clause-set surface syntax.
std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

// Syntactic metrics.

using VariableSet = std::set<std::string>;

VariableSet vars(const Term& t);
VariableSet vars(const Literal& l);
VariableSet vars(const Clause& c);

std::size_t depth(const Term& t);
std::size_t depth(const Literal& l);
std::size_t depth(const Clause& c);

std::size_t occ(std::string_view v, const Term& t);
std::size_t occ(std::string_view v, const Literal& l);
std::size_t occ(std::string_view v, const Clause& c);

/// tmax/tmin are only defined where the variable occurs.
class AbsentVariable : public std::invalid_argument {
 public:
  explicit AbsentVariable(std::string_view variable);
};

std::size_t tmax(std::string_view v, const Term& t);
std::size_t tmax(std::string_view v, const Literal& l);
std::size_t tmax(std::string_view v, const Clause& c);

std::size_t tmin(std::string_view v, const Term& t);
std::size_t tmin(std::string_view v, const Literal& l);
std::size_t tmin(std::string_view v, const Clause& c);

// Renamings.

Literal dual(const Literal& l);

/// A set of predicate names whose polarity is flipped everywhere.
class Renaming {
 public:
  Renaming() = default;
  Renaming(std::initializer_list<std::string> names) : renamed_(names) {}
  explicit Renaming(std::set<std::string> names) : renamed_(std::move(names)) {}

  bool contains(std::string_view predicate) const {
    return renamed_.find(std::string(predicate)) != renamed_.end();
  }
  const std::set<std::string>& predicates() const { return renamed_; }
  bool empty() const { return renamed_.empty(); }
  std::size_t size() const { return renamed_.size(); }

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  std::set<std::string> renamed_;
};

/// "{a, b}" with names ascending; "{}" when empty.
std::string to_string(const Renaming& r);

/// Shortlex: fewer predicates first, then lexicographic on the sorted names.
bool shortlex_less(const std::set<std::string>& a, const std::set<std::string>& b);

Literal apply_renaming(const Renaming& r, const Literal& l);
Clause apply_renaming(const Renaming& r, const Clause& c);
/// Throws std::invalid_argument if r names a predicate that does not occur in s.
ClauseSet apply_renaming(const Renaming& r, const ClauseSet& s);

}  // namespace renamer
