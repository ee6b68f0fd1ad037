// Seeded random instances for property tests and benchmarks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "renamer/clause.hpp"
#include "renamer/prop.hpp"

namespace renamer {

struct ClauseSetShape {
  std::size_t max_predicates = 8;
  std::size_t max_clauses = 6;
  std::size_t max_literals = 3;
  std::size_t max_depth = 3;
  std::size_t variables = 3;
  std::size_t functions = 3;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Predicate arities uniform in 0..3, function arities uniform in 0..2,
  /// term depth geometric (p = 1/2) and capped at shape.max_depth.
  ClauseSet clause_set(const ClauseSetShape& shape = {});

  /// Between 1 and max_vars variables named x1, x2, ...; between 1 and
  /// max_clauses non-empty clauses of width 1..max_width.
  PropClauseSet cnf(std::size_t max_vars, std::size_t max_clauses, std::size_t max_width);

  /// Exactly `vars` candidate variables, `clauses` attempts at clauses of
  /// width 1 (one in ten) or 2.
  PropClauseSet krom(std::size_t vars, std::size_t clauses);

  /// A Horn set over `predicates` predicates hidden behind a random renaming.
  /// Each clause has 1..max_literals literals of arity 1 or 2.
  ClauseSet renamable_horn(std::size_t predicates, std::size_t clauses, std::size_t max_literals);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin(double p = 0.5);

  std::mt19937_64 rng_;
};

}  // namespace renamer
