// Propositional satisfiability by positive hyper-resolution.
//
// Clauses with a negative literal act as nuclei; positive clauses act as
// satellites. A step resolves every negative literal of a nucleus against a
// satellite at once and yields a positive clause. The clause store is kept
// free of subsumed clauses in both directions, so saturation terminates.
//
// Models are built by splitting: a non-unit positive clause of a saturated
// store is replaced by one of its atoms and the store is saturated again,
// until only positive units remain. Those atoms are the model.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "renamer/prop.hpp"

namespace renamer {

inline constexpr std::size_t kDefaultMaxClauses = 1'000'000;

struct SaturationOptions {
  /// Ceiling on stored clauses (nuclei plus kept positive clauses).
  std::size_t max_clauses = kDefaultMaxClauses;
};

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t stored);
  std::size_t stored_clauses() const { return stored_; }

 private:
  std::size_t stored_;
};

struct SplitChoice {
  PropClause clause;
  PropLiteral literal;
};

struct SaturationStats {
  std::size_t resolvents = 0;         // hyper-resolvents built, before subsumption
  std::size_t peak_positive = 0;      // most positive clauses held at once
  std::size_t peak_stored = 0;        // most clauses (nuclei included) held at once
  std::size_t splits = 0;
  std::size_t backtracks = 0;
};

struct Saturation {
  PropClauseSet input;
  /// Kept hyper-resolvents, including split units.
  PropClauseSet derived;
  /// Every kept positive clause, input or derived.
  PropClauseSet positive;
  bool contains_empty = false;
  /// Choices along the successful splitting path.
  std::vector<SplitChoice> split_trail;
  SaturationStats stats;
};

Saturation saturate(const PropClauseSet& p, const SaturationOptions& options = {});

bool is_satisfiable(const PropClauseSet& p, const SaturationOptions& options = {});

struct ModelExtraction {
  std::optional<Model> model;  // nullopt when unsatisfiable
  Saturation saturation;       // final store, or the refuted one
};

/// Splits on the first non-unit positive clause in canonical order, trying
/// its atoms in order and backtracking on refutation. The returned model is
/// checked with evaluate(); std::logic_error if that ever fails.
ModelExtraction extract_model(const PropClauseSet& p, const SaturationOptions& options = {});

}  // namespace renamer
