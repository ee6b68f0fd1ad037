// Model enumeration by semantic branching, and the exhaustive truth-table
// check. Neither shares code with the hyper-resolution engine, so they serve
// as its cross-checks.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "renamer/prop.hpp"

namespace renamer {

struct ModelList {
  std::vector<Model> models;
  bool truncated = false;  // more models exist beyond the limit
};

/// All total assignments over `universe` satisfying p, shortest true-set
/// first and lexicographic within a size. limit == 0 means unbounded.
/// Throws std::invalid_argument if p mentions a variable outside universe.
ModelList enumerate_models(const PropClauseSet& p, const std::vector<std::string>& universe, std::size_t limit);

inline constexpr std::size_t kTruthTableMaxVariables = 20;

class TooManyVariables : public std::invalid_argument {
 public:
  TooManyVariables(std::size_t count, std::size_t limit);
};

bool truth_table_sat(const PropClauseSet& p);

}  // namespace renamer
