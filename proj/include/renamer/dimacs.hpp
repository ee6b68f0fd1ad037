// DIMACS CNF reading and writing. Variable names travel in comment lines
//
//   c map 1 p
//   c map 2 q
//   p cnf 2 1
//   1 -2 0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "renamer/prop.hpp"
#include "renamer/syntax.hpp"

namespace renamer {

struct DimacsDocument {
  std::size_t variable_count = 0;
  std::vector<std::vector<int>> clauses;
  /// names[i] is the name of variable i + 1; size() == variable_count.
  std::vector<std::string> names;

  PropClauseSet to_clause_set() const;
  std::string text() const;
};

/// Numbers variables by first occurrence over the canonical clause order.
DimacsDocument to_dimacs(const PropClauseSet& p);
std::string emit_dimacs(const PropClauseSet& p);

/// Throws ParseError on a malformed header, out-of-range literal, clause
/// count mismatch, invalid or duplicate mapped name, or a final clause
/// without its terminating 0. Unmapped variables are named v<index>.
DimacsDocument read_dimacs(std::string_view text);
PropClauseSet parse_dimacs(std::string_view text);

}  // namespace renamer
