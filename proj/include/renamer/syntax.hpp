// Clause-set surface syntax.
//
//   % comment to end of line
//   p(X) | q(f(X)) | ~r(X, a).
//
// Identifiers starting with a lowercase letter are predicate, function or
// constant symbols; identifiers starting with an uppercase letter or '_' are
// variables. Zero-arity symbols are written without parentheses.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "renamer/clause.hpp"

namespace renamer {

struct SourceLocation {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, const std::string& message);

  const SourceLocation& where() const { return where_; }
  /// The message without the location prefix.
  const std::string& message() const { return message_; }

 private:
  SourceLocation where_;
  std::string message_;
};

/// Arity conflicts are reported at the second, conflicting use.
class ArityConflictError : public ParseError {
 public:
  ArityConflictError(SourceLocation where, const ArityConflict& conflict);

  const std::string& symbol() const { return symbol_; }
  std::size_t first_arity() const { return first_; }
  std::size_t second_arity() const { return second_; }

 private:
  std::string symbol_;
  std::size_t first_;
  std::size_t second_;
};

bool is_identifier(std::string_view text);

ClauseSet parse_clause_set(std::string_view text);

/// One clause per line, literals joined by " | ", in canonical literal order.
/// Throws std::invalid_argument for an empty clause, which has no surface form.
std::string serialize_clause_set(const ClauseSet& s);

}  // namespace renamer
