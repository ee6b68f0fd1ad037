// Direct syntactic membership checks for the Horn, OCC1N and PVD classes.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "renamer/clause.hpp"

namespace renamer {

enum class ClassTag { Horn, Occ1n, Pvd };

std::string_view to_string(ClassTag tag);
/// Accepts "horn", "occ1n", "pvd".
std::optional<ClassTag> parse_class_tag(std::string_view text);

enum class Condition {
  HornPositiveCount,   // more than one positive literal
  Occ1nLinearity,      // a positive-part variable occurs more than once there
  Occ1nDepth,          // shared variable deeper positively than its shallowest negative occurrence
  PvdCoverage,         // positive-part variable missing from the negative part
  PvdDepth,            // positive-part variable deeper than its deepest negative occurrence
};

std::string_view label(Condition c);

struct Violation {
  std::size_t clause_index = 0;  // 0-based, insertion order
  Condition condition = Condition::HornPositiveCount;
  std::string variable;          // empty for Horn
  std::string detail;
};

struct Verdict {
  bool member = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return member; }
};

Verdict is_horn(const ClauseSet& s);
Verdict is_occ1n(const ClauseSet& s);
Verdict is_pvd(const ClauseSet& s);
Verdict check_membership(ClassTag tag, const ClauseSet& s);

/// "clause 1 violates OCC1N(a) for X: ..." (1-based clause number).
std::string describe(const Violation& v);

}  // namespace renamer
