// Propositional encodings of renamability. Each encoder maps a clause set S
// to a propositional clause set over the predicate names of S whose models
// are exactly the renamings taking S into the target class: a variable is
// true iff its predicate is renamed.
//
// A skeleton literal skel(L) is true under a model iff the renamed literal
// is negative, which is what all three encodings are phrased in.
#pragma once

#include <string_view>

#include "renamer/clause.hpp"
#include "renamer/membership.hpp"
#include "renamer/prop.hpp"

namespace renamer {

/// Every pair of literals of a clause needs a negative member.
PropClauseSet encode_horn(const ClauseSet& s);

/// Non-linear literals must end up negative; literals sharing a variable may
/// not both be positive; and a literal L holding some v deeper than the
/// shallowest v in L' may not be positive while L' is negative.
PropClauseSet encode_occ1n(const ClauseSet& s);

/// For each clause C and variable v, some literal holding v at its maximal
/// depth in C must end up negative.
PropClauseSet encode_pvd(const ClauseSet& s);

PropClauseSet encode(ClassTag tag, const ClauseSet& s);

/// Literals of c that contain v at depth tmax(v, c). Throws AbsentVariable.
Clause max_depth_literals(const Clause& c, std::string_view v);

}  // namespace renamer
