// Brute-force renamability oracle and the reduction from propositional
// satisfiability to PVD-renamability.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "renamer/clause.hpp"
#include "renamer/membership.hpp"
#include "renamer/prop.hpp"

namespace renamer {

inline constexpr std::size_t kBruteForceMaxPredicates = 20;

class TooManyPredicates : public std::invalid_argument {
 public:
  TooManyPredicates(std::size_t count, std::size_t limit);
};

/// Every renaming ρ over the predicates of s with ρ(s) in the class, by
/// trying all 2^k subsets. Shortlex order.
std::vector<Renaming> brute_force_renamings(const ClauseSet& s, ClassTag tag);

/// Each propositional clause {±v1, ..., ±vk} becomes {±v1(X), ..., ±vk(X)}.
/// The result is renamable to PVD iff f is satisfiable. An empty clause in f
/// becomes the pair {false_(X)}, {~false_(X)} (with the name made fresh),
/// which no renaming can repair. Throws std::invalid_argument if a variable
/// name is not a valid identifier.
ClauseSet reduce_cnf_to_pvd(const PropClauseSet& f);

}  // namespace renamer
