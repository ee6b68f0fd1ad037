#include "renamer/models.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace renamer {

namespace {

// Literal encoding: 2 * var + (negative ? 1 : 0).
using Lit = std::uint32_t;

constexpr std::int8_t kUnset = -1;

class CardinalitySearch {
 public:
  CardinalitySearch(std::vector<std::vector<Lit>> clauses, std::size_t vars) : clauses_(std::move(clauses)), n_(vars) {}

  // Calls emit for each model with exactly k true variables, in lexicographic
  // order of the true set; stops as soon as emit returns false.
  template <typename Emit>
  bool run(std::size_t k, Emit&& emit) {
    k_ = k;
    std::vector<std::int8_t> assignment(n_, kUnset);
    return branch(assignment, emit);
  }

 private:
  static bool satisfied(Lit l, const std::vector<std::int8_t>& a) {
    const auto v = a[l >> 1];
    return v != kUnset && (v == 1) != static_cast<bool>(l & 1);
  }

  // Unit propagation plus the cardinality bounds; false on conflict.
  bool propagate(std::vector<std::int8_t>& a) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : clauses_) {
        std::size_t open = 0;
        Lit last = 0;
        bool sat = false;
        for (Lit l : c) {
          if (a[l >> 1] == kUnset) {
            ++open;
            last = l;
          } else if (satisfied(l, a)) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          a[last >> 1] = (last & 1) ? 0 : 1;
          changed = true;
        }
      }
    }
    std::size_t trues = 0, unset = 0;
    for (auto v : a) {
      trues += v == 1;
      unset += v == kUnset;
    }
    return trues <= k_ && trues + unset >= k_;
  }

  template <typename Emit>
  bool branch(std::vector<std::int8_t> a, Emit& emit) {
    if (!propagate(a)) return true;
    auto it = std::find(a.begin(), a.end(), kUnset);
    if (it == a.end()) return emit(a);
    const auto var = static_cast<std::size_t>(it - a.begin());
    for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
      auto next = a;
      next[var] = value;
      if (!branch(std::move(next), emit)) return false;
    }
    return true;
  }

  std::vector<std::vector<Lit>> clauses_;
  std::size_t n_;
  std::size_t k_ = 0;
};

}  // namespace

ModelList enumerate_models(const PropClauseSet& p, const std::vector<std::string>& universe, std::size_t limit) {
  std::vector<std::string> vars = universe;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::unordered_map<std::string, Lit> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], static_cast<Lit>(i));

  std::vector<std::vector<Lit>> clauses;
  for (const auto& c : p) {
    std::vector<Lit> lits;
    for (const auto& l : c) {
      auto it = index.find(l.var);
      if (it == index.end()) throw std::invalid_argument("variable '" + l.var + "' is not in the universe");
      lits.push_back(2 * it->second + (l.positive() ? 0 : 1));
    }
    clauses.push_back(std::move(lits));
  }

  ModelList result;
  CardinalitySearch search(std::move(clauses), vars.size());
  for (std::size_t k = 0; k <= vars.size(); ++k) {
    const bool more = search.run(k, [&](const std::vector<std::int8_t>& a) {
      if (limit != 0 && result.models.size() == limit) {
        result.truncated = true;
        return false;
      }
      Model m;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 1) m.true_vars.insert(vars[i]);
      result.models.push_back(std::move(m));
      return true;
    });
    if (!more) break;
  }
  return result;
}

TooManyVariables::TooManyVariables(std::size_t count, std::size_t limit)
    : std::invalid_argument("truth table over " + std::to_string(count) + " variables exceeds the limit of " +
                            std::to_string(limit)) {}

bool truth_table_sat(const PropClauseSet& p) {
  std::unordered_map<std::string, unsigned> index;
  for (const auto& c : p)
    for (const auto& l : c) index.emplace(l.var, static_cast<unsigned>(index.size()));
  if (index.size() > kTruthTableMaxVariables) throw TooManyVariables(index.size(), kTruthTableMaxVariables);

  // Each clause as (positive mask, negative mask).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : p) {
    std::uint32_t pos = 0, neg = 0;
    for (const auto& l : c) (l.positive() ? pos : neg) |= 1u << index.at(l.var);
    masks.emplace_back(pos, neg);
  }
  const std::uint32_t rows = 1u << index.size();
  for (std::uint32_t row = 0; row < rows; ++row) {
    const bool all = std::all_of(masks.begin(), masks.end(), [&](const auto& m) {
      return (row & m.first) != 0 || (~row & m.second) != 0;
    });
    if (all) return true;
  }
  return false;
}

}  // namespace renamer
