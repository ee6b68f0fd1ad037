#include "renamer/saturation.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace renamer {

ResourceLimitError::ResourceLimitError(std::size_t stored)
    : std::runtime_error("clause limit exceeded: " + std::to_string(stored) + " clauses stored"), stored_(stored) {}

namespace {

// Sorted, duplicate-free atom indices. Atom order follows variable-name order,
// so lexicographic order on Atoms is the canonical order on positive clauses.
using Atoms = std::vector<int>;

struct AtomsHash {
  std::size_t operator()(const Atoms& a) const {
    std::size_t h = a.size();
    for (int x : a) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void normalize(Atoms& a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
}

// Subset enumeration is used for forward subsumption of clauses up to this size.
constexpr std::size_t kSubsetLookupLimit = 8;

class Store {
 public:
  Store(std::size_t atom_count, std::size_t max_clauses, SaturationStats* stats)
      : max_clauses_(max_clauses), stats_(stats), by_neg_(atom_count), occ_(atom_count), active_occ_(atom_count),
        unit_(atom_count, false) {}

  void add_nucleus(Atoms pos, Atoms neg) {
    for (std::size_t i = 0; i < neg.size(); ++i) by_neg_[static_cast<std::size_t>(neg[i])].emplace_back(nuclei_.size(), i);
    nuclei_.push_back({std::move(pos), std::move(neg)});
    note_size();
  }

  void add_positive(Atoms atoms, bool derived) {
    if (refuted_) return;
    if (atoms.empty()) {
      refuted_ = true;
      return;
    }
    if (forward_subsumed(atoms)) return;
    backward_subsume(atoms);

    const std::size_t id = entries_.size();
    for (int a : atoms) occ_[static_cast<std::size_t>(a)].push_back(id);
    if (atoms.size() == 1) unit_[static_cast<std::size_t>(atoms[0])] = true;
    index_.emplace(atoms, id);
    passive_.emplace(atoms.size(), id);
    entries_.push_back({std::move(atoms), true, derived});
    ++alive_;
    note_size();
  }

  void saturate() {
    while (!refuted_ && !passive_.empty()) {
      const std::size_t given = passive_.begin()->second;
      passive_.erase(passive_.begin());
      if (!entries_[given].alive) continue;
      for (int a : entries_[given].atoms) active_occ_[static_cast<std::size_t>(a)].push_back(given);
      for (auto& r : resolvents_with(given)) {
        add_positive(std::move(r), true);
        if (refuted_) return;
      }
    }
  }

  bool refuted() const { return refuted_; }

  // First non-unit positive clause in canonical order.
  std::optional<Atoms> first_nonunit() const {
    const Atoms* best = nullptr;
    for (const auto& e : entries_) {
      if (!e.alive || e.atoms.size() < 2) continue;
      if (!best || e.atoms.size() < best->size() || (e.atoms.size() == best->size() && e.atoms < *best)) best = &e.atoms;
    }
    return best ? std::optional<Atoms>(*best) : std::nullopt;
  }

  template <typename Fn>
  void for_each_positive(Fn fn) const {
    for (const auto& e : entries_)
      if (e.alive) fn(e.atoms, e.derived);
  }

 private:
  struct Nucleus {
    Atoms pos;
    Atoms neg;
  };

  struct Entry {
    Atoms atoms;
    bool alive = true;
    bool derived = false;
  };

  void note_size() {
    const std::size_t stored = alive_ + nuclei_.size();
    stats_->peak_positive = std::max(stats_->peak_positive, alive_);
    stats_->peak_stored = std::max(stats_->peak_stored, stored);
    if (stored > max_clauses_) throw ResourceLimitError(stored);
  }

  // Drops dead ids in place and returns the list.
  const std::vector<std::size_t>& live(std::vector<std::size_t>& ids) {
    std::erase_if(ids, [&](std::size_t id) { return !entries_[id].alive; });
    return ids;
  }

  bool forward_subsumed(const Atoms& d) {
    for (int a : d)
      if (unit_[static_cast<std::size_t>(a)]) return true;
    if (d.size() <= kSubsetLookupLimit) {
      // Units are covered above, so only subsets of size >= 2 remain.
      const unsigned full = (1u << d.size()) - 1;
      Atoms subset;
      for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        subset.clear();
        for (std::size_t i = 0; i < d.size(); ++i)
          if (mask & (1u << i)) subset.push_back(d[i]);
        if (index_.contains(subset)) return true;
      }
      return false;
    }
    for (int a : d)
      for (std::size_t id : live(occ_[static_cast<std::size_t>(a)]))
        if (std::includes(d.begin(), d.end(), entries_[id].atoms.begin(), entries_[id].atoms.end())) return true;
    return false;
  }

  void backward_subsume(const Atoms& d) {
    auto rarest = std::min_element(d.begin(), d.end(), [&](int a, int b) {
      return occ_[static_cast<std::size_t>(a)].size() < occ_[static_cast<std::size_t>(b)].size();
    });
    for (std::size_t id : live(occ_[static_cast<std::size_t>(*rarest)])) {
      auto& e = entries_[id];
      if (e.atoms.size() > d.size() && std::includes(e.atoms.begin(), e.atoms.end(), d.begin(), d.end())) {
        e.alive = false;
        index_.erase(e.atoms);
        --alive_;
      }
    }
  }

  bool satisfied_by_unit(const Atoms& atoms) const {
    return std::any_of(atoms.begin(), atoms.end(), [&](int a) { return unit_[static_cast<std::size_t>(a)]; });
  }

  // All hyper-resolvents using the given clause in at least one satellite
  // position, minus those already subsumed by the store. Does not modify the
  // store.
  std::vector<Atoms> resolvents_with(std::size_t given) {
    std::vector<Atoms> out;
    std::unordered_set<Atoms, AtomsHash> seen;
    const Atoms g = entries_[given].atoms;

    for (int a : g) {
      for (auto [n, position] : by_neg_[static_cast<std::size_t>(a)]) {
        const Nucleus& nucleus = nuclei_[n];
        // A unit on a head atom subsumes every resolvent of this nucleus.
        if (satisfied_by_unit(nucleus.pos)) continue;

        std::vector<const std::vector<std::size_t>*> choices(nucleus.neg.size(), nullptr);
        bool feasible = true;
        for (std::size_t j = 0; j < nucleus.neg.size() && feasible; ++j) {
          if (j == position) continue;
          choices[j] = &live(active_occ_[static_cast<std::size_t>(nucleus.neg[j])]);
          feasible = !choices[j]->empty();
        }
        if (!feasible) continue;

        Atoms acc = nucleus.pos;
        for (int x : g)
          if (x != a) acc.push_back(x);
        if (combine(nucleus, position, 0, choices, acc, seen, out)) return out;
      }
    }
    return out;
  }

  // Returns true once the empty clause has been produced (out then holds it).
  bool combine(const Nucleus& nucleus, std::size_t fixed, std::size_t j,
               const std::vector<const std::vector<std::size_t>*>& choices, Atoms& acc,
               std::unordered_set<Atoms, AtomsHash>& seen, std::vector<Atoms>& out) {
    if (j == nucleus.neg.size()) {
      ++stats_->resolvents;
      Atoms r = acc;
      normalize(r);
      if (r.empty()) {
        out.assign(1, Atoms{});
        return true;
      }
      if (!forward_subsumed(r) && seen.insert(r).second) out.push_back(std::move(r));
      return false;
    }
    if (j == fixed) return combine(nucleus, fixed, j + 1, choices, acc, seen, out);

    const int atom = nucleus.neg[j];
    for (std::size_t id : *choices[j]) {
      const std::size_t mark = acc.size();
      for (int x : entries_[id].atoms)
        if (x != atom) acc.push_back(x);
      const bool empty = combine(nucleus, fixed, j + 1, choices, acc, seen, out);
      acc.resize(mark);
      if (empty) return true;
    }
    return false;
  }

  std::size_t max_clauses_;
  SaturationStats* stats_;
  bool refuted_ = false;
  std::size_t alive_ = 0;

  std::vector<Nucleus> nuclei_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_neg_;  // atom -> (nucleus, position)

  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> occ_;         // atom -> kept positive clauses
  std::vector<std::vector<std::size_t>> active_occ_;  // atom -> processed positive clauses
  std::vector<bool> unit_;
  std::unordered_map<Atoms, std::size_t, AtomsHash> index_;
  std::set<std::pair<std::size_t, std::size_t>> passive_;  // (size, id)
};

class Engine {
 public:
  Engine(const PropClauseSet& p, const SaturationOptions& options) : input_(p) {
    std::set<std::string> names;
    for (const auto& c : p)
      for (const auto& l : c) names.insert(l.var);
    names_.assign(names.begin(), names.end());
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<int>(i));

    store_.emplace(names_.size(), options.max_clauses, &stats_);
    for (const auto& c : p) {
      Atoms pos, neg;
      for (const auto& l : c) (l.positive() ? pos : neg).push_back(index_.at(l.var));
      if (neg.empty())
        store_->add_positive(std::move(pos), false);
      else
        store_->add_nucleus(std::move(pos), std::move(neg));
    }
  }

  Saturation run() {
    store_->saturate();
    return snapshot(*store_);
  }

  ModelExtraction extract() {
    store_->saturate();
    if (store_->refuted()) return {std::nullopt, snapshot(*store_)};
    if (!search(*store_)) throw std::logic_error("splitting exhausted every choice on an unrefuted saturation");

    Model model;
    store_->for_each_positive([&](const Atoms& atoms, bool) {
      if (atoms.size() != 1) throw std::logic_error("split saturation left a non-unit positive clause");
      model.true_vars.insert(names_[static_cast<std::size_t>(atoms[0])]);
    });
    if (!evaluate(model, input_)) throw std::logic_error("extracted model does not satisfy the input");
    return {std::move(model), snapshot(*store_)};
  }

 private:
  PropClause named(const Atoms& atoms) const {
    std::vector<PropLiteral> lits;
    for (int a : atoms) lits.push_back(pos(names_[static_cast<std::size_t>(a)]));
    return PropClause(std::move(lits));
  }

  // Depth-first over split choices; on success `st` is the final store.
  bool search(Store& st) {
    const auto clause = st.first_nonunit();
    if (!clause) return true;
    for (int atom : *clause) {
      Store next = st;
      ++stats_.splits;
      trail_.push_back({named(*clause), pos(names_[static_cast<std::size_t>(atom)])});
      next.add_positive({atom}, true);
      next.saturate();
      if (!next.refuted() && search(next)) {
        st = std::move(next);
        return true;
      }
      trail_.pop_back();
      ++stats_.backtracks;
    }
    return false;
  }

  Saturation snapshot(const Store& st) const {
    Saturation s;
    s.input = input_;
    s.contains_empty = st.refuted();
    st.for_each_positive([&](const Atoms& atoms, bool derived) {
      s.positive.insert(named(atoms));
      if (derived) s.derived.insert(named(atoms));
    });
    if (s.contains_empty) s.derived.insert(PropClause{});
    s.split_trail = trail_;
    s.stats = stats_;
    return s;
  }

  PropClauseSet input_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  SaturationStats stats_;
  std::optional<Store> store_;
  std::vector<SplitChoice> trail_;
};

}  // namespace

Saturation saturate(const PropClauseSet& p, const SaturationOptions& options) { return Engine(p, options).run(); }

bool is_satisfiable(const PropClauseSet& p, const SaturationOptions& options) {
  return !saturate(p, options).contains_empty;
}

ModelExtraction extract_model(const PropClauseSet& p, const SaturationOptions& options) {
  return Engine(p, options).extract();
}

}  // namespace renamer
