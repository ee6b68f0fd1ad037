#include "renamer/clause.hpp"

#include <algorithm>
#include <optional>

namespace renamer {

Term Term::variable(std::string name) { return Term(true, std::move(name), {}); }

Term Term::apply(std::string function, std::vector<Term> args) {
  return Term(false, std::move(function), std::move(args));
}

bool Term::operator==(const Term& other) const {
  return variable_ == other.variable_ && name_ == other.name_ && args_ == other.args_;
}

Literal positive(std::string predicate, std::vector<Term> args) {
  return Literal{Sign::Positive, std::move(predicate), std::move(args)};
}

Literal negative(std::string predicate, std::vector<Term> args) {
  return Literal{Sign::Negative, std::move(predicate), std::move(args)};
}

namespace {

void print(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_variable() || t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ',';
    print(t.args()[i], out);
  }
  out += ')';
}

std::string print_args(const std::vector<Term>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    print(args[i], out);
  }
  return out;
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Literal& l) {
  std::string out = l.positive() ? "" : "~";
  out += l.predicate;
  if (!l.args.empty()) out += "(" + print_args(l.args) + ")";
  return out;
}

std::string to_string(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.literals()[i]);
  }
  return out + ".";
}

std::strong_ordering canonical_compare(const Literal& a, const Literal& b) {
  if (a.sign != b.sign) return a.positive() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return print_args(a.args) <=> print_args(b.args);
}

Clause::Clause(std::initializer_list<Literal> literals) {
  for (const auto& l : literals) insert(l);
}

Clause::Clause(std::vector<Literal> literals) {
  for (auto& l : literals) insert(std::move(l));
}

bool Clause::insert(Literal literal) {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), literal,
                             [](const Literal& a, const Literal& b) { return canonical_compare(a, b) < 0; });
  if (it != literals_.end() && *it == literal) return false;
  literals_.insert(it, std::move(literal));
  return true;
}

std::size_t Clause::positive_count() const {
  return static_cast<std::size_t>(std::count_if(literals_.begin(), literals_.end(),
                                                [](const Literal& l) { return l.positive(); }));
}

Clause positive_part(const Clause& c) {
  Clause out;
  for (const auto& l : c)
    if (l.positive()) out.insert(l);
  return out;
}

Clause negative_part(const Clause& c) {
  Clause out;
  for (const auto& l : c)
    if (!l.positive()) out.insert(l);
  return out;
}

ArityConflict::ArityConflict(Kind kind, std::string symbol, std::size_t first, std::size_t second)
    : std::runtime_error((kind == Kind::Predicate ? "predicate '" : "function '") + symbol +
                         "' used with arity " + std::to_string(first) + " and arity " +
                         std::to_string(second)),
      kind_(kind),
      symbol_(std::move(symbol)),
      first_(first),
      second_(second) {}

namespace {

using Signature = std::map<std::string, std::size_t>;

void collect_functions(const Term& t, Signature& functions, Signature& added) {
  if (t.is_variable()) return;
  auto [it, inserted] = functions.emplace(t.name(), t.arity());
  if (inserted) {
    added.emplace(t.name(), t.arity());
  } else if (it->second != t.arity()) {
    throw ArityConflict(ArityConflict::Kind::Function, t.name(), it->second, t.arity());
  }
  for (const auto& a : t.args()) collect_functions(a, functions, added);
}

}  // namespace

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses) {
  for (const auto& c : clauses) add(c);
}

bool ClauseSet::add(Clause clause) {
  if (std::find(clauses_.begin(), clauses_.end(), clause) != clauses_.end()) return false;

  // Validate against a scratch copy so a conflict leaves the set untouched.
  Signature preds = predicates_;
  Signature funcs = functions_;
  Signature added;
  for (const auto& l : clause) {
    auto [it, inserted] = preds.emplace(l.predicate, l.args.size());
    if (!inserted && it->second != l.args.size())
      throw ArityConflict(ArityConflict::Kind::Predicate, l.predicate, it->second, l.args.size());
    for (const auto& a : l.args) collect_functions(a, funcs, added);
  }
  predicates_ = std::move(preds);
  functions_ = std::move(funcs);
  clauses_.push_back(std::move(clause));
  return true;
}

std::vector<std::string> ClauseSet::predicate_names() const {
  std::vector<std::string> out;
  out.reserve(predicates_.size());
  for (const auto& [name, arity] : predicates_) out.push_back(name);
  return out;
}

bool operator==(const ClauseSet& a, const ClauseSet& b) {
  if (a.size() != b.size()) return false;
  // Both sides are duplicate-free, so containment one way suffices.
  return std::all_of(a.begin(), a.end(), [&](const Clause& c) {
    return std::find(b.begin(), b.end(), c) != b.end();
  });
}

// Metrics.

namespace {

void collect_vars(const Term& t, VariableSet& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

// Occurrence depths of v below t, nullopt when v does not occur.
std::optional<std::size_t> deepest(std::string_view v, const Term& t) {
  if (t.is_variable()) return t.name() == v ? std::optional<std::size_t>(0) : std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& a : t.args())
    if (auto d = deepest(v, a)) best = std::max(best.value_or(0), *d + 1);
  return best;
}

std::optional<std::size_t> shallowest(std::string_view v, const Term& t) {
  if (t.is_variable()) return t.name() == v ? std::optional<std::size_t>(0) : std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& a : t.args())
    if (auto d = shallowest(v, a)) best = best ? std::min(*best, *d + 1) : *d + 1;
  return best;
}

template <typename Fn>
std::optional<std::size_t> combine_args(const std::vector<Term>& args, Fn fn, bool take_max) {
  std::optional<std::size_t> best;
  for (const auto& a : args) {
    auto d = fn(a);
    if (!d) continue;
    best = !best ? *d : (take_max ? std::max(*best, *d) : std::min(*best, *d));
  }
  return best;
}

std::optional<std::size_t> deepest(std::string_view v, const Literal& l) {
  return combine_args(l.args, [&](const Term& t) { return deepest(v, t); }, true);
}

std::optional<std::size_t> shallowest(std::string_view v, const Literal& l) {
  return combine_args(l.args, [&](const Term& t) { return shallowest(v, t); }, false);
}

std::size_t require(std::optional<std::size_t> d, std::string_view v) {
  if (!d) throw AbsentVariable(v);
  return *d;
}

}  // namespace

VariableSet vars(const Term& t) {
  VariableSet out;
  collect_vars(t, out);
  return out;
}

VariableSet vars(const Literal& l) {
  VariableSet out;
  for (const auto& a : l.args) collect_vars(a, out);
  return out;
}

VariableSet vars(const Clause& c) {
  VariableSet out;
  for (const auto& l : c)
    for (const auto& a : l.args) collect_vars(a, out);
  return out;
}

std::size_t depth(const Term& t) {
  if (t.is_variable() || t.args().empty()) return 0;
  std::size_t d = 0;
  for (const auto& a : t.args()) d = std::max(d, depth(a));
  return d + 1;
}

std::size_t depth(const Literal& l) {
  std::size_t d = 0;
  for (const auto& a : l.args) d = std::max(d, depth(a));
  return d;
}

std::size_t depth(const Clause& c) {
  std::size_t d = 0;
  for (const auto& l : c) d = std::max(d, depth(l));
  return d;
}

std::size_t occ(std::string_view v, const Term& t) {
  if (t.is_variable()) return t.name() == v ? 1 : 0;
  std::size_t n = 0;
  for (const auto& a : t.args()) n += occ(v, a);
  return n;
}

std::size_t occ(std::string_view v, const Literal& l) {
  std::size_t n = 0;
  for (const auto& a : l.args) n += occ(v, a);
  return n;
}

std::size_t occ(std::string_view v, const Clause& c) {
  std::size_t n = 0;
  for (const auto& l : c) n += occ(v, l);
  return n;
}

AbsentVariable::AbsentVariable(std::string_view variable)
    : std::invalid_argument("variable " + std::string(variable) + " does not occur") {}

std::size_t tmax(std::string_view v, const Term& t) { return require(deepest(v, t), v); }
std::size_t tmax(std::string_view v, const Literal& l) { return require(deepest(v, l), v); }

std::size_t tmax(std::string_view v, const Clause& c) {
  std::optional<std::size_t> best;
  for (const auto& l : c)
    if (auto d = deepest(v, l)) best = std::max(best.value_or(0), *d);
  return require(best, v);
}

std::size_t tmin(std::string_view v, const Term& t) { return require(shallowest(v, t), v); }
std::size_t tmin(std::string_view v, const Literal& l) { return require(shallowest(v, l), v); }

std::size_t tmin(std::string_view v, const Clause& c) {
  std::optional<std::size_t> best;
  for (const auto& l : c)
    if (auto d = shallowest(v, l)) best = best ? std::min(*best, *d) : *d;
  return require(best, v);
}

// Renamings.

Literal dual(const Literal& l) { return Literal{flip(l.sign), l.predicate, l.args}; }

std::string to_string(const Renaming& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : r.predicates()) {
    if (!first) out += ", ";
    out += p;
    first = false;
  }
  return out + "}";
}

bool shortlex_less(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Literal apply_renaming(const Renaming& r, const Literal& l) {
  return r.contains(l.predicate) ? dual(l) : l;
}

Clause apply_renaming(const Renaming& r, const Clause& c) {
  Clause out;
  for (const auto& l : c) out.insert(apply_renaming(r, l));
  return out;
}

ClauseSet apply_renaming(const Renaming& r, const ClauseSet& s) {
  for (const auto& p : r.predicates())
    if (!s.predicates().contains(p))
      throw std::invalid_argument("renaming mentions predicate '" + p + "' which does not occur in the clause set");
  ClauseSet out;
  for (const auto& c : s) out.add(apply_renaming(r, c));
  return out;
}

}  // namespace renamer
