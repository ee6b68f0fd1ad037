#include "renamer/encoders.hpp"

#include <algorithm>

namespace renamer {

PropClauseSet encode_horn(const ClauseSet& s) {
  PropClauseSet out;
  for (const auto& c : s) {
    const auto& lits = c.literals();
    for (std::size_t i = 0; i < lits.size(); ++i)
      for (std::size_t j = i + 1; j < lits.size(); ++j) out.insert(PropClause{skeleton(lits[i]), skeleton(lits[j])});
  }
  return out;
}

namespace {

bool is_nonlinear(const Literal& l) {
  const auto vs = vars(l);
  return std::any_of(vs.begin(), vs.end(), [&](const std::string& v) { return occ(v, l) > 1; });
}

bool share_variable(const VariableSet& a, const VariableSet& b) {
  return std::any_of(a.begin(), a.end(), [&](const std::string& v) { return b.contains(v); });
}

// Some v in both with tmax(v, l) > tmin(v, other).
bool deeper_somewhere(const Literal& l, const VariableSet& l_vars, const Literal& other, const VariableSet& other_vars) {
  return std::any_of(l_vars.begin(), l_vars.end(), [&](const std::string& v) {
    return other_vars.contains(v) && tmax(v, l) > tmin(v, other);
  });
}

}  // namespace

PropClauseSet encode_occ1n(const ClauseSet& s) {
  PropClauseSet out;
  for (const auto& c : s) {
    const auto& lits = c.literals();
    std::vector<VariableSet> lit_vars;
    lit_vars.reserve(lits.size());
    for (const auto& l : lits) lit_vars.push_back(vars(l));

    for (const auto& l : lits)
      if (is_nonlinear(l)) out.insert(PropClause{skeleton(l)});

    for (std::size_t i = 0; i < lits.size(); ++i)
      for (std::size_t j = i + 1; j < lits.size(); ++j)
        if (share_variable(lit_vars[i], lit_vars[j])) out.insert(PropClause{skeleton(lits[i]), skeleton(lits[j])});

    // Ordered pairs; i == j would only give a tautology.
    for (std::size_t i = 0; i < lits.size(); ++i)
      for (std::size_t j = 0; j < lits.size(); ++j)
        if (i != j && deeper_somewhere(lits[i], lit_vars[i], lits[j], lit_vars[j]))
          out.insert(PropClause{skeleton(lits[i]), dual(skeleton(lits[j]))});
  }
  return out;
}

Clause max_depth_literals(const Clause& c, std::string_view v) {
  const auto deepest = tmax(v, c);
  Clause out;
  for (const auto& l : c)
    if (occ(v, l) > 0 && tmax(v, l) == deepest) out.insert(l);
  return out;
}

PropClauseSet encode_pvd(const ClauseSet& s) {
  PropClauseSet out;
  for (const auto& c : s)
    for (const auto& v : vars(c)) out.insert(skeleton(max_depth_literals(c, v)));
  return out;
}

PropClauseSet encode(ClassTag tag, const ClauseSet& s) {
  switch (tag) {
    case ClassTag::Horn: return encode_horn(s);
    case ClassTag::Occ1n: return encode_occ1n(s);
    case ClassTag::Pvd: return encode_pvd(s);
  }
  return {};
}

}  // namespace renamer
