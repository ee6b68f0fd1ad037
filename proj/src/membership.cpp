#include "renamer/membership.hpp"

namespace renamer {

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Horn: return "horn";
    case ClassTag::Occ1n: return "occ1n";
    case ClassTag::Pvd: return "pvd";
  }
  return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view text) {
  if (text == "horn") return ClassTag::Horn;
  if (text == "occ1n") return ClassTag::Occ1n;
  if (text == "pvd") return ClassTag::Pvd;
  return std::nullopt;
}

std::string_view label(Condition c) {
  switch (c) {
    case Condition::HornPositiveCount: return "HORN";
    case Condition::Occ1nLinearity: return "OCC1N(a)";
    case Condition::Occ1nDepth: return "OCC1N(b)";
    case Condition::PvdCoverage:
    case Condition::PvdDepth: return "PVD";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::string out = "clause " + std::to_string(v.clause_index + 1) + " violates " + std::string(label(v.condition));
  if (!v.variable.empty()) out += " for " + v.variable;
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

namespace {

void add(Verdict& verdict, std::size_t index, Condition condition, std::string variable, std::string detail) {
  verdict.member = false;
  verdict.violations.push_back({index, condition, std::move(variable), std::move(detail)});
}

}  // namespace

Verdict is_horn(const ClauseSet& s) {
  Verdict verdict;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto n = s[i].positive_count();
    if (n > 1) add(verdict, i, Condition::HornPositiveCount, "", std::to_string(n) + " positive literals");
  }
  return verdict;
}

Verdict is_occ1n(const ClauseSet& s) {
  Verdict verdict;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Clause pos = positive_part(s[i]);
    const Clause neg = negative_part(s[i]);
    const VariableSet pos_vars = vars(pos);
    const VariableSet neg_vars = vars(neg);
    for (const auto& v : pos_vars) {
      if (auto n = occ(v, pos); n != 1)
        add(verdict, i, Condition::Occ1nLinearity, v, "occurs " + std::to_string(n) + " times in the positive part");
    }
    for (const auto& v : pos_vars) {
      if (!neg_vars.contains(v)) continue;
      const auto hi = tmax(v, pos);
      const auto lo = tmin(v, neg);
      if (hi > lo)
        add(verdict, i, Condition::Occ1nDepth, v,
            "positive depth " + std::to_string(hi) + " exceeds minimal negative depth " + std::to_string(lo));
    }
  }
  return verdict;
}

Verdict is_pvd(const ClauseSet& s) {
  Verdict verdict;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Clause pos = positive_part(s[i]);
    const Clause neg = negative_part(s[i]);
    const VariableSet neg_vars = vars(neg);
    for (const auto& v : vars(pos)) {
      if (!neg_vars.contains(v)) {
        add(verdict, i, Condition::PvdCoverage, v, "does not occur in the negative part");
        continue;
      }
      const auto hi = tmax(v, pos);
      const auto lo = tmax(v, neg);
      if (hi > lo)
        add(verdict, i, Condition::PvdDepth, v,
            "positive depth " + std::to_string(hi) + " exceeds maximal negative depth " + std::to_string(lo));
    }
  }
  return verdict;
}

Verdict check_membership(ClassTag tag, const ClauseSet& s) {
  switch (tag) {
    case ClassTag::Horn: return is_horn(s);
    case ClassTag::Occ1n: return is_occ1n(s);
    case ClassTag::Pvd: return is_pvd(s);
  }
  return {};
}

}  // namespace renamer
