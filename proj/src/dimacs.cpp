#include "renamer/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace renamer {

PropClauseSet DimacsDocument::to_clause_set() const {
  PropClauseSet out;
  for (const auto& clause : clauses) {
    std::vector<PropLiteral> lits;
    lits.reserve(clause.size());
    for (int lit : clause) {
      const auto& name = names.at(static_cast<std::size_t>(std::abs(lit)) - 1);
      lits.push_back(lit > 0 ? pos(name) : neg(name));
    }
    out.insert(PropClause(std::move(lits)));
  }
  return out;
}

std::string DimacsDocument::text() const {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += "c map " + std::to_string(i + 1) + " " + names[i] + "\n";
  out += "p cnf " + std::to_string(variable_count) + " " + std::to_string(clauses.size()) + "\n";
  for (const auto& clause : clauses) {
    for (int lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

DimacsDocument to_dimacs(const PropClauseSet& p) {
  DimacsDocument doc;
  doc.names = p.variables();
  doc.variable_count = doc.names.size();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < doc.names.size(); ++i) index.emplace(doc.names[i], static_cast<int>(i + 1));
  for (const auto& c : p) {
    std::vector<int> clause;
    for (const auto& l : c) clause.push_back(l.positive() ? index.at(l.var) : -index.at(l.var));
    doc.clauses.push_back(std::move(clause));
  }
  return doc;
}

std::string emit_dimacs(const PropClauseSet& p) { return to_dimacs(p).text(); }

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<long long> to_integer(std::string_view word) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

}  // namespace

DimacsDocument read_dimacs(std::string_view text) {
  DimacsDocument doc;
  std::map<long long, std::pair<std::string, std::size_t>> mapped;  // index -> (name, line)
  std::optional<std::size_t> declared_clauses;
  std::vector<int> open;
  std::size_t open_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "c") {
      if (words.size() >= 2 && words[1] == "map") {
        const auto index = words.size() == 4 ? to_integer(words[2]) : std::nullopt;
        if (!index || *index < 1) throw ParseError({line_no, 1}, "malformed map comment");
        const std::string name(words[3]);
        if (!is_identifier(name)) throw ParseError({line_no, 1}, "mapped name '" + name + "' is not an identifier");
        if (!mapped.emplace(*index, std::make_pair(name, line_no)).second)
          throw ParseError({line_no, 1}, "variable " + std::to_string(*index) + " mapped twice");
      }
      continue;
    }
    if (words[0] == "p") {
      if (declared_clauses) throw ParseError({line_no, 1}, "duplicate header");
      const auto vars = words.size() == 4 ? to_integer(words[2]) : std::nullopt;
      const auto count = words.size() == 4 ? to_integer(words[3]) : std::nullopt;
      if (words.size() != 4 || words[1] != "cnf" || !vars || !count || *vars < 0 || *count < 0 ||
          *vars > std::numeric_limits<int>::max())
        throw ParseError({line_no, 1}, "malformed header, expected 'p cnf <variables> <clauses>'");
      doc.variable_count = static_cast<std::size_t>(*vars);
      declared_clauses = static_cast<std::size_t>(*count);
      continue;
    }
    if (!declared_clauses) throw ParseError({line_no, 1}, "clause before 'p cnf' header");
    for (auto word : words) {
      const auto lit = to_integer(word);
      const std::size_t column = static_cast<std::size_t>(word.data() - line.data()) + 1;
      if (!lit) throw ParseError({line_no, column}, "expected integer literal, found '" + std::string(word) + "'");
      if (*lit == 0) {
        doc.clauses.push_back(std::move(open));
        open.clear();
        continue;
      }
      if (static_cast<unsigned long long>(std::llabs(*lit)) > doc.variable_count)
        throw ParseError({line_no, column}, "literal " + std::string(word) + " out of range 1.." +
                                                std::to_string(doc.variable_count));
      if (open.empty()) open_line = line_no;
      open.push_back(static_cast<int>(*lit));
    }
  }

  if (!declared_clauses) throw ParseError({line_no, 1}, "missing 'p cnf' header");
  if (!open.empty()) throw ParseError({open_line, 1}, "clause not terminated by 0");
  if (doc.clauses.size() != *declared_clauses)
    throw ParseError({line_no, 1}, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                                       std::to_string(doc.clauses.size()));

  std::set<std::string> used;
  doc.names.resize(doc.variable_count);
  for (const auto& [index, entry] : mapped) {
    if (static_cast<std::size_t>(index) > doc.variable_count)
      throw ParseError({entry.second, 1}, "mapped variable " + std::to_string(index) + " out of range");
    doc.names[static_cast<std::size_t>(index) - 1] = entry.first;
  }
  for (std::size_t i = 0; i < doc.names.size(); ++i)
    if (doc.names[i].empty()) doc.names[i] = "v" + std::to_string(i + 1);
  for (std::size_t i = 0; i < doc.names.size(); ++i)
    if (!used.insert(doc.names[i]).second)
      throw ParseError({1, 1}, "name '" + doc.names[i] + "' assigned to more than one variable");
  return doc;
}

PropClauseSet parse_dimacs(std::string_view text) { return read_dimacs(text).to_clause_set(); }

}  // namespace renamer
