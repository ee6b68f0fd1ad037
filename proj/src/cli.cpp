#include "renamer/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "renamer/dimacs.hpp"
#include "renamer/encoders.hpp"
#include "renamer/membership.hpp"
#include "renamer/models.hpp"
#include "renamer/oracle.hpp"
#include "renamer/saturation.hpp"
#include "renamer/syntax.hpp"

namespace renamer::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ClauseSet load_clause_set(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_clause_set(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

DimacsDocument load_dimacs(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return read_dimacs(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

// Applies r and re-runs the direct membership check; a failure here means an
// encoder or the solver is wrong, never the input.
void verify(ClassTag tag, const ClauseSet& s, const Renaming& r) {
  if (!check_membership(tag, apply_renaming(r, s)).member)
    throw std::logic_error("renaming " + to_string(r) + " does not yield a " + std::string(to_string(tag)) + " set");
}

int check(ClassTag tag, bool rename, const std::string& file, const SaturationOptions& options, std::ostream& out,
          std::ostream& err) {
  const ClauseSet s = load_clause_set(file);
  const Verdict verdict = check_membership(tag, s);
  if (verdict.member) {
    out << "MEMBER\n";
    return kYes;
  }
  if (!rename) {
    out << "NOT_MEMBER\n";
    for (const auto& v : verdict.violations) out << describe(v) << "\n";
    return kNo;
  }

  const PropClauseSet encoding = encode(tag, s);
  const ModelExtraction extraction = extract_model(encoding, options);
  if (!extraction.model) {
    out << "NOT_RENAMABLE\n";
    return kNo;
  }
  const Renaming r = renaming_of(*extraction.model);
  verify(tag, s, r);
  out << "RENAMABLE " << to_string(r) << "\n";

  const auto constrained = encoding.variables();
  const std::set<std::string> used(constrained.begin(), constrained.end());
  std::set<std::string> free;
  for (const auto& p : s.predicate_names())
    if (!used.contains(p)) free.insert(p);
  if (!free.empty()) err << "note: unconstrained predicates (don't care): " << to_string(Renaming(free)) << "\n";
  return kYes;
}

int enumerate(ClassTag tag, std::size_t limit, const std::string& file, std::ostream& out) {
  const ClauseSet s = load_clause_set(file);
  const ModelList list = enumerate_models(encode(tag, s), s.predicate_names(), limit);
  for (const auto& m : list.models) {
    const Renaming r = renaming_of(m);
    verify(tag, s, r);
    out << to_string(r) << "\n";
  }
  if (list.truncated) out << "TRUNCATED\n";
  return list.models.empty() ? kNo : kYes;
}

int encode_cmd(ClassTag tag, const std::string& file, std::ostream& out) {
  out << emit_dimacs(encode(tag, load_clause_set(file)));
  return kYes;
}

int solve(bool print_model, const std::string& file, const SaturationOptions& options, std::ostream& out) {
  const DimacsDocument doc = load_dimacs(file);
  const PropClauseSet p = doc.to_clause_set();
  if (!print_model) {
    const bool sat = is_satisfiable(p, options);
    out << (sat ? "SAT\n" : "UNSAT\n");
    return sat ? kYes : kNo;
  }
  const ModelExtraction extraction = extract_model(p, options);
  if (!extraction.model) {
    out << "UNSAT\n";
    return kNo;
  }
  out << "SAT\nv";
  for (const auto& name : doc.names) out << " " << (extraction.model->holds(name) ? "" : "-") << name;
  out << "\n";
  return kYes;
}

int reduce(const std::string& file, std::ostream& out) {
  const DimacsDocument doc = load_dimacs(file);
  try {
    out << serialize_clause_set(reduce_cnf_to_pvd(doc.to_clause_set()));
  } catch (const std::invalid_argument& e) {
    throw InputError(file + ": " + e.what());
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide membership in and renamability to the Horn, OCC1N and PVD clause classes."};
  app.name("renamer");
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t max_clauses = kDefaultMaxClauses;
  app.add_option("--max-clauses", max_clauses, "Ceiling on stored clauses during saturation")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> classes{"horn", "occ1n", "pvd"};
  std::string class_name;
  bool rename = false;
  bool model = false;
  std::size_t limit = 100;
  std::string file;

  auto* check_cmd = app.add_subcommand("check", "Test class membership, or with --rename find a renaming");
  check_cmd->add_option("--class", class_name, "horn, occ1n or pvd")->required()->check(CLI::IsMember(classes));
  check_cmd->add_flag("--rename", rename, "Search for a renaming into the class");
  check_cmd->add_option("file", file, "Clause-set file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every renaming into the class");
  enumerate_cmd->add_option("--class", class_name, "horn, occ1n or pvd")->required()->check(CLI::IsMember(classes));
  enumerate_cmd->add_option("--limit", limit, "Stop after N renamings (0 = no limit)")->capture_default_str();
  enumerate_cmd->add_option("file", file, "Clause-set file")->required();

  auto* encode_cmd_app = app.add_subcommand("encode", "Print the propositional renamability encoding as DIMACS");
  encode_cmd_app->add_option("--class", class_name, "horn, occ1n or pvd")->required()->check(CLI::IsMember(classes));
  encode_cmd_app->add_option("file", file, "Clause-set file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide a DIMACS CNF by hyper-resolution");
  solve_cmd->add_flag("--model", model, "Print a satisfying assignment");
  solve_cmd->add_option("file", file, "DIMACS file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Turn a DIMACS CNF into an equisatisfiable PVD-renamability instance");
  reduce_cmd->add_option("file", file, "DIMACS file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "renamer: " << e.what() << "\n";
    return kInputError;
  }

  const SaturationOptions options{max_clauses};
  const ClassTag tag = parse_class_tag(class_name).value_or(ClassTag::Horn);
  try {
    if (check_cmd->parsed()) return check(tag, rename, file, options, out, err);
    if (enumerate_cmd->parsed()) return enumerate(tag, limit, file, out);
    if (encode_cmd_app->parsed()) return encode_cmd(tag, file, out);
    if (solve_cmd->parsed()) return solve(model, file, options, out);
    if (reduce_cmd->parsed()) return reduce(file, out);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimitError& e) {
    err << "renamer: " << e.what() << "; saturation stopped (raise --max-clauses to continue)\n";
    return kResourceLimit;
  }
  return kInputError;
}

}  // namespace renamer::cli
