// End-to-end acceptance run: one PASS/FAIL line per criterion, with timings.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "renamer/cli.hpp"
#include "renamer/dimacs.hpp"
#include "renamer/encoders.hpp"
#include "renamer/generator.hpp"
#include "renamer/membership.hpp"
#include "renamer/models.hpp"
#include "renamer/oracle.hpp"
#include "renamer/saturation.hpp"
#include "renamer/syntax.hpp"

namespace {

using namespace renamer;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr ClassTag kClasses[] = {ClassTag::Horn, ClassTag::Occ1n, ClassTag::Pvd};

// Every renaming produced anywhere in the run is routed through here.
struct SelfCheck {
  std::size_t checked = 0;
  std::size_t failed = 0;

  void operator()(ClassTag tag, const ClauseSet& s, const Renaming& r) {
    ++checked;
    if (!check_membership(tag, apply_renaming(r, s)).member) ++failed;
  }
} self_check;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "renamer_acceptance";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Renaming parse_renaming(const std::string& text) {
  std::set<std::string> names;
  std::istringstream parts(text.substr(1, text.size() - 2));
  for (std::string name; std::getline(parts, name, ',');) {
    name.erase(0, name.find_first_not_of(' '));
    if (!name.empty()) names.insert(name);
  }
  return Renaming(names);
}

std::vector<Renaming> encoding_renamings(const ClauseSet& s, ClassTag tag) {
  std::vector<Renaming> out;
  for (const auto& m : enumerate_models(encode(tag, s), s.predicate_names(), 0).models) {
    out.push_back(renaming_of(m));
    self_check(tag, s, out.back());
  }
  return out;
}

const char* kFourClauses =
    "p(X) | q(X) | r(X).\n"
    "~p(Y) | q(Y).\n"
    "~r(X).\n"
    "~p(X) | ~q(X).\n";

Outcome four_clause_golden() {
  Outcome o;
  const ClauseSet s = parse_clause_set(kFourClauses);
  const PropClauseSet expected{{pos("p"), pos("q")}, {pos("p"), pos("r")}, {pos("q"), pos("r")},
                               {neg("p"), pos("q")}, {neg("p"), neg("q")}};
  o.require(encode_horn(s) == expected, "encoding differs: " + to_string(encode_horn(s)));

  const auto check = cli_run({"check", "--class", "horn", "--rename", write_scratch("four.cls", kFourClauses)});
  o.require(check.code == cli::kYes && check.out == "RENAMABLE {q, r}\n", "check printed: " + check.out);
  if (check.code == cli::kYes) self_check(ClassTag::Horn, s, parse_renaming(check.out.substr(10, check.out.size() - 11)));

  const auto all = encoding_renamings(s, ClassTag::Horn);
  o.require(all == std::vector<Renaming>{{"q", "r"}}, "enumeration did not return exactly {q, r}");
  return o;
}

Outcome pvd_golden() {
  Outcome o;
  const ClauseSet s = parse_clause_set("p(f(X),Y) | q(f(X),f(Y)) | ~r(X,f(Y)).");
  const PropClauseSet expected{{pos("p"), pos("q")}, {pos("q"), neg("r")}};
  o.require(encode_pvd(s) == expected, "encoding differs: " + to_string(encode_pvd(s)));
  const auto all = encoding_renamings(s, ClassTag::Pvd);
  o.require(all == std::vector<Renaming>{{"p"}, {"q"}, {"p", "q"}, {"q", "r"}, {"p", "q", "r"}},
            "model list differs");
  return o;
}

Outcome intro_golden() {
  Outcome o;
  const std::string text = "p(X) | q(X).\n~p(Y) | ~q(Y).\n";
  const ClauseSet s = parse_clause_set(text);
  o.require(!is_horn(s).member, "intro example is Horn");
  const auto r = cli_run({"enumerate", "--class", "horn", write_scratch("intro.cls", text)});
  o.require(r.code == cli::kYes && r.out == "{p}\n{q}\n", "enumerate printed: " + r.out);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) self_check(ClassTag::Horn, s, parse_renaming(line));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    InstanceGenerator gen(seed);
    const ClauseSet s = gen.clause_set();
    for (auto tag : kClasses) {
      const auto oracle = brute_force_renamings(s, tag);
      for (const auto& r : oracle) self_check(tag, s, r);
      o.require(encoding_renamings(s, tag) == oracle,
                "seed " + std::to_string(seed) + " class " + std::string(to_string(tag)));

      // The decision path agrees with the oracle as well.
      const ModelExtraction m = extract_model(encode(tag, s));
      o.require(m.model.has_value() == !oracle.empty(), "extract_model disagrees, seed " + std::to_string(seed));
      if (m.model) self_check(tag, s, renaming_of(*m.model));
    }
  }
  o.detail = o.pass ? "600 clause sets x 3 classes" : o.detail;
  return o;
}

Outcome saturation_soundness() {
  Outcome o;
  std::size_t sat = 0;
  for (std::uint64_t seed = 1; seed <= 1200; ++seed) {
    InstanceGenerator gen(seed);
    const PropClauseSet p = gen.cnf(12, 40, 4);
    const bool expected = truth_table_sat(p);
    o.require(is_satisfiable(p) == expected, "disagreement, seed " + std::to_string(seed));
    const ModelExtraction m = extract_model(p);
    o.require(m.model.has_value() == expected, "extract_model disagreement, seed " + std::to_string(seed));
    if (m.model) o.require(evaluate(*m.model, p), "model fails evaluate, seed " + std::to_string(seed));
    sat += expected;
  }
  if (o.pass) o.detail = "1200 CNFs, " + std::to_string(sat) + " satisfiable";
  return o;
}

Outcome krom_bound() {
  Outcome o;
  std::ostringstream peaks;
  for (std::size_t n : {25, 50, 100}) {
    std::size_t worst = 0;
    // Clause counts of n/2, n and 2n give mostly satisfiable, mixed and
    // mostly unsatisfiable inputs respectively.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      InstanceGenerator gen(seed * 1000 + n);
      const PropClauseSet p = gen.krom(n, n * (seed % 3 + 1) / 2);
      const std::size_t bound = n + n * (n - 1) / 2 + 1;
      const Saturation sat = saturate(p);
      const ModelExtraction m = extract_model(p);
      worst = std::max({worst, sat.stats.peak_positive, m.saturation.stats.peak_positive});
      o.require(sat.stats.peak_positive <= bound && m.saturation.stats.peak_positive <= bound,
                "bound exceeded at n=" + std::to_string(n));
      if (m.model) o.require(evaluate(*m.model, p), "bad Krom model");
    }
    peaks << " n=" << n << " peak " << worst << "/" << (n + n * (n - 1) / 2 + 1);
  }

  InstanceGenerator gen(2024);
  const ClauseSet s = gen.renamable_horn(100, 500, 4);
  const std::string f = write_scratch("horn100.cls", serialize_clause_set(s));
  const auto start = Clock::now();
  const auto r = cli_run({"check", "--class", "horn", "--rename", f});
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(r.code == cli::kYes && r.out.rfind("RENAMABLE ", 0) == 0, "100-predicate instance: " + r.out);
  if (r.code == cli::kYes && r.out.rfind("RENAMABLE ", 0) == 0)
    self_check(ClassTag::Horn, s, parse_renaming(r.out.substr(10, r.out.size() - 11)));
  o.require(secs < 2.0, "100-predicate check took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d.precision(3);
    d << peaks.str().substr(1) << "; 100x500 check " << std::fixed << secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome reduction_transfer() {
  Outcome o;
  std::size_t sat = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    InstanceGenerator gen(seed + 50'000);
    const PropClauseSet f = gen.cnf(12, 30, 3);
    const ClauseSet s = reduce_cnf_to_pvd(f);
    o.require(encode_pvd(s) == f, "encode_pvd . reduce differs, seed " + std::to_string(seed));
    const bool expected = truth_table_sat(f);
    o.require(brute_force_renamings(s, ClassTag::Pvd).empty() != expected,
              "brute-force transfer fails, seed " + std::to_string(seed));
    const ModelExtraction m = extract_model(encode_pvd(s));
    o.require(m.model.has_value() == expected, "transfer fails, seed " + std::to_string(seed));
    if (m.model) self_check(ClassTag::Pvd, s, renaming_of(*m.model));
    sat += expected;
  }
  if (o.pass) o.detail = "300 CNFs, " + std::to_string(sat) + " satisfiable";
  return o;
}

Outcome self_verification() {
  Outcome o;
  // A final sweep through the CLI, whose printed renamings are re-checked here.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    InstanceGenerator gen(seed + 90'000);
    const ClauseSet s = gen.clause_set();
    const std::string f = write_scratch("sweep.cls", serialize_clause_set(s));
    for (auto tag : kClasses) {
      const auto r = cli_run({"check", "--class", std::string(to_string(tag)), "--rename", f});
      if (r.out.rfind("RENAMABLE ", 0) == 0) self_check(tag, s, parse_renaming(r.out.substr(10, r.out.size() - 11)));
      if (r.out == "MEMBER\n") self_check(tag, s, Renaming{});
    }
  }
  o.require(self_check.failed == 0, std::to_string(self_check.failed) + " renamings failed membership");
  if (o.pass) o.detail = std::to_string(self_check.checked) + " renamings re-checked, 0 failures";
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    InstanceGenerator gen(seed + 70'000);
    const ClauseSet s = gen.clause_set();
    const std::string text = serialize_clause_set(s);
    o.require(parse_clause_set(text).clauses() == s.clauses(), "clause-set round trip, seed " + std::to_string(seed));

    const PropClauseSet p = gen.cnf(12, 30, 5);
    o.require(parse_dimacs(emit_dimacs(p)) == p, "DIMACS round trip, seed " + std::to_string(seed));
  }
  if (o.pass) o.detail = "500 clause sets, 500 CNFs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds; 0 = none
  };
  const Criterion criteria[] = {
      {"four-clause Horn example", four_clause_golden, 1.0},
      {"PVD worked clause", pvd_golden, 1.0},
      {"introductory example", intro_golden, 0.0},
      {"encodings match brute force", oracle_equivalence, 60.0},
      {"hyper-resolution soundness", saturation_soundness, 0.0},
      {"Krom clause bound", krom_bound, 0.0},
      {"SAT reduction transfer", reduction_transfer, 0.0},
      {"self-verification", self_verification, 0.0},
      {"format round trips", round_trips, 0.0},
  };

  bool all = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.time_limit) + " s limit)";
    }
    all = all && o.pass;
    std::printf("%s %d %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.detail.c_str());
  }
  fs::remove_all(scratch_dir());
  return all ? 0 : 1;
}
