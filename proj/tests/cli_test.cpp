#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "renamer/cli.hpp"
#include "renamer/clause.hpp"
#include "renamer/membership.hpp"
#include "renamer/oracle.hpp"
#include "renamer/syntax.hpp"

namespace renamer {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("renamer_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  static Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kFourClauses =
    "p(X) | q(X) | r(X).\n"
    "~p(Y) | q(Y).\n"
    "~r(X).\n"
    "~p(X) | ~q(X).\n";
const char* kIntro = "p(X) | q(X).\n~p(Y) | ~q(Y).\n";
const char* kPvdClause = "p(f(X),Y) | q(f(X),f(Y)) | ~r(X,f(Y)).\n";
// Horn encoding forces p <-> q and exactly one of them; confirmed empty by
// the brute-force oracle in NotRenamableInstanceIsPinned.
const char* kNotRenamable =
    "p(X) | q(X).\n~p(Y) | ~q(Y).\np(Z) | q(Z) | r(Z).\n~p(W) | q(W).\np(W) | ~q(W).\n";

TEST_F(CliTest, CheckHornRename) {
  const auto r = run({"check", "--class", "horn", "--rename", file("s.cls", kFourClauses)});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "RENAMABLE {q, r}\n");
}

TEST_F(CliTest, CheckHornWithoutRename) {
  const auto r = run({"check", "--class", "horn", file("s.cls", kFourClauses)});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.out, "NOT_MEMBER\nclause 1 violates HORN: 3 positive literals\n");
}

TEST_F(CliTest, CheckMemberWithRenameStaysMember) {
  const auto r = run({"check", "--class", "horn", "--rename", file("s.cls", "~r(X).\np(a).\n")});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "MEMBER\n");
}

TEST_F(CliTest, NotRenamableInstanceIsPinned) {
  EXPECT_TRUE(brute_force_renamings(parse_clause_set(kNotRenamable), ClassTag::Horn).empty());
  const auto r = run({"check", "--class", "horn", "--rename", file("s.cls", kNotRenamable)});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.out, "NOT_RENAMABLE\n");
}

TEST_F(CliTest, UnconstrainedPredicatesNoteGoesToStderr) {
  const auto r = run({"check", "--class", "horn", "--rename", file("s.cls", "p(X) | q(X).\ns(a).\n")});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "RENAMABLE {p}\n");
  EXPECT_NE(r.err.find("{s}"), std::string::npos);
}

TEST_F(CliTest, EnumeratePvdClause) {
  const auto r = run({"enumerate", "--class", "pvd", file("s.cls", kPvdClause)});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "{p}\n{q}\n{p, q}\n{q, r}\n{p, q, r}\n");
}

TEST_F(CliTest, EnumerateIntroAndLimit) {
  const std::string f = file("s.cls", kIntro);
  EXPECT_EQ(run({"enumerate", "--class", "horn", f}).out, "{p}\n{q}\n");
  EXPECT_EQ(run({"enumerate", "--class", "horn", "--limit", "1", f}).out, "{p}\nTRUNCATED\n");
  EXPECT_EQ(run({"enumerate", "--class", "horn", "--limit", "0", f}).out, "{p}\n{q}\n");
}

TEST_F(CliTest, EnumerateNothing) {
  const auto r = run({"enumerate", "--class", "horn", file("s.cls", kNotRenamable)});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, EncodeExamples) {
  EXPECT_EQ(run({"encode", "--class", "horn", file("a.cls", kFourClauses)}).out,
            "c map 1 p\nc map 2 q\nc map 3 r\np cnf 3 5\n1 2 0\n1 3 0\n-1 2 0\n-1 -2 0\n2 3 0\n");
  EXPECT_EQ(run({"encode", "--class", "pvd", file("b.cls", "p(a) | q | ~r(f(b)).\n")}).out, "p cnf 0 0\n");
  EXPECT_EQ(run({"encode", "--class", "pvd", file("c.cls", kPvdClause)}).out,
            "c map 1 p\nc map 2 q\nc map 3 r\np cnf 3 2\n1 2 0\n2 -3 0\n");
}

TEST_F(CliTest, SolveEncoding) {
  const std::string cnf = run({"encode", "--class", "horn", file("a.cls", kFourClauses)}).out;
  const std::string f = file("a.cnf", cnf);
  const auto plain = run({"solve", f});
  EXPECT_EQ(plain.code, cli::kYes);
  EXPECT_EQ(plain.out, "SAT\n");
  EXPECT_EQ(run({"solve", "--model", f}).out, "SAT\nv -p q r\n");
}

TEST_F(CliTest, SolveUnsatAndEmpty) {
  const auto r = run({"solve", file("u.cnf", "p cnf 1 2\n1 0\n-1 0\n")});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.out, "UNSAT\n");
  const auto e = run({"solve", "--model", file("e.cnf", "p cnf 0 0\n")});
  EXPECT_EQ(e.code, cli::kYes);
  EXPECT_EQ(e.out, "SAT\nv\n");
}

TEST_F(CliTest, ReduceAndEncodeBack) {
  const std::string cnf = "c map 1 p\nc map 2 q\np cnf 2 1\n1 -2 0\n";
  const auto r = run({"reduce", file("f.cnf", cnf)});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "p(X) | ~q(X).\n");
  EXPECT_EQ(run({"encode", "--class", "pvd", file("f.cls", r.out)}).out, cnf);
  EXPECT_EQ(run({"reduce", file("e.cnf", "p cnf 0 0\n")}).out, "");
}

TEST_F(CliTest, ParseErrorsCarryLocation) {
  const std::string f = file("bad.cls", "p(X).\nq(X) &.\n");
  const auto r = run({"check", "--class", "horn", f});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err.rfind(f + ":2:6: ", 0), 0u) << r.err;
}

TEST_F(CliTest, ArityConflictIsAnInputError) {
  const auto r = run({"check", "--class", "horn", file("bad.cls", "p(X,X,X).\np(X).\n")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find(":2:1: "), std::string::npos) << r.err;
}

TEST_F(CliTest, DimacsErrorsAreInputErrors) {
  const auto r = run({"solve", file("bad.cnf", "p cnf 1 1\n2 0\n")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"check", file("s.cls", kIntro)}).code, cli::kInputError);
  EXPECT_EQ(run({"check", "--class", "krom", file("s.cls", kIntro)}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"check", "--class", "horn", (dir_ / "missing.cls").string()}).code, cli::kInputError);
}

TEST_F(CliTest, HelpGoesToStdout) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_NE(r.out.find("check"), std::string::npos);
}

TEST_F(CliTest, ResourceLimit) {
  const auto r = run({"--max-clauses", "2", "check", "--class", "horn", "--rename", file("s.cls", kFourClauses)});
  EXPECT_EQ(r.code, cli::kResourceLimit);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("--max-clauses"), std::string::npos);
}

TEST_F(CliTest, OutputIsByteDeterministic) {
  const std::string f = file("s.cls", kPvdClause);
  for (const char* cls : {"horn", "occ1n", "pvd"}) {
    const auto a = run({"enumerate", "--class", cls, f});
    const auto b = run({"enumerate", "--class", cls, f});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"encode", "--class", cls, f}).out, run({"encode", "--class", cls, f}).out);
  }
}

TEST_F(CliTest, PrintedRenamingsPassMembership) {
  for (const char* text : {kFourClauses, kIntro, kPvdClause}) {
    const ClauseSet s = parse_clause_set(text);
    const std::string f = file("s.cls", text);
    for (auto tag : {ClassTag::Horn, ClassTag::Occ1n, ClassTag::Pvd}) {
      const auto r = run({"enumerate", "--class", std::string(to_string(tag)), "--limit", "0", f});
      std::istringstream lines(r.out);
      for (std::string line; std::getline(lines, line);) {
        ASSERT_EQ(line.front(), '{');
        std::set<std::string> names;
        std::string inner = line.substr(1, line.size() - 2);
        std::istringstream parts(inner);
        for (std::string name; std::getline(parts, name, ',');) {
          name.erase(0, name.find_first_not_of(' '));
          if (!name.empty()) names.insert(name);
        }
        EXPECT_TRUE(check_membership(tag, apply_renaming(Renaming(names), s)).member) << line;
      }
    }
  }
}

}  // namespace
}  // namespace renamer
