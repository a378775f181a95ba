#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "mgcli/runner.hpp"
#include "mgcli/script.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_text(const std::string& text, mgcli::RunOptions options = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const auto script = mgcli::parse(text);
  const int code = mgcli::run(script, options, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& jsonl) {
  std::vector<json> result;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) result.push_back(json::parse(line));
  }
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Runs the installed binary through the shell; returns exit code and stdout.
RunResult run_binary(const std::string& args) {
  const std::string command = std::string(MGVERIFY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  RunResult r;
  std::array<char, 4096> buffer{};
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kDeterminant =
    "ring v=2 blocks=[2,2] char=32003 / ideal I = x[1,1]*x[2,2] - x[1,2]*x[2,1]";

TEST(Parse, RingAndIdealOnOneLine) {
  const auto s = mgcli::parse(kDeterminant);
  EXPECT_EQ(s.ring.blocks, (std::vector<int>{2, 2}));
  EXPECT_EQ(s.ring.characteristic, 32003);
  ASSERT_EQ(s.statements.size(), 1u);
  const auto& decl = std::get<mgcli::IdealDecl>(s.statements[0]);
  EXPECT_EQ(decl.name, "I");
  ASSERT_EQ(decl.items.size(), 1u);
  const auto h = decl.items[0].poly.multihomogeneity(s.block_ring());
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(*h.degree, (mg::Multidegree{1, 1}));
}

TEST(Parse, BlockOutOfRange) {
  try {
    mgcli::parse("ring v=2 blocks=[2,2]\nideal I = x[3,1]");
    FAIL() << "expected a parse error";
  } catch (const mgcli::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("block out of range"), std::string::npos) << e.what();
    EXPECT_EQ(e.where().line, 2);
  }
}

TEST(Parse, SemanticErrors) {
  const std::vector<std::string> bad{
      "ideal I = x[1,1]",                                           // no ring
      "ring v=2 blocks=[2]",                                        // v mismatch
      "ring v=1 blocks=[2]\nideal I = x[1,3]",                      // position
      "ring v=1 blocks=[2]\ncs J",                                  // undefined name
      "ring v=1 blocks=[2]\nideal I = x[1,1]\nideal I = x[1,2]",    // duplicate
      "ring v=1 blocks=[2]\nideal I = x[1,1]\nfrobnicate I",        // unknown command
      "ring v=1 blocks=[2]\nideal I = x[1,1]\ncs I colour=red",     // unknown option
      "ring v=1 blocks=[2]\nideal I = x[1,1]\ncs I expect=maybe",   // bad value
      "ring v=2 blocks=[2,2]\nideal I = x[1,1]\nbounds I",          // bound required
      "ring v=2 blocks=[2,2]\nideal I = x[1,1]\nbounds I bound=(1)",
      "ring v=2 blocks=[2,2]\nmatrix A rowgraded 1x2 {x[1,1], x[2,1]}",  // grading
      "ring v=2 blocks=[2,2]\nideal I = x[1,1] +",                  // syntax
  };
  for (const auto& text : bad) EXPECT_THROW(mgcli::parse(text), mgcli::ParseError) << text;
}

TEST(Parse, CharacteristicOverride) {
  const auto s = mgcli::parse("ring v=1 blocks=[2] char=7\nideal I = 9*x[1,1]", {.characteristic = 5});
  EXPECT_EQ(s.ring.characteristic, 5);
  const auto& decl = std::get<mgcli::IdealDecl>(s.statements[0]);
  EXPECT_EQ(decl.items[0].poly.terms()[0].coefficient, 4);
}

TEST(Parse, CommentsAndSeparators) {
  const auto s = mgcli::parse("# header\nring v=1 blocks=[2] # trailing\n\nideal I = x[1,1] / ideal J = x[1,2]\n");
  EXPECT_EQ(s.statements.size(), 2u);
}

TEST(Parse, WorkedExampleSession) {
  const auto s = mgcli::parse(read_file(std::string(MG_SCRIPTS_DIR) + "/worked_example.mg"));
  const auto& x = std::get<mgcli::MatrixDecl>(s.statements[0]);
  EXPECT_EQ(x.rows, 3u);
  EXPECT_EQ(x.mode, mg::Grading::Row);
  EXPECT_TRUE(x.entries[5].is_zero());
  const auto& f = std::get<mgcli::PolyDecl>(s.statements[2]);
  EXPECT_EQ(f.poly.to_string(s.block_ring()), "x[1,1]*x[2,1]*x[3,2] + x[1,3]*x[2,3]*x[3,3]");
}

TEST(Run, WorkedExampleColon) {
  const auto r = run_text(read_file(std::string(MG_SCRIPTS_DIR) + "/worked_example.mg"), {.json = true});
  EXPECT_EQ(r.code, mgcli::kPass) << r.err;
  bool seen = false;
  for (const auto& rec : records(r.out)) {
    if (rec["command"] != "colon") continue;
    seen = true;
    const auto gens = rec["evidence"]["generators"].dump();
    EXPECT_NE(gens.find("x[1,2]*x[1,3]"), std::string::npos);
    EXPECT_NE(gens.find("x[1,1]*x[1,3]"), std::string::npos);
  }
  EXPECT_TRUE(seen);
}

TEST(Run, CsOnDeterminant) {
  const auto r = run_text(kDeterminant + "\ncs I", {.json = true});
  EXPECT_EQ(r.code, mgcli::kPass);
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["schema"], 1);
  EXPECT_EQ(recs[0]["verdict"], "yes");
  for (const char* field : {"command", "inputs", "verdict", "evidence", "seeds", "orders", "timings"}) {
    EXPECT_TRUE(recs[0].contains(field)) << field;
  }
}

TEST(Run, UgbOnColumnGradedTwoByThree) {
  const auto r = run_text("ring v=3 blocks=[2,2,2]\nmatrix A colgraded 2x3 random seed=7\nugb minors(A,2) orders=200 seed=7",
                          {.json = true});
  EXPECT_EQ(r.code, mgcli::kPass) << r.out;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["verdict"], "pass");
  EXPECT_GE(recs[0]["orders"].size(), 200u);
}

TEST(Run, EveryVerdictCarriesSeedsAndOrders) {
  for (const auto* name : {"determinant.mg", "column_graded.mg", "squarefree_dual.mg"}) {
    const auto r = run_text(read_file(std::string(MG_SCRIPTS_DIR) + "/" + name), {.json = true});
    EXPECT_EQ(r.code, mgcli::kPass) << name << "\n" << r.out;
    for (const auto& rec : records(r.out)) {
      EXPECT_TRUE(rec.contains("seeds")) << rec.dump();
      EXPECT_TRUE(rec.contains("orders")) << rec.dump();
    }
  }
}

TEST(Run, DeterministicJson) {
  const auto text = read_file(std::string(MG_SCRIPTS_DIR) + "/worked_example.mg");
  const auto a = run_text(text, {.seed = 9, .json = true, .omit_timings = true});
  const auto b = run_text(text, {.seed = 9, .json = true, .omit_timings = true});
  EXPECT_EQ(a.out, b.out);
  // With timings present, the records agree once the timings are removed.
  auto strip = [](std::vector<json> recs) {
    for (auto& r : recs) r.erase("timings");
    return recs;
  };
  const auto c = run_text(text, {.seed = 9, .json = true});
  EXPECT_EQ(strip(records(c.out)), strip(records(a.out)));
}

TEST(Run, CheckFailureExitCode) {
  const auto r = run_text(kDeterminant + "\ncs I expect=no\nradical I");
  EXPECT_EQ(r.code, mgcli::kCheckFailure);
  // The remaining commands still run.
  EXPECT_NE(r.out.find("== radical I"), std::string::npos);
}

TEST(Run, ExpectedErrorPasses) {
  const auto r = run_text(kDeterminant + "\npoly F = x[1,1]*x[2,1]\nclosure I F expect=error");
  EXPECT_EQ(r.code, mgcli::kPass) << r.out;
}

TEST(Run, ResourceAbortFlushesPartialReport) {
  const std::string text =
      "ring v=2 blocks=[4,4]\n"
      "ideal I = x[1,1]*x[2,1] + x[1,2]*x[2,2] + x[1,3]*x[2,3], x[1,2]*x[2,1] - x[1,4]*x[2,4], "
      "x[1,3]*x[2,2] + x[1,1]*x[2,4]\n"
      "radical I\n"
      "gb I order=lex\n"
      "gb I\n";
  const auto r = run_text(text, {.json = true, .max_basis = 2});
  EXPECT_EQ(r.code, mgcli::kResourceAbort);
  const auto recs = records(r.out);
  ASSERT_GE(recs.size(), 1u);
  EXPECT_EQ(recs[0]["command"], "radical");
  EXPECT_EQ(recs.back()["verdict"], "resource-abort");
}

TEST(Run, OrderFlag) {
  const mg::BlockRing ring({2, 2});
  EXPECT_EQ(mgcli::parse_order_flag("lex", ring).kind(), mg::TermOrder::Kind::Lex);
  EXPECT_EQ(mgcli::parse_order_flag("weight:1,2,3,4", ring).kind(), mg::TermOrder::Kind::Weight);
  EXPECT_THROW(mgcli::parse_order_flag("weight:1,2", ring), std::invalid_argument);
  EXPECT_THROW(mgcli::parse_order_flag("revlex", ring), std::invalid_argument);
}

TEST(Binary, ExitCodes) {
  const std::string dir = MG_SCRIPTS_DIR;
  EXPECT_EQ(run_binary(dir + "/determinant.mg").code, 0);
  EXPECT_EQ(run_binary("--order bogus " + dir + "/determinant.mg").code, 2);
  EXPECT_EQ(run_binary(dir + "/does-not-exist.mg").code, 2);
  EXPECT_EQ(run_binary("--frobnicate " + dir + "/determinant.mg").code, 2);

  const std::string bad = testing::TempDir() + "bad_script.mg";
  std::ofstream(bad) << "ring v=2 blocks=[2,2]\nideal I = x[3,1]\n";
  EXPECT_EQ(run_binary(bad).code, 2);

  const std::string failing = testing::TempDir() + "failing_script.mg";
  std::ofstream(failing) << "ring v=1 blocks=[2]\nideal I = x[1,1]^2\nradical I expect=yes\n";
  EXPECT_EQ(run_binary(failing).code, 1);
}

TEST(Binary, JsonOnStdout) {
  const auto r = run_binary("--json --seed 3 " + std::string(MG_SCRIPTS_DIR) + "/determinant.mg");
  EXPECT_EQ(r.code, 0);
  const auto recs = records(r.out);
  ASSERT_FALSE(recs.empty());
  for (const auto& rec : recs) EXPECT_EQ(rec["schema"], 1);
}

// Round trip ---------------------------------------------------------------

/// Builds random but valid scripts from the grammar, one statement at a time.
class ScriptGenerator {
 public:
  explicit ScriptGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string script() {
    names_.clear();
    ideals_.clear();
    polys_.clear();
    matrices_.clear();
    const int v = pick(1, 3);
    blocks_.clear();
    for (int i = 0; i < v; ++i) blocks_.push_back(pick(1, 3));
    std::ostringstream s;
    s << "ring v=" << v << " blocks=[";
    for (int i = 0; i < v; ++i) s << (i ? "," : "") << blocks_[static_cast<std::size_t>(i)];
    s << "]";
    if (pick(0, 1)) s << " char=" << (pick(0, 1) ? 32003 : 101);
    s << "\n";
    const int n = pick(2, 8);
    for (int k = 0; k < n; ++k) s << statement() << (pick(0, 3) ? "\n" : " / ");
    return s.str();
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string fresh(const char* prefix) {
    const std::string name = prefix + std::to_string(names_.size());
    names_.push_back(name);
    return name;
  }

  std::string variable(int block) {
    return "x[" + std::to_string(block + 1) + "," + std::to_string(pick(1, blocks_[static_cast<std::size_t>(block)])) +
           "]";
  }

  std::string monomial() {
    std::string m;
    const int factors = pick(1, 3);
    for (int f = 0; f < factors; ++f) {
      m += (f ? "*" : "") + variable(pick(0, static_cast<int>(blocks_.size()) - 1));
      if (pick(0, 4) == 0) m += "^" + std::to_string(pick(2, 3));
    }
    return m;
  }

  std::string polynomial() {
    std::string p;
    const int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      const bool minus = pick(0, 1);
      if (t) p += minus ? " - " : " + ";
      else if (minus) p += "-";
      if (pick(0, 2) == 0) p += std::to_string(pick(2, 50)) + "*";
      p += monomial();
    }
    return p;
  }

  std::string linear_row(int block, int cols) {
    std::string row;
    for (int c = 0; c < cols; ++c) {
      row += c ? ", " : "";
      row += pick(0, 4) == 0 ? "0" : variable(block) + (pick(0, 1) ? " + " + std::to_string(pick(2, 9)) + "*" + variable(block) : "");
    }
    return row;
  }

  std::string ideal_item() {
    const int kind = pick(0, 4);
    if (kind == 1 && !ideals_.empty()) return ideals_[static_cast<std::size_t>(pick(0, static_cast<int>(ideals_.size()) - 1))];
    if (kind == 2 && !matrices_.empty()) return "minors(" + matrices_.back() + ", 1)";
    if (kind == 3 && !ideals_.empty() && !polys_.empty()) return "colon(" + ideals_.front() + ", " + polys_.back() + ")";
    if (kind == 4 && ideals_.size() >= 2) return "intersect(" + ideals_[0] + ", " + ideals_[1] + ")";
    return polynomial();
  }

  std::string statement() {
    const int kind = pick(0, 5);
    if (kind == 0 || ideals_.empty()) {
      std::string s = "ideal " + fresh("I") + " = ";
      const int items = pick(1, 3);
      for (int k = 0; k < items; ++k) s += (k ? ", " : "") + ideal_item();
      ideals_.push_back(names_.back());
      return s;
    }
    if (kind == 1) {
      polys_.push_back(fresh("F"));
      return "poly " + polys_.back() + " = " + polynomial();
    }
    if (kind == 2) {
      const std::string name = fresh("A");
      matrices_.push_back(name);
      const int rows = pick(1, static_cast<int>(blocks_.size()));
      const int cols = pick(1, 3);
      std::string s = "matrix " + name + " rowgraded " + std::to_string(rows) + "x" + std::to_string(cols) + " {";
      for (int r = 0; r < rows; ++r) s += (r ? "; " : "") + linear_row(r, cols);
      return s + "}";
    }
    const auto& target = ideals_[static_cast<std::size_t>(pick(0, static_cast<int>(ideals_.size()) - 1))];
    if (kind == 3) return "gb " + target + (pick(0, 1) ? " order=lex" : "");
    if (kind == 4) return "cs " + target + " seed=" + std::to_string(pick(1, 99)) + " trials=" + std::to_string(pick(1, 5));
    std::string bound = "(";
    for (std::size_t b = 0; b < blocks_.size(); ++b) bound += (b ? "," : "") + std::to_string(pick(0, 2));
    return "bounds " + target + " bound=" + bound + ") mode=" + (pick(0, 1) ? "exactly" : "atmost");
  }

  std::mt19937_64 rng_;
  std::vector<int> blocks_;
  std::vector<std::string> names_;
  std::vector<std::string> ideals_;
  std::vector<std::string> polys_;
  std::vector<std::string> matrices_;
};

TEST(RoundTrip, SampleScripts) {
  for (const auto* name : {"worked_example.mg", "determinant.mg", "column_graded.mg", "squarefree_dual.mg"}) {
    const auto parsed = mgcli::parse(read_file(std::string(MG_SCRIPTS_DIR) + "/" + name));
    const auto text = mgcli::serialize(parsed);
    EXPECT_EQ(mgcli::parse(text), parsed) << name << "\n" << text;
    EXPECT_EQ(mgcli::serialize(mgcli::parse(text)), text);
  }
}

TEST(RoundTrip, RandomScripts) {
  ScriptGenerator gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto text = gen.script();
    mgcli::SessionScript parsed;
    ASSERT_NO_THROW(parsed = mgcli::parse(text)) << text;
    const auto again = mgcli::serialize(parsed);
    EXPECT_EQ(mgcli::parse(again), parsed) << text << "\n---\n" << again;
  }
}

}  // namespace
