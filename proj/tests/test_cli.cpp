#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "tripsem/format.hpp"
#include "tripsem/lexicon.hpp"

namespace fs = std::filesystem;
using tripsem::cli::run;

namespace {

const fs::path kFixtures = TRIPSEM_FIXTURES_DIR;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  std::map<std::string, std::string> fields;

  const std::string& at(const std::string& key) const {
    static const std::string missing = "<missing>";
    auto it = fields.find(key);
    return it == fields.end() ? missing : it->second;
  }
  double number(const std::string& key) const { return tripsem::parse_double(at(key)).value(); }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  std::istringstream lines(o.out);
  for (std::string line; std::getline(lines, line);) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) {
      o.fields[line.substr(0, colon)] = line.substr(colon + 2);
    } else if (!line.empty() && line.back() == ':') {
      o.fields[line.substr(0, line.size() - 1)] = "";
    }
  }
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("tripsem_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string lexicon() const { return (kFixtures / "demo_lexicon.tsl").string(); }
  std::string tree() const { return (kFixtures / "not_blue.tree").string(); }

  fs::path dir;
};

}  // namespace

TEST_F(CliTest, LexiconInitIsDeterministic) {
  const auto words = (kFixtures / "demo_words.txt").string();
  const auto a = (dir / "a.tsl").string();
  const auto b = (dir / "b.tsl").string();
  auto r = invoke({"lexicon-init", "--words", words, "--seed", "7", "--out", a});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.at("lexicon-init.words"), "9");
  EXPECT_EQ(r.at("lexicon-init.layout"), "4,2,2");
  ASSERT_EQ(invoke({"lexicon-init", "--words", words, "--seed", "7", "--out", b}).code, 0);
  EXPECT_EQ(tripsem::load(fs::path(a)), tripsem::load(fs::path(b)));
  // The fixture was produced by exactly this command.
  EXPECT_EQ(tripsem::load(fs::path(a)), tripsem::load(fs::path(lexicon())));

  const auto c = (dir / "c.tsl").string();
  ASSERT_EQ(invoke({"lexicon-init", "--words", words, "--seed", "8", "--out", c}).code, 0);
  EXPECT_NE(tripsem::load(fs::path(a)), tripsem::load(fs::path(c)));
}

TEST_F(CliTest, LexiconInitTwoPartLayout) {
  const auto words = write("w.txt", "x y\nnot\n");
  const auto out = (dir / "l.tsl").string();
  auto r = invoke({"lexicon-init", "--words", words, "--layout", "3,4", "--not-mu", "0.25", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.at("lexicon-init.layout"), "3,2,2");
  const auto lex = tripsem::load(fs::path(out));
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.mu_default(), 0.25);
}

TEST_F(CliTest, Negate) {
  auto r = invoke({"negate", "--lexicon", lexicon(), "--word", "blue"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.at("negate.mu"), "0.5");
  EXPECT_EQ(r.at("negate.original.domain"), r.at("negate.negated.domain"));
  EXPECT_EQ(r.at("negate.original.stable"), r.at("negate.negated.stable"));
  std::istringstream orig(r.at("negate.original.inverted")), neg(r.at("negate.negated.inverted"));
  std::string x, y;
  int n = 0;
  while (orig >> x && neg >> y) {
    EXPECT_EQ(tripsem::parse_double(y).value(), -0.5 * tripsem::parse_double(x).value());
    ++n;
  }
  EXPECT_EQ(n, 2);

  auto full = invoke({"negate", "--lexicon", lexicon(), "--word", "blue", "--mu", "1"});
  EXPECT_EQ(full.at("negate.mu"), "1");

  auto missing = invoke({"negate", "--lexicon", lexicon(), "--word", "purple"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("purple"), std::string::npos);
}

TEST_F(CliTest, Compose) {
  auto r = invoke({"compose", "--lexicon", lexicon(), "--tree", tree(), "--model", "improved"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.at("compose.trees"), "1");
  EXPECT_EQ(r.at("compose.tree1.binarized"),
            "(S (NP (Det this) (N car)) (VP (VBZ is) (VP* (RB not) (JJ blue))))");
  EXPECT_EQ(r.at("compose.tree1.alpha"), "1");

  auto left = invoke({"compose", "--lexicon", lexicon(), "--tree", tree(), "--model", "baseline",
                      "--binarize", "left"});
  ASSERT_EQ(left.code, 0);
  EXPECT_EQ(left.at("compose.tree1.binarized"),
            "(S (NP (Det this) (N car)) (VP (VP* (VBZ is) (RB not)) (JJ blue)))");

  EXPECT_EQ(invoke({"compose", "--lexicon", lexicon(), "--tree", tree(), "--model", "fancy"}).code, 2);
  const auto bad = write("bad.tree", "(S (NP x)");
  auto parse = invoke({"compose", "--lexicon", lexicon(), "--tree", bad, "--model", "baseline"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_FALSE(parse.err.empty());
  const auto unknown = write("unknown.tree", "(S (N car) (N boat))");
  EXPECT_EQ(invoke({"compose", "--lexicon", lexicon(), "--tree", unknown, "--model", "baseline"}).code, 2);
}

TEST_F(CliTest, Similarity) {
  auto r = invoke({"sim", "--lexicon", lexicon(), "--a", "blue", "--b", "red", "--region", "domain"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double c = r.number("sim.cosine");
  EXPECT_GE(c, -1.0);
  EXPECT_LE(c, 1.0);
  auto self = invoke({"sim", "--lexicon", lexicon(), "--a", "blue", "--b", "blue", "--region", "full"});
  EXPECT_NEAR(self.number("sim.cosine"), 1.0, 1e-15);
  // "not" has a zero vector: similarity with itself is undefined.
  EXPECT_EQ(invoke({"sim", "--lexicon", lexicon(), "--a", "not", "--b", "not", "--region", "value"}).code, 2);
}

TEST_F(CliTest, VerifyContradiction) {
  auto r = invoke({"verify", "--lexicon", lexicon(), "contradiction"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.at("verify.check"), "contradiction");
  EXPECT_EQ(r.at("verify.joint.fit"), "FAIL");
  EXPECT_EQ(r.at("verify.status"), "PASS");
  EXPECT_GT(r.number("verify.joint.residual_total"), 1.0);
  EXPECT_LE(r.number("verify.value_only.m_not_error"), 1e-9);
  EXPECT_LE(r.number("verify.function_only.m_not_norm"), 1e-9);
}

TEST_F(CliTest, VerifyImprovedFit) {
  auto r = invoke({"verify", "--lexicon", lexicon(), "improved-fit"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.at("verify.status"), "PASS");
  EXPECT_LE(std::abs(r.number("verify.alpha_not")), 1e-9);

  // Unequal scales: the double-negation rows cannot be met.
  auto nu = invoke({"verify", "--lexicon", lexicon(), "improved-fit", "--nu", "0.8"});
  EXPECT_EQ(nu.code, 1);
  EXPECT_EQ(nu.at("verify.status"), "FAIL");
}

TEST_F(CliTest, VerifyDoubleNegation) {
  auto r = invoke({"verify", "--lexicon", lexicon(), "double-negation"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.at("verify.blue.diminutive"), "true");
  EXPECT_EQ(r.at("verify.status"), "PASS");

  const auto inv = (dir / "inv.tsl").string();
  ASSERT_EQ(invoke({"lexicon-init", "--words", (kFixtures / "demo_words.txt").string(), "--not-mu", "1",
                    "--out", inv})
                .code,
            0);
  auto flat = invoke({"verify", "--lexicon", inv, "double-negation"});
  EXPECT_EQ(flat.code, 1);
  EXPECT_EQ(flat.at("verify.blue.diminutive"), "false");
  EXPECT_EQ(flat.at("verify.status"), "FAIL");
}

TEST_F(CliTest, VerifyScope) {
  auto r = invoke({"verify", "--lexicon", lexicon(), "scope", "--tree", tree()});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.at("verify.perturbations"), "10");
  EXPECT_LE(r.number("verify.improved.delta_max"), 1e-12);
  EXPECT_LE(r.number("verify.baseline.deviation_max"), 1e-12);
  EXPECT_GT(r.number("verify.tree1.first.baseline_delta"), 0.0);

  const auto two = write("two.tree", "(S (RB not) (S (RB not) (JJ blue)))");
  EXPECT_EQ(invoke({"verify", "--lexicon", lexicon(), "scope", "--tree", two}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"negate", "--lexicon", lexicon()}).code, 2);
  EXPECT_EQ(invoke({"verify", "--lexicon", lexicon()}).code, 2);
  EXPECT_EQ(invoke({"negate", "--lexicon", (dir / "nope.tsl").string(), "--word", "x"}).code, 2);
  EXPECT_EQ(invoke({"lexicon-init", "--words", (kFixtures / "demo_words.txt").string(), "--layout", "4,a",
                    "--out", (dir / "x.tsl").string()})
                .code,
            2);
  EXPECT_EQ(invoke({"lexicon-init", "--words", (kFixtures / "demo_words.txt").string(), "--not-mu", "1.5",
                    "--out", (dir / "x.tsl").string()})
                .code,
            2);
  auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}
