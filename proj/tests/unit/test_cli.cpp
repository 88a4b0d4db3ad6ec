#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "lieweyl/acceptance.hpp"
#include "lieweyl_cli/command.hpp"
#include "lieweyl_cli/expression.hpp"

using namespace lieweyl;
using namespace lieweyl::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run(CommandConfig cfg) { return run_command(cfg); }

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(parse_polynomial("x1", 3), x_var(3, 0));
  EXPECT_EQ(parse_polynomial("1/2*x3 + x1*x2", 3), x_var(3, 2) * Rational(1, 2) + x_var(3, 0) * x_var(3, 1));
  Polynomial a = x_var(3, 0), b = x_var(3, 1);
  EXPECT_EQ(parse_polynomial("(x1+x2)^2", 3), (a + b) * (a + b));
  EXPECT_EQ(parse_polynomial(" - x1 ^ 2 - -3", 3), Polynomial::constant(3, 3) - a * a);
  EXPECT_EQ(parse_polynomial("(x1)^0", 3), Polynomial::constant(3, 1));
  EXPECT_EQ(parse_polynomial("6/4", 1), Polynomial::constant(1, Rational(3, 2)));
}

TEST(Parser, ErrorsCarryPositionAndExpectation) {
  auto fails = [](const std::string& text, int n, std::size_t pos, const std::string& expected_part) {
    try {
      parse_polynomial(text, n);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
      EXPECT_NE(e.expected().find(expected_part), std::string::npos) << text << ": " << e.expected();
    }
  };
  fails("x1 + (x2", 3, 8, ")");
  fails("x4", 3, 0, "x1..x3");
  fails("y1", 3, 0, "x1..x3");
  fails("x1 +", 3, 4, "number");
  fails("x1^", 3, 3, "exponent");
  fails("x1^65", 3, 3, "exponent");
  fails("1/0", 3, 2, "nonzero");
  fails("x1 x2", 3, 3, "operator");
  fails("x", 3, 1, "index");
  EXPECT_THROW(parse_polynomial("(x1^60)^60", 1), ParseError);
}

TEST(Parser, RenderRoundTrip) {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 4;
    Polynomial f = random_poly(rng, n, 4, 5, 7);
    if (t % 3 == 0) f *= Rational(1, 1 + t % 5);
    EXPECT_EQ(parse_polynomial(render_polynomial(f), n), f) << render_polynomial(f);
  }
}

TEST(Command, VerifyPasses) {
  CommandConfig cfg;
  cfg.command = "verify";
  cfg.algebra = "su2";
  cfg.cutoff = 6;
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("result: pass"), std::string::npos);
}

TEST(Command, TreesCount) {
  CommandConfig cfg;
  cfg.command = "trees";
  cfg.w = 3;
  cfg.b = 0;
  cfg.count = true;
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "3\n");
}

TEST(Command, CoproductDegreeTwo) {
  CommandConfig cfg;
  cfg.command = "coproduct";
  cfg.algebra = "su2";
  cfg.mu = 1;
  cfg.degree = 2;
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("Delta d1 = 1⊗d1 + d1⊗1 + 1/2*d2⊗d3 - 1/2*d3⊗d2\n"), std::string::npos) << r.output;
}

TEST(Command, GoldenStructuredOutput) {
  struct Case {
    std::string file;
    CommandConfig cfg;
  };
  std::vector<Case> cases;
  {
    CommandConfig c;
    c.command = "coproduct";
    c.mu = 1;
    c.degree = 3;
    cases.push_back({"coproduct_su2_mu1_P3.txt", c});
  }
  {
    CommandConfig c;
    c.command = "trees";
    c.w = 3;
    c.b = 1;
    c.planar = true;
    c.list = true;
    cases.push_back({"trees_w3_b1_planar.txt", c});
  }
  {
    CommandConfig c;
    c.command = "hausdorff";
    c.algebra = "heisenberg";
    c.degree = 3;
    cases.push_back({"hausdorff_heisenberg_P3.txt", c});
  }
  {
    CommandConfig c;
    c.command = "star";
    c.algebra = "kappa:1,0,0";
    c.f = "x1^2";
    c.g = "x2 + 1/2*x3";
    cases.push_back({"star_kappa.txt", c});
  }
  for (auto& c : cases) {
    c.cfg.format = OutputFormat::Structured;
    auto r = run(c.cfg);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, slurp(std::string(LIEWEYL_GOLDEN_DIR) + "/" + c.file)) << c.file;
    EXPECT_EQ(run(c.cfg).output, r.output) << "nondeterministic output for " << c.file;
  }
}

TEST(Command, ErrorRecords) {
  CommandConfig cfg;
  cfg.command = "star";
  cfg.f = "x1 +";
  cfg.g = "x2";
  cfg.format = OutputFormat::Structured;
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.output.rfind("error kind=parse position=4 expected=", 0), 0u) << r.output;

  cfg.f = "x1";
  cfg.algebra = "abelian:5";
  r = run(cfg);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("kind=input"), std::string::npos) << r.output;

  cfg.command = "nonsense";
  EXPECT_EQ(run(cfg).exit_code, 2);

  CommandConfig big;
  big.command = "coproduct";
  big.degree = 6;
  EXPECT_EQ(run(big).exit_code, 2);
  big.unbounded = true;
  EXPECT_EQ(run(big).exit_code, 0);
}

TEST(Command, AlgebraFromFile) {
  std::string path = testing::TempDir() + "/heis.json";
  std::ofstream(path) << serialize_algebra(heisenberg_algebra());
  CommandConfig cfg;
  cfg.command = "star";
  cfg.algebra = path;
  cfg.f = "x1";
  cfg.g = "x2";
  cfg.route = "pbw";
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("x1*x2 + 1/2*x3"), std::string::npos) << r.output;
}

TEST(Command, ChiAndTable) {
  CommandConfig cfg;
  cfg.command = "chi";
  cfg.mu = 1;
  cfg.nu = 2;
  cfg.cutoff = 4;
  auto r = run(cfg);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("chi^3_12 = 1/2"), std::string::npos) << r.output;

  CommandConfig t;
  t.command = "trees";
  t.table = true;
  t.degree = 4;
  t.format = OutputFormat::Structured;
  r = run(t);
  EXPECT_NE(r.output.find("count w=3 b=1 ordered=15 planar=10"), std::string::npos) << r.output;
}
