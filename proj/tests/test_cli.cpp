#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsuper/calculus.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/random.hpp"

using namespace qsuper;
using namespace qsuper::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

SessionConfig session(int m, int n, std::vector<int> z, AlgebraChoice alg = AlgebraChoice::A) {
  SessionConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.z = std::move(z);
  cfg.algebra = alg;
  return cfg;
}

std::string eval_text(const std::string& input, const SessionConfig& cfg = SessionConfig()) {
  return to_text(evaluate(input, cfg, cfg.make_algebra()));
}

void expect_parse_error(const std::string& input, const std::string& fragment, int line, int column,
                        const SessionConfig& cfg = SessionConfig()) {
  try {
    parse(input, cfg);
    FAIL() << "no error for " << input;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), line) << input;
    EXPECT_EQ(e.column(), column) << input;
  }
}

}  // namespace

TEST(Parser, ProductOfThreeFactors) {
  Expr e = parse("p2^-1 * a1 * a2", SessionConfig());
  ASSERT_EQ(e.kind, Expr::Kind::Product);
  ASSERT_EQ(e.args.size(), 3u);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::Param);
  EXPECT_EQ(e.args[0].exponent, -1);
  EXPECT_EQ(e.args[1].kind, Expr::Kind::Generator);
  EXPECT_EQ(e.args[2].index, 2);
}

TEST(Parser, DifferentialWrapsProduct) {
  Expr e = parse("d(a1*a2)", SessionConfig());
  ASSERT_EQ(e.kind, Expr::Kind::Call);
  EXPECT_EQ(e.name, "d");
  ASSERT_EQ(e.args.size(), 1u);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::Product);
}

TEST(Parser, TensorBindsBetweenProductAndSum) {
  Expr e = parse("a1*a2 (x) a1 + a2 (x)a1", SessionConfig());
  ASSERT_EQ(e.kind, Expr::Kind::Sum);
  ASSERT_EQ(e.args.size(), 2u);
  ASSERT_EQ(e.args[0].kind, Expr::Kind::Tensor);
  EXPECT_EQ(e.args[0].args[0].kind, Expr::Kind::Product);
  EXPECT_EQ(e.args[1].kind, Expr::Kind::Tensor);
}

TEST(Parser, WhitespaceInsensitive) {
  SessionConfig cfg;
  EXPECT_EQ(eval_text("p2^-1*a1*a2"), eval_text("  p2 ^ -1 *\n a1 * a2 "));
}

TEST(Parser, Errors) {
  expect_parse_error("a0", "unknown symbol", 1, 1);
  expect_parse_error("a1 * b2", "unknown symbol 'b2'", 1, 6);
  expect_parse_error("a1 + a3", "index 3 out of range", 1, 6);
  expect_parse_error("partial(4, a1)", "index 4 out of range", 1, 9);
  expect_parse_error("a2^-1", "illegal negative power", 1, 4);
  expect_parse_error("(a1 + a2)^-2", "illegal negative power", 1, 11);
  expect_parse_error("a1 +", "unexpected end of input", 1, 5);
  expect_parse_error("a1 *\n  (a2", "expected ')'", 2, 6);
  expect_parse_error("a1 $ a2", "unexpected character", 1, 4);
  expect_parse_error("", "empty expression", 1, 1);
  expect_parse_error("1/0", "zero denominator", 1, 3);
}

TEST(Parser, NegativePowersOnInvertibleFactors) {
  SessionConfig m = session(1, 1, {1, 2}, AlgebraChoice::M);
  EXPECT_NO_THROW(parse("a1^-3 * p2^-1 * 2^-1", SessionConfig()));
  EXPECT_NO_THROW(parse("g^-1", m));
  EXPECT_EQ(eval_text("2^-1 * a1^-1 * a1"), "1/2");
  EXPECT_EQ(eval_text("g^-1 * g", m), "1");
  expect_parse_error("x1^-1", "illegal negative power", 1, 4, m);
}

TEST(Evaluate, WorkedExamples) {
  EXPECT_EQ(eval_text("a2*a1"), "p2^-1 * a1*a2");
  EXPECT_EQ(eval_text("x2*x1", session(1, 1, {1, 2}, AlgebraChoice::M)), "x1*x2 - h2 * x2");
  EXPECT_EQ(eval_text("Delta(a1)"), "a1 (x) a1");
  EXPECT_EQ(eval_text("S(a2)"), "-p2^2 * a1^-4*a2");
  EXPECT_EQ(eval_text("eps(a1^3 + 2*a2)"), "1");
  EXPECT_EQ(eval_text("a2*a2"), "0");
}

TEST(Evaluate, NamespaceAndShapeErrors) {
  SessionConfig m = session(1, 1, {1, 2}, AlgebraChoice::M);
  EXPECT_THROW(evaluate("x1", SessionConfig(), SessionConfig().make_algebra()), DomainError);
  EXPECT_THROW(evaluate("g", SessionConfig(), SessionConfig().make_algebra()), DomainError);
  EXPECT_THROW(evaluate("a1", m, m.make_algebra()), DomainError);
  EXPECT_THROW(evaluate("Delta(a1) + a1", SessionConfig(), SessionConfig().make_algebra()), DomainError);
  EXPECT_THROW(evaluate("Delta(a1) * a2", SessionConfig(), SessionConfig().make_algebra()), DomainError);
  EXPECT_THROW(evaluate("d(Delta(a1))", SessionConfig(), SessionConfig().make_algebra()), DomainError);
  EXPECT_THROW(evaluate("a1 (x) a1 + a1 (x) a1 (x) a1", SessionConfig(), SessionConfig().make_algebra()), DomainError);
}

TEST(Evaluate, TensorsFromLiterals) {
  EXPECT_EQ(eval_text("Delta(a2) - (a1^2 (x) a2 + a2 (x) a1^2)"), "0");
  EXPECT_EQ(eval_text("Delta(a1) * Delta(a2)"), eval_text("Delta(a1*a2)"));
  EXPECT_EQ(eval_text("p2 * (a1 (x) a2)"), "p2 * a1 (x) a2");
}

TEST(Evaluate, RoundTripOnRandomValues) {
  for (auto alg_choice : {AlgebraChoice::A, AlgebraChoice::M}) {
    for (const auto& pc : standard_configs(6, 99)) {
      SessionConfig cfg = session(pc.m(), pc.n(), pc.z_vector(), alg_choice);
      AlgebraPtr alg = cfg.make_algebra();
      Sampler s(alg, 5);
      for (int k = 0; k < 40; ++k) {
        Element f = s.element(3, 4, k % 3);
        std::string text = to_string(f);
        EXPECT_EQ(evaluate(text, cfg, alg).as_element("test"), f) << pc.describe() << ": " << text;
        Element u = s.element(2, 2);
        if (u.is_zero()) continue;
        Tensor t = coproduct(u);
        std::string ttext = to_string(t);
        Value back = evaluate(ttext, cfg, alg);
        ASSERT_TRUE(back.is_tensor()) << ttext;
        EXPECT_EQ(*back.tensor, t) << pc.describe() << ": " << ttext;
      }
    }
  }
}

TEST(Config, FileAndFlagOverride) {
  auto path = std::filesystem::temp_directory_path() / "qsuper_test_cli.cfg";
  {
    std::ofstream f(path);
    f << "# shape\nm = 2\nn=2\nz = 1, 2, 3, -1\nalgebra=A\nseed=9\n\nformat = text\n";
  }
  SessionConfig cfg;
  apply_config_file(cfg, path.string());
  EXPECT_EQ(cfg.m, 2);
  EXPECT_EQ(cfg.n, 2);
  EXPECT_EQ(cfg.z, (std::vector<int>{1, 2, 3, -1}));
  EXPECT_EQ(cfg.seed, 9u);

  Outcome r = run({"--config", path.string(), "normalize", "a4*a3"});
  EXPECT_EQ(r.code, 0) << r.err;
  Outcome flag = run({"--config", path.string(), "--z", "1,2,3,1", "normalize", "a4*a3"});
  EXPECT_EQ(flag.code, 0) << flag.err;
  EXPECT_NE(r.out, flag.out);
  Outcome small = run({"--config", path.string(), "--m", "1", "--n", "1", "--z", "1,2", "normalize", "a2*a1"});
  EXPECT_EQ(small.out, "p2^-1 * a1*a2\n");

  {
    std::ofstream f(path);
    f << "m = 2\nbogus = 1\n";
  }
  EXPECT_THROW(apply_config_file(cfg, path.string()), ConfigError);
  EXPECT_EQ(run({"--config", path.string(), "normalize", "a1"}).code, 2);
  {
    std::ofstream f(path);
    f << "m 2\n";
  }
  EXPECT_THROW(apply_config_file(cfg, path.string()), ConfigError);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--config", path.string(), "normalize", "a1"}).code, 2);
}

TEST(Config, SettingValidation) {
  SessionConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "algebra", "B"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "order", "0"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "samples", "x"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "z", ""), ConfigError);
  apply_setting(cfg, "z", "2,1");
  EXPECT_THROW(cfg.params(), ConfigError);
}

TEST(RunCommand, ExitCodes) {
  Outcome ok = run({"normalize", "--m", "1", "--n", "1", "--z", "1,2", "a2*a1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "p2^-1 * a1*a2\n");

  EXPECT_EQ(run({"normalize", "--z", "2,1", "a1"}).code, 2);
  EXPECT_EQ(run({"normalize", "--m", "2", "--n", "1", "--z", "1,2", "a1"}).code, 2);
  EXPECT_EQ(run({"normalize", "--bogus", "a1"}).code, 2);
  EXPECT_EQ(run({"frobnicate", "a1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"normalize", "--format", "xml", "a1"}).code, 2);
  EXPECT_EQ(run({"partial", "3", "a1"}).code, 2);
  EXPECT_EQ(run({"omega", "0"}).code, 2);
  EXPECT_EQ(run({"--algebra", "M", "normalize", "a1"}).code, 2);

  Outcome bad = run({"normalize", "a0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err, "parse error: 1:1: unknown symbol 'a0'\n");
  EXPECT_TRUE(bad.out.empty());

  Outcome help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST(RunCommand, LeadingMinusIsAnExpression) {
  Outcome r = run({"normalize", "-a2*a1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-p2^-1 * a1*a2\n");
  Outcome p = run({"partial", "2", "-a1*a2", "--m", "1"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out, "-p2 * a1\n");
}

TEST(RunCommand, Subcommands) {
  EXPECT_EQ(run({"coproduct", "a1"}).out, "a1 (x) a1\n");
  EXPECT_EQ(run({"antipode", "a2"}).out, "-p2^2 * a1^-4*a2\n");
  EXPECT_EQ(run({"counit", "a1 + a2 + 3"}).out, "4\n");
  EXPECT_EQ(run({"d", "a1*a2"}).out, "a1*d(a2) - p2 * a2*d(a1)\n");
  EXPECT_EQ(run({"omega", "1"}).out, "a1^-1*d(a1)\n");
  EXPECT_EQ(run({"vf", "1", "a1^2*a2"}).out, "4 * a1^2*a2\n");
  EXPECT_EQ(run({"vf", "2", "a2"}).out, "a1^2\n");
  EXPECT_EQ(run({"limit", "a2*a1"}).out, "a1*a2\n");
  EXPECT_EQ(run({"--algebra", "M", "limit", "x2*x1"}).out, "x1*x2\n");
  EXPECT_EQ(run({"--algebra", "M", "partial", "2", "x1*x2"}).out, "x1 + h2\n");
}

TEST(RunCommand, VerifySuites) {
  Outcome r = run({"verify", "weyl", "--samples", "20", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS verify weyl"), std::string::npos);
  Outcome j = run({"verify", "theta", "--samples", "10", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["suite"], "theta");
  EXPECT_FALSE(doc["reports"].empty());
}

TEST(RunCommand, JsonDocumentShape) {
  Outcome r = run({"--algebra", "M", "--format", "json", "normalize", "x2*x1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["config"]["m"], 1);
  EXPECT_EQ(doc["config"]["algebra"], "M");
  EXPECT_EQ(doc["config"]["z"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(doc["input"], "x2*x1");
  const auto& terms = doc["result_terms"];
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0]["coeff"]["rational"], "1");
  EXPECT_EQ(terms[0]["monomial"]["exps"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(terms[0]["monomial"]["g"], 0);
  EXPECT_EQ(terms[1]["coeff"]["rational"], "-1");
  EXPECT_EQ(terms[1]["coeff"]["h_exps"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(terms[1]["coeff"]["p_exps"], nlohmann::json::array({0, 0}));
  EXPECT_EQ(terms[1]["wedge"], nlohmann::json::array({0, 0}));

  Outcome t = run({"--format", "json", "coproduct", "a2"});
  auto tdoc = nlohmann::json::parse(t.out);
  ASSERT_EQ(tdoc["result_terms"].size(), 2u);
  EXPECT_EQ(tdoc["result_terms"][0]["factors"].size(), 2u);

  Outcome f = run({"--format", "json", "d", "a2"});
  auto fdoc = nlohmann::json::parse(f.out);
  EXPECT_EQ(fdoc["result_terms"][0]["wedge"], nlohmann::json::array({0, 1}));
}

TEST(RunCommand, ByteStable) {
  std::vector<std::string> args{"--m", "2", "--n", "2", "--z", "1,2,3,-1", "--format", "json",
                                "antipode", "(a1 + a2*a3)^2 * a4"};
  Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> v{"verify", "hopf", "--samples", "15", "--seed", "11"};
  EXPECT_EQ(run(v).out, run(v).out);
}
