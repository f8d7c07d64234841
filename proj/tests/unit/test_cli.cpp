#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "corpus.hpp"
#include "pencil/cli/app.hpp"
#include "pencil/cli/parse.hpp"

using namespace pencil;
using namespace pencil::cli;
using corpus::q;
using corpus::X;
using corpus::Y;
using corpus::Z;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kHesse = {"--f1", "x^3+y^3+z^3", "--f2", "x*y*z"};
const std::vector<std::string> kB3 = {"--f1", "x^2*(y^2-z^2)", "--f2", "y^2*(x^2-z^2)"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Parse, Examples) {
  const auto f = parse_form("x^3+y^3+z^3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.terms().size(), 3u);
  EXPECT_EQ(parse_form("x^2*(y^2-z^2)"), X().pow(2) * Y().pow(2) - X().pow(2) * Z().pow(2));
  EXPECT_EQ(parse_form("-x^2 + 3/2*y*z"), -X().pow(2) + (Y() * Z()).scaled(q(3) / q(2)));
  EXPECT_EQ(parse_form("2*-x"), X().scaled(q(-2)));
  EXPECT_EQ(parse_form("(x+y)^2 - x^2 - y^2"), (X() * Y()).scaled(q(2)));
  EXPECT_EQ(parse_form("x^0*y"), Y());
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse_form("-x^2"), -X().pow(2));
  EXPECT_EQ(parse_form("2*x^2*y"), (X().pow(2) * Y()).scaled(q(2)));
  EXPECT_EQ(parse_form("x*y+y*z-z*x"), X() * Y() + Y() * Z() - Z() * X());
}

TEST(Parse, Errors) {
  try {
    parse_form("x^2+y");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "not homogeneous: degrees 2 and 1");
  }
  try {
    parse_form("x^2+\n  w*y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_STREQ(e.what(), "line 2, column 3: unknown identifier 'w'");
  }
  EXPECT_THROW(parse_form("x*(y+z"), ParseError);
  EXPECT_THROW(parse_form("x^"), ParseError);
  EXPECT_THROW(parse_form("x^-1"), ParseError);
  EXPECT_THROW(parse_form("x y"), ParseError);
  EXPECT_THROW(parse_form(""), ParseError);
  EXPECT_THROW(parse_form("1/0*x"), ParseError);
  EXPECT_THROW(parse_form("x-x"), InputError);
}

TEST(Parse, Extension) {
  const auto k = parse_extension("t: t^2+t+1");
  EXPECT_EQ(k->degree(), 2);
  EXPECT_EQ(k->generator_name(), "t");
  const auto f = parse_form("x + t*y", k);
  EXPECT_FALSE(f.is_rational());
  EXPECT_THROW(parse_form("x + t*y"), ParseError);
  EXPECT_THROW(parse_extension("t: t^2-1"), InputError);
  EXPECT_THROW(parse_extension("t: 2*t^2+1"), InputError);
  EXPECT_THROW(parse_extension("t: t^2+1/2"), InputError);
  EXPECT_THROW(parse_extension("x: x^2+1"), InputError);
  EXPECT_THROW(parse_extension("t^2+1"), InputError);
  EXPECT_THROW(parse_extension("t: t^8+3", 6), LimitExceeded);
}

TEST(Parse, RoundTrip) {
  const auto k = parse_extension("a: a^2-a+1");
  const std::vector<forms::Form> corpus_forms = {
      corpus::hesse().f1(), corpus::hesse().f2(), corpus::b3().f1(), corpus::b3().f2(),
      corpus::hesse_cr_basis().f2(), corpus::a3_conics().f1(),
      forms::hessian(corpus::b3().f1()), (X().scaled(q(-7) / q(3)) + Y()).pow(4)};
  for (const auto& f : corpus_forms) {
    const std::string text = f.to_string();
    EXPECT_EQ(parse_form(text).to_string(), text);
  }
  const forms::Form g = parse_form("(a+1)*x^2 - a*y*z + 1/3*z^2", k);
  EXPECT_EQ(parse_form(g.to_string(), k), g);
}

TEST(Cli, AnalyzeHesseJson) {
  const Result r = call(with({"analyze"}, with(kHesse, {"--json"})));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"k\": 4"), std::string::npos);
  EXPECT_NE(r.out.find("\"b_count\": 9"), std::string::npos);
  EXPECT_NE(r.out.find("\"type\": [\n        4,\n        3\n      ]"), std::string::npos);
  EXPECT_NE(r.out.find("\"timings_ms\": {}"), std::string::npos);
}

TEST(Cli, Determinism) {
  for (const auto& pencil : {kHesse, kB3}) {
    const Result a = call(with({"analyze"}, with(pencil, {"--json", "--seed", "5"})));
    const Result b = call(with({"analyze"}, with(pencil, {"--json", "--seed", "5"})));
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SeedFromEnvironment) {
  const Result a = call(with({"analyze"}, with(kB3, {"--json", "--seed", "9"})));
  setenv("PENCIL_SEED", "9", 1);
  const Result b = call(with({"analyze"}, with(kB3, {"--json", "--seed", "1"})));
  unsetenv("PENCIL_SEED");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Classify) {
  const Result r = call({"classify", "x^2*y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "CONCURRENT_LINES (completely reducible)");
  EXPECT_EQ(call({"classify", "x^3+y^3+z^3"}).out.substr(0, 7), "GENERIC");
  EXPECT_EQ(call({"classify", "x*(y^2-x*z)^2"}).out.substr(0, 14), "SPECIAL_NOT_CR");
}

TEST(Cli, ExitCodes) {
  const Result shared = call({"analyze", "--f1", "x*y", "--f2", "x*z"});
  EXPECT_EQ(shared.code, 1);
  EXPECT_NE(shared.err.find("generators share a factor"), std::string::npos);
  EXPECT_EQ(call({"hessian", "x^2+y"}).code, 1);
  EXPECT_EQ(call({"analyze", "--f1", "x^3"}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"analyze", "--f1", "x^2", "--f2", "y^2", "--max-ext-degree", "0"}).code, 1);
  // Base points of x^5 + 2 z^5 and y need a degree-5 extension.
  EXPECT_EQ(call({"base-locus", "--f1", "x^5+2*z^5", "--f2", "y^5+3*z^5", "--max-ext-degree", "2"}).code, 2);
  EXPECT_EQ(call(with({"verify"}, kHesse)).code, 0);
  EXPECT_EQ(call(with({"verify"}, kB3)).code, 0);
  EXPECT_EQ(call(with({"verify"}, with(kHesse, {"--inject-fault"}))).code, 3);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Subcommands) {
  const Result h = call({"hessian", "x*y*z"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "2*x*y*z\n");
  const Result n = call(with({"noether-decomp"}, kHesse));
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("A = -6*lam*mu^2"), std::string::npos);
  EXPECT_NE(n.out.find("B = 216*lam^3+2*mu^3"), std::string::npos);
  const Result f = call({"factor-hessian", "--f1", "x*y*z", "--f2", "x^3+y^3+z^3-3*x*y*z"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("p = lam^2-18*lam*mu+81*mu^2"), std::string::npos);
  const Result nb = call({"noether-decomp", "--boundary", "--f1", "x*y*z", "--f2", "x^3+y^3+z^3-3*x*y*z"});
  EXPECT_EQ(nb.code, 0);
  EXPECT_NE(nb.out.find("boundary satisfied: yes"), std::string::npos);
  EXPECT_EQ(call(with({"factor-hessian"}, kB3)).code, 1);
  const Result s = call(with({"special-fibers"}, kB3));
  EXPECT_NE(s.out.find("special fibers: 3 (3 completely reducible)"), std::string::npos);
  const Result b = call(with({"base-locus"}, kB3));
  EXPECT_NE(b.out.find("base points: 7 distinct"), std::string::npos);
  const Result net = call({"net-check", "--f1", "x^2-y^2", "--f2", "y^2-z^2"});
  EXPECT_NE(net.out.find("(3,2)-net"), std::string::npos);
  const Result ext = call({"hessian", "--ext", "t: t^2+t+1", "x^3+t*y^3+z^3"});
  EXPECT_EQ(ext.code, 0);
  EXPECT_EQ(call({"hessian", "--ext", "t: t^2-1", "x^3"}).code, 1);
}
