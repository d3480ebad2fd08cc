#include "doctest.h"
#include "qgb/errors.hpp"
#include "qgb/expr.hpp"

using namespace qgb;

TEST_CASE("tokenizer") {
  auto toks = tokenize("ring R = ZZ mod 4; # comment\nvars x'->");
  REQUIRE(toks.size() == 11);
  CHECK(toks[0].is_word("ring"));
  CHECK(toks[4].is_word("mod"));
  CHECK(toks[5].kind == Token::Kind::Integer);
  CHECK(toks[6].is(";"));
  CHECK(toks[7].is_word("vars"));
  CHECK(toks[7].line == 2);
  CHECK(toks[7].column == 1);
  CHECK(toks[8].text == "x'");
  CHECK(toks[9].is("->"));
  CHECK_THROWS_AS(tokenize("x @ y"), ParseError);
}

TEST_CASE("expression parsing and precedence") {
  auto r = PolyRing::make(BaseDomain::rationals(), {"x", "y"});
  CHECK(parse_polynomial(r, "-x^2") == parse_polynomial(r, "-(x^2)"));
  CHECK(parse_polynomial(r, "2*x^2*y - -y") == parse_polynomial(r, "2*x^2*y + y"));
  CHECK(parse_polynomial(r, "(x + 1)^2") == parse_polynomial(r, "x^2 + 2*x + 1"));
  CHECK(parse_polynomial(r, "3/6*x") == parse_polynomial(r, "1/2*x"));
  CHECK(parse_polynomial(r, "x*-y") == parse_polynomial(r, "-x*y"));
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse_expr("x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
    CHECK(e.expected().size() == 4);
    CHECK(e.found() == "'*'");
  }
  CHECK_THROWS_AS(parse_expr("(x + y"), ParseError);
  CHECK_THROWS_AS(parse_expr("x y"), ParseError);
  CHECK_THROWS_AS(parse_expr("x/0"), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
}

TEST_CASE("evaluation errors are semantic") {
  auto zz = PolyRing::make(BaseDomain::integers(), {"x"});
  CHECK_THROWS_AS(parse_polynomial(zz, "2*z"), SemanticError);
  CHECK_THROWS_AS(parse_polynomial(zz, "1/2*x"), SemanticError);
}

TEST_CASE("render round trip") {
  const char* samples[] = {
      "x",          "-x*y",           "-(x + y)",      "x - (y - 1)",  "(x + y)^3",
      "2*x^2 - 3*x + 1", "1/2*x - 7/3", "-x^2",        "(-x)^2",       "x*(y + 1)*-2",
      "-(1/2)",     "x - -y",         "((x))",         "-(-x)",        "3*(x*y)^2",
  };
  for (const char* s : samples) {
    Expr e = parse_expr(s);
    Expr again = parse_expr(e.render());
    CHECK_MESSAGE(again == e, s, " -> ", e.render());
  }
  CHECK(parse_expr("x*y + z^2").identifiers() == std::vector<std::string>{"x", "y", "z"});
}
