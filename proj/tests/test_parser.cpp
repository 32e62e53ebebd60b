#include "doctest.h"
#include "helpers.hpp"

#include "lambang/parser.hpp"

using namespace lambang;
using namespace lambang::testing;

TEST_CASE("grammar constructs") {
  TermPtr t = vl("\\x. return x");
  REQUIRE(t->kind == TermKind::Lam);
  CHECK(t->kids[0]->kind == TermKind::Ret);
  CHECK(t->kids[0]->kids[0]->kind == TermKind::VarLin);

  t = cm("let !a = v in a");
  REQUIRE(t->kind == TermKind::LetBang);
  CHECK(t->kids[0]->kind == TermKind::VarLin);
  CHECK(t->kids[1]->kind == TermKind::VarNonLin);

  // parses fine; the typechecker rejects it later
  t = cm("(!e) v");
  REQUIRE(t->kind == TermKind::App);
  CHECK(t->kids[0]->kind == TermKind::Bang);

  t = cm("choice(return x, a)");
  REQUIRE(t->kind == TermKind::OpApp);
  CHECK(t->kids.size() == 2);
}

TEST_CASE("identifier position decides the variable class") {
  CHECK(cm("a")->kind == TermKind::VarNonLin);
  CHECK(vl("a")->kind == TermKind::VarLin);
  TermPtr ap = cm("f (\\x. return x)");
  REQUIRE(ap->kind == TermKind::App);
  CHECK(ap->kids[0]->kind == TermKind::VarLin);
}

TEST_CASE("errors carry positions") {
  try {
    parse_comp_str("let x = return y in\n  let z = ) in x z", Monad::Dist);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("operation symbols are validated against the monad") {
  CHECK_THROWS_AS(parse_comp_str("choice(a, a)", Monad::Maybe), ParseError);
  CHECK_THROWS_AS(parse_comp_str("print_a(a)", Monad::Dist), ParseError);
  CHECK_THROWS_AS(parse_comp_str("choice(a)", Monad::Dist), ParseError);  // arity
  CHECK_NOTHROW(parse_comp_str("print_a(a)", Monad::Output));
  CHECK_THROWS_AS(parse_comp_str("print_z(a)", Monad::Output, "ab"), ParseError);
  CHECK_NOTHROW(parse_comp_str("read(a, a)", Monad::Input));
}

TEST_CASE("definition files") {
  auto defs = parse_defs("# comment\n"
                         "def id : mu X. X -o X = \\x. return x\n"
                         "def run : mu X. X -o X = id id\n",
                         Monad::Dist);
  REQUIRE(defs.size() == 2);
  CHECK(defs[0].body_is_value);
  CHECK_FALSE(defs[1].body_is_value);
  CHECK(defs[1].body->kind == TermKind::App);
}
