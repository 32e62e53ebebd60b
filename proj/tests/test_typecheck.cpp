#include "doctest.h"
#include "helpers.hpp"

#include "lambang/enumerate.hpp"

using namespace lambang;
using namespace lambang::testing;

namespace {
const Monad D = Monad::Dist;
}

TEST_CASE("identity checks at an arrow type") {
  CHECK_NOTHROW(check_closed_value(vl("\\x. return x"), ty("mu X. X -o X"), D));
  CHECK_NOTHROW(check_closed_value(vl("\\x. return x"),
                                   ty("!(mu X. X -o X) -o !(mu X. X -o X)"), D));
}

TEST_CASE("applying a banged computation is a type error") {
  TermPtr bad = cm("(!(return \\x. return x)) (\\x. return x)");
  CHECK_THROWS_AS(check_closed_comp(bad, ty("mu X. X -o X"), D), TypeError);
}

TEST_CASE("linearity violations") {
  // x used twice across a split
  CHECK_THROWS_WITH_AS(
      check_closed_value(vl("\\x. let y = return x in let z = return x in y z"),
                         ty("mu X. X -o X"), D),
      doctest::Contains("used twice"), TypeError);
  // x unused
  CHECK_THROWS_WITH_AS(
      check_closed_value(vl("\\x. return \\y. return y"), ty("mu X. X -o X"), D),
      doctest::Contains("unused"), TypeError);
  // linear variable under a bang
  CHECK_THROWS_WITH_AS(
      check_closed_value(vl("\\x. return !(return x)"),
                         ty("(mu X. !X) -o !(mu X. !X)"), D),
      doctest::Contains("banged"), TypeError);
}

TEST_CASE("operation arguments share one linear environment") {
  CHECK_NOTHROW(check_closed_value(vl("\\x. choice(return x, return x)"),
                                   ty("mu X. X -o X"), D));
  CHECK_THROWS_AS(check_closed_value(vl("\\x. choice(return x, return \\y. return y)"),
                                     ty("mu X. X -o X"), D),
                  TypeError);
}

TEST_CASE("non-linear assumptions may be dropped or reused freely") {
  TypeEnv env;
  env.nonlinear.emplace_back("a", ty("mu X. X -o X"));
  CHECK(typechecks_comp(env, cm("return \\y. return y"), ty("mu X. X -o X"), D));
  CHECK(typechecks_comp(env, cm("let z1 = a in let z2 = a in z1 z2"),
                        ty("mu X. X -o X"), D));
}

TEST_CASE("substitution preserves typing") {
  TypePtr iota = ty("mu X. X -o X");
  TypeEnv env;
  env.linear.emplace_back("x", iota);
  auto bodies = enumerate_comps(env, iota, 6, D);
  auto values = enumerate_values(TypeEnv{}, iota, 6, D);
  REQUIRE(!bodies.empty());
  REQUIRE(!values.empty());
  int checked = 0;
  for (const auto& e : bodies)
    for (const auto& v : values) {
      CAPTURE(term_to_string(e));
      CAPTURE(term_to_string(v));
      CHECK_NOTHROW(check_closed_comp(subst_value(e, "x", v), iota, D));
      ++checked;
    }
  CHECK(checked >= 10);

  TypeEnv envn;
  envn.nonlinear.emplace_back("a", iota);
  for (const auto& e : enumerate_comps(envn, iota, 6, D))
    for (const auto& f : enumerate_comps(TypeEnv{}, iota, 5, D))
      CHECK_NOTHROW(check_closed_comp(subst_comp(e, "a", f), iota, D));
}

TEST_CASE("definition expansion carries annotations") {
  auto defs = parse_defs(
      "def w : mu Y. !Y -o mu X. !X = \\x. let !a = x in let z = a in z (!a)\n"
      "def omega : mu X. !X = w (!(return w))\n",
      Monad::Maybe);
  Program prog = load_program(defs, Monad::Maybe);
  REQUIRE(prog.items.size() == 2);
  CHECK(hole_count(prog.items[1].term) == 0);
  // expanded and annotation-free
  CHECK(free_linear(prog.items[1].term).empty());
  CHECK(free_nonlinear(prog.items[1].term).empty());
}

TEST_CASE("a value definition referenced in computation position becomes return") {
  Program prog = load_program(
      parse_defs("def id : mu X. X -o X = \\x. return x\n"
                 "def use : mu X. X -o X = let y = id in return y\n",
                 D),
      D);
  CHECK(prog.items[1].term->kind == TermKind::Let);
  CHECK(prog.items[1].term->kids[0]->kind == TermKind::Ret);
}

TEST_CASE("a computation definition cannot sit in value position") {
  CHECK_THROWS_AS(load_program(parse_defs("def c : mu X. X -o X = return \\x. return x\n"
                                          "def bad : mu X. X -o X = c c\n",
                                          D),
                               D),
                  TypeError);
}

TEST_CASE("raw self-application without annotations cannot be inferred") {
  TermPtr omega_raw = strip_ann(prelude::omega(ty("mu X. !X")));
  CHECK_THROWS_WITH_AS(check_closed_comp(omega_raw, ty("mu X. !X"), D),
                       doctest::Contains("infer"), TypeError);
  // the annotated prelude version checks
  CHECK_NOTHROW(check_closed_comp(prelude::omega(ty("mu X. !X")), ty("mu X. !X"), D));
}
