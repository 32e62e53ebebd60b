#include "doctest.h"
#include "helpers.hpp"

#include "lambang/eval.hpp"

using namespace lambang;
using namespace lambang::testing;

namespace {

Rational mass(const MonadVal<TermV>& v) { return mv::dist_mass(v); }

}  // namespace

TEST_CASE("base clauses") {
  TermPtr e = cm("return \\x. return x");
  CHECK(mv::mval_eq(eval_fuel(e, 1, Monad::Dist),
                    mv::unit(Monad::Dist, TermV(vl("\\x. return x")))));
  for (Monad m : all_monads())
    CHECK(mv::mval_eq(eval_fuel(cm("return \\x. return x", m), 0, m),
                      mv::bottom<TermV>(m)));
}

TEST_CASE("beta, sequencing, unbang") {
  Monad m = Monad::Maybe;
  CHECK(mv::mval_eq(eval_fuel(cm("(\\x. return x) (\\y. return y)", m), 5, m),
                    mv::unit(m, TermV(vl("\\y. return y", m)))));
  CHECK(mv::mval_eq(
      eval_fuel(cm("let z = return (\\y. return y) in return z", m), 5, m),
      mv::unit(m, TermV(vl("\\y. return y", m)))));
  CHECK(mv::mval_eq(
      eval_fuel(cm("let !a = !(return (\\y. return y)) in a", m), 5, m),
      mv::unit(m, TermV(vl("\\y. return y", m)))));
}

TEST_CASE("choice against divergence gives exactly one half") {
  TermPtr omega = strip_ann(prelude::omega(prelude::iota()));
  TermPtr e = op_app("choice", {cm("return \\x. return x"), omega});
  MonadVal<TermV> v = eval_fuel(e, 50, Monad::Dist);
  CHECK(mv::mval_eq(v, mv::apply_op(Monad::Dist, "choice",
                                    std::vector<MonadVal<TermV>>{
                                        mv::unit(Monad::Dist, TermV(vl("\\x. return x"))),
                                        mv::bottom<TermV>(Monad::Dist)})));
  CHECK(cmp(mass(v), rat(1, 2)) == 0);
}

TEST_CASE("omega diverges at every fuel and stabilizes") {
  TermPtr omega = strip_ann(prelude::omega(prelude::iota()));
  EvalResult r = eval(omega, 100, Monad::Maybe);
  CHECK(mv::mval_eq(r.value, mv::bottom<TermV>(Monad::Maybe)));
  CHECK(r.stabilized);
  for (int k : {0, 1, 2, 3, 7, 30})
    CHECK(mv::mval_eq(eval_fuel(omega, k, Monad::Dist), mv::bottom<TermV>(Monad::Dist)));
}

TEST_CASE("return stabilizes immediately") {
  EvalResult r = eval(cm("return \\x. return x"), 5, Monad::Dist);
  CHECK(r.stabilized);
  CHECK(mv::mval_eq(r.value, mv::unit(Monad::Dist, TermV(vl("\\x. return x")))));
}

TEST_CASE("output and input operations") {
  Monad o = Monad::Output;
  MonadVal<TermV> v = eval_fuel(cm("print_a(print_b(return \\x. return x))", o), 10, o);
  const auto& ov = std::get<MonadVal<TermV>::OutV>(v.u);
  CHECK(ov.prefix == "ab");
  REQUIRE(ov.v.has_value());
  CHECK(alpha_eq(ov.v->term, vl("\\x. return x")));

  Monad i = Monad::Input;
  MonadVal<TermV> t =
      eval_fuel(cm("read(return \\x. return x, return \\x. (\\y. return y) x)", i), 10, i);
  const auto& root = std::get<MonadVal<TermV>::InV>(t.u).root;
  REQUIRE_FALSE(root->is_leaf());
  REQUIRE(root->l->leaf.has_value());
  REQUIRE(root->r->leaf.has_value());
  CHECK(alpha_eq(root->l->leaf->term, vl("\\x. return x")));
  CHECK(alpha_eq(root->r->leaf->term, vl("\\x. (\\y. return y) x", i)));
}

TEST_CASE("ill-formed redexes are rejected") {
  CHECK_THROWS_AS(eval_fuel(cm("(!(return x)) (\\y. return y)"), 5, Monad::Dist),
                  MonadError);
  CHECK_THROWS_AS(eval_fuel(cm("let !a = \\y. return y in a"), 5, Monad::Dist),
                  MonadError);
}

TEST_CASE("fuel chains are monotone and deterministic on a corpus") {
  for (Monad m : all_monads()) {
    auto corpus = closed_corpus(m, 7, 60);
    REQUIRE(corpus.size() >= 10);
    for (const auto& [e, t] : corpus) {
      for (int k = 0; k <= 12; ++k) {
        MonadVal<TermV> lo = eval_fuel(e, k, m);
        MonadVal<TermV> hi = eval_fuel(e, k + 1, m);
        CAPTURE(term_to_string(e));
        CHECK(mv::leq(lo, hi));
      }
      CHECK(mv::mval_eq(eval_fuel(e, 9, m), eval_fuel(e, 9, m)));
    }
  }
}

TEST_CASE("type preservation on the support") {
  auto corpus = closed_corpus(Monad::Dist, 7, 40);
  for (const auto& [e, t] : corpus) {
    MonadVal<TermV> v = eval_fuel(e, 20, Monad::Dist);
    for (const auto& [tv, p] : std::get<MonadVal<TermV>::DistV>(v.u).p) {
      CAPTURE(term_to_string(e));
      CAPTURE(term_to_string(tv.term));
      CHECK(is_value(tv.term));
      CHECK_NOTHROW(check_closed_value(tv.term, t, Monad::Dist));
    }
  }
}

TEST_CASE("dist mass is bounded by one and monotone in fuel") {
  auto corpus = closed_corpus(Monad::Dist, 7, 40);
  for (const auto& [e, t] : corpus) {
    Rational prev(0);
    for (int k = 0; k <= 15; ++k) {
      Rational mk = mass(eval_fuel(e, k, Monad::Dist));
      CHECK(cmp(mk, Rational(1)) <= 0);
      CHECK(cmp(prev, mk) <= 0);
      prev = mk;
    }
  }
}
