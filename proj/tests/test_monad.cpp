#include "doctest.h"
#include "helpers.hpp"

using namespace lambang;
using namespace lambang::testing;

namespace {

MonadVal<int> dist_of(std::initializer_list<std::pair<int, Rational>> entries) {
  MonadVal<int> r;
  r.kind = Monad::Dist;
  typename MonadVal<int>::DistV d;
  for (const auto& [k, p] : entries) d.p.emplace(k, p);
  r.u = std::move(d);
  return r;
}

MonadVal<int> out_of(std::string prefix, std::optional<int> v) {
  MonadVal<int> r;
  r.kind = Monad::Output;
  r.u = typename MonadVal<int>::OutV{std::move(prefix), v};
  return r;
}

}  // namespace

TEST_CASE("unit per monad") {
  CHECK(mv::mval_eq(mv::unit(Monad::Dist, 7), dist_of({{7, rat(1, 1)}})));
  CHECK(mv::mval_eq(mv::unit(Monad::Output, 7), out_of("", 7)));
  MonadVal<int> mb = mv::unit(Monad::Maybe, 7);
  CHECK(std::get<MonadVal<int>::MaybeV>(mb.u).v == 7);
  MonadVal<int> in = mv::unit(Monad::Input, 7);
  CHECK(std::get<MonadVal<int>::InV>(in.u).root->leaf == 7);
}

TEST_CASE("bind per monad") {
  // right unit on a fair coin
  MonadVal<int> coin = dist_of({{0, rat(1, 2)}, {1, rat(1, 2)}});
  CHECK(mv::mval_eq(mv::bind(coin, [](const int& x) { return mv::unit(Monad::Dist, x); }),
                    coin));
  // divergence is absorbing
  MonadVal<int> div = mv::bottom<int>(Monad::Maybe);
  CHECK(mv::mval_eq(mv::bind(div, [](const int& x) { return mv::unit(Monad::Maybe, x + 1); }),
                    div));
  // output concatenates prefixes
  CHECK(mv::mval_eq(mv::bind(out_of("a", 3), [](const int& x) { return out_of("b", x); }),
                    out_of("ab", 3)));
  // input grafts at leaves
  MonadVal<int> tree;
  tree.kind = Monad::Input;
  tree.u = MonadVal<int>::InV{mv::in_read<int>(mv::in_leaf<int>(1), mv::in_leaf<int>(std::nullopt))};
  MonadVal<int> grafted = mv::bind(tree, [](const int& x) {
    MonadVal<int> r;
    r.kind = Monad::Input;
    r.u = MonadVal<int>::InV{mv::in_read<int>(mv::in_leaf<int>(x), mv::in_leaf<int>(x + 1))};
    return r;
  });
  const auto& root = std::get<MonadVal<int>::InV>(grafted.u).root;
  REQUIRE_FALSE(root->is_leaf());
  CHECK_FALSE(root->l->is_leaf());
  CHECK(root->l->l->leaf == 1);
  CHECK(root->l->r->leaf == 2);
  CHECK(root->r->is_leaf());
  CHECK_FALSE(root->r->leaf.has_value());
}

TEST_CASE("operations") {
  // fair choice halves both sides; the empty subdistribution contributes nothing
  CHECK(mv::mval_eq(mv::apply_op(Monad::Dist, "choice",
                                 std::vector<MonadVal<int>>{mv::unit(Monad::Dist, 5), mv::bottom<int>(Monad::Dist)}),
                    dist_of({{5, rat(1, 2)}})));
  // print prepends
  CHECK(mv::mval_eq(mv::apply_op(Monad::Output, "print_a", std::vector<MonadVal<int>>{out_of("b", 2)}),
                    out_of("ab", 2)));
  // read builds the node
  MonadVal<int> rd = mv::apply_op(Monad::Input, "read",
                                  std::vector<MonadVal<int>>{mv::unit(Monad::Input, 1), mv::unit(Monad::Input, 2)});
  const auto& root = std::get<MonadVal<int>::InV>(rd.u).root;
  REQUIRE_FALSE(root->is_leaf());
  CHECK(root->l->leaf == 1);
  CHECK(root->r->leaf == 2);
  CHECK_THROWS_AS(mv::apply_op(Monad::Dist, "read",
                               std::vector<MonadVal<int>>{mv::unit(Monad::Dist, 1), mv::unit(Monad::Dist, 2)}),
                  MonadError);
}

TEST_CASE("bottom and the information order") {
  CHECK(mv::leq(mv::bottom<int>(Monad::Dist), dist_of({{3, rat(1, 3)}})));
  CHECK(mv::leq(out_of("a", std::nullopt), out_of("ab", 4)));
  CHECK_FALSE(mv::leq(dist_of({{3, rat(1, 2)}}), dist_of({{4, rat(1, 2)}})));
  CHECK_FALSE(mv::leq(out_of("ab", 4), out_of("a", std::nullopt)));
  for (Monad m : all_monads()) {
    MvGen gen(11);
    for (int i = 0; i < 50; ++i) {
      MonadVal<int> v = gen(m);
      CHECK(mv::leq(mv::bottom<int>(m), v));
      CHECK(mv::leq(v, v));
    }
  }
}

TEST_CASE("observation erases values and keeps effects") {
  CHECK(mv::mval_eq(mv::obs(dist_of({{1, rat(1, 4)}, {2, rat(1, 4)}})),
                    [] {
                      MonadVal<Unit> r;
                      r.kind = Monad::Dist;
                      MonadVal<Unit>::DistV d;
                      d.p.emplace(Unit{}, rat(1, 2));
                      r.u = std::move(d);
                      return r;
                    }()));
  MonadVal<Unit> o = mv::obs(out_of("ab", 7));
  const auto& ov = std::get<MonadVal<Unit>::OutV>(o.u);
  CHECK(ov.prefix == "ab");
  CHECK(ov.v.has_value());
  CHECK(mv::mval_eq(mv::obs(mv::bottom<int>(Monad::Maybe)), mv::bottom<Unit>(Monad::Maybe)));
}

TEST_CASE("normal-form equality") {
  CHECK(mv::mval_eq(dist_of({{1, rat(1, 2)}}), dist_of({{1, rat(2, 4)}})));
  CHECK_FALSE(mv::mval_eq(out_of("a", std::nullopt), out_of("a", 5)));
  MonadVal<int> t1, t2;
  t1.kind = t2.kind = Monad::Input;
  t1.u = MonadVal<int>::InV{mv::in_read<int>(mv::in_leaf<int>(3), mv::in_leaf<int>(std::nullopt))};
  t2.u = MonadVal<int>::InV{mv::in_read<int>(mv::in_leaf<int>(3), mv::in_leaf<int>(std::nullopt))};
  CHECK(mv::mval_eq(t1, t2));
}

TEST_CASE("Kleisli laws hold exactly on random values") {
  for (Monad m : all_monads()) {
    MvGen gen(101 + static_cast<int>(m));
    for (int i = 0; i < 300; ++i) {
      MonadVal<int> v = gen(m);
      auto f = gen.fn(m);
      auto g = gen.fn(m);
      int x = gen.small();
      // left unit
      CHECK(mv::mval_eq(mv::bind(mv::unit(m, x), f), f(x)));
      // right unit
      CHECK(mv::mval_eq(mv::bind(v, [&](const int& y) { return mv::unit(m, y); }), v));
      // associativity
      CHECK(mv::mval_eq(mv::bind(mv::bind(v, f), g),
                        mv::bind(v, [&](const int& y) { return mv::bind(f(y), g); })));
    }
  }
}

TEST_CASE("operations are algebraic") {
  for (Monad m : all_monads()) {
    MvGen gen(202 + static_cast<int>(m));
    for (const auto& sig : signature(m, "abc")) {
      for (int i = 0; i < 100; ++i) {
        std::vector<MonadVal<int>> args;
        for (int k = 0; k < sig.arity; ++k) args.push_back(gen(m));
        auto f = gen.fn(m);
        MonadVal<int> lhs = mv::bind(mv::apply_op(m, sig.name, args), f);
        std::vector<MonadVal<int>> bound;
        for (const auto& a : args) bound.push_back(mv::bind(a, f));
        CHECK(mv::mval_eq(lhs, mv::apply_op(m, sig.name, bound)));
      }
    }
  }
}

TEST_CASE("bind is strict and monotone, obs is monotone") {
  for (Monad m : all_monads()) {
    MvGen gen(303 + static_cast<int>(m));
    for (int i = 0; i < 100; ++i) {
      MonadVal<int> hi = gen(m);
      MonadVal<int> lo = gen.below(hi);
      REQUIRE(mv::leq(lo, hi));
      auto f2 = gen.fn(m);
      // pointwise-below variant of f2
      auto table_lo = std::make_shared<std::vector<MonadVal<int>>>();
      for (int k = 0; k < 5; ++k) table_lo->push_back(gen.below(f2(k)));
      auto f1 = [table_lo](const int& x) { return (*table_lo)[((x % 5) + 5) % 5]; };
      CHECK(mv::mval_eq(mv::bind(mv::bottom<int>(m), f2), mv::bottom<int>(m)));
      CHECK(mv::leq(mv::bind(lo, f2), mv::bind(hi, f2)));
      CHECK(mv::leq(mv::bind(hi, f1), mv::bind(hi, f2)));
      CHECK(mv::leq(mv::obs(lo), mv::obs(hi)));
    }
  }
}

TEST_CASE("dist bind and choice never exceed unit mass") {
  MvGen gen(404);
  for (int i = 0; i < 200; ++i) {
    MonadVal<int> a = gen(Monad::Dist);
    MonadVal<int> b = gen(Monad::Dist);
    auto f = gen.fn(Monad::Dist);
    CHECK(cmp(mv::dist_mass(mv::bind(a, f)), Rational(1)) <= 0);
    CHECK(cmp(mv::dist_mass(mv::apply_op(Monad::Dist, "choice", std::vector<MonadVal<int>>{a, b})), Rational(1)) <= 0);
  }
}

TEST_CASE("json serialization is exact") {
  nlohmann::json j = mv::to_json(mv::obs(dist_of({{1, rat(1, 8)}, {2, rat(1, 8)}})));
  CHECK(j["monad"] == "dist");
  CHECK(j["entries"][0]["prob"] == "1/4");
  CHECK(j["entries"][0]["value"] == "*");
}
