#include "doctest.h"
#include "helpers.hpp"

#include "lambang/enumerate.hpp"

using namespace lambang;
using namespace lambang::testing;

namespace {
const Monad D = Monad::Dist;
}

TEST_CASE("budget examples") {
  TypePtr iota = ty("mu X. X -o X");
  auto vals = enumerate_values(TypeEnv{}, ty("(mu X. !X) -o (mu X. !X)"), 3, D);
  bool has_id = false;
  for (const auto& v : vals) has_id |= alpha_eq(v, vl("\\x. return x"));
  CHECK(has_id);

  CHECK(enumerate_comps(TypeEnv{}, iota, 0, D).empty());
  CHECK(enumerate_values(TypeEnv{}, iota, 0, D).empty());

  TypeEnv env;
  env.linear.emplace_back("x", ty("!(mu X. X -o X)"));
  auto only_var = enumerate_values(env, ty("!(mu X. X -o X)"), 1, D);
  REQUIRE(only_var.size() == 1);
  CHECK(alpha_eq(only_var[0], vl("x")));
}

TEST_CASE("results are alpha-distinct, well-typed, within budget, size-ordered") {
  TypePtr iota = ty("mu X. X -o X");
  TypeEnv env;
  env.nonlinear.emplace_back("a", iota);
  env.linear.emplace_back("x", ty("!(mu X. X -o X)"));
  auto terms = enumerate_comps(env, iota, 7, D);
  REQUIRE(!terms.empty());
  std::set<std::string> keys;
  int prev_size = 0;
  for (const auto& e : terms) {
    CAPTURE(term_to_string(e));
    CHECK(keys.insert(term_key(e)).second);
    CHECK(term_size(e) <= 7);
    CHECK(term_size(e) >= prev_size);
    prev_size = term_size(e);
    CHECK(typechecks_comp(env, e, iota, D));
  }
}

TEST_CASE("enumeration consumes the whole linear environment") {
  TypePtr iota = ty("mu X. X -o X");
  TypeEnv env;
  env.linear.emplace_back("x", iota);
  env.linear.emplace_back("y", iota);
  for (const auto& e : enumerate_comps(env, iota, 6, D)) {
    auto fl = free_linear(e);
    CHECK(fl == std::set<std::string>{"x", "y"});
  }
}

TEST_CASE("enumeration is deterministic") {
  TypePtr iota = ty("mu X. X -o X");
  auto a = enumerate_comps(TypeEnv{}, iota, 8, D);
  auto b = enumerate_comps(TypeEnv{}, iota, 8, D);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(alpha_eq(a[i], b[i]));
}

TEST_CASE("signature-aware: operations appear exactly for the active monad") {
  TypePtr iota = ty("mu X. X -o X");
  bool dist_has_choice = false;
  for (const auto& e : enumerate_comps(TypeEnv{}, iota, 9, Monad::Dist))
    dist_has_choice |= term_to_string(e).find("choice") != std::string::npos;
  CHECK(dist_has_choice);
  for (const auto& e : enumerate_comps(TypeEnv{}, iota, 9, Monad::Maybe))
    CHECK(term_to_string(e).find("choice") == std::string::npos);
}
