#include "doctest.h"
#include "helpers.hpp"

#include "lambang/type.hpp"

using namespace lambang;
using namespace lambang::testing;

TEST_CASE("type parsing and printing round-trip") {
  for (const char* s : {"mu X. !X", "mu X. X -o X", "!(mu X. X -o X)",
                        "mu Y. !Y -o !(mu X. X -o X)", "!!(mu X. X -o X)",
                        "(mu X. !X) -o mu X. !X"}) {
    TypePtr t = ty(s);
    CHECK(type_eq(t, ty(type_to_string(t))));
  }
}

TEST_CASE("mu unfolding equalities") {
  CHECK(type_eq(ty("mu X. !X"), ty("!(mu X. !X)")));
  CHECK(type_eq(ty("mu X. X -o X"), ty("(mu X. X -o X) -o (mu X. X -o X)")));
}

TEST_CASE("reflexivity and head-constructor mismatches") {
  TypePtr t = ty("mu Y. !Y -o !(mu X. X -o X)");
  CHECK(type_eq(t, t));
  CHECK_FALSE(type_eq(ty("!(mu X. !X)"), ty("(mu X. !X) -o (mu X. !X)")));
  CHECK_FALSE(type_eq(ty("mu X. X -o X"), ty("mu X. !X")));
}

TEST_CASE("distinct recursive types with equal shapes at the top") {
  CHECK_FALSE(type_eq(ty("mu X. X -o X"), ty("mu X. X -o !X")));
  // two presentations of the same regular tree
  CHECK(type_eq(ty("mu X. X -o X"), ty("mu X. (X -o X) -o X")));
}

TEST_CASE("type_eq is an equivalence relation on enumerated types") {
  std::vector<TypePtr> types = enumerate_closed_types(8);
  REQUIRE(types.size() >= 30);
  if (types.size() > 30) types.resize(30);
  for (const auto& t : types) CHECK(type_eq(t, t));
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = 0; j < types.size(); ++j)
      CHECK(type_eq(types[i], types[j]) == type_eq(types[j], types[i]));
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = 0; j < types.size(); ++j) {
      if (!type_eq(types[i], types[j])) continue;
      for (size_t k = 0; k < types.size(); ++k)
        if (type_eq(types[j], types[k])) CHECK(type_eq(types[i], types[k]));
    }
}

TEST_CASE("both mu-unfolding equations hold on every enumerated mu-type") {
  for (const auto& t : enumerate_closed_types(8)) {
    if (t->kind == TypeKind::MuLolli || t->kind == TypeKind::MuBang)
      CHECK(type_eq(t, unfold(t)));
  }
}

TEST_CASE("closure is finite and deduplicated") {
  auto cl = type_closure({ty("!!(mu X. X -o X)")});
  CHECK(cl.size() == 3);  // !!iota, !iota, iota (iota -o iota collapses into iota)
  for (size_t i = 0; i < cl.size(); ++i)
    for (size_t j = i + 1; j < cl.size(); ++j) CHECK_FALSE(type_eq(cl[i], cl[j]));
}
