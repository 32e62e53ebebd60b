#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lambang {

// Linear types: type variables, !t, t -o t, and the two equi-recursive
// mu-forms  mu X. t -o t  and  mu X. !t.
enum class TypeKind { Var, Bang, Lolli, MuLolli, MuBang };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  TypeKind kind;
  std::string var;  // Var: the variable; MuLolli/MuBang: the binder
  TypePtr a;        // Bang/MuBang: inner; Lolli/MuLolli: domain
  TypePtr b;        // Lolli/MuLolli: codomain
};

TypePtr tvar(const std::string& x);
TypePtr tbang(TypePtr t);
TypePtr tlolli(TypePtr a, TypePtr b);
TypePtr tmu_lolli(const std::string& x, TypePtr a, TypePtr b);
TypePtr tmu_bang(const std::string& x, TypePtr a);

bool type_closed(const TypePtr& t);

// Capture-avoiding substitution of s for free occurrences of x in t.
TypePtr type_subst(const TypePtr& t, const std::string& x, const TypePtr& s);

// One-step unfolding of a mu-type; identity on everything else.
//   mu X. a -o b   ~>   a[mu/X] -o b[mu/X]
//   mu X. !a       ~>   !a[mu/X]
TypePtr unfold(const TypePtr& t);

// Head views through at most one mu-unfolding.
std::optional<std::pair<TypePtr, TypePtr>> head_lolli(const TypePtr& t);
std::optional<TypePtr> head_bang(const TypePtr& t);

// Canonical key: alpha-invariant (mu binders numbered by depth).
std::string type_key(const TypePtr& t);

// Coinductive equality: both unfolding axioms plus the assume-and-unfold
// rule, decided with a visited-pair set over the subterm closure.
bool type_eq(const TypePtr& s, const TypePtr& t);

std::string type_to_string(const TypePtr& t);

// All closed component types reachable from the seeds by taking parts of
// ! and -o and unfolding mu once, deduplicated by type_key. Finite because
// the grammar's mu-types denote regular trees.
std::vector<TypePtr> type_closure(const std::vector<TypePtr>& seeds);

// All closed types with at most `max_size` constructors, in a fixed
// deterministic order (used as the sampling pool for random corpora).
std::vector<TypePtr> enumerate_closed_types(int max_size);

}  // namespace lambang
