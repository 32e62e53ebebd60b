#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lambang/type.hpp"

namespace lambang {

// Two syntactic classes. Values: VarLin, Lam, Bang. Computations: VarNonLin,
// Ret, App, Let, LetBang, OpApp. Ann wraps either class with a type
// annotation (introduced by definition expansion, erased before evaluation).
// Hole is the single linear computation hole of a context.
enum class TermKind {
  VarLin, Lam, Bang,               // values
  VarNonLin, Ret, App, Let, LetBang, OpApp,  // computations
  Ann, Hole
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;            // variable / binder / operation symbol
  std::vector<TermPtr> kids;   // Lam/Bang: {body}; Ret: {v}; App: {v,w};
                               // Let: {e,f}; LetBang: {v,f}; OpApp: args;
                               // Ann: {t}
  TypePtr ann;                 // Ann only
};

TermPtr var_lin(const std::string& x);
TermPtr var_nonlin(const std::string& a);
TermPtr lam(const std::string& x, TermPtr body);
TermPtr bang(TermPtr e);
TermPtr ret(TermPtr v);
TermPtr app(TermPtr v, TermPtr w);
TermPtr let_(TermPtr e, const std::string& x, TermPtr f);
TermPtr let_bang(TermPtr v, const std::string& a, TermPtr f);
TermPtr op_app(const std::string& op, std::vector<TermPtr> args);
TermPtr ann(TermPtr t, TypePtr ty);
TermPtr hole();

// Syntactic class, looking through Ann.
bool is_value(const TermPtr& t);
bool is_computation(const TermPtr& t);

// AST node count; Ann wrappers are free, everything else costs 1.
int term_size(const TermPtr& t);

std::set<std::string> free_linear(const TermPtr& t);
std::set<std::string> free_nonlinear(const TermPtr& t);

// A name based on `base` that avoids everything in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// Capture-avoiding substitutions: a value for a linear variable, and a
// computation for a non-linear variable (the latter may duplicate).
TermPtr subst_value(const TermPtr& t, const std::string& x, const TermPtr& v);
TermPtr subst_comp(const TermPtr& t, const std::string& a, const TermPtr& e);

// Drop Ann wrappers everywhere (after typechecking, before evaluation).
TermPtr strip_ann(const TermPtr& t);

// Alpha-invariant canonical key; Ann-transparent. Used for term equality,
// ordering, and deduplication.
std::string term_key(const TermPtr& t);
bool alpha_eq(const TermPtr& s, const TermPtr& t);

int hole_count(const TermPtr& t);
// Replace the hole with computation e (e closed, so no capture).
TermPtr plug(const TermPtr& ctx, const TermPtr& e);

std::string term_to_string(const TermPtr& t);

// Value term with cached canonical key, ordered for use in monadic maps.
struct TermV {
  TermPtr term;
  std::string key;
  TermV() = default;
  explicit TermV(TermPtr t) : term(std::move(t)), key(term_key(term)) {}
  bool operator<(const TermV& o) const { return key < o.key; }
  bool operator==(const TermV& o) const { return key == o.key; }
};

std::string display(const TermV& v);

}  // namespace lambang
