#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambang/monad.hpp"
#include "lambang/parser.hpp"
#include "lambang/term.hpp"
#include "lambang/type.hpp"

namespace lambang {

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Typing environment: non-linear assumptions (computations, usable at will)
// and linear assumptions (values, to be consumed exactly once). Names are
// unique within each component.
struct TypeEnv {
  std::vector<std::pair<std::string, TypePtr>> nonlinear;
  std::vector<std::pair<std::string, TypePtr>> linear;

  const TypePtr* find_nonlinear(const std::string& a) const;
  const TypePtr* find_linear(const std::string& x) const;
};

// Checking judgements. On success they return the set of linear variables
// consumed (always a subset of env.linear); the judgement
// env |- t : ty holds with linear environment exactly that set.
// Failures throw TypeError: linearity violation, environment-split failure,
// type mismatch, bang under non-empty linear usage.
std::set<std::string> check_value(const TypeEnv& env, const TermPtr& v, const TypePtr& ty,
                                  Monad m);
std::set<std::string> check_comp(const TypeEnv& env, const TermPtr& e, const TypePtr& ty,
                                 Monad m);

// Type synthesis where the syntax determines the type (variables, banged
// synthesizable bodies, annotated terms, ...). Abstractions do not
// synthesize.
std::optional<std::pair<TypePtr, std::set<std::string>>> synth_value(const TypeEnv& env,
                                                                     const TermPtr& v,
                                                                     Monad m);
std::optional<std::pair<TypePtr, std::set<std::string>>> synth_comp(const TypeEnv& env,
                                                                    const TermPtr& e,
                                                                    Monad m);

// Closed-term convenience: full consumption of an empty environment.
void check_closed_value(const TermPtr& v, const TypePtr& ty, Monad m);
void check_closed_comp(const TermPtr& e, const TypePtr& ty, Monad m);
bool typechecks_value(const TypeEnv& env, const TermPtr& v, const TypePtr& ty, Monad m);
bool typechecks_comp(const TypeEnv& env, const TermPtr& e, const TypePtr& ty, Monad m);

// A checked top-level program: each definition expanded (earlier names
// substituted, carrying their declared types as annotations), checked
// against its declared type, and finally annotation-stripped.
struct Program {
  struct Item {
    std::string name;
    TypePtr type;
    TermPtr term;  // closed, annotation-free
    bool is_value;
  };
  std::vector<Item> items;

  const Item* find(const std::string& name) const;
  const Item& last() const;
};

Program load_program(const std::vector<Def>& defs, Monad m,
                     const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");

}  // namespace lambang
