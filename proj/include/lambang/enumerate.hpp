#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lambang/monad.hpp"
#include "lambang/term.hpp"
#include "lambang/type.hpp"
#include "lambang/typecheck.hpp"

namespace lambang {

// Type-directed enumeration of well-typed terms. Results consume the whole
// linear environment exactly once each, are pairwise alpha-distinct, and
// come in a fixed deterministic order: ascending AST size, then a fixed
// production order. Intermediate types (application domains, let-bound
// types) range over the type_eq-deduplicated component closure of the
// environment and target types, which keeps the search finite.
class TermEnumerator {
 public:
  TermEnumerator(Monad m, std::vector<TypePtr> closure_seeds,
                 std::string alphabet = "abcdefghijklmnopqrstuvwxyz");

  // All values / computations of the given type under env, size <= budget.
  std::vector<TermPtr> values(const TypeEnv& env, const TypePtr& ty, int budget);
  std::vector<TermPtr> comps(const TypeEnv& env, const TypePtr& ty, int budget);
  // Exact-size layers (the budget entry points concatenate these).
  std::vector<TermPtr> values_exact(const TypeEnv& env, const TypePtr& ty, int size);
  std::vector<TermPtr> comps_exact(const TypeEnv& env, const TypePtr& ty, int size);

  // Single-linear-hole computation contexts: the hole stands for a
  // computation of hole_type, occurs exactly once, and never sits under a
  // bang or beside op arguments that cannot share it.
  std::vector<TermPtr> contexts(const TypePtr& hole_type, const TypePtr& result_type,
                                int budget);
  std::vector<TermPtr> contexts_exact(const TypePtr& hole_type, const TypePtr& result_type,
                                      int size);

  const std::vector<TypePtr>& closure() const { return closure_; }

 private:
  struct Req;  // one enumeration obligation
  const std::vector<TermPtr>& gen(const Req& rq);

  Monad monad_;
  std::string alphabet_;
  std::vector<TypePtr> closure_;
  TypePtr hole_type_;  // set while generating contexts
  std::map<std::string, std::vector<TermPtr>> memo_;
};

// Convenience wrappers building a one-shot enumerator.
std::vector<TermPtr> enumerate_values(const TypeEnv& env, const TypePtr& ty, int budget,
                                      Monad m);
std::vector<TermPtr> enumerate_comps(const TypeEnv& env, const TypePtr& ty, int budget,
                                     Monad m);
std::vector<TermPtr> enumerate_contexts(const TypePtr& hole_type, const TypePtr& result_type,
                                        int budget, Monad m);

}  // namespace lambang
