#pragma once

#include "lambang/monad.hpp"
#include "lambang/term.hpp"

namespace lambang {

// Step-indexed evaluation of a closed, well-typed, annotation-free
// computation: fuel 0 yields the monad's bottom, and every rule spends one
// unit before evaluating subterms (operation arguments share the decrement).
MonadVal<TermV> eval_fuel(const TermPtr& e, int fuel, Monad m);

struct EvalResult {
  MonadVal<TermV> value;
  int fuel_used;
  // Whether the approximation did not change from `budget` to `budget + 1`.
  // Advisory: stabilization does not certify the supremum was reached.
  bool stabilized;
};

EvalResult eval(const TermPtr& e, int budget, Monad m);

}  // namespace lambang
