#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lambang/rts.hpp"

namespace lambang {

struct TraceBounds {
  int depth = 4;
  int ctx_size = 3;
  int fuel = 30;
};

// All traces of length <= depth whose actions are successively enabled per
// the type-level successor function; breadth-first, extensions in
// enabled_actions order. Purely type-driven.
std::vector<Trace> trace_set(const ConfigType& alpha, int depth, int ctx_size, Monad m);

// The trace functional: the observable behaviour of a configuration along a
// trace, an element of T(1).
//   observe_trace(K, [])      = unit(*)
//   observe_trace(K, l . u)   = step(K, l) >>= (L |-> observe_trace(L, u))
MonadVal<Unit> observe_trace(const Configuration& k, const Trace& t, int fuel, Monad m);

// The determinized system: states are monadic configurations, transitions
// are the Kleisli lift of step, and observation happens at the end.
MonadVal<Configuration> step_lifted(const MonadVal<Configuration>& kap, const Action& act,
                                    int fuel, Monad m);
MonadVal<Unit> observe_trace_lifted(const MonadVal<Configuration>& kap, const Trace& t,
                                    int fuel, Monad m);

struct TraceWitness {
  Trace trace;
  MonadVal<Unit> lhs_obs, rhs_obs;
};
struct TypeMismatchWitness {
  ConfigType lhs, rhs;
};

struct TraceReport {
  bool distinguished = false;
  std::optional<std::variant<TraceWitness, TypeMismatchWitness>> witness;
  TraceBounds bounds;
  long traces_checked = 0;

  std::string verdict() const {
    return distinguished ? "distinguished" : "equivalent-up-to-bounds";
  }
  nlohmann::json to_json(Monad m) const;
};

// Bounded trace equivalence: configuration types must agree up to type_eq,
// then the trace functionals are compared on every trace up to the bounds.
// The first difference in canonical order is the witness. Subtrees whose
// lifted states already coincide exactly are skipped; no observation there
// or below can differ.
TraceReport trace_equiv(const Configuration& k, const Configuration& l,
                        const TraceBounds& bounds, Monad m);

}  // namespace lambang
