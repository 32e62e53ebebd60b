#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lambang/enumerate.hpp"
#include "lambang/trace.hpp"

namespace lambang {

struct CtxBounds {
  int ctx_size = 6;
  int fuel = 30;
};

struct CtxWitness {
  TermPtr context;
  TypePtr result_type;
  MonadVal<Unit> lhs_obs, rhs_obs;
};

struct CtxReport {
  bool distinguished = false;
  std::optional<CtxWitness> witness;
  CtxBounds bounds;
  long contexts_checked = 0;

  std::string verdict() const {
    return distinguished ? "distinguished" : "equivalent-up-to-bounds";
  }
  nlohmann::json to_json() const;
};

// Bounded contextual equivalence by exhaustive enumeration of single-
// linear-hole contexts. Result types range over the component closure of
// the hole type; contexts are tried by ascending size, then closure order,
// then enumeration order, and the first differing observation wins.
// e and f must be closed computations of type `ty`.
CtxReport ctx_equiv(const TermPtr& e, const TermPtr& f, const TypePtr& ty,
                    const CtxBounds& bounds, Monad m);

struct CorpusPair {
  std::string lhs_name, rhs_name;
  TermPtr lhs, rhs;
  TypePtr type;
};

struct CrossCheckReport {
  struct Entry {
    std::string lhs_name, rhs_name;
    std::string type;
    std::string trace_verdict;
    std::string ctx_verdict;
    bool soundness_violation = false;   // trace-equivalent yet context-distinguished
    bool ctx_only = false;              // context-distinguished, trace missed it
    std::optional<TraceBounds> escalated;  // bounds at which the trace side caught up
  };
  std::vector<Entry> entries;
  int soundness_violations = 0;
  int both_distinguished = 0;
  int trace_only = 0;
  int ctx_only = 0;

  nlohmann::json to_json() const;
};

// Runs both checkers on every pair at the same fuel. A pair distinguished
// by contexts but not by traces triggers a bounded escalation of the trace
// bounds (reported, never fatal); the converse -- trace-equivalent yet
// context-distinguished -- is a soundness violation and must never happen.
CrossCheckReport cross_check(const std::vector<CorpusPair>& corpus,
                             const TraceBounds& trace_bounds, const CtxBounds& ctx_bounds,
                             Monad m, int escalation_rounds = 2);

}  // namespace lambang
