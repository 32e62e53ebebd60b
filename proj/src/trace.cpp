#include "lambang/trace.hpp"

#include <deque>

namespace lambang {

std::vector<Trace> trace_set(const ConfigType& alpha, int depth, int ctx_size, Monad m) {
  std::vector<Trace> out{{}};
  TermEnumerator en(m, [&] {
    std::vector<TypePtr> seeds = alpha.gamma;
    seeds.insert(seeds.end(), alpha.theta.begin(), alpha.theta.end());
    return seeds;
  }());
  struct Item {
    Trace trace;
    ConfigType type;
  };
  std::deque<Item> frontier{{Trace{}, alpha}};
  for (int d = 0; d < depth; ++d) {
    std::deque<Item> next;
    for (const auto& it : frontier) {
      for (const auto& act : enabled_actions(it.type, {ctx_size}, m, &en)) {
        auto beta = successor_type(it.type, act, m);
        if (!beta) continue;
        Trace t2 = it.trace;
        t2.push_back(act);
        out.push_back(t2);
        next.push_back({std::move(t2), *beta});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

MonadVal<Unit> observe_trace(const Configuration& k, const Trace& t, int fuel, Monad m) {
  if (t.empty()) return mv::unit(m, Unit{});
  if (!successor_type(k.type, t.front(), m))
    throw MonadError("trace not coherent with configuration type: action " +
                     t.front().label() + " at " + k.type.to_string());
  MonadVal<Configuration> kap = step(k, t.front(), fuel, m);
  Trace rest(t.begin() + 1, t.end());
  return mv::bind(kap, [&](const Configuration& l) {
    return observe_trace(l, rest, fuel, m);
  });
}

MonadVal<Configuration> step_lifted(const MonadVal<Configuration>& kap, const Action& act,
                                    int fuel, Monad m) {
  return mv::bind(kap, [&](const Configuration& k) { return step(k, act, fuel, m); });
}

MonadVal<Unit> observe_trace_lifted(const MonadVal<Configuration>& kap, const Trace& t,
                                    int fuel, Monad m) {
  if (t.empty()) return mv::obs(kap);
  MonadVal<Configuration> next = step_lifted(kap, t.front(), fuel, m);
  Trace rest(t.begin() + 1, t.end());
  return observe_trace_lifted(next, rest, fuel, m);
}

nlohmann::json TraceReport::to_json(Monad) const {
  nlohmann::json j;
  j["verdict"] = verdict();
  j["bounds"] = {{"depth", bounds.depth}, {"ctx_size", bounds.ctx_size}, {"fuel", bounds.fuel}};
  j["traces_checked"] = traces_checked;
  if (witness) {
    if (const auto* w = std::get_if<TraceWitness>(&*witness)) {
      auto tr = nlohmann::json::array();
      for (const auto& a : w->trace) tr.push_back(a.label());
      j["witness"] = {{"trace", tr},
                      {"lhs_obs", mv::to_json(w->lhs_obs)},
                      {"rhs_obs", mv::to_json(w->rhs_obs)}};
    } else {
      const auto& tm = std::get<TypeMismatchWitness>(*witness);
      j["witness"] = {{"reason", "configuration type mismatch"},
                      {"lhs_type", tm.lhs.to_string()},
                      {"rhs_type", tm.rhs.to_string()}};
    }
  }
  return j;
}

TraceReport trace_equiv(const Configuration& k, const Configuration& l,
                        const TraceBounds& bounds, Monad m) {
  TraceReport rep;
  rep.bounds = bounds;
  if (!k.type.equals(l.type)) {
    rep.distinguished = true;
    rep.witness = TypeMismatchWitness{k.type, l.type};
    return rep;
  }
  TermEnumerator en(m, [&] {
    std::vector<TypePtr> seeds = k.type.gamma;
    seeds.insert(seeds.end(), k.type.theta.begin(), k.type.theta.end());
    return seeds;
  }());
  struct Node {
    Trace trace;
    ConfigType type;
    MonadVal<Configuration> lhs, rhs;
  };
  std::deque<Node> frontier;
  frontier.push_back({{}, k.type, mv::unit(m, k), mv::unit(m, l)});
  // Breadth-first over trace length; the first differing observation in
  // this order is the canonical witness.
  for (int d = 0; d <= bounds.depth; ++d) {
    std::deque<Node> next;
    for (auto& node : frontier) {
      ++rep.traces_checked;
      MonadVal<Unit> ol = mv::obs(node.lhs);
      MonadVal<Unit> orr = mv::obs(node.rhs);
      if (!mv::mval_eq(ol, orr)) {
        rep.distinguished = true;
        rep.witness = TraceWitness{node.trace, std::move(ol), std::move(orr)};
        return rep;
      }
      if (d == bounds.depth) continue;
      // Identical lifted states have identical futures; skip the subtree.
      if (mv::mval_eq(node.lhs, node.rhs)) continue;
      for (const auto& act : enabled_actions(node.type, {bounds.ctx_size}, m, &en)) {
        auto beta = successor_type(node.type, act, m);
        if (!beta) continue;
        Trace t2 = node.trace;
        t2.push_back(act);
        next.push_back({std::move(t2), *beta,
                        step_lifted(node.lhs, act, bounds.fuel, m),
                        step_lifted(node.rhs, act, bounds.fuel, m)});
      }
    }
    frontier = std::move(next);
  }
  return rep;
}

}  // namespace lambang
