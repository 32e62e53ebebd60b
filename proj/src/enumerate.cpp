#include "lambang/enumerate.hpp"

#include <algorithm>
#include <set>

namespace lambang {

namespace {

std::string env_fingerprint(const TypeEnv& env) {
  std::string s;
  for (const auto& [n, t] : env.nonlinear) s += n + ":" + type_key(t) + ",";
  s += "|";
  for (const auto& [n, t] : env.linear) s += n + ":" + type_key(t) + ",";
  return s;
}

}  // namespace

struct TermEnumerator::Req {
  bool value;         // value or computation
  TypeEnv env;        // linear part must be consumed exactly
  TypePtr ty;
  int size;           // exact AST size
  bool hole;          // a hole must be consumed exactly once
  int depth;          // binder depth, for canonical fresh names

  std::string key() const {
    return (value ? "v" : "c") + std::to_string(size) + (hole ? "H" : "-") +
           std::to_string(depth) + ";" + type_key(ty) + ";" + env_fingerprint(env);
  }
};

TermEnumerator::TermEnumerator(Monad m, std::vector<TypePtr> closure_seeds,
                               std::string alphabet)
    : monad_(m), alphabet_(std::move(alphabet)) {
  closure_ = type_closure(closure_seeds);
}

const std::vector<TermPtr>& TermEnumerator::gen(const Req& rq) {
  std::string k = rq.key();
  if (rq.hole && hole_type_) k += "@" + type_key(hole_type_);
  auto hit = memo_.find(k);
  if (hit != memo_.end()) return hit->second;
  std::vector<TermPtr> out;
  std::set<std::string> seen;
  auto emit = [&](TermPtr t) {
    std::string tk = term_key(t);
    if (seen.insert(tk).second) out.push_back(std::move(t));
  };
  const auto& lin = rq.env.linear;
  int nlin = static_cast<int>(lin.size());
  // Split the linear environment (and the hole obligation) across two
  // subderivations; masks enumerate which entries go left.
  auto splits = [&](auto&& f) {
    for (int mask = 0; mask < (1 << nlin); ++mask) {
      TypeEnv left = rq.env, right = rq.env;
      left.linear.clear();
      right.linear.clear();
      for (int i = 0; i < nlin; ++i)
        (mask >> i & 1 ? left : right).linear.push_back(lin[i]);
      if (rq.hole) {
        f(left, right, true, false);
        f(left, right, false, true);
      } else {
        f(left, right, false, false);
      }
    }
  };

  if (rq.size < 1) { memo_.emplace(k, std::move(out)); return memo_.at(k); }

  if (rq.value) {
    // linear variable
    if (rq.size == 1 && !rq.hole && nlin == 1 && type_eq(lin[0].second, rq.ty))
      emit(var_lin(lin[0].first));
    // abstraction
    if (auto arrow = head_lolli(rq.ty); arrow && rq.size >= 2) {
      std::string x = "y" + std::to_string(rq.depth + 1);
      TypeEnv env2 = rq.env;
      env2.linear.emplace_back(x, arrow->first);
      for (const auto& body :
           gen({false, env2, arrow->second, rq.size - 1, rq.hole, rq.depth + 1}))
        emit(lam(x, body));
    }
    // bang: empty linear environment, no hole inside
    if (auto inner = head_bang(rq.ty); inner && rq.size >= 2 && nlin == 0 && !rq.hole) {
      TypeEnv env2 = rq.env;
      for (const auto& body : gen({false, env2, *inner, rq.size - 1, false, rq.depth}))
        emit(bang(body));
    }
  } else {
    // hole
    if (rq.hole && rq.size == 1 && nlin == 0 && hole_type_ && type_eq(hole_type_, rq.ty))
      emit(hole());
    // non-linear variable
    if (rq.size == 1 && !rq.hole && nlin == 0)
      for (const auto& [a, t] : rq.env.nonlinear)
        if (type_eq(t, rq.ty)) emit(var_nonlin(a));
    // return
    if (rq.size >= 2)
      for (const auto& v : gen({true, rq.env, rq.ty, rq.size - 1, rq.hole, rq.depth}))
        emit(ret(v));
    // application
    if (rq.size >= 3) {
      for (const auto& fty : closure_) {
        auto arrow = head_lolli(fty);
        if (!arrow || !type_eq(arrow->second, rq.ty)) continue;
        splits([&](const TypeEnv& envL, const TypeEnv& envR, bool hl, bool hr) {
          for (int s1 = 1; s1 <= rq.size - 2; ++s1) {
            int s2 = rq.size - 1 - s1;
            for (const auto& v : gen({true, envL, fty, s1, hl, rq.depth}))
              for (const auto& w : gen({true, envR, arrow->first, s2, hr, rq.depth}))
                emit(app(v, w));
          }
        });
      }
    }
    // let
    if (rq.size >= 3) {
      for (const auto& sigma : closure_) {
        splits([&](const TypeEnv& envL, const TypeEnv& envR, bool hl, bool hr) {
          for (int s1 = 1; s1 <= rq.size - 2; ++s1) {
            int s2 = rq.size - 1 - s1;
            std::string x = "y" + std::to_string(rq.depth + 1);
            TypeEnv env2 = envR;
            env2.linear.emplace_back(x, sigma);
            for (const auto& e : gen({false, envL, sigma, s1, hl, rq.depth}))
              for (const auto& f : gen({false, env2, rq.ty, s2, hr, rq.depth + 1}))
                emit(let_(e, x, f));
          }
        });
      }
    }
    // let-bang
    if (rq.size >= 3) {
      for (const auto& bty : closure_) {
        auto inner = head_bang(bty);
        if (!inner) continue;
        splits([&](const TypeEnv& envL, const TypeEnv& envR, bool hl, bool hr) {
          for (int s1 = 1; s1 <= rq.size - 2; ++s1) {
            int s2 = rq.size - 1 - s1;
            std::string a = "b" + std::to_string(rq.depth + 1);
            TypeEnv env2 = envR;
            env2.nonlinear.emplace_back(a, *inner);
            for (const auto& v : gen({true, envL, bty, s1, hl, rq.depth}))
              for (const auto& f : gen({false, env2, rq.ty, s2, hr, rq.depth + 1}))
                emit(let_bang(v, a, f));
          }
        });
      }
    }
    // operations: every argument consumes the same linear environment; a
    // hole can only go through a unary operation.
    for (const auto& sig : signature(monad_, alphabet_)) {
      if (rq.hole && sig.arity != 1) continue;
      if (sig.arity == 1) {
        if (rq.size < 2) continue;
        for (const auto& a0 : gen({false, rq.env, rq.ty, rq.size - 1, rq.hole, rq.depth}))
          emit(op_app(sig.name, {a0}));
      } else if (sig.arity == 2) {
        if (rq.size < 3) continue;
        for (int s1 = 1; s1 <= rq.size - 2; ++s1) {
          int s2 = rq.size - 1 - s1;
          for (const auto& a0 : gen({false, rq.env, rq.ty, s1, false, rq.depth}))
            for (const auto& a1 : gen({false, rq.env, rq.ty, s2, false, rq.depth}))
              emit(op_app(sig.name, {a0, a1}));
        }
      }
    }
  }
  memo_.emplace(k, std::move(out));
  return memo_.at(k);
}

std::vector<TermPtr> TermEnumerator::values_exact(const TypeEnv& env, const TypePtr& ty,
                                                  int size) {
  return gen({true, env, ty, size, false, 0});
}
std::vector<TermPtr> TermEnumerator::comps_exact(const TypeEnv& env, const TypePtr& ty,
                                                 int size) {
  return gen({false, env, ty, size, false, 0});
}

std::vector<TermPtr> TermEnumerator::values(const TypeEnv& env, const TypePtr& ty,
                                            int budget) {
  std::vector<TermPtr> out;
  for (int s = 1; s <= budget; ++s)
    for (const auto& t : values_exact(env, ty, s)) out.push_back(t);
  return out;
}
std::vector<TermPtr> TermEnumerator::comps(const TypeEnv& env, const TypePtr& ty,
                                           int budget) {
  std::vector<TermPtr> out;
  for (int s = 1; s <= budget; ++s)
    for (const auto& t : comps_exact(env, ty, s)) out.push_back(t);
  return out;
}

std::vector<TermPtr> TermEnumerator::contexts_exact(const TypePtr& hole_type,
                                                    const TypePtr& result_type, int size) {
  hole_type_ = hole_type;
  auto out = gen({false, TypeEnv{}, result_type, size, true, 0});
  return out;
}

std::vector<TermPtr> TermEnumerator::contexts(const TypePtr& hole_type,
                                              const TypePtr& result_type, int budget) {
  std::vector<TermPtr> out;
  for (int s = 1; s <= budget; ++s)
    for (const auto& t : contexts_exact(hole_type, result_type, s)) out.push_back(t);
  return out;
}

std::vector<TermPtr> enumerate_values(const TypeEnv& env, const TypePtr& ty, int budget,
                                      Monad m) {
  std::vector<TypePtr> seeds{ty};
  for (const auto& [n, t] : env.nonlinear) seeds.push_back(t);
  for (const auto& [n, t] : env.linear) seeds.push_back(t);
  TermEnumerator en(m, seeds);
  return en.values(env, ty, budget);
}

std::vector<TermPtr> enumerate_comps(const TypeEnv& env, const TypePtr& ty, int budget,
                                     Monad m) {
  std::vector<TypePtr> seeds{ty};
  for (const auto& [n, t] : env.nonlinear) seeds.push_back(t);
  for (const auto& [n, t] : env.linear) seeds.push_back(t);
  TermEnumerator en(m, seeds);
  return en.comps(env, ty, budget);
}

std::vector<TermPtr> enumerate_contexts(const TypePtr& hole_type, const TypePtr& result_type,
                                        int budget, Monad m) {
  TermEnumerator en(m, {hole_type, result_type});
  return en.contexts(hole_type, result_type, budget);
}

}  // namespace lambang
