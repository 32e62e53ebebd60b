#include "lambang/typecheck.hpp"

#include <algorithm>

namespace lambang {

const TypePtr* TypeEnv::find_nonlinear(const std::string& a) const {
  for (const auto& [n, t] : nonlinear)
    if (n == a) return &t;
  return nullptr;
}
const TypePtr* TypeEnv::find_linear(const std::string& x) const {
  for (const auto& [n, t] : linear)
    if (n == x) return &t;
  return nullptr;
}

namespace {

[[noreturn]] void err(const std::string& msg) { throw TypeError(msg); }

std::set<std::string> all_names(const TypeEnv& env) {
  std::set<std::string> s;
  for (const auto& [n, t] : env.nonlinear) s.insert(n);
  for (const auto& [n, t] : env.linear) s.insert(n);
  return s;
}

// Disjoint union of consumption sets; overlap means a linear variable
// crossed an environment split twice.
std::set<std::string> merge_disjoint(const std::set<std::string>& a,
                                     const std::set<std::string>& b) {
  for (const auto& x : b)
    if (a.count(x))
      err("environment-split failure: linear variable '" + x + "' used twice");
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

struct Checker {
  Monad monad;
  std::string alphabet;

  // Candidate types for positions the syntax cannot determine: the
  // component closure of everything in scope plus the expected type.
  std::vector<TypePtr> candidates(const TypeEnv& env, const TypePtr& ty) {
    std::vector<TypePtr> seeds{ty};
    for (const auto& [n, t] : env.nonlinear) seeds.push_back(t);
    for (const auto& [n, t] : env.linear) seeds.push_back(t);
    return type_closure(seeds);
  }

  // Add a binder, freshening on collision so environments stay repetition-free.
  template <class F>
  std::set<std::string> with_linear(const TypeEnv& env, std::string x, TypePtr ty,
                                    TermPtr body, F&& k) {
    std::set<std::string> taken = all_names(env);
    if (taken.count(x)) {
      std::string x2 = fresh_name(x, taken);
      body = subst_value(body, x, var_lin(x2));
      x = x2;
    }
    TypeEnv env2 = env;
    env2.linear.emplace_back(x, std::move(ty));
    std::set<std::string> used = k(env2, body);
    if (!used.count(x))
      err("linearity violation: linear variable '" + x + "' is unused");
    used.erase(x);
    return used;
  }

  template <class F>
  std::set<std::string> with_nonlinear(const TypeEnv& env, std::string a, TypePtr ty,
                                       TermPtr body, F&& k) {
    std::set<std::string> taken = all_names(env);
    if (taken.count(a)) {
      std::string a2 = fresh_name(a, taken);
      body = subst_comp(body, a, var_nonlin(a2));
      a = a2;
    }
    TypeEnv env2 = env;
    env2.nonlinear.emplace_back(a, std::move(ty));
    return k(env2, body);
  }

  std::set<std::string> check_v(const TypeEnv& env, const TermPtr& v, const TypePtr& ty) {
    switch (v->kind) {
      case TermKind::VarLin: {
        const TypePtr* found = env.find_linear(v->name);
        if (!found) err("unbound linear variable '" + v->name + "'");
        if (!type_eq(*found, ty))
          err("type mismatch: variable '" + v->name + "' has type " +
              type_to_string(*found) + ", expected " + type_to_string(ty));
        return {v->name};
      }
      case TermKind::Lam: {
        auto arrow = head_lolli(ty);
        if (!arrow)
          err("type mismatch: abstraction cannot have type " + type_to_string(ty));
        return with_linear(env, v->name, arrow->first, v->kids[0],
                           [&](const TypeEnv& env2, const TermPtr& body) {
                             return check_c(env2, body, arrow->second);
                           });
      }
      case TermKind::Bang: {
        auto inner = head_bang(ty);
        if (!inner) err("type mismatch: !e cannot have type " + type_to_string(ty));
        std::set<std::string> used = check_c(env, v->kids[0], *inner);
        if (!used.empty())
          err("a banged computation may not use linear variables (uses '" +
              *used.begin() + "')");
        return {};
      }
      case TermKind::Ann: {
        if (!type_eq(v->ann, ty))
          err("type mismatch: annotation " + type_to_string(v->ann) + " vs expected " +
              type_to_string(ty));
        return check_v(env, v->kids[0], ty);
      }
      default:
        err("expected a value, found: " + term_to_string(v));
    }
  }

  std::set<std::string> check_c(const TypeEnv& env, const TermPtr& e, const TypePtr& ty) {
    switch (e->kind) {
      case TermKind::VarNonLin: {
        const TypePtr* found = env.find_nonlinear(e->name);
        if (!found) err("unbound non-linear variable '" + e->name + "'");
        if (!type_eq(*found, ty))
          err("type mismatch: variable '" + e->name + "' has type " +
              type_to_string(*found) + ", expected " + type_to_string(ty));
        return {};
      }
      case TermKind::Ret:
        return check_v(env, e->kids[0], ty);
      case TermKind::App: {
        const TermPtr& v = e->kids[0];
        const TermPtr& w = e->kids[1];
        if (auto sv = synth_v(env, v)) {
          auto arrow = head_lolli(sv->first);
          if (!arrow)
            err("application of a non-function of type " + type_to_string(sv->first));
          if (!type_eq(arrow->second, ty))
            err("type mismatch: application produces " + type_to_string(arrow->second) +
                ", expected " + type_to_string(ty));
          return merge_disjoint(sv->second, check_v(env, w, arrow->first));
        }
        TermPtr vs = v;
        while (vs->kind == TermKind::Ann) vs = vs->kids[0];
        if (vs->kind == TermKind::Lam) {
          auto redex_at = [&](const TypePtr& aty) -> std::set<std::string> {
            std::set<std::string> used_w = check_v(env, w, aty);
            auto used_body = with_linear(env, vs->name, aty, vs->kids[0],
                                         [&](const TypeEnv& env2, const TermPtr& body) {
                                           return check_c(env2, body, ty);
                                         });
            return merge_disjoint(used_body, used_w);
          };
          if (auto sw = synth_v(env, w)) return redex_at(sw->first);
          for (const auto& aty : candidates(env, ty)) {
            try {
              return redex_at(aty);
            } catch (const TypeError&) {
            }
          }
          err("cannot infer the argument type of a redex; bind the function "
              "with an annotated definition");
        }
        err("cannot infer the type of the applied value: " + term_to_string(v));
      }
      case TermKind::Let: {
        auto try_at = [&](const TypePtr& sigma) -> std::set<std::string> {
          std::set<std::string> used_e = check_c(env, e->kids[0], sigma);
          auto used_f = with_linear(env, e->name, sigma, e->kids[1],
                                    [&](const TypeEnv& env2, const TermPtr& body) {
                                      return check_c(env2, body, ty);
                                    });
          return merge_disjoint(used_e, used_f);
        };
        if (auto se = synth_c(env, e->kids[0])) return try_at(se->first);
        // No synthesized type; try the component closure of the types in
        // scope (the same candidate set the enumerator draws from).
        for (const auto& sigma : candidates(env, ty)) {
          try {
            return try_at(sigma);
          } catch (const TypeError&) {
          }
        }
        err("cannot infer the type of the let-bound computation: " +
            term_to_string(e->kids[0]));
      }
      case TermKind::LetBang: {
        auto try_at = [&](const TypePtr& vty) -> std::set<std::string> {
          auto inner = head_bang(vty);
          if (!inner)
            err("let ! requires a value of bang type, found " + type_to_string(vty));
          std::set<std::string> used_v = check_v(env, e->kids[0], vty);
          auto used_f = with_nonlinear(env, e->name, *inner, e->kids[1],
                                       [&](const TypeEnv& env2, const TermPtr& body) {
                                         return check_c(env2, body, ty);
                                       });
          return merge_disjoint(used_v, used_f);
        };
        if (auto sv = synth_v(env, e->kids[0])) return try_at(sv->first);
        for (const auto& vty : candidates(env, ty)) {
          if (!head_bang(vty)) continue;
          try {
            return try_at(vty);
          } catch (const TypeError&) {
          }
        }
        err("cannot infer the type of the unbanged value: " + term_to_string(e->kids[0]));
      }
      case TermKind::OpApp: {
        auto ar = op_arity(monad, e->name, alphabet);
        if (!ar)
          err("operation '" + e->name + "' is not in the signature of monad '" +
              monad_name(monad) + "'");
        if (static_cast<size_t>(*ar) != e->kids.size())
          err("operation '" + e->name + "' arity mismatch");
        // All arguments share one linear environment (only one branch runs).
        std::optional<std::set<std::string>> used;
        for (const auto& arg : e->kids) {
          std::set<std::string> u = check_c(env, arg, ty);
          if (used && *used != u)
            err("environment-split failure: arguments of '" + e->name +
                "' must consume the same linear variables");
          used = std::move(u);
        }
        return used ? *used : std::set<std::string>{};
      }
      case TermKind::Ann: {
        if (!type_eq(e->ann, ty))
          err("type mismatch: annotation " + type_to_string(e->ann) + " vs expected " +
              type_to_string(ty));
        return check_c(env, e->kids[0], ty);
      }
      case TermKind::Hole:
        err("a context hole is not a term");
      default:
        err("expected a computation, found: " + term_to_string(e));
    }
  }

  std::optional<std::pair<TypePtr, std::set<std::string>>> synth_v(const TypeEnv& env,
                                                                   const TermPtr& v) {
    switch (v->kind) {
      case TermKind::VarLin: {
        const TypePtr* found = env.find_linear(v->name);
        if (!found) err("unbound linear variable '" + v->name + "'");
        return std::make_pair(*found, std::set<std::string>{v->name});
      }
      case TermKind::Bang: {
        auto se = synth_c(env, v->kids[0]);
        if (!se) return std::nullopt;
        if (!se->second.empty())
          err("a banged computation may not use linear variables");
        return std::make_pair(tbang(se->first), std::set<std::string>{});
      }
      case TermKind::Ann: {
        std::set<std::string> used = check_v(env, v->kids[0], v->ann);
        return std::make_pair(v->ann, used);
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<std::pair<TypePtr, std::set<std::string>>> synth_c(const TypeEnv& env,
                                                                   const TermPtr& e) {
    switch (e->kind) {
      case TermKind::VarNonLin: {
        const TypePtr* found = env.find_nonlinear(e->name);
        if (!found) err("unbound non-linear variable '" + e->name + "'");
        return std::make_pair(*found, std::set<std::string>{});
      }
      case TermKind::Ret: {
        auto sv = synth_v(env, e->kids[0]);
        if (!sv) return std::nullopt;
        return sv;
      }
      case TermKind::App: {
        auto sv = synth_v(env, e->kids[0]);
        if (!sv) return std::nullopt;
        auto arrow = head_lolli(sv->first);
        if (!arrow)
          err("application of a non-function of type " + type_to_string(sv->first));
        auto used_w = check_v(env, e->kids[1], arrow->first);
        return std::make_pair(arrow->second, merge_disjoint(sv->second, used_w));
      }
      case TermKind::Let: {
        auto se = synth_c(env, e->kids[0]);
        if (!se) return std::nullopt;
        std::string x = e->name;
        TermPtr body = e->kids[1];
        std::set<std::string> taken = all_names(env);
        if (taken.count(x)) {
          std::string x2 = fresh_name(x, taken);
          body = subst_value(body, x, var_lin(x2));
          x = x2;
        }
        TypeEnv env2 = env;
        env2.linear.emplace_back(x, se->first);
        auto sf = synth_c(env2, body);
        if (!sf) return std::nullopt;
        if (!sf->second.count(x))
          err("linearity violation: linear variable '" + x + "' is unused");
        sf->second.erase(x);
        return std::make_pair(sf->first, merge_disjoint(se->second, sf->second));
      }
      case TermKind::LetBang: {
        auto sv = synth_v(env, e->kids[0]);
        if (!sv) return std::nullopt;
        auto inner = head_bang(sv->first);
        if (!inner)
          err("let ! requires a value of bang type, found " + type_to_string(sv->first));
        std::string a = e->name;
        TermPtr body = e->kids[1];
        std::set<std::string> taken = all_names(env);
        if (taken.count(a)) {
          std::string a2 = fresh_name(a, taken);
          body = subst_comp(body, a, var_nonlin(a2));
          a = a2;
        }
        TypeEnv env2 = env;
        env2.nonlinear.emplace_back(a, *inner);
        auto sf = synth_c(env2, body);
        if (!sf) return std::nullopt;
        return std::make_pair(sf->first, merge_disjoint(sv->second, sf->second));
      }
      case TermKind::OpApp: {
        // Synthesize from the first argument that allows it, then check the rest.
        for (const auto& arg : e->kids) {
          std::optional<std::pair<TypePtr, std::set<std::string>>> s;
          try {
            s = synth_c(env, arg);
          } catch (const TypeError&) {
            s = std::nullopt;
          }
          if (s) {
            std::set<std::string> used = check_c(env, e, s->first);
            return std::make_pair(s->first, used);
          }
        }
        return std::nullopt;
      }
      case TermKind::Ann: {
        std::set<std::string> used = check_c(env, e->kids[0], e->ann);
        return std::make_pair(e->ann, used);
      }
      default:
        return std::nullopt;
    }
  }
};

std::set<std::string> run_check(bool value, const TypeEnv& env, const TermPtr& t,
                                const TypePtr& ty, Monad m) {
  Checker c{m, "abcdefghijklmnopqrstuvwxyz"};
  return value ? c.check_v(env, t, ty) : c.check_c(env, t, ty);
}

}  // namespace

std::set<std::string> check_value(const TypeEnv& env, const TermPtr& v, const TypePtr& ty,
                                  Monad m) {
  return run_check(true, env, v, ty, m);
}
std::set<std::string> check_comp(const TypeEnv& env, const TermPtr& e, const TypePtr& ty,
                                 Monad m) {
  return run_check(false, env, e, ty, m);
}

std::optional<std::pair<TypePtr, std::set<std::string>>> synth_value(const TypeEnv& env,
                                                                     const TermPtr& v,
                                                                     Monad m) {
  Checker c{m, "abcdefghijklmnopqrstuvwxyz"};
  return c.synth_v(env, v);
}
std::optional<std::pair<TypePtr, std::set<std::string>>> synth_comp(const TypeEnv& env,
                                                                    const TermPtr& e,
                                                                    Monad m) {
  Checker c{m, "abcdefghijklmnopqrstuvwxyz"};
  return c.synth_c(env, e);
}

void check_closed_value(const TermPtr& v, const TypePtr& ty, Monad m) {
  std::set<std::string> used = check_value(TypeEnv{}, v, ty, m);
  if (!used.empty()) throw TypeError("internal: closed value consumed variables");
}
void check_closed_comp(const TermPtr& e, const TypePtr& ty, Monad m) {
  std::set<std::string> used = check_comp(TypeEnv{}, e, ty, m);
  if (!used.empty()) throw TypeError("internal: closed computation consumed variables");
}

bool typechecks_value(const TypeEnv& env, const TermPtr& v, const TypePtr& ty, Monad m) {
  try {
    std::set<std::string> used = check_value(env, v, ty, m);
    return used.size() == env.linear.size();
  } catch (const TypeError&) {
    return false;
  }
}
bool typechecks_comp(const TypeEnv& env, const TermPtr& e, const TypePtr& ty, Monad m) {
  try {
    std::set<std::string> used = check_comp(env, e, ty, m);
    return used.size() == env.linear.size();
  } catch (const TypeError&) {
    return false;
  }
}

const Program::Item* Program::find(const std::string& name) const {
  for (const auto& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

const Program::Item& Program::last() const {
  if (items.empty()) throw TypeError("empty program");
  return items.back();
}

// Definitions are macros: occurrences of earlier names are replaced by the
// defined term wrapped in its declared type annotation. A value definition
// referenced in computation position becomes `return v`.
Program load_program(const std::vector<Def>& defs, Monad m, const std::string& alphabet) {
  Program prog;
  std::vector<std::pair<std::string, Def>> expanded;  // with annotated bodies
  for (const auto& def : defs) {
    if (!type_closed(def.type))
      throw TypeError("definition '" + def.name + "': type must be closed");
    TermPtr body = def.body;
    for (auto it = expanded.rbegin(); it != expanded.rend(); ++it) {
      const Def& prev = it->second;
      TermPtr annotated = ann(prev.body, prev.type);
      if (prev.body_is_value) {
        body = subst_value(body, prev.name, annotated);
        body = subst_comp(body, prev.name, ret(annotated));
      } else {
        if (free_linear(body).count(prev.name))
          throw TypeError("definition '" + prev.name +
                          "' is a computation and cannot appear in value position");
        body = subst_comp(body, prev.name, annotated);
      }
    }
    Checker c{m, alphabet};
    std::set<std::string> used;
    TypeEnv empty;
    try {
      used = def.body_is_value ? c.check_v(empty, body, def.type)
                               : c.check_c(empty, body, def.type);
    } catch (const TypeError& e) {
      throw TypeError("definition '" + def.name + "': " + e.what());
    }
    if (!used.empty())
      throw TypeError("definition '" + def.name + "': body is not closed");
    expanded.push_back({def.name, Def{def.name, def.type, body, def.body_is_value}});
    prog.items.push_back({def.name, def.type, strip_ann(body), def.body_is_value});
  }
  return prog;
}

}  // namespace lambang
