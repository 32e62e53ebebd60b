#include "lambang/rts.hpp"

#include <algorithm>

#include "lambang/eval.hpp"
#include "lambang/typecheck.hpp"

namespace lambang {

bool valid_index_seq(const std::vector<int>& idx, int len) {
  for (size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > len) return false;
    if (k > 0 && idx[k] <= idx[k - 1]) return false;
  }
  return true;
}

std::string ConfigType::key() const {
  std::string s = "<";
  for (const auto& t : gamma) s += type_key(t) + ",";
  s += "|";
  for (const auto& t : theta) s += type_key(t) + ",";
  s += comp_label ? ";c>" : ">";
  return s;
}

bool ConfigType::equals(const ConfigType& o) const {
  if (gamma.size() != o.gamma.size() || theta.size() != o.theta.size() ||
      comp_label != o.comp_label)
    return false;
  for (size_t i = 0; i < gamma.size(); ++i)
    if (!type_eq(gamma[i], o.gamma[i])) return false;
  for (size_t i = 0; i < theta.size(); ++i)
    if (!type_eq(theta[i], o.theta[i])) return false;
  return true;
}

std::string ConfigType::to_string() const {
  std::string s = "<";
  for (size_t i = 0; i < gamma.size(); ++i)
    s += (i ? ", " : "") + type_to_string(gamma[i]);
  s += " | ";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) s += ", ";
    if (comp_label && i + 1 == theta.size()) s += "; ";
    s += type_to_string(theta[i]);
  }
  s += ">";
  return s;
}

static std::string config_key(const std::vector<TermPtr>& gamma,
                              const std::vector<TermPtr>& lin,
                              const std::optional<TermPtr>& comp) {
  std::string s = "<";
  for (const auto& t : gamma) s += term_key(t) + ",";
  s += "|";
  for (const auto& t : lin) s += term_key(t) + ",";
  if (comp) s += ";" + term_key(*comp);
  s += ">";
  return s;
}

std::string display(const Configuration& k) {
  std::string s = "<";
  for (size_t i = 0; i < k.gamma.size(); ++i)
    s += (i ? ", " : "") + term_to_string(k.gamma[i]);
  s += " | ";
  for (size_t i = 0; i < k.lin.size(); ++i)
    s += (i ? ", " : "") + term_to_string(k.lin[i]);
  if (k.comp) s += std::string(k.lin.empty() ? "" : " ") + "; " + term_to_string(*k.comp);
  s += ">";
  return s;
}

Configuration make_config(std::vector<TermPtr> gamma, std::vector<TermPtr> lin,
                          std::optional<TermPtr> comp, ConfigType type) {
  Configuration k{std::move(gamma), std::move(lin), std::move(comp), std::move(type), ""};
  if (k.type.comp_label != k.comp.has_value())
    throw MonadError("configuration label does not match its shape");
  if (k.gamma.size() != k.type.gamma.size() ||
      k.lin.size() + (k.comp ? 1 : 0) != k.type.theta.size())
    throw MonadError("configuration shape does not match its type");
  k.key = config_key(k.gamma, k.lin, k.comp);
  return k;
}

Configuration initial_config(const TermPtr& e, const TypePtr& ty) {
  ConfigType alpha{{}, {ty}, true};
  return make_config({}, {}, e, std::move(alpha));
}

void validate_config(const Configuration& k, Monad m) {
  for (size_t i = 0; i < k.gamma.size(); ++i)
    check_closed_comp(k.gamma[i], k.type.gamma[i], m);
  for (size_t i = 0; i < k.lin.size(); ++i) {
    if (!is_value(k.lin[i]))
      throw TypeError("non-value in the linear component: " + term_to_string(k.lin[i]));
    check_closed_value(k.lin[i], k.type.theta[i], m);
  }
  if (k.comp) check_closed_comp(*k.comp, k.type.theta.back(), m);
}

std::string Action::label() const {
  switch (kind) {
    case ActionKind::Eval:
      return "eval";
    case ActionKind::Unbang:
      return "?" + std::to_string(l);
    case ActionKind::Dup:
      return "!" + std::to_string(l);
    case ActionKind::App: {
      auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
      };
      return "app(i=" + list(is_) + ",j=" + list(js_) + ",l=" + std::to_string(l) +
             ",t=" + term_to_string(ctx) + ")";
    }
  }
  return "?";
}

std::string trace_label(const Trace& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? " . " : "") + t[i].label();
  return s.empty() ? "<empty>" : s;
}

// Typing environment of an (n,m)-value context for an App action: a1..an
// against the selected gamma types, x1..xm against the selected remaining
// theta types.
static TypeEnv app_ctx_env(const ConfigType& alpha, const Action& act) {
  TypeEnv env;
  std::vector<TypePtr> rest = seq_remove(alpha.theta, {act.l});
  std::vector<TypePtr> gsel = seq_select(alpha.gamma, act.is_);
  std::vector<TypePtr> dsel = seq_select(rest, act.js_);
  for (size_t i = 0; i < gsel.size(); ++i)
    env.nonlinear.emplace_back("a" + std::to_string(i + 1), gsel[i]);
  for (size_t j = 0; j < dsel.size(); ++j)
    env.linear.emplace_back("x" + std::to_string(j + 1), dsel[j]);
  return env;
}

std::optional<ConfigType> successor_type(const ConfigType& alpha, const Action& act,
                                         Monad m) {
  int nth = static_cast<int>(alpha.theta.size());
  switch (act.kind) {
    case ActionKind::Eval: {
      if (!alpha.comp_label) return std::nullopt;
      ConfigType beta = alpha;
      beta.comp_label = false;
      return beta;
    }
    case ActionKind::Unbang: {
      if (alpha.comp_label || act.l < 1 || act.l > nth) return std::nullopt;
      auto inner = head_bang(alpha.theta[act.l - 1]);
      if (!inner) return std::nullopt;
      ConfigType beta = alpha;
      beta.gamma.push_back(*inner);
      beta.theta = seq_remove(alpha.theta, {act.l});
      return beta;
    }
    case ActionKind::Dup: {
      if (alpha.comp_label || act.l < 1 || act.l > static_cast<int>(alpha.gamma.size()))
        return std::nullopt;
      ConfigType beta = alpha;
      beta.theta.push_back(alpha.gamma[act.l - 1]);
      beta.comp_label = true;
      return beta;
    }
    case ActionKind::App: {
      if (alpha.comp_label || act.l < 1 || act.l > nth) return std::nullopt;
      auto arrow = head_lolli(alpha.theta[act.l - 1]);
      if (!arrow) return std::nullopt;
      if (!valid_index_seq(act.is_, static_cast<int>(alpha.gamma.size()))) return std::nullopt;
      if (!valid_index_seq(act.js_, nth - 1)) return std::nullopt;
      if (!act.ctx || !is_value(act.ctx)) return std::nullopt;
      TypeEnv env = app_ctx_env(alpha, act);
      if (!typechecks_value(env, act.ctx, arrow->first, m)) return std::nullopt;
      ConfigType beta;
      beta.gamma = alpha.gamma;
      beta.theta = seq_remove(seq_remove(alpha.theta, {act.l}), act.js_);
      beta.theta.push_back(arrow->second);
      beta.comp_label = true;
      return beta;
    }
  }
  return std::nullopt;
}

MonadVal<Configuration> step(const Configuration& k, const Action& act, int fuel, Monad m) {
  auto beta = successor_type(k.type, act, m);
  if (!beta) throw MonadError("action " + act.label() + " is not enabled at " +
                              k.type.to_string());
  switch (act.kind) {
    case ActionKind::Eval: {
      MonadVal<TermV> res = eval_fuel(*k.comp, fuel, m);
      return mv::bind(res, [&](const TermV& v) {
        std::vector<TermPtr> lin2 = k.lin;
        lin2.push_back(v.term);
        return mv::unit(m, make_config(k.gamma, std::move(lin2), std::nullopt, *beta));
      });
    }
    case ActionKind::Unbang: {
      TermPtr v = k.lin[act.l - 1];
      while (v->kind == TermKind::Ann) v = v->kids[0];
      if (v->kind != TermKind::Bang)
        throw MonadError("unbang action on a non-bang value");
      std::vector<TermPtr> gamma2 = k.gamma;
      gamma2.push_back(v->kids[0]);
      return mv::unit(m, make_config(std::move(gamma2), seq_remove(k.lin, {act.l}),
                                     std::nullopt, *beta));
    }
    case ActionKind::Dup:
      return mv::unit(m, make_config(k.gamma, k.lin, k.gamma[act.l - 1], *beta));
    case ActionKind::App: {
      TermPtr f = k.lin[act.l - 1];
      while (f->kind == TermKind::Ann) f = f->kids[0];
      if (f->kind != TermKind::Lam)
        throw MonadError("application action on a non-abstraction");
      std::vector<TermPtr> rest = seq_remove(k.lin, {act.l});
      std::vector<TermPtr> gsel = seq_select(k.gamma, act.is_);
      std::vector<TermPtr> dsel = seq_select(rest, act.js_);
      TermPtr argument = act.ctx;
      for (size_t i = 0; i < gsel.size(); ++i)
        argument = subst_comp(argument, "a" + std::to_string(i + 1), gsel[i]);
      for (size_t j = 0; j < dsel.size(); ++j)
        argument = subst_value(argument, "x" + std::to_string(j + 1), dsel[j]);
      TermPtr body = subst_value(f->kids[0], f->name, argument);
      return mv::unit(m, make_config(k.gamma, seq_remove(rest, act.js_), body, *beta));
    }
  }
  throw MonadError("unreachable");
}

// All strictly increasing index sequences over 1..len, ordered by length
// then lexicographically.
static std::vector<std::vector<int>> index_subsets(int len, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int k = 1; k <= std::min(len, max_len); ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : layer) {
      int lo = s.empty() ? 1 : s.back() + 1;
      for (int i = lo; i <= len; ++i) {
        auto s2 = s;
        s2.push_back(i);
        next.push_back(std::move(s2));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Action> enabled_actions(const ConfigType& alpha, const ActionBounds& bounds,
                                    Monad m, TermEnumerator* shared) {
  std::vector<Action> out;
  if (alpha.comp_label) {
    out.push_back({ActionKind::Eval, 0, {}, {}, nullptr});
    return out;
  }
  int nth = static_cast<int>(alpha.theta.size());
  int ngam = static_cast<int>(alpha.gamma.size());
  for (int l = 1; l <= nth; ++l)
    if (head_bang(alpha.theta[l - 1]))
      out.push_back({ActionKind::Unbang, l, {}, {}, nullptr});
  for (int l = 1; l <= ngam; ++l)
    out.push_back({ActionKind::Dup, l, {}, {}, nullptr});

  std::optional<TermEnumerator> local;
  TermEnumerator* en = shared;
  if (!en && bounds.ctx_size > 0) {
    std::vector<TypePtr> seeds = alpha.gamma;
    seeds.insert(seeds.end(), alpha.theta.begin(), alpha.theta.end());
    local.emplace(m, seeds);
    en = &*local;
  }
  for (int l = 1; l <= nth; ++l) {
    auto arrow = head_lolli(alpha.theta[l - 1]);
    if (!arrow) continue;
    if (bounds.ctx_size <= 0) continue;
    std::vector<TypePtr> rest = seq_remove(alpha.theta, {l});
    // Each variable occurrence costs one node, so selections larger than
    // the budget cannot be used by any context.
    auto isels = index_subsets(ngam, bounds.ctx_size);
    auto jsels = index_subsets(nth - 1, bounds.ctx_size);
    for (const auto& is : isels) {
      for (const auto& js : jsels) {
        if (static_cast<int>(is.size() + js.size()) > bounds.ctx_size) continue;
        TypeEnv env;
        for (size_t i = 0; i < is.size(); ++i)
          env.nonlinear.emplace_back("a" + std::to_string(i + 1),
                                     alpha.gamma[is[i] - 1]);
        for (size_t j = 0; j < js.size(); ++j)
          env.linear.emplace_back("x" + std::to_string(j + 1), rest[js[j] - 1]);
        for (const auto& t : en->values(env, arrow->first, bounds.ctx_size)) {
          // Skip contexts ignoring a selected non-linear resource: the same
          // action already occurs with the smaller selection.
          std::set<std::string> fnl = free_nonlinear(t);
          bool uses_all = true;
          for (size_t i = 0; i < is.size(); ++i)
            if (!fnl.count("a" + std::to_string(i + 1))) { uses_all = false; break; }
          if (!uses_all) continue;
          out.push_back({ActionKind::App, l, is, js, t});
        }
      }
    }
  }
  return out;
}

}  // namespace lambang
