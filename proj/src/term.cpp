#include "lambang/term.hpp"

#include <stdexcept>

namespace lambang {

static TermPtr node(TermKind k, std::string name, std::vector<TermPtr> kids,
                    TypePtr ann = nullptr) {
  return std::make_shared<Term>(Term{k, std::move(name), std::move(kids), std::move(ann)});
}

TermPtr var_lin(const std::string& x) { return node(TermKind::VarLin, x, {}); }
TermPtr var_nonlin(const std::string& a) { return node(TermKind::VarNonLin, a, {}); }
TermPtr lam(const std::string& x, TermPtr body) {
  return node(TermKind::Lam, x, {std::move(body)});
}
TermPtr bang(TermPtr e) { return node(TermKind::Bang, "", {std::move(e)}); }
TermPtr ret(TermPtr v) { return node(TermKind::Ret, "", {std::move(v)}); }
TermPtr app(TermPtr v, TermPtr w) {
  return node(TermKind::App, "", {std::move(v), std::move(w)});
}
TermPtr let_(TermPtr e, const std::string& x, TermPtr f) {
  return node(TermKind::Let, x, {std::move(e), std::move(f)});
}
TermPtr let_bang(TermPtr v, const std::string& a, TermPtr f) {
  return node(TermKind::LetBang, a, {std::move(v), std::move(f)});
}
TermPtr op_app(const std::string& op, std::vector<TermPtr> args) {
  return node(TermKind::OpApp, op, std::move(args));
}
TermPtr ann(TermPtr t, TypePtr ty) {
  return node(TermKind::Ann, "", {std::move(t)}, std::move(ty));
}
TermPtr hole() { return node(TermKind::Hole, "", {}); }

bool is_value(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::VarLin:
    case TermKind::Lam:
    case TermKind::Bang:
      return true;
    case TermKind::Ann:
      return is_value(t->kids[0]);
    default:
      return false;
  }
}

bool is_computation(const TermPtr& t) {
  if (t->kind == TermKind::Ann) return is_computation(t->kids[0]);
  if (t->kind == TermKind::Hole) return true;
  return !is_value(t);
}

int term_size(const TermPtr& t) {
  if (t->kind == TermKind::Ann) return term_size(t->kids[0]);
  int n = 1;
  for (const auto& k : t->kids) n += term_size(k);
  return n;
}

static void fv(const TermPtr& t, bool linear, std::set<std::string>& bound,
               std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::VarLin:
      if (linear && !bound.count(t->name)) out.insert(t->name);
      break;
    case TermKind::VarNonLin:
      if (!linear && !bound.count(t->name)) out.insert(t->name);
      break;
    case TermKind::Lam: {
      bool fresh = linear ? bound.insert(t->name).second : false;
      fv(t->kids[0], linear, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    case TermKind::Let: {
      fv(t->kids[0], linear, bound, out);
      bool fresh = linear ? bound.insert(t->name).second : false;
      fv(t->kids[1], linear, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    case TermKind::LetBang: {
      fv(t->kids[0], linear, bound, out);
      bool fresh = !linear ? bound.insert(t->name).second : false;
      fv(t->kids[1], linear, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    default:
      for (const auto& k : t->kids) fv(k, linear, bound, out);
      break;
  }
}

std::set<std::string> free_linear(const TermPtr& t) {
  std::set<std::string> bound, out;
  fv(t, true, bound, out);
  return out;
}

std::set<std::string> free_nonlinear(const TermPtr& t) {
  std::set<std::string> bound, out;
  fv(t, false, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

namespace {

struct Subst {
  const std::string& var;
  const TermPtr& repl;
  bool linear;  // replacing a linear (value) or non-linear (computation) variable
  std::set<std::string> repl_fv;

  TermPtr go(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::VarLin:
        if (linear && t->name == var) return repl;
        return t;
      case TermKind::VarNonLin:
        if (!linear && t->name == var) return repl;
        return t;
      case TermKind::Lam:
        return binder1(t, /*binder_linear=*/true);
      case TermKind::Let: {
        TermPtr e = go(t->kids[0]);
        auto [b, f] = binder_body(t->name, t->kids[1], /*binder_linear=*/true);
        return let_(e, b, f);
      }
      case TermKind::LetBang: {
        TermPtr v = go(t->kids[0]);
        auto [b, f] = binder_body(t->name, t->kids[1], /*binder_linear=*/false);
        return let_bang(v, b, f);
      }
      case TermKind::Bang:
        return bang(go(t->kids[0]));
      case TermKind::Ret:
        return ret(go(t->kids[0]));
      case TermKind::App:
        return app(go(t->kids[0]), go(t->kids[1]));
      case TermKind::OpApp: {
        std::vector<TermPtr> args;
        args.reserve(t->kids.size());
        for (const auto& k : t->kids) args.push_back(go(k));
        return op_app(t->name, std::move(args));
      }
      case TermKind::Ann:
        return ann(go(t->kids[0]), t->ann);
      case TermKind::Hole:
        return t;
    }
    return t;
  }

  TermPtr binder1(const TermPtr& t, bool binder_linear) {
    auto [b, body] = binder_body(t->name, t->kids[0], binder_linear);
    return lam(b, body);
  }

  // Rename the binder away from the substituted variable's free names when
  // it would capture, then substitute in the body.
  std::pair<std::string, TermPtr> binder_body(const std::string& b,
                                              const TermPtr& body,
                                              bool binder_linear) {
    if (binder_linear == linear && b == var) return {b, body};  // shadowed
    if (binder_linear == linear ? repl_fv.count(b) : repl_fv_other.count(b)) {
      std::set<std::string> avoid = repl_fv;
      avoid.insert(repl_fv_other.begin(), repl_fv_other.end());
      for (const auto& n : free_linear(body)) avoid.insert(n);
      for (const auto& n : free_nonlinear(body)) avoid.insert(n);
      avoid.insert(var);
      std::string b2 = fresh_name(b, avoid);
      TermPtr renamed = binder_linear
                            ? subst_value(body, b, var_lin(b2))
                            : subst_comp(body, b, var_nonlin(b2));
      return {b2, go(renamed)};
    }
    return {b, go(body)};
  }

  std::set<std::string> repl_fv_other;
};

}  // namespace

TermPtr subst_value(const TermPtr& t, const std::string& x, const TermPtr& v) {
  Subst s{x, v, true, free_linear(v), free_nonlinear(v)};
  return s.go(t);
}

TermPtr subst_comp(const TermPtr& t, const std::string& a, const TermPtr& e) {
  Subst s{a, e, false, free_nonlinear(e), free_linear(e)};
  return s.go(t);
}

TermPtr strip_ann(const TermPtr& t) {
  if (t->kind == TermKind::Ann) return strip_ann(t->kids[0]);
  bool changed = false;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (const auto& k : t->kids) {
    TermPtr k2 = strip_ann(k);
    changed |= (k2 != k);
    kids.push_back(k2);
  }
  if (!changed) return t;
  return std::make_shared<Term>(Term{t->kind, t->name, std::move(kids), nullptr});
}

namespace {

// de Bruijn-style canonical printing: bound occurrences by binder depth,
// free ones by name; linear and non-linear namespaces kept apart.
struct Keyer {
  std::vector<std::string> lin, non;
  std::string out;

  void go(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::VarLin: {
        int idx = lookup(lin, t->name);
        out += idx >= 0 ? "l" + std::to_string(idx) : "L:" + t->name + ";";
        break;
      }
      case TermKind::VarNonLin: {
        int idx = lookup(non, t->name);
        out += idx >= 0 ? "n" + std::to_string(idx) : "N:" + t->name + ";";
        break;
      }
      case TermKind::Lam:
        out += "(\\";
        lin.push_back(t->name);
        go(t->kids[0]);
        lin.pop_back();
        out += ")";
        break;
      case TermKind::Bang:
        out += "(!";
        go(t->kids[0]);
        out += ")";
        break;
      case TermKind::Ret:
        out += "(r";
        go(t->kids[0]);
        out += ")";
        break;
      case TermKind::App:
        out += "(@";
        go(t->kids[0]);
        out += " ";
        go(t->kids[1]);
        out += ")";
        break;
      case TermKind::Let:
        out += "(l";
        go(t->kids[0]);
        lin.push_back(t->name);
        go(t->kids[1]);
        lin.pop_back();
        out += ")";
        break;
      case TermKind::LetBang:
        out += "(b";
        go(t->kids[0]);
        non.push_back(t->name);
        go(t->kids[1]);
        non.pop_back();
        out += ")";
        break;
      case TermKind::OpApp:
        out += "(o:" + t->name;
        for (const auto& k : t->kids) { out += " "; go(k); }
        out += ")";
        break;
      case TermKind::Ann:
        go(t->kids[0]);
        break;
      case TermKind::Hole:
        out += "[-]";
        break;
    }
  }

  static int lookup(const std::vector<std::string>& env, const std::string& x) {
    for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
      if (env[i] == x) return static_cast<int>(env.size()) - 1 - i;
    return -1;
  }
};

}  // namespace

std::string term_key(const TermPtr& t) {
  Keyer k;
  k.go(t);
  return k.out;
}

bool alpha_eq(const TermPtr& s, const TermPtr& t) {
  return term_key(s) == term_key(t);
}

int hole_count(const TermPtr& t) {
  if (t->kind == TermKind::Hole) return 1;
  int n = 0;
  for (const auto& k : t->kids) n += hole_count(k);
  return n;
}

TermPtr plug(const TermPtr& ctx, const TermPtr& e) {
  if (ctx->kind == TermKind::Hole) return e;
  bool changed = false;
  std::vector<TermPtr> kids;
  kids.reserve(ctx->kids.size());
  for (const auto& k : ctx->kids) {
    TermPtr k2 = plug(k, e);
    changed |= (k2 != k);
    kids.push_back(k2);
  }
  if (!changed) return ctx;
  return std::make_shared<Term>(Term{ctx->kind, ctx->name, std::move(kids), ctx->ann});
}

// Concrete syntax. Values that appear in application position get parens
// when they are lambdas; bang bodies always get parens unless atomic.
static void print_rec(const TermPtr& t, std::string& out, bool atom) {
  switch (t->kind) {
    case TermKind::VarLin:
    case TermKind::VarNonLin:
      out += t->name;
      break;
    case TermKind::Lam:
      if (atom) out += "(";
      out += "\\" + t->name + ". ";
      print_rec(t->kids[0], out, false);
      if (atom) out += ")";
      break;
    case TermKind::Bang: {
      out += "!";
      const TermPtr& b = t->kids[0];
      bool needs = !(b->kind == TermKind::VarLin || b->kind == TermKind::VarNonLin ||
                     b->kind == TermKind::OpApp);
      if (needs) out += "(";
      print_rec(b, out, false);
      if (needs) out += ")";
      break;
    }
    case TermKind::Ret:
      if (atom) out += "(";
      out += "return ";
      print_rec(t->kids[0], out, true);
      if (atom) out += ")";
      break;
    case TermKind::App:
      if (atom) out += "(";
      print_rec(t->kids[0], out, true);
      out += " ";
      print_rec(t->kids[1], out, true);
      if (atom) out += ")";
      break;
    case TermKind::Let:
      if (atom) out += "(";
      out += "let " + t->name + " = ";
      print_rec(t->kids[0], out, true);
      out += " in ";
      print_rec(t->kids[1], out, false);
      if (atom) out += ")";
      break;
    case TermKind::LetBang:
      if (atom) out += "(";
      out += "let !" + t->name + " = ";
      print_rec(t->kids[0], out, true);
      out += " in ";
      print_rec(t->kids[1], out, false);
      if (atom) out += ")";
      break;
    case TermKind::OpApp:
      out += t->name + "(";
      for (size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += ", ";
        print_rec(t->kids[i], out, false);
      }
      out += ")";
      break;
    case TermKind::Ann:
      print_rec(t->kids[0], out, atom);
      break;
    case TermKind::Hole:
      out += "[-]";
      break;
  }
}

std::string term_to_string(const TermPtr& t) {
  std::string out;
  print_rec(t, out, false);
  return out;
}

std::string display(const TermV& v) { return term_to_string(v.term); }

}  // namespace lambang
