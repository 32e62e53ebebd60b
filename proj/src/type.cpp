#include "lambang/type.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lambang {

TypePtr tvar(const std::string& x) {
  return std::make_shared<Type>(Type{TypeKind::Var, x, nullptr, nullptr});
}
TypePtr tbang(TypePtr t) {
  return std::make_shared<Type>(Type{TypeKind::Bang, "", std::move(t), nullptr});
}
TypePtr tlolli(TypePtr a, TypePtr b) {
  return std::make_shared<Type>(Type{TypeKind::Lolli, "", std::move(a), std::move(b)});
}
TypePtr tmu_lolli(const std::string& x, TypePtr a, TypePtr b) {
  return std::make_shared<Type>(Type{TypeKind::MuLolli, x, std::move(a), std::move(b)});
}
TypePtr tmu_bang(const std::string& x, TypePtr a) {
  return std::make_shared<Type>(Type{TypeKind::MuBang, x, std::move(a), nullptr});
}

static void free_vars(const TypePtr& t, std::set<std::string>& bound,
                      std::set<std::string>& out) {
  switch (t->kind) {
    case TypeKind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      break;
    case TypeKind::Bang:
      free_vars(t->a, bound, out);
      break;
    case TypeKind::Lolli:
      free_vars(t->a, bound, out);
      free_vars(t->b, bound, out);
      break;
    case TypeKind::MuLolli: {
      bool fresh = bound.insert(t->var).second;
      free_vars(t->a, bound, out);
      free_vars(t->b, bound, out);
      if (fresh) bound.erase(t->var);
      break;
    }
    case TypeKind::MuBang: {
      bool fresh = bound.insert(t->var).second;
      free_vars(t->a, bound, out);
      if (fresh) bound.erase(t->var);
      break;
    }
  }
}

bool type_closed(const TypePtr& t) {
  std::set<std::string> bound, out;
  free_vars(t, bound, out);
  return out.empty();
}

TypePtr type_subst(const TypePtr& t, const std::string& x, const TypePtr& s) {
  switch (t->kind) {
    case TypeKind::Var:
      return t->var == x ? s : t;
    case TypeKind::Bang:
      return tbang(type_subst(t->a, x, s));
    case TypeKind::Lolli:
      return tlolli(type_subst(t->a, x, s), type_subst(t->b, x, s));
    case TypeKind::MuLolli: {
      if (t->var == x) return t;
      // s is closed at every use site in this artifact; no capture possible.
      return tmu_lolli(t->var, type_subst(t->a, x, s), type_subst(t->b, x, s));
    }
    case TypeKind::MuBang: {
      if (t->var == x) return t;
      return tmu_bang(t->var, type_subst(t->a, x, s));
    }
  }
  return t;
}

TypePtr unfold(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::MuLolli:
      return tlolli(type_subst(t->a, t->var, t), type_subst(t->b, t->var, t));
    case TypeKind::MuBang:
      return tbang(type_subst(t->a, t->var, t));
    default:
      return t;
  }
}

std::optional<std::pair<TypePtr, TypePtr>> head_lolli(const TypePtr& t) {
  TypePtr h = unfold(t);
  if (h->kind == TypeKind::Lolli) return std::make_pair(h->a, h->b);
  return std::nullopt;
}

std::optional<TypePtr> head_bang(const TypePtr& t) {
  TypePtr h = unfold(t);
  if (h->kind == TypeKind::Bang) return h->a;
  return std::nullopt;
}

static void key_rec(const TypePtr& t, std::map<std::string, int>& depth,
                    int level, std::string& out) {
  switch (t->kind) {
    case TypeKind::Var: {
      auto it = depth.find(t->var);
      if (it != depth.end())
        out += "m" + std::to_string(level - it->second);
      else
        out += "F:" + t->var;
      break;
    }
    case TypeKind::Bang:
      out += "!";
      key_rec(t->a, depth, level, out);
      break;
    case TypeKind::Lolli:
      out += "(";
      key_rec(t->a, depth, level, out);
      out += ">";
      key_rec(t->b, depth, level, out);
      out += ")";
      break;
    case TypeKind::MuLolli: {
      auto prev = depth.find(t->var);
      int saved = prev == depth.end() ? -1 : prev->second;
      depth[t->var] = level + 1;
      out += "u(";
      key_rec(t->a, depth, level + 1, out);
      out += ">";
      key_rec(t->b, depth, level + 1, out);
      out += ")";
      if (saved < 0) depth.erase(t->var); else depth[t->var] = saved;
      break;
    }
    case TypeKind::MuBang: {
      auto prev = depth.find(t->var);
      int saved = prev == depth.end() ? -1 : prev->second;
      depth[t->var] = level + 1;
      out += "u!";
      key_rec(t->a, depth, level + 1, out);
      if (saved < 0) depth.erase(t->var); else depth[t->var] = saved;
      break;
    }
  }
}

std::string type_key(const TypePtr& t) {
  std::map<std::string, int> depth;
  std::string out;
  key_rec(t, depth, 0, out);
  return out;
}

static bool eq_rec(const TypePtr& s, const TypePtr& t,
                   std::set<std::pair<std::string, std::string>>& seen) {
  std::string ks = type_key(s), kt = type_key(t);
  if (ks == kt) return true;
  auto pr = std::make_pair(ks, kt);
  if (seen.count(pr)) return true;  // coinductive assumption
  seen.insert(pr);
  TypePtr hs = unfold(s), ht = unfold(t);
  if (hs->kind != ht->kind) return false;
  switch (hs->kind) {
    case TypeKind::Var:
      return hs->var == ht->var;
    case TypeKind::Bang:
      return eq_rec(hs->a, ht->a, seen);
    case TypeKind::Lolli:
      return eq_rec(hs->a, ht->a, seen) && eq_rec(hs->b, ht->b, seen);
    default:
      return false;  // unreachable: unfold removed mu heads
  }
}

bool type_eq(const TypePtr& s, const TypePtr& t) {
  std::set<std::pair<std::string, std::string>> seen;
  return eq_rec(s, t, seen);
}

// Printing. Precedence: mu and -o extend to the right; ! binds tightest.
static void print_rec(const TypePtr& t, std::string& out, bool atom) {
  switch (t->kind) {
    case TypeKind::Var:
      out += t->var;
      break;
    case TypeKind::Bang:
      out += "!";
      print_rec(t->a, out, true);
      break;
    case TypeKind::Lolli:
      if (atom) out += "(";
      print_rec(t->a, out, true);
      out += " -o ";
      print_rec(t->b, out, false);
      if (atom) out += ")";
      break;
    case TypeKind::MuLolli:
      if (atom) out += "(";
      out += "mu " + t->var + ". ";
      print_rec(t->a, out, true);
      out += " -o ";
      print_rec(t->b, out, false);
      if (atom) out += ")";
      break;
    case TypeKind::MuBang:
      if (atom) out += "(";
      out += "mu " + t->var + ". !";
      print_rec(t->a, out, true);
      if (atom) out += ")";
      break;
  }
}

std::string type_to_string(const TypePtr& t) {
  std::string out;
  print_rec(t, out, false);
  return out;
}

std::vector<TypePtr> type_closure(const std::vector<TypePtr>& seeds) {
  std::vector<TypePtr> out;
  std::set<std::string> seen;
  std::vector<TypePtr> work = seeds;
  while (!work.empty()) {
    TypePtr t = work.back();
    work.pop_back();
    std::string k = type_key(t);
    if (seen.count(k)) continue;
    seen.insert(k);
    out.push_back(t);
    switch (t->kind) {
      case TypeKind::Var:
        break;
      case TypeKind::Bang:
        work.push_back(t->a);
        break;
      case TypeKind::Lolli:
        work.push_back(t->a);
        work.push_back(t->b);
        break;
      case TypeKind::MuLolli:
      case TypeKind::MuBang:
        work.push_back(unfold(t));
        break;
    }
  }
  // Deduplicate up to type_eq, keeping the first representative.
  std::vector<TypePtr> dedup;
  for (const auto& t : out) {
    bool dup = false;
    for (const auto& u : dedup)
      if (type_eq(t, u)) { dup = true; break; }
    if (!dup) dedup.push_back(t);
  }
  return dedup;
}

static int type_size(const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Var: return 1;
    case TypeKind::Bang: return 1 + type_size(t->a);
    case TypeKind::Lolli: return 1 + type_size(t->a) + type_size(t->b);
    case TypeKind::MuLolli: return 1 + type_size(t->a) + type_size(t->b);
    case TypeKind::MuBang: return 1 + type_size(t->a);
  }
  return 1;
}

// Open-type enumeration under a set of bound mu-variables; closed types are
// those generated with an empty bound set at the top.
static void enum_types(int max_size, const std::vector<std::string>& bound,
                       std::vector<TypePtr>& out) {
  if (max_size < 1) return;
  for (const auto& x : bound) out.push_back(tvar(x));
  if (max_size >= 2) {
    std::vector<TypePtr> inner;
    enum_types(max_size - 1, bound, inner);
    for (auto& t : inner) out.push_back(tbang(t));
  }
  if (max_size >= 3) {
    std::vector<TypePtr> parts;
    enum_types(max_size - 2, bound, parts);
    for (auto& a : parts)
      for (auto& b : parts)
        if (type_size(a) + type_size(b) + 1 <= max_size)
          out.push_back(tlolli(a, b));
    // mu X. a -o b and mu X. !a with X in scope
    std::vector<std::string> bound2 = bound;
    std::string v = "X" + std::to_string(bound.size() + 1);
    bound2.push_back(v);
    std::vector<TypePtr> parts2;
    enum_types(max_size - 2, bound2, parts2);
    for (auto& a : parts2) out.push_back(tmu_bang(v, a));
    for (auto& a : parts2)
      for (auto& b : parts2)
        if (type_size(a) + type_size(b) + 1 <= max_size)
          out.push_back(tmu_lolli(v, a, b));
  }
}

std::vector<TypePtr> enumerate_closed_types(int max_size) {
  std::vector<TypePtr> all;
  enum_types(max_size, {}, all);
  std::vector<TypePtr> out;
  std::set<std::string> seen;
  for (auto& t : all) {
    if (!type_closed(t)) continue;
    if (type_size(t) > max_size) continue;
    std::string k = type_key(t);
    if (seen.insert(k).second) out.push_back(t);
  }
  std::stable_sort(out.begin(), out.end(), [](const TypePtr& a, const TypePtr& b) {
    return type_size(a) < type_size(b);
  });
  return out;
}

}  // namespace lambang
