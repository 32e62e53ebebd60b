#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace lambang {

using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str() + "/1";
  return c.get_str();
}

enum class Monad { Maybe, Dist, Output, Input };

std::string monad_name(Monad m);
std::optional<Monad> monad_from_name(const std::string& s);

struct OpSig {
  std::string name;
  int arity;
};

// Operation signatures: none (maybe), fair binary choice (dist), one unary
// print per output letter, binary read (input).
std::vector<OpSig> signature(Monad m, const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");
std::optional<int> op_arity(Monad m, const std::string& op,
                            const std::string& alphabet = "abcdefghijklmnopqrstuvwxyz");

struct MonadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finitely presented element of T(X) for the active monad, with exact
// arithmetic. X must be regular and totally ordered.
template <class X>
struct MonadVal {
  struct MaybeV {
    std::optional<X> v;  // nullopt = divergence
  };
  struct DistV {
    std::map<X, Rational> p;  // keys with probability 0 are never stored
  };
  struct OutV {
    std::string prefix;
    std::optional<X> v;
  };
  struct InNode;
  using InPtr = std::shared_ptr<const InNode>;
  struct InNode {
    // leaf(x) | divergent leaf | read(l, r)
    std::optional<X> leaf;
    InPtr l, r;
    bool is_leaf() const { return !l; }
  };
  struct InV {
    InPtr root;
  };

  Monad kind;
  std::variant<MaybeV, DistV, OutV, InV> u;
};

struct Unit {
  bool operator<(const Unit&) const { return false; }
  bool operator==(const Unit&) const { return true; }
};
inline std::string display(const Unit&) { return "*"; }

namespace mv {

template <class X>
using InPtr = typename MonadVal<X>::InPtr;

template <class X>
InPtr<X> in_leaf(std::optional<X> x) {
  return std::make_shared<typename MonadVal<X>::InNode>(
      typename MonadVal<X>::InNode{std::move(x), nullptr, nullptr});
}

template <class X>
InPtr<X> in_read(InPtr<X> l, InPtr<X> r) {
  return std::make_shared<typename MonadVal<X>::InNode>(
      typename MonadVal<X>::InNode{std::nullopt, std::move(l), std::move(r)});
}

template <class X>
MonadVal<X> unit(Monad m, X x) {
  MonadVal<X> r;
  r.kind = m;
  switch (m) {
    case Monad::Maybe:
      r.u = typename MonadVal<X>::MaybeV{std::move(x)};
      break;
    case Monad::Dist: {
      typename MonadVal<X>::DistV d;
      d.p.emplace(std::move(x), Rational(1));
      r.u = std::move(d);
      break;
    }
    case Monad::Output:
      r.u = typename MonadVal<X>::OutV{"", std::move(x)};
      break;
    case Monad::Input:
      r.u = typename MonadVal<X>::InV{in_leaf<X>(std::move(x))};
      break;
  }
  return r;
}

template <class X>
MonadVal<X> bottom(Monad m) {
  MonadVal<X> r;
  r.kind = m;
  switch (m) {
    case Monad::Maybe:
      r.u = typename MonadVal<X>::MaybeV{std::nullopt};
      break;
    case Monad::Dist:
      r.u = typename MonadVal<X>::DistV{};
      break;
    case Monad::Output:
      r.u = typename MonadVal<X>::OutV{"", std::nullopt};
      break;
    case Monad::Input:
      r.u = typename MonadVal<X>::InV{in_leaf<X>(std::nullopt)};
      break;
  }
  return r;
}

template <class X, class Y, class F>
InPtr<Y> in_bind(const InPtr<X>& n, F&& f) {
  if (n->is_leaf()) {
    if (!n->leaf) return in_leaf<Y>(std::nullopt);
    return std::get<typename MonadVal<Y>::InV>(f(*n->leaf).u).root;
  }
  return in_read<Y>(in_bind<X, Y>(n->l, f), in_bind<X, Y>(n->r, f));
}

// Kleisli extension, per monad. f must produce values in the same monad.
template <class X, class F>
auto bind(const MonadVal<X>& m, F&& f) -> decltype(f(std::declval<const X&>())) {
  using MY = decltype(f(std::declval<const X&>()));
  using Y = std::decay_t<decltype(*std::get<typename MY::MaybeV>(std::declval<MY>().u).v)>;
  MY r;
  r.kind = m.kind;
  switch (m.kind) {
    case Monad::Maybe: {
      const auto& mm = std::get<typename MonadVal<X>::MaybeV>(m.u);
      if (!mm.v) {
        r.u = typename MY::MaybeV{std::nullopt};
      } else {
        MY fy = f(*mm.v);
        if (fy.kind != m.kind) throw MonadError("bind: monad mismatch");
        r = std::move(fy);
      }
      break;
    }
    case Monad::Dist: {
      const auto& mm = std::get<typename MonadVal<X>::DistV>(m.u);
      typename MY::DistV out;
      for (const auto& [x, p] : mm.p) {
        MY fy = f(x);
        if (fy.kind != m.kind) throw MonadError("bind: monad mismatch");
        for (const auto& [y, q] : std::get<typename MY::DistV>(fy.u).p) {
          Rational w = p * q;
          w.canonicalize();
          auto it = out.p.find(y);
          if (it == out.p.end()) out.p.emplace(y, w);
          else { it->second += w; it->second.canonicalize(); }
        }
      }
      r.u = std::move(out);
      break;
    }
    case Monad::Output: {
      const auto& mm = std::get<typename MonadVal<X>::OutV>(m.u);
      if (!mm.v) {
        r.u = typename MY::OutV{mm.prefix, std::nullopt};
      } else {
        MY fy = f(*mm.v);
        if (fy.kind != m.kind) throw MonadError("bind: monad mismatch");
        auto& o = std::get<typename MY::OutV>(fy.u);
        r.u = typename MY::OutV{mm.prefix + o.prefix, std::move(o.v)};
      }
      break;
    }
    case Monad::Input: {
      const auto& mm = std::get<typename MonadVal<X>::InV>(m.u);
      auto g = [&](const X& x) {
        MY fy = f(x);
        if (fy.kind != m.kind) throw MonadError("bind: monad mismatch");
        return fy;
      };
      r.u = typename MY::InV{in_bind<X, Y>(mm.root, g)};
      break;
    }
  }
  return r;
}

template <class X, class Y, class F>
MonadVal<Y> fmap(const MonadVal<X>& m, F&& f) {
  return bind(m, [&](const X& x) { return unit<Y>(m.kind, f(x)); });
}

// Interpret an operation symbol on monadic arguments.
//   choice:  pointwise (1/2)mu + (1/2)nu
//   print_c: prepend c to the output prefix
//   read:    build the two-child input node
template <class X>
MonadVal<X> apply_op(Monad m, const std::string& op,
                     const std::vector<MonadVal<X>>& args) {
  auto ar = op_arity(m, op);
  if (!ar || static_cast<size_t>(*ar) != args.size())
    throw MonadError("unknown operation '" + op + "' for monad " + monad_name(m));
  MonadVal<X> r;
  r.kind = m;
  switch (m) {
    case Monad::Maybe:
      throw MonadError("maybe monad has an empty signature");
    case Monad::Dist: {
      typename MonadVal<X>::DistV out;
      Rational half(1, 2);
      for (const auto& arg : args) {
        for (const auto& [x, p] : std::get<typename MonadVal<X>::DistV>(arg.u).p) {
          Rational w = half * p;
          w.canonicalize();
          auto it = out.p.find(x);
          if (it == out.p.end()) out.p.emplace(x, w);
          else { it->second += w; it->second.canonicalize(); }
        }
      }
      r.u = std::move(out);
      break;
    }
    case Monad::Output: {
      auto o = std::get<typename MonadVal<X>::OutV>(args[0].u);
      o.prefix = op.substr(std::string("print_").size()) + o.prefix;
      r.u = std::move(o);
      break;
    }
    case Monad::Input: {
      r.u = typename MonadVal<X>::InV{
          in_read<X>(std::get<typename MonadVal<X>::InV>(args[0].u).root,
                     std::get<typename MonadVal<X>::InV>(args[1].u).root)};
      break;
    }
  }
  return r;
}

template <class X>
bool in_eq(const InPtr<X>& a, const InPtr<X>& b) {
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) {
    if (a->leaf.has_value() != b->leaf.has_value()) return false;
    return !a->leaf || *a->leaf == *b->leaf;
  }
  return in_eq<X>(a->l, b->l) && in_eq<X>(a->r, b->r);
}

// Exact equality of normal forms.
template <class X>
bool mval_eq(const MonadVal<X>& a, const MonadVal<X>& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Monad::Maybe: {
      const auto& x = std::get<typename MonadVal<X>::MaybeV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::MaybeV>(b.u);
      if (x.v.has_value() != y.v.has_value()) return false;
      return !x.v || *x.v == *y.v;
    }
    case Monad::Dist: {
      const auto& x = std::get<typename MonadVal<X>::DistV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::DistV>(b.u);
      if (x.p.size() != y.p.size()) return false;
      auto it = y.p.begin();
      for (const auto& [k, p] : x.p) {
        if (!(k == it->first) || cmp(p, it->second) != 0) return false;
        ++it;
      }
      return true;
    }
    case Monad::Output: {
      const auto& x = std::get<typename MonadVal<X>::OutV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::OutV>(b.u);
      if (x.prefix != y.prefix) return false;
      if (x.v.has_value() != y.v.has_value()) return false;
      return !x.v || *x.v == *y.v;
    }
    case Monad::Input:
      return in_eq<X>(std::get<typename MonadVal<X>::InV>(a.u).root,
                      std::get<typename MonadVal<X>::InV>(b.u).root);
  }
  return false;
}

template <class X>
bool in_leq(const InPtr<X>& a, const InPtr<X>& b) {
  if (a->is_leaf() && !a->leaf) return true;  // divergent leaf below everything
  if (a->is_leaf()) {
    if (!b->is_leaf() || !b->leaf) return false;
    return *a->leaf == *b->leaf;
  }
  if (b->is_leaf()) return false;
  return in_leq<X>(a->l, b->l) && in_leq<X>(a->r, b->r);
}

// The per-monad information order: flat (maybe), pointwise (dist),
// prefix-or-equal (output), and the tree order where a divergent leaf is
// below every tree (input).
template <class X>
bool leq(const MonadVal<X>& a, const MonadVal<X>& b) {
  if (a.kind != b.kind) throw MonadError("leq: monad mismatch");
  switch (a.kind) {
    case Monad::Maybe: {
      const auto& x = std::get<typename MonadVal<X>::MaybeV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::MaybeV>(b.u);
      if (!x.v) return true;
      return y.v && *x.v == *y.v;
    }
    case Monad::Dist: {
      const auto& x = std::get<typename MonadVal<X>::DistV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::DistV>(b.u);
      for (const auto& [k, p] : x.p) {
        auto it = y.p.find(k);
        if (it == y.p.end() || cmp(p, it->second) > 0) return false;
      }
      return true;
    }
    case Monad::Output: {
      const auto& x = std::get<typename MonadVal<X>::OutV>(a.u);
      const auto& y = std::get<typename MonadVal<X>::OutV>(b.u);
      if (!x.v)
        return y.prefix.size() >= x.prefix.size() &&
               y.prefix.compare(0, x.prefix.size(), x.prefix) == 0;
      return y.v && *x.v == *y.v && x.prefix == y.prefix;
    }
    case Monad::Input:
      return in_leq<X>(std::get<typename MonadVal<X>::InV>(a.u).root,
                       std::get<typename MonadVal<X>::InV>(b.u).root);
  }
  return false;
}

// The observation map T(!) into T(1): erase returned values, keep effects.
template <class X>
MonadVal<Unit> obs(const MonadVal<X>& m) {
  return fmap<X, Unit>(m, [](const X&) { return Unit{}; });
}

template <class X>
Rational dist_mass(const MonadVal<X>& m) {
  Rational total(0);
  for (const auto& [k, p] : std::get<typename MonadVal<X>::DistV>(m.u).p) total += p;
  total.canonicalize();
  return total;
}

template <class X>
void in_json(const InPtr<X>& n, nlohmann::json& j) {
  if (n->is_leaf()) {
    if (!n->leaf) j = nlohmann::json{{"div", true}};
    else j = nlohmann::json{{"leaf", display(*n->leaf)}};
    return;
  }
  nlohmann::json l, r;
  in_json<X>(n->l, l);
  in_json<X>(n->r, r);
  j = nlohmann::json{{"read", nlohmann::json::array({l, r})}};
}

template <class X>
nlohmann::json to_json(const MonadVal<X>& m) {
  nlohmann::json j;
  j["monad"] = monad_name(m.kind);
  switch (m.kind) {
    case Monad::Maybe: {
      const auto& x = std::get<typename MonadVal<X>::MaybeV>(m.u);
      j["diverges"] = !x.v.has_value();
      if (x.v) j["value"] = display(*x.v);
      break;
    }
    case Monad::Dist: {
      auto entries = nlohmann::json::array();
      for (const auto& [k, p] : std::get<typename MonadVal<X>::DistV>(m.u).p)
        entries.push_back({{"value", display(k)}, {"prob", rational_str(p)}});
      j["entries"] = std::move(entries);
      break;
    }
    case Monad::Output: {
      const auto& x = std::get<typename MonadVal<X>::OutV>(m.u);
      j["prefix"] = x.prefix;
      j["diverges"] = !x.v.has_value();
      if (x.v) j["value"] = display(*x.v);
      break;
    }
    case Monad::Input: {
      nlohmann::json tr;
      in_json<X>(std::get<typename MonadVal<X>::InV>(m.u).root, tr);
      j["tree"] = std::move(tr);
      break;
    }
  }
  return j;
}

template <class X>
std::string to_string(const MonadVal<X>& m) {
  return to_json(m).dump();
}

}  // namespace mv
}  // namespace lambang
