#pragma once

#include <random>
#include <vector>

#include "lambang/monad.hpp"
#include "lambang/parser.hpp"
#include "lambang/prelude.hpp"
#include "lambang/typecheck.hpp"

namespace lambang::testing {

inline TypePtr ty(const std::string& s) { return parse_type(s); }
inline TermPtr cm(const std::string& s, Monad m = Monad::Dist) {
  return parse_comp_str(s, m);
}
inline TermPtr vl(const std::string& s, Monad m = Monad::Dist) {
  return parse_value_str(s, m);
}

inline Rational rat(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Random finitely presented monadic values over small integers, for the
// law and order properties.
struct MvGen {
  std::mt19937_64 rng;
  explicit MvGen(std::uint64_t seed) : rng(seed) {}

  int small() { return static_cast<int>(rng() % 5); }

  typename MonadVal<int>::InPtr tree(int depth) {
    if (depth <= 0 || rng() % 2 == 0) {
      if (rng() % 4 == 0) return mv::in_leaf<int>(std::nullopt);
      return mv::in_leaf<int>(small());
    }
    return mv::in_read<int>(tree(depth - 1), tree(depth - 1));
  }

  MonadVal<int> operator()(Monad m) {
    MonadVal<int> r;
    r.kind = m;
    switch (m) {
      case Monad::Maybe:
        r.u = typename MonadVal<int>::MaybeV{
            rng() % 3 == 0 ? std::nullopt : std::optional<int>(small())};
        break;
      case Monad::Dist: {
        typename MonadVal<int>::DistV d;
        int n = static_cast<int>(rng() % 4);
        Rational left(1);
        for (int i = 0; i < n; ++i) {
          Rational p(1 + static_cast<long>(rng() % 4), 16);
          p.canonicalize();
          if (cmp(p, left) > 0) break;
          left -= p;
          int key = small();
          auto it = d.p.find(key);
          if (it == d.p.end()) d.p.emplace(key, p);
          else { it->second += p; it->second.canonicalize(); }
        }
        r.u = std::move(d);
        break;
      }
      case Monad::Output: {
        std::string prefix;
        int len = static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i) prefix += static_cast<char>('a' + rng() % 3);
        r.u = typename MonadVal<int>::OutV{
            prefix, rng() % 3 == 0 ? std::nullopt : std::optional<int>(small())};
        break;
      }
      case Monad::Input:
        r.u = typename MonadVal<int>::InV{tree(2)};
        break;
    }
    return r;
  }

  // A random Kleisli function as a lookup table over the small domain.
  std::function<MonadVal<int>(const int&)> fn(Monad m) {
    auto table = std::make_shared<std::vector<MonadVal<int>>>();
    for (int i = 0; i < 5; ++i) table->push_back((*this)(m));
    return [table, m](const int& x) { return (*table)[((x % 5) + 5) % 5]; };
  }

  // Something below v in the information order (for monotonicity checks).
  typename MonadVal<int>::InPtr tree_below(const typename MonadVal<int>::InPtr& t) {
    if (rng() % 3 == 0) return mv::in_leaf<int>(std::nullopt);
    if (t->is_leaf()) return t;
    return mv::in_read<int>(tree_below(t->l), tree_below(t->r));
  }

  MonadVal<int> below(const MonadVal<int>& v) {
    MonadVal<int> r;
    r.kind = v.kind;
    switch (v.kind) {
      case Monad::Maybe:
        if (rng() % 2 == 0) return mv::bottom<int>(v.kind);
        return v;
      case Monad::Dist: {
        typename MonadVal<int>::DistV d;
        for (const auto& [k, p] : std::get<typename MonadVal<int>::DistV>(v.u).p) {
          int roll = static_cast<int>(rng() % 3);
          if (roll == 0) continue;  // drop the key
          Rational q = roll == 1 ? p : p / 2;
          q.canonicalize();
          d.p.emplace(k, q);
        }
        r.u = std::move(d);
        return r;
      }
      case Monad::Output: {
        const auto& o = std::get<typename MonadVal<int>::OutV>(v.u);
        if (rng() % 2 == 0) return v;
        size_t cut = o.prefix.empty() ? 0 : rng() % (o.prefix.size() + 1);
        r.u = typename MonadVal<int>::OutV{o.prefix.substr(0, cut), std::nullopt};
        return r;
      }
      case Monad::Input:
        r.u = typename MonadVal<int>::InV{
            tree_below(std::get<typename MonadVal<int>::InV>(v.u).root)};
        return r;
    }
    return r;
  }
};

inline const std::vector<Monad>& all_monads() {
  static const std::vector<Monad> ms{Monad::Maybe, Monad::Dist, Monad::Output,
                                     Monad::Input};
  return ms;
}

// Closed well-typed computations per monad, drawn from the enumeration over
// the small type pool, with the prelude's divergent and mixed terms added.
std::vector<std::pair<TermPtr, TypePtr>> closed_corpus(Monad m, int max_size,
                                                       int at_least);

}  // namespace lambang::testing
