#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambang/enumerate.hpp"
#include "lambang/monad.hpp"
#include "lambang/term.hpp"
#include "lambang/type.hpp"

namespace lambang {

// 1-based sequence utilities. Index tuples are strictly increasing and in
// range ("valid" sequences).
template <class T>
std::vector<T> seq_insert(const std::vector<T>& s, const T& x, int pos) {
  if (pos < 1 || pos > static_cast<int>(s.size()) + 1)
    throw std::out_of_range("seq_insert: position out of range");
  std::vector<T> out;
  out.reserve(s.size() + 1);
  out.insert(out.end(), s.begin(), s.begin() + (pos - 1));
  out.push_back(x);
  out.insert(out.end(), s.begin() + (pos - 1), s.end());
  return out;
}

template <class T>
std::vector<T> seq_remove(const std::vector<T>& s, const std::vector<int>& idx) {
  std::vector<bool> drop(s.size(), false);
  for (int i : idx) {
    if (i < 1 || i > static_cast<int>(s.size()))
      throw std::out_of_range("seq_remove: index out of range");
    drop[i - 1] = true;
  }
  std::vector<T> out;
  for (size_t k = 0; k < s.size(); ++k)
    if (!drop[k]) out.push_back(s[k]);
  return out;
}

template <class T>
std::vector<T> seq_select(const std::vector<T>& s, const std::vector<int>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (int i : idx) {
    if (i < 1 || i > static_cast<int>(s.size()))
      throw std::out_of_range("seq_select: index out of range");
    out.push_back(s[i - 1]);
  }
  return out;
}

bool valid_index_seq(const std::vector<int>& idx, int len);

// Configuration type: componentwise types plus whether the final theta
// entry is a computation under test.
struct ConfigType {
  std::vector<TypePtr> gamma;
  std::vector<TypePtr> theta;  // includes the trailing computation type when labelled
  bool comp_label = false;

  std::string key() const;
  bool equals(const ConfigType& o) const;  // componentwise type_eq
  std::string to_string() const;
};

// A state <Gamma | Theta>: non-linear closed computations, linear closed
// values, and optionally a trailing closed computation under test. The type
// travels with the state (transitions compute it through `b`).
struct Configuration {
  std::vector<TermPtr> gamma;
  std::vector<TermPtr> lin;           // closed values
  std::optional<TermPtr> comp;        // trailing computation, if any
  ConfigType type;
  std::string key;

  bool operator<(const Configuration& o) const { return key < o.key; }
  bool operator==(const Configuration& o) const { return key == o.key; }
};

std::string display(const Configuration& k);

Configuration make_config(std::vector<TermPtr> gamma, std::vector<TermPtr> lin,
                          std::optional<TermPtr> comp, ConfigType type);
// Entry point for a closed computation e : ty, i.e. the state <[] | [] ; e>.
Configuration initial_config(const TermPtr& e, const TypePtr& ty);

// Typecheck every component against the carried type (used by tests; steps
// maintain well-typedness by construction).
void validate_config(const Configuration& k, Monad m);

enum class ActionKind { Eval, Unbang, Dup, App };

struct Action {
  ActionKind kind;
  int l = 0;                 // 1-based position (Unbang: theta, Dup: gamma, App: theta)
  std::vector<int> is_;      // App: positions into gamma
  std::vector<int> js_;      // App: positions into theta-minus-l
  TermPtr ctx;               // App: (n,m)-value context over a1..an, x1..xm

  std::string label() const;  // eval | ?l | !l | app(i=[..],j=[..],l=..,t=..)
};

using Trace = std::vector<Action>;
std::string trace_label(const Trace& t);

// The type-level successor function: defined exactly when the action is
// enabled at that configuration type.
std::optional<ConfigType> successor_type(const ConfigType& alpha, const Action& act,
                                         Monad m);

// One transition. Requires successor_type(type of k, act) to be defined.
MonadVal<Configuration> step(const Configuration& k, const Action& act, int fuel, Monad m);

struct ActionBounds {
  int ctx_size = 0;
};

// Every enabled action at a configuration type, with application contexts
// of size at most ctx_size. Depends only on the type. Order: eval, then
// unbang and dup by position, then applications by (l, i-selection,
// j-selection, context order). Context enumeration may be shared across
// calls via the optional enumerator.
std::vector<Action> enabled_actions(const ConfigType& alpha, const ActionBounds& bounds,
                                    Monad m, TermEnumerator* shared = nullptr);

}  // namespace lambang
