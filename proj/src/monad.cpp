#include "lambang/monad.hpp"

namespace lambang {

std::string monad_name(Monad m) {
  switch (m) {
    case Monad::Maybe: return "maybe";
    case Monad::Dist: return "dist";
    case Monad::Output: return "output";
    case Monad::Input: return "input";
  }
  return "?";
}

std::optional<Monad> monad_from_name(const std::string& s) {
  if (s == "maybe") return Monad::Maybe;
  if (s == "dist") return Monad::Dist;
  if (s == "output") return Monad::Output;
  if (s == "input") return Monad::Input;
  return std::nullopt;
}

std::vector<OpSig> signature(Monad m, const std::string& alphabet) {
  switch (m) {
    case Monad::Maybe:
      return {};
    case Monad::Dist:
      return {{"choice", 2}};
    case Monad::Output: {
      std::vector<OpSig> out;
      out.reserve(alphabet.size());
      for (char c : alphabet) out.push_back({std::string("print_") + c, 1});
      return out;
    }
    case Monad::Input:
      return {{"read", 2}};
  }
  return {};
}

std::optional<int> op_arity(Monad m, const std::string& op, const std::string& alphabet) {
  for (const auto& s : signature(m, alphabet))
    if (s.name == op) return s.arity;
  return std::nullopt;
}

}  // namespace lambang
