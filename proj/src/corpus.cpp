#include "lambang/corpus.hpp"

#include <random>

#include "lambang/enumerate.hpp"

namespace lambang {

std::vector<CorpusPair> random_corpus(std::uint64_t seed, int count, int term_size,
                                      Monad m, int type_pool_size) {
  std::vector<TypePtr> pool = enumerate_closed_types(type_pool_size);
  std::vector<std::pair<TypePtr, std::vector<TermPtr>>> inhabited;
  for (const auto& ty : pool) {
    std::vector<TermPtr> terms = enumerate_comps(TypeEnv{}, ty, term_size, m);
    if (!terms.empty()) inhabited.emplace_back(ty, std::move(terms));
  }
  std::vector<CorpusPair> out;
  if (inhabited.empty()) return out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto& [ty, terms] = inhabited[rng() % inhabited.size()];
    size_t a = rng() % terms.size();
    size_t b = rng() % terms.size();
    out.push_back({"random_" + std::to_string(i) + "_lhs",
                   "random_" + std::to_string(i) + "_rhs", terms[a], terms[b], ty});
  }
  return out;
}

}  // namespace lambang
