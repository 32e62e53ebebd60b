#pragma once

#include <cstdint>
#include <vector>

#include "lambang/ctx_oracle.hpp"

namespace lambang {

// Seeded, size-bounded, type-directed random pairs of closed computations.
// Types are drawn from the closed-type pool, terms from the deterministic
// enumeration at the given size budget; pool entries with no inhabitants
// are skipped.
std::vector<CorpusPair> random_corpus(std::uint64_t seed, int count, int term_size,
                                      Monad m, int type_pool_size = 5);

}  // namespace lambang
