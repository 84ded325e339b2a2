#pragma once

#include <cstddef>

#include "stallings/core_graph.hpp"
#include "stallings/rng.hpp"

namespace stallings {

/// Random finitely generated subgroup: between 1 and max_generators
/// generator words, each of length 1..max_len.
CoreGraph random_subgroup(Alphabet alphabet, SplitMix64& rng,
                          std::size_t max_generators = 3,
                          std::size_t max_len = 10);

}  // namespace stallings
