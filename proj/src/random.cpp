#include "stallings/random.hpp"

namespace stallings {

CoreGraph random_subgroup(Alphabet alphabet, SplitMix64& rng,
                          std::size_t max_generators, std::size_t max_len) {
  std::size_t count = 1 + rng.below(max_generators);
  std::vector<Word> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = 1 + rng.below(max_len);
    gens.push_back(random_reduced_word(len, alphabet, rng));
  }
  return from_generators(gens, alphabet);
}

}  // namespace stallings
