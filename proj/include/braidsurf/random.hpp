// Seeded braid-word sampler used by the randomized check campaigns and the
// property tests. The draw algorithm is part of the tool's contract, so a
// campaign can be reproduced from its seed alone:
//   rng          = std::mt19937_64(seed), raw 64-bit draws
//   strand count = 2 + rng() % (max_strands - 1)
//   length       = rng() % (max_letters + 1)
//   each letter  = v = rng() % (2*(m-1)); generator v/2 + 1, sign - if v odd
#pragma once

#include "braidsurf/braid.hpp"

#include <cstdint>
#include <random>

namespace braidsurf {

class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t draw() { return rng_(); }

  BraidWord word(int max_strands, int max_letters) {
    if (max_strands < 2) throw std::invalid_argument("sampler needs at least 2 strands");
    const int m = 2 + static_cast<int>(rng_() % static_cast<std::uint64_t>(max_strands - 1));
    const int len = static_cast<int>(rng_() % static_cast<std::uint64_t>(max_letters + 1));
    return word_exact(m, len);
  }

  /// Word of exactly `len` letters on exactly `strands` strands.
  BraidWord word_exact(int strands, int len) {
    BraidWord w{strands, {}};
    for (int i = 0; i < len; ++i) {
      const std::uint64_t v = rng_() % static_cast<std::uint64_t>(2 * (strands - 1));
      const int gen = static_cast<int>(v / 2) + 1;
      w.letters.push_back(v % 2 == 0 ? gen : -gen);
    }
    return w;
  }

  int index(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace braidsurf
