#pragma once

#include <cstdlib>
#include <initializer_list>
#include <random>
#include <vector>

#include "foldloop/braid.hpp"

namespace testutil {

// Shorthand: word(3, {1, -2}) is s1 s2^- on three strands.
inline foldloop::BraidWord word(int strands, std::initializer_list<int> ks) {
  std::vector<foldloop::Generator> letters;
  for (int k : ks) letters.push_back({std::abs(k), k > 0 ? 1 : -1});
  return foldloop::BraidWord(strands, std::move(letters));
}

inline foldloop::BraidWord random_word(std::mt19937& rng, int m_max,
                                       int n_max) {
  std::uniform_int_distribution<int> pick_m(1, m_max);
  const int m = pick_m(rng);
  const int n =
      m == 1 ? 0 : std::uniform_int_distribution<int>(0, n_max)(rng);
  std::vector<foldloop::Generator> letters;
  for (int i = 0; i < n; ++i) {
    const int index = std::uniform_int_distribution<int>(1, m - 1)(rng);
    const int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    letters.push_back({index, sign});
  }
  return foldloop::BraidWord(m, std::move(letters));
}

// Independent route to the induced permutation: compose transpositions
// on the image table instead of simulating position occupancy.
inline foldloop::Permutation permutation_by_composition(
    const foldloop::BraidWord& w) {
  std::vector<int> images(w.strands());
  for (int p = 1; p <= w.strands(); ++p) images[p - 1] = p;
  for (const foldloop::Generator& g : w.letters()) {
    for (int& image : images) {
      if (image == g.index) {
        image = g.index + 1;
      } else if (image == g.index + 1) {
        image = g.index;
      }
    }
  }
  return foldloop::Permutation(std::move(images));
}

}  // namespace testutil
