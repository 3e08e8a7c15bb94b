#include "foldloop/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace foldloop {

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw std::invalid_argument("braid word needs at least one strand");
  }
  for (const Generator& g : letters_) {
    if (g.sign != 1 && g.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
    if (g.index < 1 || g.index > strands_ - 1) {
      throw std::invalid_argument("letter index " + std::to_string(g.index) +
                                  " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
  }
}

int letter_ordinal(const Generator& g) {
  return 2 * (g.index - 1) + (g.sign < 0 ? 1 : 0);
}

bool word_less(const BraidWord& a, const BraidWord& b) {
  return std::lexicographical_compare(
      a.letters().begin(), a.letters().end(), b.letters().begin(),
      b.letters().end(), [](const Generator& x, const Generator& y) {
        return letter_ordinal(x) < letter_ordinal(y);
      });
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[p - 1]; p = image_of(p)) {
      seen[p - 1] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycles().size());
}

Permutation permutation_of(const BraidWord& word) {
  // occupant[p-1] is the start position of the strand at position p.
  std::vector<int> occupant(word.strands());
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const Generator& g : word.letters()) {
    std::swap(occupant[g.index - 1], occupant[g.index]);
  }
  std::vector<int> images(word.strands());
  for (int p = 1; p <= word.strands(); ++p) {
    images[occupant[p - 1] - 1] = p;
  }
  return Permutation(std::move(images));
}

int component_count(const BraidWord& word) {
  return permutation_of(word).cycle_count();
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (const Generator& g : word.letters()) sum += g.sign;
  return sum;
}

Parity permutation_parity(const Permutation& p) {
  return (p.size() - p.cycle_count()) % 2 == 0 ? Parity::even : Parity::odd;
}

ParityVerdict check_statement2(const BraidWord& word) {
  const bool single = component_count(word) == 1;
  ParityVerdict verdict;
  verdict.single_component = single;
  verdict.strand_parity =
      word.strands() % 2 == 0 ? Parity::even : Parity::odd;
  verdict.crossing_parity =
      word.length() % 2 == 0 ? Parity::even : Parity::odd;
  verdict.consistent =
      !single || (word.strands() + word.length()) % 2 == 1;
  return verdict;
}

BraidWord cyclic_shift(const BraidWord& word, int k) {
  std::vector<Generator> letters = word.letters();
  const int n = static_cast<int>(letters.size());
  if (n > 0) {
    int shift = ((k % n) + n) % n;
    std::rotate(letters.begin(), letters.begin() + shift, letters.end());
  }
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord apply_braid_relation(const BraidWord& word, int position,
                               RelationKind kind) {
  const int span = kind == RelationKind::commute ? 2 : 3;
  if (position < 1 || position + span - 1 > word.length()) {
    throw PatternMismatch("relation window out of range at position " +
                          std::to_string(position));
  }
  std::vector<Generator> letters = word.letters();
  const int at = position - 1;
  if (kind == RelationKind::commute) {
    if (std::abs(letters[at].index - letters[at + 1].index) < 2) {
      throw PatternMismatch("letters do not commute at position " +
                            std::to_string(position));
    }
    std::swap(letters[at], letters[at + 1]);
  } else {
    const Generator a = letters[at];
    const Generator b = letters[at + 1];
    const Generator c = letters[at + 2];
    const bool same_sign = a.sign == b.sign && b.sign == c.sign;
    const bool shape =
        a.index == c.index && std::abs(a.index - b.index) == 1;
    if (!same_sign || !shape) {
      throw PatternMismatch("no yang-baxter triple at position " +
                            std::to_string(position));
    }
    // s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1}
    letters[at] = b;
    letters[at + 1] = a;
    letters[at + 2] = b;
  }
  return BraidWord(word.strands(), std::move(letters));
}

}  // namespace foldloop
