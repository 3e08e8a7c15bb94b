#pragma once

#include <vector>

#include "foldloop/errors.hpp"

namespace foldloop {

/// One signed Artin generator: strands at positions (index, index+1) cross.
/// sign +1 is a right-handed crossing, -1 left-handed, with all strands
/// oriented downward.
struct Generator {
  int index;  // >= 1
  int sign;   // +1 or -1
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A braid word on `strands` strands. Letters are read left to right,
/// corresponding to crossings top to bottom in the diagram.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Generator> letters = {});

  int strands() const { return strands_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Generator>& letters() const { return letters_; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Generator> letters_;
};

// Enumeration/tie-break order on letters: index ascending, + before -.
int letter_ordinal(const Generator& g);
bool word_less(const BraidWord& a, const BraidWord& b);

/// A bijection of {1..m}, stored as the image of each start position.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int image_of(int p) const { return images_[p - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Cycles in increasing order of their smallest element; each cycle
  /// starts at its smallest element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class Parity { even, odd };

struct ParityVerdict {
  bool single_component;
  Parity strand_parity;    // parity of m
  Parity crossing_parity;  // parity of n
  bool consistent;
};

/// Permutation induced by the word: earlier letters act first, and the
/// letter sign is irrelevant.
Permutation permutation_of(const BraidWord& word);

/// Number of components of the closure = cycle count of permutation_of.
int component_count(const BraidWord& word);

/// Sum of letter signs; the writhe of the closed-braid diagram.
int exponent_sum(const BraidWord& word);

/// Sign of the permutation: parity of (size - cycle count).
Parity permutation_parity(const Permutation& p);

/// Single-component closures must have m and n of opposite parity.
ParityVerdict check_statement2(const BraidWord& word);

/// Rotate the letter list by k; letters leaving the top re-enter at the
/// bottom. The closure is unchanged up to conjugation.
BraidWord cyclic_shift(const BraidWord& word, int k);

enum class RelationKind { commute, yang_baxter };

/// Rewrite the word by one Artin relation at the given 1-based position.
/// commute: adjacent letters with |index difference| >= 2 swap.
/// yang_baxter: a same-sign triple s_i s_{i+1} s_i (or s_{i+1} s_i s_{i+1})
/// flips to the other form.
/// Throws PatternMismatch if the relation does not apply there.
BraidWord apply_braid_relation(const BraidWord& word, int position,
                               RelationKind kind);

}  // namespace foldloop
