#pragma once

#include <vector>

#include "foldloop/braid.hpp"

namespace foldloop {

/// One crossing of the closed-braid diagram. strand_a / strand_b are the
/// start positions of the strands entering at positions left_position and
/// left_position + 1 respectively.
struct Crossing {
  int level;          // 0-based letter position
  int left_position;  // the letter's index
  int sign;           // +1 or -1, copied from the letter
  int strand_a;
  int strand_b;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Closure component of each strand start position. Ids are contiguous
/// from 1, assigned in order of the smallest strand in each cycle.
class ComponentLabeling {
 public:
  explicit ComponentLabeling(std::vector<int> component_of);

  int strand_count() const { return static_cast<int>(component_of_.size()); }
  int component_count() const { return component_count_; }
  int component_of(int strand) const { return component_of_[strand - 1]; }

 private:
  std::vector<int> component_of_;
  int component_count_;
};

/// Direction factor per component: +1 runs downward through the braid,
/// -1 is reversed.
class OrientationAssignment {
 public:
  explicit OrientationAssignment(std::vector<int> direction_of);
  static OrientationAssignment all_forward(int components);

  int component_count() const {
    return static_cast<int>(direction_of_.size());
  }
  int direction_of(int component) const { return direction_of_[component - 1]; }
  OrientationAssignment flipped(int component) const;

 private:
  std::vector<int> direction_of_;
};

ComponentLabeling strand_components(const BraidWord& word);

/// One Crossing per letter, in letter order.
std::vector<Crossing> crossings(const BraidWord& word);

/// Signed sum over crossings joining components a and b, before halving
/// and without orientation factors. Always even.
int inter_component_sign_sum(const BraidWord& word, int comp_a, int comp_b);

/// Half the oriented signed sum over crossings between the two components.
int linking_number(const BraidWord& word, int comp_a, int comp_b,
                   const OrientationAssignment& orient);

/// Signed sum over crossings of a component with itself.
int self_writhe(const BraidWord& word, int comp);

}  // namespace foldloop
