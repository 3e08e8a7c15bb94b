#include "foldloop/linkdiag.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace foldloop {

namespace {

void require_component(const ComponentLabeling& labels, int comp) {
  if (comp < 1 || comp > labels.component_count()) {
    throw UnknownComponent("no component with id " + std::to_string(comp));
  }
}

}  // namespace

ComponentLabeling::ComponentLabeling(std::vector<int> component_of)
    : component_of_(std::move(component_of)) {
  component_count_ = component_of_.empty()
                         ? 0
                         : *std::max_element(component_of_.begin(),
                                             component_of_.end());
}

OrientationAssignment::OrientationAssignment(std::vector<int> direction_of)
    : direction_of_(std::move(direction_of)) {
  for (int d : direction_of_) {
    if (d != 1 && d != -1) {
      throw std::invalid_argument("direction must be +1 or -1");
    }
  }
}

OrientationAssignment OrientationAssignment::all_forward(int components) {
  return OrientationAssignment(std::vector<int>(components, 1));
}

OrientationAssignment OrientationAssignment::flipped(int component) const {
  std::vector<int> directions = direction_of_;
  directions.at(component - 1) = -directions.at(component - 1);
  return OrientationAssignment(std::move(directions));
}

ComponentLabeling strand_components(const BraidWord& word) {
  std::vector<int> component_of(word.strands(), 0);
  int next_id = 1;
  for (const std::vector<int>& cycle : permutation_of(word).cycles()) {
    for (int strand : cycle) component_of[strand - 1] = next_id;
    ++next_id;
  }
  return ComponentLabeling(std::move(component_of));
}

std::vector<Crossing> crossings(const BraidWord& word) {
  std::vector<int> occupant(word.strands());
  std::iota(occupant.begin(), occupant.end(), 1);
  std::vector<Crossing> result;
  result.reserve(word.letters().size());
  int level = 0;
  for (const Generator& g : word.letters()) {
    result.push_back({level, g.index, g.sign, occupant[g.index - 1],
                      occupant[g.index]});
    std::swap(occupant[g.index - 1], occupant[g.index]);
    ++level;
  }
  return result;
}

int inter_component_sign_sum(const BraidWord& word, int comp_a, int comp_b) {
  const ComponentLabeling labels = strand_components(word);
  require_component(labels, comp_a);
  require_component(labels, comp_b);
  if (comp_a == comp_b) {
    throw SameComponent("linking number needs two distinct components");
  }
  int sum = 0;
  for (const Crossing& c : crossings(word)) {
    const int ca = labels.component_of(c.strand_a);
    const int cb = labels.component_of(c.strand_b);
    if ((ca == comp_a && cb == comp_b) || (ca == comp_b && cb == comp_a)) {
      sum += c.sign;
    }
  }
  return sum;
}

int linking_number(const BraidWord& word, int comp_a, int comp_b,
                   const OrientationAssignment& orient) {
  const int sum = inter_component_sign_sum(word, comp_a, comp_b);
  const int oriented =
      sum * orient.direction_of(comp_a) * orient.direction_of(comp_b);
  return oriented / 2;
}

int self_writhe(const BraidWord& word, int comp) {
  const ComponentLabeling labels = strand_components(word);
  require_component(labels, comp);
  int sum = 0;
  for (const Crossing& c : crossings(word)) {
    if (labels.component_of(c.strand_a) == comp &&
        labels.component_of(c.strand_b) == comp) {
      sum += c.sign;
    }
  }
  return sum;
}

}  // namespace foldloop
