#include "foldloop/band.hpp"

#include <cstdlib>
#include <string>

#include "foldloop/linkdiag.hpp"

namespace foldloop {

FlatBand::FlatBand(BraidWord core, int full_twists)
    : core_(std::move(core)), full_twists_(full_twists) {
  if (component_count(core_) != 1) {
    throw MultiComponentCore("a band's core must close to a single loop");
  }
}

DoubledDiagram double_band(const FlatBand& band) {
  const BraidWord& core = band.core();
  const int t = band.full_twists();
  std::vector<Generator> letters;
  letters.reserve(4 * core.length() + 2 * std::abs(t));
  for (const Generator& g : core.letters()) {
    const int i = g.index;
    if (g.sign > 0) {
      letters.push_back({2 * i, 1});
      letters.push_back({2 * i + 1, 1});
      letters.push_back({2 * i - 1, 1});
      letters.push_back({2 * i, 1});
    } else {
      letters.push_back({2 * i, -1});
      letters.push_back({2 * i - 1, -1});
      letters.push_back({2 * i + 1, -1});
      letters.push_back({2 * i, -1});
    }
  }
  const int twist_sign = t >= 0 ? 1 : -1;
  for (int k = 0; k < 2 * std::abs(t); ++k) {
    letters.push_back({1, twist_sign});
  }
  BraidWord word(2 * core.strands(), std::move(letters));

  const ComponentLabeling labels = strand_components(word);
  if (labels.component_count() != 2) {
    throw std::logic_error("doubled diagram must have exactly 2 components");
  }
  for (int strand = 1; strand <= word.strands(); ++strand) {
    const int expected = strand % 2 == 1 ? labels.component_of(1)
                                         : labels.component_of(2);
    if (labels.component_of(strand) != expected) {
      throw std::logic_error("doubled components must split odd/even");
    }
  }
  return {std::move(word), labels.component_of(1), labels.component_of(2)};
}

int boundary_linking_number(const FlatBand& band) {
  const DoubledDiagram doubled = double_band(band);
  return linking_number(doubled.word, doubled.left_component,
                        doubled.right_component,
                        OrientationAssignment::all_forward(2));
}

int boundary_linking_number_fast(const FlatBand& band) {
  return exponent_sum(band.core()) + band.full_twists();
}

int required_twists(const BraidWord& core) {
  if (component_count(core) != 1) {
    throw MultiComponentCore(
        "required_twists needs a single-component core");
  }
  return -exponent_sum(core);
}

bool is_valid_fold(const BraidWord& core) {
  return component_count(core) == 1 && exponent_sum(core) == 0;
}

TheoremVerdict check_theorem(const BraidWord& core) {
  const bool valid = is_valid_fold(core);
  const int loops = core.strands();
  return {valid, loops, !valid || loops % 2 == 1};
}

}  // namespace foldloop
