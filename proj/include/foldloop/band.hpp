#pragma once

#include "foldloop/braid.hpp"

namespace foldloop {

/// A flat band: single-loop closed-braid core plus a signed count of full
/// 360-degree framing twists. t = 0 models the torsionally rigid wire.
/// Half twists are not representable; the band stays two-sided.
class FlatBand {
 public:
  FlatBand(BraidWord core, int full_twists);

  const BraidWord& core() const { return core_; }
  int full_twists() const { return full_twists_; }

 private:
  BraidWord core_;
  int full_twists_;
};

/// The 2-cabled core on 2m strands. The closure has exactly two
/// components: odd start positions form one boundary circle, even the
/// other.
struct DoubledDiagram {
  BraidWord word;
  int left_component;   // component id of strand 1
  int right_component;  // component id of strand 2
};

/// 2-cable the band: core strand i becomes the pair (2i-1, 2i), each core
/// letter expands to a four-letter block of the same sign, and 2|t|
/// twist letters s_1 are appended.
DoubledDiagram double_band(const FlatBand& band);

/// Linking number of the two boundary circles, computed on the doubled
/// diagram with default orientations.
int boundary_linking_number(const FlatBand& band);

/// Same quantity by closed form: exponent_sum(core) + full_twists.
int boundary_linking_number_fast(const FlatBand& band);

/// The unique twist count making the boundary circles unlinked. Nonzero
/// means the fold physically twists the wire.
int required_twists(const BraidWord& core);

/// True iff the core closes to a single loop with writhe zero, i.e. an
/// untwisted band can realize the fold.
bool is_valid_fold(const BraidWord& core);

struct TheoremVerdict {
  bool valid_fold;
  int loops;  // the strand count m
  bool theorem_holds;
};

/// Valid folds must have an odd loop count.
TheoremVerdict check_theorem(const BraidWord& core);

}  // namespace foldloop
